#include "wmsmooth/verdict.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmsmooth/admissible.hpp"
#include "wmsmooth/cones.hpp"
#include "wmsmooth/errors.hpp"
#include "wmsmooth/intlinalg.hpp"
#include "wmsmooth/linfeas.hpp"

namespace wmsmooth {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Smooth:
      return "Smooth";
    case Outcome::NotSmooth:
      return "NotSmooth";
    default:
      return "Undecided";
  }
}

const char* route_name(Route r) {
  switch (r) {
    case Route::Toric:
      return "Toric";
    case Route::GSaturated:
      return "GSaturated";
    case Route::Sl2Cx:
      return "Sl2Cx";
    default:
      return "Reflective";
  }
}

namespace {

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

}  // namespace

Verdict check_gsat_smooth(const WeightMonoid& m) {
  if (!m.is_normal()) fail(Errc::NotNormal, "monoid is not normal");
  if (!m.is_G_saturated()) fail(Errc::NotGSaturated, "monoid is not G-saturated");

  Verdict v;
  v.route = Route::GSaturated;
  v.sigma_n = sigma_n_gsat(m);
  v.sp = m.sp;
  v.s_gamma = s_gamma(m, v.sigma_n);
  for (const SphericalRoot& s : v.sigma_n)
    if (s.supported_on(v.s_gamma)) v.triple_sigma.push_back(s);

  const std::vector<int> active = set_difference(v.s_gamma, v.sp);

  // (a) the distinct coroot restrictions extend to a basis of the dual
  std::vector<IVec> restr;
  for (int i : active) restr.push_back(m.coroot_restriction(i));
  std::sort(restr.begin(), restr.end());
  restr.erase(std::unique(restr.begin(), restr.end()), restr.end());
  if (!restr.empty() && !part_of_basis(restr)) {
    v.outcome = Outcome::NotSmooth;
    v.reason = "coroot restrictions on S_Gamma minus S^p are not part of a basis of the dual lattice";
    return v;
  }

  // (b) nodes with the same restriction must have their root sum in the lattice
  for (size_t i = 0; i < active.size(); ++i)
    for (size_t j = i + 1; j < active.size(); ++j) {
      if (!(m.coroot_restriction(active[i]) == m.coroot_restriction(active[j]))) continue;
      IVec sum = vec_add(m.group.simple_root(active[i]), m.group.simple_root(active[j]));
      if (!m.in_lattice(sum)) {
        v.outcome = Outcome::NotSmooth;
        v.reason = "alpha_" + std::to_string(active[i]) + " + alpha_" + std::to_string(active[j]) +
                   " lies outside the lattice although both coroots restrict equally";
        return v;
      }
    }

  // (c) the localized triple must be admissible
  std::vector<IVec> sigma_coeffs;
  for (const SphericalRoot& s : v.triple_sigma)
    sigma_coeffs.push_back(s.root_coeffs(m.group.ss_rank()));
  if (!admissible_triple(m.group, v.s_gamma, v.sp, sigma_coeffs)) {
    v.outcome = Outcome::NotSmooth;
    v.reason = "the triple (S_Gamma, S^p, Sigma) is not admissible";
    return v;
  }

  v.outcome = Outcome::Smooth;
  return v;
}

bool w_invariant_lattice(const IntegerLattice& lattice, const GroupDatum& g) {
  if (lattice.ambient != g.weight_dim())
    fail(Errc::DimensionMismatch, "lattice does not live in the weight space of the group");
  for (int i = 0; i < g.ss_rank(); ++i)
    for (int j = 0; j < lattice.rank(); ++j)
      if (!lattice.contains(g.reflect(i, lattice.basis.col(j)))) return false;
  return true;
}

ReflectiveCheck check_reflective(const WeightMonoid& m) {
  if (!m.is_normal()) fail(Errc::NotNormal, "monoid is not normal");
  ReflectiveCheck r;
  const int dim = m.group.weight_dim();
  if (m.rank() != dim) {
    r.why = "the lattice does not have full rank";
    return r;
  }

  // Facet inner normals of the generated cone: extreme rays of the dual.
  ConeRays dual = dd_general(dim, m.generators);
  if (!dual.lineality.empty()) throw std::logic_error("full-rank cone must have a pointed dual");
  const std::vector<IVec>& normals = dual.rays;
  auto is_normal_vec = [&](const IVec& v) {
    return std::find(normals.begin(), normals.end(), v) != normals.end();
  };

  // Stability of the facet hyperplanes under every simple reflection.  A
  // functional nu composed with s_i becomes nu - nu(alpha_i) e_i, and the
  // hyperplane of a facet may come back with either orientation.
  for (int i = 0; i < m.group.ss_rank(); ++i) {
    const IVec alpha = m.group.simple_root(i);
    for (const IVec& nu : normals) {
      IVec image = nu;
      image[static_cast<size_t>(i)] -= dot(nu, alpha);
      if (!is_normal_vec(image) && !is_normal_vec(vec_neg(image))) {
        r.why = "facet hyperplanes are not stable under the simple reflection s_" + std::to_string(i);
        return r;
      }
    }
  }

  // Every facet must contain a point of the open Weyl chamber.
  for (size_t f = 0; f < normals.size(); ++f) {
    std::vector<AffineRow> rows;
    rows.push_back(row_ge(normals[f], 0));
    rows.push_back(row_ge(vec_neg(normals[f]), 0));
    for (size_t o = 0; o < normals.size(); ++o)
      if (o != f) rows.push_back(row_ge(normals[o], 0));
    for (int i = 0; i < m.group.ss_rank(); ++i) {
      IVec e = zero_vec(dim);
      e[static_cast<size_t>(i)] = 1;
      rows.push_back(row_gt(std::move(e), 0));
    }
    if (!fm_feasible(dim, std::move(rows))) {
      r.why = "a facet of the cone does not meet the open Weyl chamber";
      return r;
    }
  }

  r.reflective = true;
  return r;
}

Verdict check_reflective_smooth(const WeightMonoid& m) {
  if (!m.is_normal()) fail(Errc::NotNormal, "monoid is not normal");

  Verdict v;
  v.route = Route::Reflective;
  v.sp = m.sp;

  ReflectiveCheck refl = check_reflective(m);
  v.hypotheses.emplace_back("cone reflective", refl.reflective);

  bool roots_inside = true;
  for (int i = 0; roots_inside && i < m.group.ss_rank(); ++i)
    if (!m.in_lattice(m.group.simple_root(i))) roots_inside = false;
  v.hypotheses.emplace_back("simple roots contained in the lattice", roots_inside);

  bool dual_basis = m.e_rays.empty() || part_of_basis(m.e_rays);
  v.hypotheses.emplace_back("dual-cone rays part of a basis of the dual lattice", dual_basis);

  bool invariant = w_invariant_lattice(m.lattice, m.group);
  v.hypotheses.emplace_back("lattice stable under the Weyl group", invariant);

  for (const auto& [name, holds] : v.hypotheses)
    if (!holds) {
      v.outcome = Outcome::Undecided;
      v.reason = "hypothesis failed: " + name;
      if (!refl.reflective && !refl.why.empty()) v.reason += " (" + refl.why + ")";
      return v;
    }

  // The four hypotheses force semisimple type (A1)^r with every simple root
  // adapted; both facts are re-derived here as a consistency check.
  for (const SimpleComponent& c : m.group.components)
    if (!(c.type == SimpleType::A && c.rank == 1))
      throw std::logic_error("reflective hypotheses held outside type (A1)^r");
  v.sigma_n = sigma_n(m);
  std::vector<int> adapted_nodes;
  for (const SphericalRoot& s : v.sigma_n) {
    if (!s.is_simple()) throw std::logic_error("adapted roots of a reflective monoid must be simple");
    adapted_nodes.push_back(s.nodes[0]);
  }
  std::sort(adapted_nodes.begin(), adapted_nodes.end());
  for (int i = 0; i < m.group.ss_rank(); ++i)
    if (i >= static_cast<int>(adapted_nodes.size()) || adapted_nodes[static_cast<size_t>(i)] != i)
      throw std::logic_error("adapted roots of a reflective monoid must exhaust the simple roots");

  v.outcome = Outcome::Smooth;
  return v;
}

Verdict check_toric_smooth(const WeightMonoid& m) {
  if (m.group.ss_rank() != 0) fail(Errc::NotTorus, "group has a semisimple part");
  if (!m.is_normal()) fail(Errc::NotNormal, "monoid is not normal");

  Verdict v;
  v.route = Route::Toric;
  if (m.rank() == 0) {
    v.outcome = Outcome::Smooth;
    return v;
  }

  HilbertBasis hb = hilbert_basis(m.cone);
  std::vector<IVec> vecs = hb.units;
  vecs.insert(vecs.end(), hb.irreducibles.begin(), hb.irreducibles.end());
  if (rank_of(IMat::from_columns(vecs, m.rank())) == static_cast<int>(vecs.size())) {
    v.outcome = Outcome::Smooth;
  } else {
    v.outcome = Outcome::NotSmooth;
    v.reason = "the minimal generators are not Z-linearly independent";
  }
  return v;
}

Verdict smooth_verdict(const WeightMonoid& m) {
  if (!m.is_normal()) fail(Errc::NotNormal, "monoid is not normal");
  if (m.group.ss_rank() == 0) return check_toric_smooth(m);
  if (m.is_G_saturated()) return check_gsat_smooth(m);

  if (m.group == sl2c_group()) {
    Verdict v;
    v.route = Route::Sl2Cx;
    v.sp = m.sp;
    v.sigma_n = sigma_n_sl2c(m);
    v.family = classify_sl2c(m);
    if (v.family) {
      v.outcome = Outcome::Smooth;
    } else {
      v.outcome = Outcome::NotSmooth;
      v.reason = "the monoid is not among the smooth families over SL(2) x C^x";
    }
    return v;
  }

  Verdict v = check_reflective_smooth(m);
  if (v.outcome != Outcome::Smooth)
    v.reason = "no implemented criterion decides this monoid; " + v.reason;
  return v;
}

}  // namespace wmsmooth
