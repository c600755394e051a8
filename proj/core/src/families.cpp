#include "wmsmooth/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace wmsmooth {

WeightMonoid saturated_monoid(const GroupDatum& g, const IntegerLattice& L) {
  if (L.ambient != g.weight_dim())
    fail(Errc::DimensionMismatch, "lattice does not live in the weight space of the group");
  const int r = L.rank();
  if (r == 0) return WeightMonoid::make(g, {});

  // Dominance in lattice coordinates: row i of the basis is the functional
  // alpha_i^vee composed with the basis map.
  std::vector<IVec> rows;
  for (int i = 0; i < g.ss_rank(); ++i) {
    IVec row(static_cast<size_t>(r));
    bool nonzero = false;
    for (int j = 0; j < r; ++j) {
      row[static_cast<size_t>(j)] = L.basis.at(i, j);
      if (row[static_cast<size_t>(j)] != 0) nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  RationalCone dom = rows.empty()
                         ? RationalCone::from_inequalities(r, {IVec(static_cast<size_t>(r), Int(0))})
                         : RationalCone::from_inequalities(r, rows);

  HilbertBasis hb = hilbert_basis(dom);
  std::vector<IVec> gens;
  for (const IVec& u : hb.units) {
    gens.push_back(L.from_coords(u));
    gens.push_back(L.from_coords(vec_neg(u)));
  }
  for (const IVec& v : hb.irreducibles) gens.push_back(L.from_coords(v));
  return WeightMonoid::make(g, gens);
}

namespace {

IVec unit_weight(int dim, int i, const Int& c = Int(1)) {
  IVec v(static_cast<size_t>(dim), Int(0));
  v[static_cast<size_t>(i)] = c;
  return v;
}

std::vector<IVec> sorted_weights(std::vector<IVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<IVec> sigma_weights(const Verdict& v) {
  std::vector<IVec> w;
  for (const SphericalRoot& s : v.sigma_n) w.push_back(s.weight);
  return sorted_weights(std::move(w));
}

// 2S: every simple root doubled.
std::vector<IVec> doubled_simple_roots(const GroupDatum& g) {
  std::vector<IVec> w;
  for (int i = 0; i < g.ss_rank(); ++i) w.push_back(vec_scale(Int(2), g.simple_root(i)));
  return sorted_weights(std::move(w));
}

// S^+: sums of two distinct non-orthogonal simple roots.
std::vector<IVec> adjacent_sums(const GroupDatum& g) {
  std::vector<IVec> w;
  for (int i = 0; i < g.ss_rank(); ++i)
    for (int j = i + 1; j < g.ss_rank(); ++j)
      if (g.adjacent(i, j)) w.push_back(vec_add(g.simple_root(i), g.simple_root(j)));
  return sorted_weights(std::move(w));
}

FamilyEntry build_entry(const GroupDatum& g, std::string label, bool in_family,
                        std::vector<IVec> gens, std::vector<IVec> expected_sigma) {
  FamilyEntry e;
  e.label = std::move(label);
  e.in_family = in_family;
  e.lattice_generators = std::move(gens);
  IntegerLattice L = IntegerLattice::from_generators(e.lattice_generators, g.weight_dim());
  e.monoid = saturated_monoid(g, L);
  e.verdict = check_gsat_smooth(e.monoid);
  e.expected_sigma = std::move(expected_sigma);
  if (in_family) {
    if (e.verdict.outcome != Outcome::Smooth)
      throw std::logic_error("classified lattice failed the smoothness check: " + e.label);
    if (sigma_weights(e.verdict) != e.expected_sigma)
      throw std::logic_error("classified lattice has unexpected N-spherical roots: " + e.label);
  } else {
    if (e.verdict.outcome != Outcome::NotSmooth)
      throw std::logic_error("out-of-family lattice passed the smoothness check: " + e.label);
  }
  return e;
}

}  // namespace

std::vector<FamilyEntry> enumerate_sl_fullrank(int n, int max_param) {
  if (n < 1 || n > 8) fail(Errc::InvalidParams, "rank must be between 1 and 8");
  if (max_param < 1) fail(Errc::InvalidParams, "parameter bound must be positive");
  GroupDatum g = GroupDatum::make({{SimpleType::A, n}}, 0);
  std::vector<FamilyEntry> out;

  // Case 1: 2<alpha_2, ..., alpha_n, d omega_n>, one entry per divisor of n+1.
  for (Int d = 1; d <= n + 1; d += 1) {
    if ((n + 1) % d != 0) continue;
    std::vector<IVec> gens;
    for (int i = 1; i < n; ++i) gens.push_back(vec_scale(Int(2), g.simple_root(i)));
    gens.push_back(unit_weight(n, n - 1, 2 * d));
    out.push_back(build_entry(g, "case 1 (d=" + d.get_str() + ")", true, std::move(gens),
                              doubled_simple_roots(g)));
  }

  if (n % 2 == 0) {
    // Case 2: <S^+, k omega_{n-1}>; infinite family, sampled up to max_param.
    for (Int k = 1; k <= max_param; k += 1) {
      std::vector<IVec> gens;
      for (int i = 0; i + 1 < n; ++i)
        gens.push_back(vec_add(g.simple_root(i), g.simple_root(i + 1)));
      gens.push_back(unit_weight(n, n - 2, k));
      out.push_back(build_entry(g, "case 2 (k=" + k.get_str() + ")", true, std::move(gens),
                                adjacent_sums(g)));
    }
  } else {
    // Case 3: <alpha_2+alpha_3, ..., e omega_{n-1}, r omega_{n-1} + omega_n>,
    // one entry per divisor e of (n+1)/2 and residue 0 <= r < e.
    const int half = (n + 1) / 2;
    for (Int e = 1; e <= half; e += 1) {
      if (half % e != 0) continue;
      for (Int r = 0; r < e; r += 1) {
        std::vector<IVec> gens;
        for (int i = 1; i + 1 < n; ++i)
          gens.push_back(vec_add(g.simple_root(i), g.simple_root(i + 1)));
        if (n > 1) gens.push_back(unit_weight(n, n - 2, e));
        IVec mixed = unit_weight(n, n - 1);
        if (n > 1) mixed[static_cast<size_t>(n - 2)] = r;
        gens.push_back(std::move(mixed));
        out.push_back(build_entry(g, "case 3 (e=" + e.get_str() + ", r=" + r.get_str() + ")",
                                  true, std::move(gens), adjacent_sums(g)));
      }
    }
  }
  return out;
}

std::vector<FamilyEntry> enumerate_other_types(SimpleType type, int n) {
  if (type == SimpleType::A)
    fail(Errc::InvalidParams, "type A is covered by the SL enumerator");
  GroupDatum g = GroupDatum::make({{type, n}}, 0);
  std::vector<FamilyEntry> out;
  const std::vector<IVec> two_s = doubled_simple_roots(g);

  // 2 Lambda_R, and 2 Lambda whenever the two differ.
  {
    std::vector<IVec> gens;
    for (int i = 0; i < n; ++i) gens.push_back(vec_scale(Int(2), g.simple_root(i)));
    out.push_back(build_entry(g, "2 Lambda_R", true, std::move(gens), two_s));
  }
  const bool weight_exceeds_root =
      type == SimpleType::B || type == SimpleType::C || type == SimpleType::D ||
      (type == SimpleType::E && n != 8);
  if (weight_exceeds_root) {
    std::vector<IVec> gens;
    for (int i = 0; i < n; ++i) gens.push_back(unit_weight(n, i, Int(2)));
    out.push_back(build_entry(g, "2 Lambda", true, std::move(gens), two_s));
  }

  if (type == SimpleType::D) {
    // The intermediate doubled lattices 2 Lambda_R + 2Zv, one per nonzero
    // class of Lambda/Lambda_R that has order two: v = omega_1 always, and
    // for even rank also the two spinor classes omega_n and omega_1+omega_n.
    auto intermediate = [&](const IVec& extra, const std::string& name) {
      std::vector<IVec> gens;
      for (int i = 0; i < n; ++i) gens.push_back(vec_scale(Int(2), g.simple_root(i)));
      gens.push_back(vec_scale(Int(2), extra));
      out.push_back(build_entry(g, "2<Lambda_R, " + name + ">", true, std::move(gens), two_s));
    };
    intermediate(unit_weight(n, 0), "omega_1");
    if (n % 2 == 0) {
      intermediate(unit_weight(n, n - 1), "omega_" + std::to_string(n));
      intermediate(vec_add(unit_weight(n, 0), unit_weight(n, n - 1)),
                   "omega_1+omega_" + std::to_string(n));
    }
  }

  if (type == SimpleType::B) {
    // The window Z(S^+ + {2 alpha_n}) <= Z Gamma <= <omega_1, ..., 2 omega_n>
    // has index two, so it consists of its two endpoints.
    std::vector<IVec> expected = adjacent_sums(g);
    expected.push_back(vec_scale(Int(2), g.simple_root(n - 1)));
    expected = sorted_weights(std::move(expected));
    {
      std::vector<IVec> gens;
      for (int i = 0; i + 1 < n; ++i)
        gens.push_back(vec_add(g.simple_root(i), g.simple_root(i + 1)));
      gens.push_back(vec_scale(Int(2), g.simple_root(n - 1)));
      out.push_back(build_entry(g, "Z(S^+ + {2 alpha_" + std::to_string(n) + "})", true,
                                std::move(gens), expected));
    }
    {
      std::vector<IVec> gens;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(unit_weight(n, i));
      gens.push_back(unit_weight(n, n - 1, Int(2)));
      out.push_back(build_entry(g, "<omega_1..omega_" + std::to_string(n - 1) + ", 2 omega_" +
                                       std::to_string(n) + ">",
                                true, std::move(gens), expected));
    }
  }

  if (type == SimpleType::C) {
    std::vector<IVec> gens;
    for (int i = 0; i < n; ++i) gens.push_back(unit_weight(n, i));
    out.push_back(build_entry(g, "Lambda", true, std::move(gens), adjacent_sums(g)));
  }

  // Out-of-family controls.  Rank two of types B and C carries the smooth
  // lattices of both labelings (the two root systems coincide), so the
  // negatives there are chosen to dodge both lists.
  auto full_lambda = [&]() {
    std::vector<IVec> gens;
    for (int i = 0; i < n; ++i) gens.push_back(unit_weight(n, i));
    return gens;
  };
  if (type == SimpleType::B) {
    if (n == 2) {
      out.push_back(build_entry(g, "out of family: <2 alpha_1, alpha_2>", false,
                                {vec_scale(Int(2), g.simple_root(0)), g.simple_root(1)}, {}));
    } else {
      out.push_back(build_entry(g, "out of family: Lambda", false, full_lambda(), {}));
    }
  }
  if (type == SimpleType::C) {
    if (n == 2) {
      out.push_back(build_entry(g, "out of family: <2 omega_1, 2 omega_2, omega_1+omega_2>",
                                false,
                                {unit_weight(n, 0, Int(2)), unit_weight(n, 1, Int(2)),
                                 vec_add(unit_weight(n, 0), unit_weight(n, 1))},
                                {}));
    } else {
      std::vector<IVec> gens = full_lambda();
      gens[0] = unit_weight(n, 0, Int(2));
      out.push_back(build_entry(g, "out of family: <2 omega_1, omega_2..omega_" +
                                       std::to_string(n) + ">",
                                false, std::move(gens), {}));
    }
  }
  if (type == SimpleType::D || type == SimpleType::E || type == SimpleType::F ||
      type == SimpleType::G) {
    out.push_back(build_entry(g, "out of family: Lambda", false, full_lambda(), {}));
  }
  return out;
}

}  // namespace wmsmooth
