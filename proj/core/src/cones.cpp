#include "wmsmooth/cones.hpp"

#include "wmsmooth/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace wmsmooth {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits bits_make(int n) { return Bits(static_cast<size_t>(n + 63) / 64, 0); }

void bits_set(Bits& b, int i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

// a subset of b
bool bits_subset(const Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

int bits_count(const Bits& a) {
  int n = 0;
  for (std::uint64_t w : a) {
    while (w) {
      w &= w - 1;
      ++n;
    }
  }
  return n;
}

struct Ray {
  IVec v;
  Bits active;  // rows (processed or not) vanishing on v
};

Bits active_of(const IVec& v, const std::vector<IVec>& rows) {
  Bits b = bits_make(static_cast<int>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    if (dot(rows[i], v) == 0) bits_set(b, static_cast<int>(i));
  return b;
}

std::vector<IVec> sorted_vecs(std::vector<IVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<IVec> dd_pointed(int dim, const std::vector<IVec>& rows) {
  for (const IVec& r : rows)
    if (static_cast<int>(r.size()) != dim)
      fail(Errc::DimensionMismatch, "dd_pointed: row has wrong length");
  if (dim == 0) return {};
  const int m = static_cast<int>(rows.size());

  // Greedy full-rank subset; its simplicial cone seeds the incremental step.
  std::vector<int> base;
  {
    std::vector<IVec> acc;
    for (int i = 0; i < m && static_cast<int>(base.size()) < dim; ++i) {
      acc.push_back(rows[i]);
      if (rank_of(IMat::from_rows(acc, dim)) == static_cast<int>(acc.size()))
        base.push_back(i);
      else
        acc.pop_back();
    }
  }
  if (static_cast<int>(base.size()) < dim)
    fail(Errc::InvalidInput, "dd_pointed: inequality rows do not have full rank");

  std::vector<Ray> rays;
  {
    std::vector<IVec> brows;
    for (int i : base) brows.push_back(rows[i]);
    IMat A = IMat::from_rows(brows, dim);
    for (int j = 0; j < dim; ++j) {
      QVec e(static_cast<size_t>(dim), Rat(0));
      e[j] = 1;
      auto sol = solve_columns_q(A, e);
      if (!sol) fail(Errc::InvalidInput, "dd_pointed: singular base");
      IVec v = primitive_direction(*sol);
      rays.push_back({v, active_of(v, rows)});
    }
  }

  Bits processed = bits_make(m);
  for (int i : base) bits_set(processed, i);

  for (int i = 0; i < m; ++i) {
    if (std::find(base.begin(), base.end(), i) != base.end()) continue;
    const IVec& f = rows[i];
    std::vector<int> pos, neg, zer;
    std::vector<Int> fdot(rays.size());
    for (size_t k = 0; k < rays.size(); ++k) {
      fdot[k] = dot(f, rays[k].v);
      int s = sgn(fdot[k]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(static_cast<int>(k));
    }
    if (neg.empty()) {
      bits_set(processed, i);
      continue;
    }

    std::vector<Ray> next;
    std::set<IVec> on_hyperplane;
    for (int k : pos) next.push_back(rays[k]);
    for (int k : zer) {
      next.push_back(rays[k]);
      on_hyperplane.insert(rays[k].v);
    }
    for (int p : pos) {
      for (int n : neg) {
        Bits t = bits_and(bits_and(rays[p].active, rays[n].active), processed);
        if (bits_count(t) < dim - 2) continue;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (static_cast<int>(k) == p || static_cast<int>(k) == n) continue;
          if (bits_subset(t, bits_and(rays[k].active, processed))) adjacent = false;
        }
        if (!adjacent) continue;
        IVec w = vec_add(vec_scale(fdot[p], rays[n].v), vec_scale(-fdot[n], rays[p].v));
        w = primitive_of(w);
        if (on_hyperplane.insert(w).second) next.push_back({w, active_of(w, rows)});
      }
    }
    rays = std::move(next);
    bits_set(processed, i);
  }

  std::vector<IVec> out;
  for (const Ray& r : rays) out.push_back(r.v);
  return sorted_vecs(std::move(out));
}

ConeRays dd_general(int dim, const std::vector<IVec>& rows) {
  for (const IVec& r : rows)
    if (static_cast<int>(r.size()) != dim)
      fail(Errc::DimensionMismatch, "dd_general: row has wrong length");
  IMat A = IMat::from_rows(rows, dim);
  std::vector<IVec> ker = kernel_basis(A);
  if (ker.empty()) return {dd_pointed(dim, rows), {}};

  // Split off the lineality space and run the pointed case in the quotient.
  IntegerLattice L = IntegerLattice::from_generators(ker, dim);
  const int k = L.rank();
  ConeRays out;
  out.lineality = L.basis.columns();
  if (k == dim) return out;

  IMat U = complete_to_unimodular(L.basis);
  std::vector<IVec> ucols = U.columns();
  std::vector<IVec> wcols(ucols.begin() + k, ucols.end());
  IMat W = IMat::from_columns(wcols, dim);

  std::vector<IVec> reduced;
  for (const IVec& r : rows) {
    IVec rw(static_cast<size_t>(dim - k));
    for (int j = 0; j < dim - k; ++j) rw[j] = dot(r, wcols[j]);
    reduced.push_back(rw);
  }
  for (const IVec& y : dd_pointed(dim - k, reduced))
    out.rays.push_back(primitive_of(mat_vec(W, y)));
  out.rays = sorted_vecs(std::move(out.rays));
  return out;
}

RationalCone RationalCone::from_inequalities(int dim, const std::vector<IVec>& ineqs) {
  ConeRays cr = dd_general(dim, ineqs);
  std::vector<IVec> span = cr.rays;
  span.insert(span.end(), cr.lineality.begin(), cr.lineality.end());
  if (rank_of(IMat::from_rows(span, dim)) != dim)
    fail(Errc::DegenerateDimension, "cone is not full-dimensional");

  std::vector<IVec> dual_rows = cr.rays;
  for (const IVec& l : cr.lineality) {
    dual_rows.push_back(l);
    dual_rows.push_back(vec_neg(l));
  }
  ConeRays dual = dd_general(dim, dual_rows);
  if (!dual.lineality.empty())
    fail(Errc::InvalidInput, "dual of a full-dimensional cone must be pointed");

  RationalCone c;
  c.dim = dim;
  c.facets = sorted_vecs(std::move(dual.rays));
  c.rays = std::move(cr.rays);
  c.lineality = IntegerLattice::from_generators(cr.lineality, dim);
  return c;
}

RationalCone RationalCone::from_generators(int dim, const std::vector<IVec>& gens) {
  std::vector<IVec> gen;
  for (const IVec& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      fail(Errc::DimensionMismatch, "cone generator has wrong length");
    if (!is_zero(g)) gen.push_back(g);
  }
  if (rank_of(IMat::from_rows(gen, dim)) != dim)
    fail(Errc::DegenerateDimension, "cone is not full-dimensional");

  ConeRays dual = dd_general(dim, gen);
  if (!dual.lineality.empty())
    fail(Errc::InvalidInput, "dual of a full-dimensional cone must be pointed");

  RationalCone c;
  c.dim = dim;
  c.facets = sorted_vecs(std::move(dual.rays));
  ConeRays cr = dd_general(dim, c.facets);
  c.rays = std::move(cr.rays);
  c.lineality = IntegerLattice::from_generators(cr.lineality, dim);
  return c;
}

bool RationalCone::contains(const IVec& x) const {
  if (static_cast<int>(x.size()) != dim)
    fail(Errc::DimensionMismatch, "cone membership: wrong length");
  for (const IVec& f : facets)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::contains(const QVec& x) const {
  if (static_cast<int>(x.size()) != dim)
    fail(Errc::DimensionMismatch, "cone membership: wrong length");
  for (const IVec& f : facets)
    if (dot_q(f, x) < 0) return false;
  return true;
}

namespace {

// Pulling triangulation by the first ray: recurse into the facets its cone
// does not contain.  Every simplex is spanned by rank-many input rays.
std::vector<std::vector<IVec>> triangulate_rays(std::vector<IVec> rays, int dim) {
  std::sort(rays.begin(), rays.end());
  const int r = rank_of(IMat::from_rows(rays, dim));
  if (static_cast<int>(rays.size()) == r) return {rays};

  IntegerLattice span = IntegerLattice::from_generators(rays, dim);
  std::vector<IVec> coords;
  for (const IVec& v : rays) {
    auto c = span.coords_of(v);
    if (!c) fail(Errc::InvalidInput, "triangulation: ray outside its span lattice");
    coords.push_back(*c);
  }
  RationalCone sub = RationalCone::from_generators(r, coords);

  std::vector<std::vector<IVec>> out;
  for (const IVec& f : sub.facets) {
    if (dot(f, coords[0]) <= 0) continue;
    std::vector<IVec> on_facet;
    for (size_t i = 0; i < rays.size(); ++i)
      if (dot(f, coords[i]) == 0) on_facet.push_back(rays[i]);
    for (std::vector<IVec>& s : triangulate_rays(std::move(on_facet), dim)) {
      s.insert(s.begin(), rays[0]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Integer points of { V t : t in [0,1)^dim }, V nonsingular: one per class of
// Z^dim mod V Z^dim, found by reducing a class representative modulo V.
void parallelepiped_points(const IMat& V, std::set<IVec>& sink) {
  const int dim = V.nr;
  Snf s = smith_form(V);
  IMat uinv = inverse_unimodular(s.U);
  IVec c(static_cast<size_t>(dim), Int(0));
  while (true) {
    IVec x = mat_vec(uinv, c);
    auto t = solve_columns_q(V, to_qvec(x));
    if (!t) fail(Errc::InvalidInput, "parallelepiped: singular simplex");
    QVec frac(t->size());
    for (size_t i = 0; i < t->size(); ++i)
      frac[i] = (*t)[i] - Rat(fdiv((*t)[i].get_num(), (*t)[i].get_den()));
    QVec pq = mat_vec_q(V, frac);
    IVec p(pq.size());
    for (size_t i = 0; i < pq.size(); ++i) {
      if (pq[i].get_den() != 1)
        fail(Errc::InvalidInput, "parallelepiped: non-integer point");
      p[i] = pq[i].get_num();
    }
    if (!is_zero(p)) sink.insert(p);

    int j = 0;
    while (j < dim) {
      c[j] += 1;
      if (c[j] < s.divisors[j]) break;
      c[j] = 0;
      ++j;
    }
    if (j == dim) break;
  }
}

// Hilbert basis of a pointed full-dimensional cone: ray generators plus the
// fundamental-parallelepiped points of a triangulation, reduced to the
// irreducible elements.
std::vector<IVec> hilbert_pointed(const RationalCone& cone) {
  if (cone.dim == 0) return {};
  std::set<IVec> cand(cone.rays.begin(), cone.rays.end());
  for (const std::vector<IVec>& simplex : triangulate_rays(cone.rays, cone.dim))
    parallelepiped_points(IMat::from_columns(simplex, cone.dim), cand);

  // Reduce by increasing grade, testing only against irreducibles found so
  // far.  The grade (sum of all facet pairings) is strictly positive away
  // from 0, so every proper summand of h has smaller grade; equal-grade
  // pairs can never reduce each other.
  IVec w(static_cast<size_t>(cone.dim), Int(0));
  for (const IVec& f : cone.facets) w = vec_add(w, f);
  std::vector<std::pair<Int, IVec>> graded;
  graded.reserve(cand.size());
  for (const IVec& h : cand) graded.emplace_back(dot(w, h), h);
  std::sort(graded.begin(), graded.end());

  std::vector<IVec> irr;
  for (const auto& [grade, h] : graded) {
    bool reducible = false;
    for (const IVec& g : irr) {
      if (cone.contains(vec_sub(h, g))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irr.push_back(h);
  }
  std::sort(irr.begin(), irr.end());
  return irr;
}

}  // namespace

HilbertBasis hilbert_basis(const RationalCone& cone) {
  HilbertBasis hb;
  const int k = cone.lineality.rank();
  if (k == 0) {
    hb.irreducibles = hilbert_pointed(cone);
    return hb;
  }
  hb.units = cone.lineality.basis.columns();
  if (k == cone.dim) return hb;

  // Facets vanish on the lineality space, so they descend to the quotient;
  // lifted representatives W*h satisfy every facet inequality, hence lie in
  // the cone.
  IMat U = complete_to_unimodular(cone.lineality.basis);
  std::vector<IVec> ucols = U.columns();
  std::vector<IVec> wcols(ucols.begin() + k, ucols.end());
  IMat W = IMat::from_columns(wcols, cone.dim);

  std::vector<IVec> reduced;
  for (const IVec& f : cone.facets) {
    IVec rw(static_cast<size_t>(cone.dim - k));
    for (int j = 0; j < cone.dim - k; ++j) rw[j] = dot(f, wcols[j]);
    reduced.push_back(rw);
  }
  RationalCone q = RationalCone::from_inequalities(cone.dim - k, reduced);
  if (!q.is_pointed())
    fail(Errc::InvalidInput, "hilbert basis: quotient cone must be pointed");
  for (const IVec& h : hilbert_pointed(q)) hb.irreducibles.push_back(mat_vec(W, h));
  std::sort(hb.irreducibles.begin(), hb.irreducibles.end());
  return hb;
}

}  // namespace wmsmooth
