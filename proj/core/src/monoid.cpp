#include "wmsmooth/monoid.hpp"

#include "wmsmooth/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace wmsmooth {

namespace {

// Membership of x in the monoid generated by gens (all in Z^dim, x in their
// span lattice).  Graded search: the sum of the facet functionals of the
// generated cone is positive on every generator outside the lineality space,
// so matching its value on x is a finite knapsack; what remains lies in a
// strictly smaller cone handled recursively.
bool member_in(const std::vector<IVec>& gens, const IVec& x) {
  if (is_zero(x)) return true;
  if (gens.empty()) return false;
  const int dim = static_cast<int>(x.size());

  IntegerLattice span = IntegerLattice::from_generators(gens, dim);
  auto xc = span.coords_of(x);
  if (!xc) return false;
  std::vector<IVec> gc;
  for (const IVec& g : gens) {
    auto c = span.coords_of(g);
    if (!c) fail(Errc::InvalidInput, "generator outside its own span");
    gc.push_back(*c);
  }
  RationalCone cone = RationalCone::from_generators(span.rank(), gc);
  if (cone.facets.empty()) return true;  // cone is a subspace: the monoid is a group
  if (!cone.contains(*xc)) return false;

  auto phi = [&](const IVec& v) {
    Int s = 0;
    for (const IVec& f : cone.facets) s += dot(f, v);
    return s;
  };

  std::vector<IVec> pos, lin;
  for (const IVec& g : gc) (phi(g) > 0 ? pos : lin).push_back(g);

  std::set<std::pair<int, IVec>> failed;
  auto rec = [&](auto&& self, size_t i, const IVec& rem) -> bool {
    if (phi(rem) == 0) {
      std::vector<IVec> back;
      for (const IVec& g : lin) back.push_back(span.from_coords(g));
      return member_in(back, span.from_coords(rem));
    }
    if (i == pos.size()) return false;
    if (failed.count({static_cast<int>(i), rem})) return false;
    IVec cur = rem;
    for (;;) {
      if (self(self, i + 1, cur)) return true;
      cur = vec_sub(cur, pos[i]);
      if (!cone.contains(cur)) break;
    }
    failed.insert({static_cast<int>(i), rem});
    return false;
  };
  return rec(rec, 0, *xc);
}

}  // namespace

WeightMonoid WeightMonoid::make(GroupDatum g, std::vector<IVec> gens) {
  std::vector<int> all(static_cast<size_t>(g.ss_rank()));
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return make_levi(std::move(g), std::move(gens), all);
}

WeightMonoid WeightMonoid::make_levi(GroupDatum g, std::vector<IVec> gens,
                                     const std::vector<int>& levi) {
  WeightMonoid m;
  m.group = std::move(g);
  for (int i : levi)
    if (i < 0 || i >= m.group.ss_rank()) fail(Errc::NotSimpleRoot, "Levi node out of range");
  for (IVec& v : gens) {
    if (static_cast<int>(v.size()) != m.group.weight_dim())
      fail(Errc::DimensionMismatch, "generator has wrong length");
    for (int i : levi)
      if (GroupDatum::pairing(i, v) < 0) fail(Errc::NotDominant, "generator " + vec_str(v));
    if (!is_zero(v)) m.generators.push_back(std::move(v));
  }
  m.lattice = IntegerLattice::from_generators(m.generators, m.group.weight_dim());
  for (const IVec& v : m.generators) {
    auto c = m.lattice.coords_of(v);
    if (!c) fail(Errc::InvalidInput, "generator outside its own span");
    m.gen_coords_.push_back(*c);
  }
  m.cone = RationalCone::from_generators(m.rank(), m.gen_coords_);
  m.e_rays = m.cone.facets;
  for (int i = 0; i < m.group.ss_rank(); ++i) {
    bool zero = true;
    for (const IVec& v : m.generators)
      if (GroupDatum::pairing(i, v) != 0) {
        zero = false;
        break;
      }
    if (zero) m.sp.push_back(i);
  }
  return m;
}

IVec WeightMonoid::coords(const IVec& weight) const {
  auto c = lattice.coords_of(weight);
  if (!c) fail(Errc::NotInRootLattice, "weight outside the monoid lattice: " + vec_str(weight));
  return *c;
}

IVec WeightMonoid::coroot_restriction(int i) const {
  if (i < 0 || i >= group.ss_rank()) fail(Errc::NotSimpleRoot, "coroot index out of range");
  IVec row(static_cast<size_t>(rank()));
  for (int j = 0; j < rank(); ++j) row[j] = lattice.basis.at(i, j);
  return row;
}

Int WeightMonoid::pair(const IVec& functional, const IVec& weight) const {
  return dot(functional, coords(weight));
}

std::vector<IVec> WeightMonoid::a_of(int node) const {
  IVec alpha = group.simple_root(node);
  auto ac = lattice.coords_of(alpha);
  if (!ac) fail(Errc::AlphaNotInLattice, "simple root not in the monoid lattice");
  std::set<IVec> out;
  IVec rest = coroot_restriction(node);
  for (const IVec& d : e_rays)
    if (dot(d, *ac) == 1) {
      out.insert(d);
      out.insert(vec_sub(rest, d));
    }
  return {out.begin(), out.end()};
}

bool WeightMonoid::member(const IVec& weight) const {
  if (static_cast<int>(weight.size()) != group.weight_dim())
    fail(Errc::DimensionMismatch, "weight has wrong length");
  auto c = lattice.coords_of(weight);
  if (!c) return false;
  return member_coords(*c);
}

bool WeightMonoid::member_coords(const IVec& x) const {
  return member_in(gen_coords_, x);
}

bool WeightMonoid::is_normal() const {
  if (rank() == 0) return true;
  HilbertBasis hb = hilbert_basis(cone);
  for (const IVec& u : hb.units)
    if (!member_coords(u) || !member_coords(vec_neg(u))) return false;
  for (const IVec& h : hb.irreducibles)
    if (!member_coords(h)) return false;
  return true;
}

bool WeightMonoid::is_G_saturated() const {
  if (rank() == 0) return true;
  // Dominance inequalities in lattice coordinates: the rows of the basis
  // matrix that pair with the simple coroots.
  std::vector<IVec> rows;
  for (int i = 0; i < group.ss_rank(); ++i) rows.push_back(coroot_restriction(i));
  RationalCone dom = RationalCone::from_inequalities(rank(), rows);
  HilbertBasis hb = hilbert_basis(dom);
  for (const IVec& u : hb.units)
    if (!member_coords(u) || !member_coords(vec_neg(u))) return false;
  for (const IVec& h : hb.irreducibles)
    if (!member_coords(h)) return false;
  return true;
}

}  // namespace wmsmooth
