#pragma once

#include "wmsmooth/cones.hpp"
#include "wmsmooth/group.hpp"

#include <vector>

namespace wmsmooth {

// A finitely generated monoid of dominant weights.  Generators are stored in
// weight coordinates; the span lattice, the rational cone (in coordinates of
// a lattice basis), the set S^p of simple roots pairing to zero with every
// generator, and the primitive generators of the extreme rays of the dual
// cone are all computed eagerly.  Monoids built with make_levi are dominant
// only against the Levi passed there.
struct WeightMonoid {
  GroupDatum group;
  std::vector<IVec> generators;  // nonzero, dominant, weight coordinates
  IntegerLattice lattice;        // span of the generators
  RationalCone cone;             // generated cone, in lattice coordinates
  std::vector<int> sp;           // S^p: simple nodes orthogonal to the monoid
  std::vector<IVec> e_rays;      // E: dual-cone extreme rays = facets of cone

  // Throws NotDominant for a non-dominant generator; zero generators are
  // dropped, so the zero monoid is the empty generator list.
  static WeightMonoid make(GroupDatum g, std::vector<IVec> gens);

  // Variant for monoids attached to a boundary point of the dominant
  // chamber, where only the Levi given by `levi` acts: dominance is enforced
  // against the listed simple nodes and unconstrained elsewhere.
  static WeightMonoid make_levi(GroupDatum g, std::vector<IVec> gens, const std::vector<int>& levi);

  int rank() const { return lattice.rank(); }
  bool in_lattice(const IVec& weight) const { return lattice.contains(weight); }
  IVec coords(const IVec& weight) const;          // throws NotInRootLattice-style errors
  IVec weight_of(const IVec& coords_vec) const { return lattice.from_coords(coords_vec); }

  // The functional alpha_i^vee restricted to the lattice, in the coordinates
  // dual to the lattice basis.
  IVec coroot_restriction(int i) const;

  // Pairing of a dual-coordinate functional with a lattice member given in
  // weight coordinates.
  Int pair(const IVec& functional, const IVec& weight) const;

  // The set a(alpha): dual-cone rays pairing to one with alpha, together
  // with their complements to alpha^vee.  Requires alpha in the lattice.
  std::vector<IVec> a_of(int node) const;

  // Membership in the generated monoid (not just its cone).
  bool member(const IVec& weight) const;

  bool is_normal() const;       // equals cone intersect lattice
  bool is_G_saturated() const;  // equals lattice intersect dominant weights

  bool member_coords(const IVec& x) const;

 private:
  std::vector<IVec> gen_coords_;
};

}  // namespace wmsmooth
