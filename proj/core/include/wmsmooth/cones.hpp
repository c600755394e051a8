#pragma once

#include "wmsmooth/intlinalg.hpp"

#include <vector>

namespace wmsmooth {

// Full-dimensional rational polyhedral cone in Q^dim.  Callers working with a
// lower-dimensional cone must first pass to coordinates on its span (see
// IntegerLattice::coords_of); both factory functions reject degenerate input.
//
// Canonical form: `facets` are the primitive inner normals of the facets,
// sorted; `rays` are primitive representatives of the extreme rays modulo
// lineality, sorted; `lineality` is the saturated lattice of the lineality
// space.  An empty facet list means the cone is all of Q^dim.
struct RationalCone {
  int dim = 0;
  std::vector<IVec> facets;
  std::vector<IVec> rays;
  IntegerLattice lineality;

  static RationalCone from_inequalities(int dim, const std::vector<IVec>& ineqs);
  static RationalCone from_generators(int dim, const std::vector<IVec>& gens);

  bool contains(const IVec& x) const;
  bool contains(const QVec& x) const;
  bool is_pointed() const { return lineality.rank() == 0; }

  bool operator==(const RationalCone& o) const {
    return dim == o.dim && facets == o.facets;
  }
};

// Extreme rays of the pointed cone {x : r.x >= 0 for r in rows}.  Requires
// rank(rows) == dim; primitive, sorted, deduplicated.
std::vector<IVec> dd_pointed(int dim, const std::vector<IVec>& rows);

// Extreme rays modulo lineality plus a saturated lineality basis for
// {x : r.x >= 0}, no rank assumption.  Ray representatives are primitive and
// deterministic for a fixed geometric cone.
struct ConeRays {
  std::vector<IVec> rays;
  std::vector<IVec> lineality;
};
ConeRays dd_general(int dim, const std::vector<IVec>& rows);

// Hilbert basis of C cap Z^dim.  `units` is a lattice basis of the invertible
// elements (each generator listed once; its negative is implied), and
// `irreducibles` are the irreducible non-units, unique modulo units and
// minimal: together they generate the monoid.
struct HilbertBasis {
  std::vector<IVec> units;
  std::vector<IVec> irreducibles;
};
HilbertBasis hilbert_basis(const RationalCone& cone);

}  // namespace wmsmooth
