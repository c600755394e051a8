#pragma once

#include "wmsmooth/monoid.hpp"
#include "wmsmooth/verdict.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wmsmooth {

// Convex polytope inside the dominant chamber of the weight space of a
// group.  `vertices` are exact rational points, are exactly the extreme
// points of the polytope, and keep their construction order; `dim` is the
// affine dimension.
struct Polytope {
  GroupDatum group;
  std::vector<QVec> vertices;
  int dim = 0;

  // Throws DimensionMismatch for a point of the wrong length,
  // VertexOutsideChamber for a point pairing negatively with a simple
  // coroot, and RedundantVertex for a duplicate or for a point inside the
  // hull of the others.
  static Polytope make(GroupDatum g, std::vector<QVec> points);

  // Index of the vertex equal to a; throws NotAVertex.
  int vertex_index(const QVec& a) const;
};

// The tangent cone R_{>=0}(P - a) at the vertex a, in weight coordinates.
// Throws NotAVertex; a polytope that does not span the weight space has a
// degenerate tangent cone, reported as DegenerateDimension.
RationalCone tangent_cone(const Polytope& p, const QVec& a);

// The monoid C_aP intersect lambda0, over the ambient group: generated by
// the Hilbert basis of the tangent cone in lattice coordinates, so normal by
// construction.  The generators are dominant only for the Levi at a.  Throws
// NotAVertex, and DegenerateDimension unless lambda0 spans exactly the span
// of P - a.
WeightMonoid local_monoid(const Polytope& p, const IntegerLattice& lambda0, const QVec& a);

// Delzant with respect to lambda0: the polytope dimension equals the lattice
// rank and at every vertex the Hilbert basis of (C_aP, lambda0) is a basis
// of lambda0.
bool is_delzant(const Polytope& p, const IntegerLattice& lambda0);

// Reflectivity of the polytope: it spans the weight space, the supporting
// hyperplanes of the facets through any point are stable under the point's
// wall reflections, and every facet meets the open Weyl chamber.  `why`
// names the first failed condition.
ReflectiveCheck is_reflective_polytope(const Polytope& p);

// A model of the Levi at one vertex by a smaller group: an integer matrix
// from lambda0 coordinates to target weight coordinates, plus the list of
// (target node, ambient node) simple-root correspondences.  check_pair
// rejects a model with InvalidLocalModel unless the matrix is injective on
// lambda0, every ambient node vanishes on the vertex, every target node is
// covered, and the matrix intertwines the coroot pairings of each declared
// correspondence.
struct LocalModel {
  int vertex = 0;
  GroupDatum target;
  IMat matrix;
  std::vector<std::pair<int, int>> root_correspondence;
};

enum class PairOutcome { Satisfied, Violated, Undecided };
const char* pair_outcome_name(PairOutcome o);

// One vertex of a checked pair: the simple nodes of its Levi, the local
// monoid, whether the monoid spans lambda0, and its smoothness verdict.  The
// verdict's route is meaningful only for decided vertices.
struct VertexReport {
  int vertex = 0;
  std::vector<int> levi;
  WeightMonoid gamma;
  bool lattice_matches = false;
  Verdict verdict;
};

// Result of check_pair.  `overall` is Satisfied exactly when every vertex is
// Smooth and every vertex monoid spans lambda0; a NotSmooth vertex or a
// failed lattice condition gives Violated, anything else Undecided.
struct PolytopeReport {
  std::vector<VertexReport> vertices;
  bool reflective = false;
  std::string reflective_why;
  bool delzant = false;
  bool global_route = false;
  PairOutcome overall = PairOutcome::Undecided;
};

// Can (P, lambda0) be the moment polytope and weight lattice of a
// multiplicity free Hamiltonian manifold?  Global route first: when lambda0
// is stable under the wall reflections at every vertex and contains every
// vertex Levi's simple roots, and P is reflective and Delzant with respect
// to lambda0, the pair is Satisfied outright.  Otherwise each vertex is
// dispatched on its own: a torus Levi gets the toric check, the full group
// with a G-saturated monoid gets the saturated criterion, a vertex with a
// local model gets its monoid pushed through the model and judged there, and
// anything else stays Undecided.  Throws VertexOutsideChamber and
// InvalidLocalModel.
PolytopeReport check_pair(const Polytope& p, const IntegerLattice& lambda0,
                          const std::vector<LocalModel>& local_models = {});

}  // namespace wmsmooth
