#pragma once

#include "wmsmooth/verdict.hpp"

#include <string>
#include <vector>

namespace wmsmooth {

// The monoid L cap Lambda^+ together with its minimal generating set,
// obtained from a Hilbert basis of the dominant cone written in coordinates
// of the lattice basis.  The result is G-saturated by construction.  Throws
// DimensionMismatch if L does not live in the weight space of g, and
// DegenerateDimension if the dominant part of L spans only a proper
// sublattice (the intersection is then not full rank in L).
WeightMonoid saturated_monoid(const GroupDatum& g, const IntegerLattice& L);

// One enumerated lattice: the saturated monoid it spans, the N-spherical
// root weights the classification predicts for it (sorted; empty for
// out-of-family rows), and the verdict the smoothness criterion returned.
struct FamilyEntry {
  std::string label;
  bool in_family = true;
  std::vector<IVec> lattice_generators;  // weight coordinates
  WeightMonoid monoid;
  std::vector<IVec> expected_sigma;  // sorted weights of the expected Sigma^N
  Verdict verdict;
};

// Full-rank G-saturated smooth weight monoids of SL(n+1), by case:
//   1. doubled lattices 2<alpha_2, ..., alpha_n, d omega_n> for d | (n+1);
//   2. n even: <alpha_1+alpha_2, ..., alpha_{n-1}+alpha_n, k omega_{n-1}>,
//      sampled for k = 1..max_param (the family is infinite);
//   3. n odd: <alpha_2+alpha_3, ..., alpha_{n-1}+alpha_n, e omega_{n-1},
//      r omega_{n-1} + omega_n> for e | (n+1)/2 and 0 <= r < e.
// Cases 1 and 3 are complete, so their entry counts are tau(n+1) and
// sigma((n+1)/2).  Requires 1 <= n <= 8 and max_param >= 1 (InvalidParams).
// Every entry is re-checked against check_gsat_smooth; a disagreement with
// the expected outcome or Sigma^N raises logic_error.
std::vector<FamilyEntry> enumerate_sl_fullrank(int n, int max_param = 6);

// The same enumeration for the other simple types: doubled lattices between
// 2 Lambda_R and 2 Lambda (all types), the type-B window between
// Z(S^+ + {2 alpha_n}) and <omega_1, ..., omega_{n-1}, 2 omega_n>, and
// Lambda itself for type C.  Appends a few out-of-family lattices expected
// to be NotSmooth.  Type A is rejected with InvalidParams; rank bounds are
// those of the root system.
std::vector<FamilyEntry> enumerate_other_types(SimpleType type, int n);

}  // namespace wmsmooth
