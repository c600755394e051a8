#pragma once

#include "wmsmooth/intlinalg.hpp"

#include <string>
#include <vector>

namespace wmsmooth {

enum class SimpleType { A, B, C, D, E, F, G };

char type_letter(SimpleType t);

struct SimpleComponent {
  SimpleType type;
  int rank;
  bool operator==(const SimpleComponent& o) const = default;
};

// Cartan matrix in Bourbaki numbering, entries a_ij = <alpha_i^vee, alpha_j>.
// Rank bounds: A n>=1, B n>=2, C n>=2, D n>=4, E n in {6,7,8}, F n=4, G n=2.
IMat cartan_matrix(SimpleType t, int n);

// A connected reductive group up to isogeny: simple components plus a central
// torus.  Weights are written in the coordinates (fundamental weights of all
// components in order, then characters of the torus), so the pairing with the
// i-th simple coroot is coordinate extraction.
struct GroupDatum {
  std::vector<SimpleComponent> components;
  int torus_rank = 0;

  static GroupDatum make(std::vector<SimpleComponent> comps, int torus_rank);

  int ss_rank() const { return cartan_.nr; }
  int weight_dim() const { return cartan_.nr + torus_rank; }
  const IMat& cartan() const { return cartan_; }

  int component_of(int node) const;
  int component_start(int comp) const;
  std::string component_label(int comp) const;

  bool adjacent(int i, int j) const { return i != j && cartan_.at(i, j) != 0; }
  std::vector<int> neighbors(int j) const;

  // alpha_j in weight coordinates: column j of the Cartan matrix, zero on the
  // torus characters.
  IVec simple_root(int j) const;

  // <alpha_i^vee, lambda> for lambda in weight coordinates.
  static const Int& pairing(int i, const IVec& lambda) { return lambda[i]; }

  bool dominant(const IVec& lambda) const;

  // Simple reflection s_i acting on weight coordinates.
  IVec reflect(int i, const IVec& lambda) const;

  // Root-coefficient vector (length ss_rank) to weight coordinates.
  IVec root_to_weight(const IVec& coeffs) const;

  bool operator==(const GroupDatum& o) const {
    return components == o.components && torus_rank == o.torus_rank;
  }

 private:
  IMat cartan_;
  std::vector<int> starts_;
};

// Nodes with a nonzero coefficient.
std::vector<int> support_of(const IVec& coeffs);

// Isomorphism type of the subdiagram induced on the given simple nodes,
// rendered like "A3", "B2", or "A1xC3" with the factors sorted.  The empty
// set yields the empty string.
std::string support_type(const GroupDatum& g, const std::vector<int>& nodes);

// All permutations p of the simple nodes with a_{p(i),p(j)} = a_{ij}.
std::vector<std::vector<int>> diagram_automorphisms(const GroupDatum& g);

// Injective maps phi of the diagram of the Cartan matrix `pat` into the
// subdiagram of g on `allowed`, matching every pairwise entry:
// g.cartan().at(phi(s), phi(t)) == pat.at(s, t).
std::vector<std::vector<int>> diagram_embeddings(const GroupDatum& g, const IMat& pat,
                                                 const std::vector<int>& allowed);

// Connected components of the subdiagram on `nodes`, each sorted ascending,
// ordered by smallest node.
std::vector<std::vector<int>> diagram_components(const GroupDatum& g,
                                                 const std::vector<int>& nodes);

}  // namespace wmsmooth
