#pragma once

#include <vector>

#include <wmsmooth/group.hpp>
#include <wmsmooth/numbers.hpp>

namespace wmsmooth {

// Decides whether the triple (S, S^p, Sigma) splits, component by component
// of the subdiagram on S, into the classified local shapes, with arbitrary
// diagram symmetries allowed:
//
//   - S_i irreducible, S^p_i = S_i, Sigma_i empty;
//   - S_i = A_n (n >= 1), S^p_i the chain minus one end node, Sigma_i empty;
//   - S_i = A_n (n >= 4 even), S^p_i = every other node starting at an end,
//     Sigma_i the strings alpha_j + 2 alpha_{j+1} + alpha_{j+2} centered on
//     the gaps (j = 1, 3, ..., n-3 along the chain);
//   - S_i = A_n x A_k (n > k >= 2), S^p_i the last n-k-1 nodes of the long
//     chain, Sigma_i the pairs alpha_j + alpha_j' matching the first k nodes
//     of both chains in order;
//   - S_i = C_n (n >= 2), S^p_i the chain minus the long-root end node,
//     Sigma_i empty;
//   - S_i = D_5, S^p_i the three middle nodes, Sigma_i the single string
//     alpha_2 + 2 alpha_3 + alpha_4 + 2 alpha_5.
//
// `s_nodes` and `sp` are simple-root indices of g with sp contained in
// s_nodes; each sigma entry is a coefficient vector over all simple roots of
// g, nonzero, nonnegative, supported on s_nodes. Throws on malformed input.
bool admissible_triple(const GroupDatum& g, const std::vector<int>& s_nodes,
                       const std::vector<int>& sp, const std::vector<IVec>& sigma);

}  // namespace wmsmooth
