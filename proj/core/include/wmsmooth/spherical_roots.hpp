#pragma once

#include <string>
#include <vector>

#include <wmsmooth/group.hpp>
#include <wmsmooth/monoid.hpp>

namespace wmsmooth {

// One spherical root: a positive element of the root lattice,
// sigma = sum_k coeffs[k] * alpha_{nodes[k]}.
//
// `pattern` names the shape of (support diagram, coefficients):
//   "A1"          alpha
//   "A1-doubled"  2 alpha
//   "A1xA1"       alpha + beta with alpha perp beta
//   "A-string"    alpha_1 + ... + alpha_n on an A_n chain, n >= 2
//   "A3-mid"      alpha_1 + 2 alpha_2 + alpha_3 on an A_3 chain
//   "B-string"    alpha_1 + ... + alpha_n on a B_n chain, n >= 2
//   "B-doubled"   2(alpha_1 + ... + alpha_n) on a B_n chain, n >= 2
//   "B3-special"  alpha_1 + 2 alpha_2 + 3 alpha_3 on a B_3 chain
//   "C-string"    alpha_1 + 2(alpha_2 + ... + alpha_{n-1}) + alpha_n on a C_n chain, n >= 3
//   "D-string"    2(alpha_1 + ... + alpha_{n-2}) + alpha_{n-1} + alpha_n on a D_n diagram, n >= 4
//   "F4"          alpha_1 + 2 alpha_2 + 3 alpha_3 + 2 alpha_4
//   "G2-long"     4 alpha_1 + 2 alpha_2
//   "G2-sum"      alpha_1 + alpha_2 on a G_2 diagram
// `nodes` lists the supporting simple roots in the canonical order of the
// support diagram (not necessarily increasing as ambient indices).
struct SphericalRoot {
  std::string pattern;
  std::vector<int> nodes;
  std::vector<Int> coeffs;
  IVec weight;  // sigma in weight coordinates of the ambient group

  IVec root_coeffs(int ss_rank) const;  // coefficients over all simple roots
  bool is_simple() const { return pattern == "A1"; }
  bool is_doubled_simple() const { return pattern == "A1-doubled"; }
  bool is_orthogonal_pair() const { return pattern == "A1xA1"; }
  bool supported_on(const std::vector<int>& roots) const;  // supp subset of roots
  bool operator==(const SphericalRoot& o) const {
    return pattern == o.pattern && nodes == o.nodes && coeffs == o.coeffs;
  }
};

// Every spherical root whose support embeds in the diagram of g: injective node
// maps of each pattern diagram matching all pairwise Cartan entries. Duplicates
// from symmetric patterns are merged; the result is sorted by root coefficients.
std::vector<SphericalRoot> spherically_closed_roots(const GroupDatum& g);

// Compatibility of sigma with a set sp of simple nodes:
//   B-string: inner chain nodes lie in sp, the short end does not;
//   C-string: all nodes from the third onward lie in sp;
//   otherwise: every support node whose coroot vanishes on sigma lies in sp.
bool compatible_with_sp(const GroupDatum& g, const SphericalRoot& sigma,
                        const std::vector<int>& sp);

// Adapted spherical roots of a G-saturated monoid (throws NotGSaturated
// otherwise): sigma is not a simple root, lies in the monoid's lattice, is
// compatible with m.sp, a doubled root pairs evenly with every generator, and
// an orthogonal pair has equal coroot values on every generator.
std::vector<SphericalRoot> sigma_n_gsat(const WeightMonoid& m);

// Adapted spherical roots of any normal monoid (throws NotNormal otherwise).
// Simple roots may occur here; the dual-cone rays m.e_rays and the functional
// pairs m.a_of enter the conditions.
std::vector<SphericalRoot> sigma_n(const WeightMonoid& m);

// Largest subset F of the simple nodes such that some strictly positive
// combination of the restricted coroots of F pairs nonpositively with every
// element of sigma. Computed as the union of supports of the extreme rays of
// {c >= 0 : sum_i c_i <coroot_i, sigma_j> <= 0 for all j}; that union is itself
// such an F, so it contains every other one. Elements of sigma must lie in the
// monoid's lattice.
std::vector<int> s_gamma(const WeightMonoid& m, const std::vector<SphericalRoot>& sigma);

}  // namespace wmsmooth
