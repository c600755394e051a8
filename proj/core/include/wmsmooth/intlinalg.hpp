#pragma once

#include <optional>
#include <vector>

#include "wmsmooth/numbers.hpp"

// Exact integer matrices and the lattice-level normal forms the rest of the
// library is built on: column Hermite form, Smith form, maximal-minor gcd,
// saturated kernels, integral and rational solving.

namespace wmsmooth {

struct IMat {
  int nr = 0, nc = 0;
  std::vector<Int> a;  // row-major

  IMat() = default;
  IMat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }

  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  // Columns are the given vectors, each of length dim.
  static IMat from_columns(const std::vector<IVec>& cols, int dim);
  static IMat from_rows(const std::vector<IVec>& rows, int dim);

  IVec col(int j) const {
    IVec v(nr);
    for (int i = 0; i < nr; ++i) v[static_cast<size_t>(i)] = at(i, j);
    return v;
  }
  IVec row(int i) const {
    IVec v(nc);
    for (int j = 0; j < nc; ++j) v[static_cast<size_t>(j)] = at(i, j);
    return v;
  }
  std::vector<IVec> columns() const {
    std::vector<IVec> v;
    for (int j = 0; j < nc; ++j) v.push_back(col(j));
    return v;
  }
  IMat transposed() const {
    IMat t(nc, nr);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) t.at(j, i) = at(i, j);
    return t;
  }
  bool operator==(const IMat& o) const { return nr == o.nr && nc == o.nc && a == o.a; }
};

IMat mat_mul(const IMat& A, const IMat& B);
IVec mat_vec(const IMat& A, const IVec& x);
QVec mat_vec_q(const IMat& A, const QVec& x);

// Column-style Hermite normal form: H = M*U with U unimodular. Pivot columns
// come first with strictly increasing pivot rows, pivots are positive, and in
// each pivot row the entries of earlier columns lie in [0, pivot). Columns
// beyond `rank` are zero. The form is the canonical basis of the column
// lattice of M.
IMat hnf_columns(const IMat& M, IMat* U = nullptr, int* rank = nullptr);

struct Snf {
  IMat D, U, V;           // U*M*V = D, U and V unimodular
  std::vector<Int> divisors;  // nonzero diagonal, each dividing the next
};
Snf smith_form(const IMat& M);

Int det(const IMat& M);  // square matrices, fraction-free elimination
int rank_of(const IMat& M);

// Inverse of a unimodular matrix (integer inverse, det = +-1).
IMat inverse_unimodular(const IMat& U);

// Whether the given vectors (columns in Z^k, all the same length k) extend
// to a basis of Z^k, decided by the gcd of all l x l minors being 1 where
// l = vecs.size().  More vectors than coordinates is answered with false.
// Raises EmptyInput / DimensionMismatch on an empty list or ragged lengths.
bool part_of_basis(const std::vector<IVec>& vecs);

// Basis of the saturated integer kernel {x in Z^n : A x = 0}.
std::vector<IVec> kernel_basis(const IMat& A);

// Solve B x = t over the integers (t in the column lattice of B); nullopt if
// there is no integral solution.
std::optional<IVec> solve_columns(const IMat& B, const IVec& t);
// Solve B x = t over the rationals; nullopt if t is outside the column span.
std::optional<QVec> solve_columns_q(const IMat& B, const QVec& t);

// Given a matrix whose columns are a basis of a *saturated* rank-k sublattice
// of Z^n, return a unimodular n x n matrix whose first k columns are that
// basis. Used to split off lineality directions and quotient coordinates.
IMat complete_to_unimodular(const IMat& basis);

// A sublattice of Z^ambient kept in canonical (column HNF) form.
struct IntegerLattice {
  int ambient = 0;
  IMat basis;  // ambient x rank, column HNF, canonical

  static IntegerLattice from_generators(const std::vector<IVec>& gens, int ambient);
  int rank() const { return basis.nc; }
  bool contains(const IVec& v) const;
  // Coordinates of v with respect to the basis; nullopt if v is not a member.
  std::optional<IVec> coords_of(const IVec& v) const;
  std::optional<QVec> coords_of_q(const QVec& v) const;
  IVec from_coords(const IVec& c) const { return mat_vec(basis, c); }
  bool operator==(const IntegerLattice& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
  bool contains_lattice(const IntegerLattice& other) const;
};

}  // namespace wmsmooth
