#include "wmsmooth/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace wmsmooth {

IMat IMat::from_columns(const std::vector<IVec>& cols, int dim) {
  IMat m(dim, static_cast<int>(cols.size()));
  for (int j = 0; j < m.nc; ++j) {
    if (static_cast<int>(cols[static_cast<size_t>(j)].size()) != dim)
      fail(Errc::DimensionMismatch, "column length does not match dimension");
    for (int i = 0; i < dim; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
  }
  return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rows, int dim) {
  IMat m(static_cast<int>(rows.size()), dim);
  for (int i = 0; i < m.nr; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != dim)
      fail(Errc::DimensionMismatch, "row length does not match dimension");
    for (int j = 0; j < dim; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

IMat mat_mul(const IMat& A, const IMat& B) {
  if (A.nc != B.nr) fail(Errc::DimensionMismatch, "matrix product shape");
  IMat C(A.nr, B.nc);
  for (int i = 0; i < A.nr; ++i)
    for (int k = 0; k < A.nc; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.nc; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

IVec mat_vec(const IMat& A, const IVec& x) {
  if (A.nc != static_cast<int>(x.size())) fail(Errc::DimensionMismatch, "matrix-vector shape");
  IVec y(static_cast<size_t>(A.nr), Int(0));
  for (int i = 0; i < A.nr; ++i)
    for (int j = 0; j < A.nc; ++j) y[static_cast<size_t>(i)] += A.at(i, j) * x[static_cast<size_t>(j)];
  return y;
}

QVec mat_vec_q(const IMat& A, const QVec& x) {
  if (A.nc != static_cast<int>(x.size())) fail(Errc::DimensionMismatch, "matrix-vector shape");
  QVec y(static_cast<size_t>(A.nr), Rat(0));
  for (int i = 0; i < A.nr; ++i)
    for (int j = 0; j < A.nc; ++j) y[static_cast<size_t>(i)] += Rat(A.at(i, j)) * x[static_cast<size_t>(j)];
  return y;
}

namespace {

void swap_cols(IMat& M, int j, int k) {
  if (j == k) return;
  for (int i = 0; i < M.nr; ++i) std::swap(M.at(i, j), M.at(i, k));
}

void negate_col(IMat& M, int j) {
  for (int i = 0; i < M.nr; ++i) M.at(i, j) = -M.at(i, j);
}

// col_j -= q * col_c
void axpy_col(IMat& M, int j, const Int& q, int c) {
  if (q == 0) return;
  for (int i = 0; i < M.nr; ++i) M.at(i, j) -= q * M.at(i, c);
}

}  // namespace

IMat hnf_columns(const IMat& M, IMat* U, int* rank) {
  IMat H = M;
  IMat T = IMat::identity(M.nc);
  int c = 0;  // next pivot column slot
  for (int i = 0; i < H.nr && c < H.nc; ++i) {
    // Euclid across columns c..nc-1 on row i until one nonzero entry remains.
    for (;;) {
      int best = -1;
      for (int j = c; j < H.nc; ++j) {
        if (H.at(i, j) == 0) continue;
        if (best < 0 || cmp_abs(H.at(i, j), H.at(i, best)) < 0) best = j;
      }
      if (best < 0) break;
      swap_cols(H, c, best);
      swap_cols(T, c, best);
      bool clean = true;
      for (int j = c + 1; j < H.nc; ++j) {
        if (H.at(i, j) == 0) continue;
        Int q = fdiv(H.at(i, j), H.at(i, c));
        axpy_col(H, j, q, c);
        axpy_col(T, j, q, c);
        if (H.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(i, c) == 0) continue;
    if (H.at(i, c) < 0) {
      negate_col(H, c);
      negate_col(T, c);
    }
    // Reduce the pivot row entries of earlier columns into [0, pivot).
    for (int j = 0; j < c; ++j) {
      Int q = fdiv(H.at(i, j), H.at(i, c));
      axpy_col(H, j, q, c);
      axpy_col(T, j, q, c);
    }
    ++c;
  }
  if (U) *U = T;
  if (rank) *rank = c;
  return H;
}

Snf smith_form(const IMat& M) {
  Snf s;
  s.D = M;
  s.U = IMat::identity(M.nr);
  s.V = IMat::identity(M.nc);
  IMat& D = s.D;

  auto swap_rows = [&](IMat& A, int i, int k) {
    if (i == k) return;
    for (int j = 0; j < A.nc; ++j) std::swap(A.at(i, j), A.at(k, j));
  };
  auto axpy_row = [&](IMat& A, int i, const Int& q, int k) {  // row_i -= q*row_k
    if (q == 0) return;
    for (int j = 0; j < A.nc; ++j) A.at(i, j) -= q * A.at(k, j);
  };

  int n = std::min(M.nr, M.nc);
  for (int t = 0; t < n; ++t) {
    // Find a nonzero pivot in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < D.nr; ++i)
      for (int j = t; j < D.nc; ++j)
        if (D.at(i, j) != 0 && (pi < 0 || cmp_abs(D.at(i, j), D.at(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(D, t, pi);
    swap_rows(s.U, t, pi);
    swap_cols(D, t, pj);
    swap_cols(s.V, t, pj);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (int i = t + 1; i < D.nr; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = fdiv(D.at(i, t), D.at(t, t));
        axpy_row(D, i, q, t);
        axpy_row(s.U, i, q, t);
        if (D.at(i, t) != 0) {  // remainder smaller than pivot: swap up, restart
          swap_rows(D, t, i);
          swap_rows(s.U, t, i);
          dirty = true;
        }
      }
      // Clear row t right of the pivot.
      for (int j = t + 1; j < D.nc; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = fdiv(D.at(t, j), D.at(t, t));
        axpy_col(D, j, q, t);
        axpy_col(s.V, j, q, t);
        if (D.at(t, j) != 0) {
          swap_cols(D, t, j);
          swap_cols(s.V, t, j);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
  }
  // Positive diagonal.
  for (int t = 0; t < n; ++t)
    if (D.at(t, t) < 0) {
      negate_col(D, t);
      negate_col(s.V, t);
    }
  // Enforce the divisibility chain d_t | d_{t+1}.
  for (int t = 0; t + 1 < n; ++t) {
    for (int u = t + 1; u < n; ++u) {
      if (D.at(t, t) == 0 && D.at(u, u) != 0) {  // move nonzero forward
        swap_rows(D, t, u);
        swap_rows(s.U, t, u);
        swap_cols(D, t, u);
        swap_cols(s.V, t, u);
      }
      if (D.at(t, t) == 0 || D.at(u, u) % D.at(t, t) == 0) continue;
      // Classic fix-up: fold d_u into position (t,t) via one column add, then
      // re-diagonalize the 2x2 block with row/column operations.
      axpy_col(D, t, Int(-1), u);  // col_t += col_u
      axpy_col(s.V, t, Int(-1), u);
      for (;;) {
        bool dirty = false;
        if (D.at(u, t) != 0) {
          Int q = fdiv(D.at(u, t), D.at(t, t));
          axpy_row(D, u, q, t);
          axpy_row(s.U, u, q, t);
          if (D.at(u, t) != 0) {
            swap_rows(D, t, u);
            swap_rows(s.U, t, u);
            dirty = true;
          }
        }
        if (D.at(t, u) != 0) {
          Int q = fdiv(D.at(t, u), D.at(t, t));
          axpy_col(D, u, q, t);
          axpy_col(s.V, u, q, t);
          if (D.at(t, u) != 0) {
            swap_cols(D, t, u);
            swap_cols(s.V, t, u);
            dirty = true;
          }
        }
        if (!dirty) break;
      }
      if (D.at(t, t) < 0) {
        negate_col(D, t);
        negate_col(s.V, t);
      }
      if (D.at(u, u) < 0) {
        negate_col(D, u);
        negate_col(s.V, u);
      }
    }
  }
  for (int t = 0; t < n; ++t)
    if (D.at(t, t) != 0) s.divisors.push_back(D.at(t, t));
  return s;
}

Int det(const IMat& M) {
  if (M.nr != M.nc) fail(Errc::DimensionMismatch, "determinant of non-square matrix");
  int n = M.nr;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IMat A = M;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        A.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = A.at(k, k);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : -A.at(n - 1, n - 1);
}

int rank_of(const IMat& M) {
  int r = 0;
  hnf_columns(M, nullptr, &r);
  return r;
}

IMat inverse_unimodular(const IMat& U) {
  if (U.nr != U.nc) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  int n = U.nr;
  Int d = det(U);
  if (d != 1 && d != -1) fail(Errc::InvalidInput, "matrix is not unimodular");
  // Adjugate via cofactors; desk-scale dimensions.
  IMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = U.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = d > 0 ? cof : -cof;
    }
  return inv;
}

bool part_of_basis(const std::vector<IVec>& vecs) {
  if (vecs.empty()) fail(Errc::EmptyInput, "part_of_basis needs at least one vector");
  int k = static_cast<int>(vecs[0].size());
  int l = static_cast<int>(vecs.size());
  for (const IVec& v : vecs)
    if (static_cast<int>(v.size()) != k)
      fail(Errc::DimensionMismatch, "part_of_basis vectors of unequal length");
  if (k < l) return false;  // more vectors than coordinates
  IMat A = IMat::from_columns(vecs, k);
  // gcd of all l x l minors; early exit once the gcd reaches 1.
  std::vector<int> rows(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) rows[static_cast<size_t>(i)] = i;
  Int g = 0;
  for (;;) {
    IMat S(l, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) S.at(i, j) = A.at(rows[static_cast<size_t>(i)], j);
    g = int_gcd(g, det(S));
    if (g == 1) return true;
    // next combination
    int i = l - 1;
    while (i >= 0 && rows[static_cast<size_t>(i)] == k - l + i) --i;
    if (i < 0) break;
    ++rows[static_cast<size_t>(i)];
    for (int j = i + 1; j < l; ++j) rows[static_cast<size_t>(j)] = rows[static_cast<size_t>(j - 1)] + 1;
  }
  return g == 1;
}

std::vector<IVec> kernel_basis(const IMat& A) {
  // Column HNF of A: columns of U matching zero columns of H span the kernel,
  // and that subgroup is automatically saturated.
  if (A.nc == 0) return {};
  IMat U;
  int r = 0;
  hnf_columns(A, &U, &r);
  std::vector<IVec> out;
  for (int j = r; j < A.nc; ++j) out.push_back(U.col(j));
  return out;
}

std::optional<IVec> solve_columns(const IMat& B, const IVec& t) {
  if (static_cast<int>(t.size()) != B.nr) fail(Errc::DimensionMismatch, "solve_columns shape");
  IMat U;
  int r = 0;
  IMat H = hnf_columns(B, &U, &r);
  // Forward substitution along the pivot structure of H.
  IVec y(static_cast<size_t>(B.nc), Int(0));
  IVec rem = t;
  for (int j = 0; j < r; ++j) {
    int p = 0;
    while (p < H.nr && H.at(p, j) == 0) ++p;
    // p is the pivot row of column j; rows above p are already cleared.
    Int num = rem[static_cast<size_t>(p)];
    if (num % H.at(p, j) != 0) return std::nullopt;
    Int q = num / H.at(p, j);
    y[static_cast<size_t>(j)] = q;
    if (q != 0)
      for (int i = 0; i < H.nr; ++i) rem[static_cast<size_t>(i)] -= q * H.at(i, j);
  }
  if (!is_zero(rem)) return std::nullopt;
  return mat_vec(U, y);
}

std::optional<QVec> solve_columns_q(const IMat& B, const QVec& t) {
  if (static_cast<int>(t.size()) != B.nr) fail(Errc::DimensionMismatch, "solve_columns_q shape");
  // Rational Gaussian elimination on [B | t].
  int n = B.nr, m = B.nc;
  std::vector<QVec> A(static_cast<size_t>(n), QVec(static_cast<size_t>(m) + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(B.at(i, j));
    A[static_cast<size_t>(i)][static_cast<size_t>(m)] = t[static_cast<size_t>(i)];
  }
  std::vector<int> pivot_col_of_row(static_cast<size_t>(n), -1);
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (A[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[static_cast<size_t>(p)], A[static_cast<size_t>(row)]);
    Rat pv = A[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int j = col; j <= m; ++j) A[static_cast<size_t>(row)][static_cast<size_t>(j)] /= pv;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      Rat f = A[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j <= m; ++j)
        A[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * A[static_cast<size_t>(row)][static_cast<size_t>(j)];
    }
    pivot_col_of_row[static_cast<size_t>(row)] = col;
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (A[static_cast<size_t>(i)][static_cast<size_t>(m)] != 0) return std::nullopt;
  QVec x(static_cast<size_t>(m), Rat(0));
  for (int i = 0; i < row; ++i)
    x[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(i)])] = A[static_cast<size_t>(i)][static_cast<size_t>(m)];
  return x;
}

IMat complete_to_unimodular(const IMat& basis) {
  int n = basis.nr, k = basis.nc;
  if (k == 0) return IMat::identity(n);
  Snf s = smith_form(basis);
  for (const Int& d : s.divisors)
    if (d != 1) fail(Errc::InvalidInput, "lattice basis is not saturated");
  if (static_cast<int>(s.divisors.size()) != k)
    fail(Errc::InvalidInput, "lattice basis is not independent");
  // U * basis * V = [I_k; 0]  =>  basis * V = U^{-1} [I_k; 0], so the first k
  // columns of U^{-1} span the same lattice; U^{-1} itself is the completion.
  IMat Uinv = inverse_unimodular(s.U);
  // Replace the first k columns by the actual basis (same lattice, and keeps
  // callers' coordinates aligned with the basis they supplied).
  IMat R = Uinv;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) R.at(i, j) = basis.at(i, j);
  Int d = det(R);
  if (d != 1 && d != -1) fail(Errc::InvalidInput, "completion failed");
  return R;
}

IntegerLattice IntegerLattice::from_generators(const std::vector<IVec>& gens, int ambient) {
  IntegerLattice L;
  L.ambient = ambient;
  IMat M = IMat::from_columns(gens, ambient);
  int r = 0;
  IMat H = hnf_columns(M, nullptr, &r);
  L.basis = IMat(ambient, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < ambient; ++i) L.basis.at(i, j) = H.at(i, j);
  return L;
}

bool IntegerLattice::contains(const IVec& v) const { return coords_of(v).has_value(); }

std::optional<IVec> IntegerLattice::coords_of(const IVec& v) const {
  if (static_cast<int>(v.size()) != ambient) fail(Errc::DimensionMismatch, "lattice member length");
  return solve_columns(basis, v);
}

std::optional<QVec> IntegerLattice::coords_of_q(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient) fail(Errc::DimensionMismatch, "lattice member length");
  return solve_columns_q(basis, v);
}

bool IntegerLattice::contains_lattice(const IntegerLattice& other) const {
  for (int j = 0; j < other.basis.nc; ++j)
    if (!contains(other.basis.col(j))) return false;
  return true;
}

}  // namespace wmsmooth
