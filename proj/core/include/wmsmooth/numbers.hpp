#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wmsmooth/errors.hpp"

// Exact scalars and small vector helpers. Everything downstream works with
// arbitrary-precision integers and rationals; there is no floating point in
// the library.

namespace wmsmooth {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division (rounds toward minus infinity, like mpz_fdiv).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline IVec zero_vec(int n) { return IVec(static_cast<size_t>(n), Int(0)); }

inline bool is_zero(const IVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline IVec vec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec vec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec vec_neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IVec vec_scale(const Int& c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

inline Rat dot_q(const IVec& a, const QVec& b) {
  Rat r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += Rat(a[i]) * b[i];
  return r;
}

// Content of a vector: gcd of the entries, nonnegative. Zero for the zero vector.
inline Int content(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, x);
  return g;
}

// Divide by the content; the zero vector is returned unchanged.
inline IVec primitive_of(const IVec& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

inline QVec to_qvec(const IVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Scale a rational vector to the primitive integer vector with the same
// direction. The zero vector maps to zero.
inline IVec primitive_direction(const QVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = int_lcm(l, x.get_den());
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    r[i] = s.get_num();
  }
  return primitive_of(r);
}

inline std::string vec_str(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

inline std::string vec_str(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace wmsmooth
