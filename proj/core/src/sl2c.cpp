#include "wmsmooth/sl2c.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "wmsmooth/errors.hpp"

namespace wmsmooth {

namespace {

IVec wv(Int x, Int y) {
  IVec v(2);
  v[0] = std::move(x);
  v[1] = std::move(y);
  return v;
}

void require_sl2c(const WeightMonoid& m) {
  if (!(m.group == sl2c_group())) fail(Errc::WrongGroup, "expected SL(2) x C^x");
  if (!m.is_normal()) fail(Errc::NotNormal, "monoid is not normal");
}

// Primitive lattice element on each extreme ray, in weight coordinates.  Cone
// rays are primitive in lattice coordinates, so the basis image is the first
// lattice point on the ray.
std::vector<IVec> ray_primitives(const WeightMonoid& m) {
  std::vector<IVec> out;
  for (const IVec& r : m.cone.rays) out.push_back(m.weight_of(r));
  return out;
}

}  // namespace

GroupDatum sl2c_group() { return GroupDatum::make({{SimpleType::A, 1}}, 1); }

WeightMonoid table4_instance(const Sl2cFamily& f) {
  const Int &a = f.a, &b = f.b, &c = f.c;
  auto bad = [](const char* msg) { fail(Errc::InvalidParams, msg); };
  auto unused = [&](bool a_used, bool b_used, bool c_used) {
    if ((!a_used && a != 0) || (!b_used && b != 0) || (!c_used && c != 0))
      bad("unused parameter must be zero");
  };
  std::vector<IVec> gens;
  switch (f.id) {
    case 1:
      unused(false, false, false);
      break;
    case 2:
      unused(false, true, false);
      if (b < 1) bad("family 2 needs b >= 1");
      gens = {wv(0, b), wv(0, -b)};
      break;
    case 3:
      unused(false, true, false);
      if (b == 0) bad("family 3 needs b != 0");
      gens = {wv(0, b)};
      break;
    case 4:
      unused(false, true, false);
      gens = {wv(1, b)};
      break;
    case 5:
      unused(true, false, false);
      if (a != 2 && a != 4) bad("family 5 needs a in {2, 4}");
      gens = {wv(a, 0)};
      break;
    case 6: {
      unused(false, true, true);
      if (b < 1) bad("family 6 needs b >= 1");
      Int twoc = 2 * c;
      if (cmp_abs(twoc, b) > 0) bad("family 6 needs |c| <= b/2");
      gens = {wv(1, c), wv(0, b), wv(0, -b)};
      break;
    }
    case 7:
      unused(true, true, false);
      if (a != 2 && a != 4) bad("family 7 needs a in {2, 4}");
      if (b < 1) bad("family 7 needs b >= 1");
      gens = {wv(a, 0), wv(0, b), wv(0, -b)};
      break;
    case 8:
      unused(true, true, false);
      if (a != 2 && a != 4) bad("family 8 needs a in {2, 4}");
      if (b == 0) bad("family 8 needs b != 0");
      gens = {wv(a, 0), wv(0, b)};
      break;
    case 9:
      unused(false, true, false);
      if (b < 1) bad("family 9 needs b >= 1");
      gens = {wv(2, b), wv(2, -b), wv(0, 2 * b), wv(0, -2 * b)};
      break;
    case 10:
      unused(true, true, false);
      if (a < 1) bad("family 10 needs a >= 1");
      if (b == 0) bad("family 10 needs b != 0");
      gens = {wv(2, 0), wv(a, b)};
      break;
    case 11:
      unused(true, true, false);
      if (a < 1) bad("family 11 needs a >= 1");
      if (b < 1) bad("family 11 needs b >= 1");
      gens = {wv(a, b), wv(a, -b), wv(2, 0)};
      break;
    case 12:
      unused(false, true, false);
      if (b == 0) bad("family 12 needs b != 0");
      gens = {wv(2, b), wv(0, 2 * b)};
      break;
    case 13:
      unused(false, true, true);
      if (c == 0) bad("family 13 needs c != 0");
      gens = {wv(1, b), wv(0, c)};
      break;
    case 14:
      unused(false, true, false);
      if (b == 0) bad("family 14 needs b != 0");
      gens = {wv(4, 0), wv(0, 2 * b), wv(2, b)};
      break;
    default:
      bad("family id must be between 1 and 14");
  }
  return WeightMonoid::make(sl2c_group(), std::move(gens));
}

WeightMonoid table4_instance(int id, Int a, Int b, Int c) {
  return table4_instance(Sl2cFamily{id, std::move(a), std::move(b), std::move(c)});
}

std::optional<Sl2cFamily> classify_sl2c(const WeightMonoid& m) {
  require_sl2c(m);
  if (m.rank() == 0) return Sl2cFamily{1, 0, 0, 0};

  // Minimal generators, in weight coordinates.  Dominance confines units to
  // the torus axis, so the unit lattice is generated by one vector (0, u).
  HilbertBasis hb = hilbert_basis(m.cone);
  Int u = 0;
  if (!hb.units.empty()) {
    IVec unit = m.weight_of(hb.units[0]);
    if (hb.units.size() > 1 || unit[0] != 0)
      throw std::logic_error("unit lattice of a dominant monoid must be (0, u)");
    u = unit[1] < 0 ? Int(-unit[1]) : unit[1];
  }
  std::vector<IVec> irr;
  for (const IVec& h : hb.irreducibles) {
    IVec w = m.weight_of(h);
    if (u != 0) {
      // canonical representative modulo the units: epsilon part in (-u/2, u/2]
      Int y = w[1] % u;
      if (y < 0) y += u;
      if (2 * y > u) y -= u;
      w[1] = y;
    }
    irr.push_back(std::move(w));
  }
  std::sort(irr.begin(), irr.end());

  // Matching a family pattern rebuilds the instance and compares it with the
  // input; a mismatch would be a defect in the matcher, not in the input.
  auto as = [&](int id, Int a, Int b, Int c) -> std::optional<Sl2cFamily> {
    Sl2cFamily f{id, std::move(a), std::move(b), std::move(c)};
    WeightMonoid t = table4_instance(f);
    if (!(t.lattice == m.lattice) || !(t.cone == m.cone))
      throw std::logic_error("family reconstruction does not match the monoid");
    return f;
  };

  if (u != 0) {
    if (irr.empty()) return as(2, 0, u, 0);
    if (irr.size() == 1) {
      const IVec& p = irr[0];
      if (p[0] == 1) return as(6, 0, u, p[1]);
      if (p[0] == 2 && p[1] == 0) return as(7, 2, u, 0);
      if (p[0] == 4 && p[1] == 0) return as(7, 4, u, 0);
      if (p[0] == 2 && p[1] != 0 && u == 2 * p[1]) return as(9, 0, p[1], 0);
    }
    return std::nullopt;
  }

  if (irr.size() == 1) {
    const IVec& p = irr[0];
    if (p[0] == 0) return as(3, 0, p[1], 0);
    if (p[0] == 1) return as(4, 0, p[1], 0);
    if ((p[0] == 2 || p[0] == 4) && p[1] == 0) return as(5, p[0], 0, 0);
    return std::nullopt;
  }
  if (irr.size() == 2) {
    const IVec &p = irr[0], &q = irr[1];
    if (p[0] == 0) {
      if (q[0] == 1) return as(13, 0, q[1], p[1]);
      if ((q[0] == 2 || q[0] == 4) && q[1] == 0) return as(8, q[0], p[1], 0);
      if (q[0] == 2 && q[1] != 0 && p[1] == 2 * q[1]) return as(12, 0, q[1], 0);
      return std::nullopt;
    }
    if (p[0] == 1 && q[0] == 1 && p[1] == -q[1] && q[1] > 0) return as(11, 1, q[1], 0);
    if (p[0] == 2 && p[1] == 0 && q[1] != 0) return as(10, q[0], q[1], 0);
    if (q[0] == 2 && q[1] == 0 && p[1] != 0) return as(10, p[0], p[1], 0);
    return std::nullopt;
  }
  if (irr.size() == 3) {
    const IVec two_omega = wv(2, 0), four_omega = wv(4, 0);
    auto without = [&](const IVec& drop) {
      std::vector<IVec> rest;
      for (const IVec& v : irr)
        if (v != drop) rest.push_back(v);
      return rest;
    };
    if (std::find(irr.begin(), irr.end(), two_omega) != irr.end()) {
      std::vector<IVec> rest = without(two_omega);
      const IVec &p = rest[0], &q = rest[1];
      if (p[0] == q[0] && p[0] >= 2 && p[1] == -q[1] && q[1] >= 1)
        return as(11, p[0], q[1], 0);
      return std::nullopt;
    }
    if (std::find(irr.begin(), irr.end(), four_omega) != irr.end()) {
      std::vector<IVec> rest = without(four_omega);
      for (int i = 0; i < 2; ++i) {
        const IVec &e = rest[static_cast<size_t>(i)], &w = rest[static_cast<size_t>(1 - i)];
        if (e[0] == 0 && w[0] == 2 && w[1] != 0 && e[1] == 2 * w[1]) return as(14, 0, w[1], 0);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<SphericalRoot> sigma_n_sl2c(const WeightMonoid& m) {
  require_sl2c(m);
  SphericalRoot simple, doubled;
  for (const SphericalRoot& s : spherically_closed_roots(m.group)) {
    if (s.is_simple()) simple = s;
    if (s.is_doubled_simple()) doubled = s;
  }
  const IVec alpha = m.group.simple_root(0);

  // 2 alpha is adapted exactly when it lies in the lattice, the lattice lies
  // in <2 omega, epsilon>, and in the pointed rank-two case one wall of the
  // cone runs along the torus axis with the other leaning the same way: the
  // primitive ray elements are u alpha + v epsilon and w epsilon with u > 0,
  // w != 0, vw >= 0.
  bool even = true;
  for (int j = 0; even && j < m.lattice.rank(); ++j)
    if (m.lattice.basis.at(0, j) % 2 != 0) even = false;
  if (even && m.in_lattice(vec_add(alpha, alpha))) {
    if (m.rank() <= 1) return {doubled};
    if (!m.cone.is_pointed()) return {doubled};  // the full dominant halfplane
    std::vector<IVec> prim = ray_primitives(m);
    for (int i = 0; i < 2; ++i) {
      const IVec &e = prim[static_cast<size_t>(i)], &o = prim[static_cast<size_t>(1 - i)];
      if (e[0] == 0 && o[0] > 0 && o[1] * e[1] >= 0) return {doubled};
    }
  }

  // alpha is adapted exactly when some primitive ray element lambda has
  // positive pairing with the coroot, spans the lattice together with alpha,
  // and the opposite ray's primitive element gamma is <alpha^vee,lambda>
  // alpha - lambda, alpha itself, or a positive combination a alpha +
  // b lambda.
  if (m.rank() == 2 && m.cone.is_pointed()) {
    std::vector<IVec> prim = ray_primitives(m);
    for (int i = 0; i < 2; ++i) {
      const IVec &lam = prim[static_cast<size_t>(i)], &gam = prim[static_cast<size_t>(1 - i)];
      if (lam[0] <= 0) continue;
      if (!(IntegerLattice::from_generators({alpha, lam}, 2) == m.lattice)) continue;
      auto xy = solve_columns(IMat::from_columns({alpha, lam}, 2), gam);
      if (!xy) continue;
      const Int &x = (*xy)[0], &y = (*xy)[1];
      if ((x == lam[0] && y == -1) || (x == 1 && y == 0) || (x >= 1 && y >= 1))
        return {simple};
    }
  }
  return {};
}

}  // namespace wmsmooth
