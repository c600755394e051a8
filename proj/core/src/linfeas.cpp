#include "wmsmooth/linfeas.hpp"

#include "wmsmooth/errors.hpp"

#include <map>
#include <utility>

namespace wmsmooth {

namespace {

constexpr size_t kRowCap = 200000;

// Scale to coprime coefficients; returns false (and reports feasibility in
// *ok) when the row has no variables left and can be decided outright.
bool normalize(AffineRow& r, bool* ok) {
  if (is_zero(r.a)) {
    *ok = r.strict ? r.b < 0 : r.b <= 0;
    return false;
  }
  Int g = content(r.a);
  g = int_gcd(g, r.b);
  if (g > 1) {
    for (Int& x : r.a) x /= g;
    r.b /= g;
  }
  return true;
}

// Conjunction of rows with equal coefficients: larger bound wins, a strict
// bound beats a non-strict one at a tie.
void insert_strongest(std::map<IVec, std::pair<Int, bool>>& m, AffineRow r) {
  auto it = m.find(r.a);
  if (it == m.end()) {
    m.emplace(std::move(r.a), std::make_pair(std::move(r.b), r.strict));
  } else if (r.b > it->second.first) {
    it->second = {std::move(r.b), r.strict};
  } else if (r.b == it->second.first) {
    it->second.second = it->second.second || r.strict;
  }
}

}  // namespace

bool fm_feasible(int dim, std::vector<AffineRow> rows) {
  for (const AffineRow& r : rows)
    if (static_cast<int>(r.a.size()) != dim)
      fail(Errc::DimensionMismatch, "fm_feasible: row has wrong length");

  std::map<IVec, std::pair<Int, bool>> sys;
  for (AffineRow& r : rows) {
    bool ok;
    if (!normalize(r, &ok)) {
      if (!ok) return false;
      continue;
    }
    insert_strongest(sys, std::move(r));
  }

  while (!sys.empty()) {
    // Cheapest variable first: fewest pos*neg combinations.
    int var = -1;
    size_t best = 0;
    for (int j = 0; j < dim; ++j) {
      size_t np = 0, nn = 0;
      for (const auto& [a, bs] : sys) {
        if (a[j] > 0) ++np;
        else if (a[j] < 0) ++nn;
      }
      if (np + nn == 0) continue;
      size_t cost = np * nn;
      if (var < 0 || cost < best) {
        var = j;
        best = cost;
      }
    }
    if (var < 0) break;  // only trivially satisfied rows remain

    std::vector<AffineRow> pos, neg;
    std::map<IVec, std::pair<Int, bool>> next;
    for (auto& [a, bs] : sys) {
      AffineRow r{a, bs.first, bs.second};
      if (a[var] > 0) pos.push_back(std::move(r));
      else if (a[var] < 0) neg.push_back(std::move(r));
      else next.emplace(std::move(r.a), std::make_pair(std::move(r.b), r.strict));
    }
    for (const AffineRow& p : pos) {
      for (const AffineRow& n : neg) {
        AffineRow c;
        Int cp = -n.a[var], cn = p.a[var];
        c.a = vec_add(vec_scale(cp, p.a), vec_scale(cn, n.a));
        c.b = cp * p.b + cn * n.b;
        c.strict = p.strict || n.strict;
        bool ok;
        if (!normalize(c, &ok)) {
          if (!ok) return false;
          continue;
        }
        insert_strongest(next, std::move(c));
        if (next.size() > kRowCap)
          fail(Errc::InvalidInput, "fm_feasible: system too large");
      }
    }
    sys = std::move(next);
  }
  return true;
}

}  // namespace wmsmooth
