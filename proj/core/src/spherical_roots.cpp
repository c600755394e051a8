#include <wmsmooth/spherical_roots.hpp>

#include <algorithm>
#include <set>
#include <utility>

#include <wmsmooth/cones.hpp>
#include <wmsmooth/errors.hpp>

namespace wmsmooth {
namespace {

std::vector<Int> string_coeffs(int n, long head, long mid, long tail) {
  std::vector<Int> c(n, Int(mid));
  c.front() = head;
  c.back() = tail;
  return c;
}

bool pairs_evenly(const WeightMonoid& m, int node) {
  for (const IVec& g : m.generators)
    if (GroupDatum::pairing(node, g) % 2 != 0) return false;
  return true;
}

bool pairs_equally(const WeightMonoid& m, int a, int b) {
  for (const IVec& g : m.generators)
    if (GroupDatum::pairing(a, g) != GroupDatum::pairing(b, g)) return false;
  return true;
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

IVec SphericalRoot::root_coeffs(int ss_rank) const {
  IVec rc = zero_vec(ss_rank);
  for (size_t k = 0; k < nodes.size(); ++k) rc[nodes[k]] = coeffs[k];
  return rc;
}

bool SphericalRoot::supported_on(const std::vector<int>& roots) const {
  for (int v : nodes)
    if (!contains(roots, v)) return false;
  return true;
}

std::vector<SphericalRoot> spherically_closed_roots(const GroupDatum& g) {
  int r = g.ss_rank();
  std::vector<std::pair<IVec, SphericalRoot>> keyed;
  std::set<IVec> seen;
  auto add = [&](const char* pattern, const std::vector<int>& nodes, std::vector<Int> coeffs) {
    SphericalRoot sr{pattern, nodes, std::move(coeffs), {}};
    IVec rc = sr.root_coeffs(r);
    if (!seen.insert(rc).second) return;
    sr.weight = g.root_to_weight(rc);
    keyed.emplace_back(std::move(rc), std::move(sr));
  };

  for (int i = 0; i < r; ++i) {
    add("A1", {i}, {Int(1)});
    add("A1-doubled", {i}, {Int(2)});
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (g.cartan().at(i, j) == 0 && g.cartan().at(j, i) == 0)
        add("A1xA1", {i, j}, {Int(1), Int(1)});

  int max_rank = 0;
  for (const auto& c : g.components) max_rank = std::max(max_rank, c.rank);
  std::vector<int> all_nodes(r);
  for (int i = 0; i < r; ++i) all_nodes[i] = i;

  struct Family {
    const char* tag;
    SimpleType type;
    int lo, hi;
    std::vector<Int> (*coeffs)(int);
  };
  static const Family families[] = {
      {"A-string", SimpleType::A, 2, 1 << 20, [](int n) { return string_coeffs(n, 1, 1, 1); }},
      {"A3-mid", SimpleType::A, 3, 3, [](int n) { return string_coeffs(n, 1, 2, 1); }},
      {"B-string", SimpleType::B, 2, 1 << 20, [](int n) { return string_coeffs(n, 1, 1, 1); }},
      {"B-doubled", SimpleType::B, 2, 1 << 20, [](int n) { return string_coeffs(n, 2, 2, 2); }},
      {"B3-special", SimpleType::B, 3, 3, [](int) { return std::vector<Int>{1, 2, 3}; }},
      {"C-string", SimpleType::C, 3, 1 << 20, [](int n) { return string_coeffs(n, 1, 2, 1); }},
      {"D-string", SimpleType::D, 4, 1 << 20,
       [](int n) {
         std::vector<Int> c(n, Int(2));
         c[n - 2] = 1;
         c[n - 1] = 1;
         return c;
       }},
      {"F4", SimpleType::F, 4, 4, [](int) { return std::vector<Int>{1, 2, 3, 2}; }},
      {"G2-long", SimpleType::G, 2, 2, [](int) { return std::vector<Int>{4, 2}; }},
      {"G2-sum", SimpleType::G, 2, 2, [](int) { return std::vector<Int>{1, 1}; }},
  };
  for (const Family& fam : families) {
    for (int n = fam.lo; n <= std::min(fam.hi, max_rank); ++n) {
      IMat pat = cartan_matrix(fam.type, n);
      std::vector<Int> coeffs = fam.coeffs(n);
      for (const auto& phi : diagram_embeddings(g, pat, all_nodes)) add(fam.tag, phi, coeffs);
    }
  }

  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SphericalRoot> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

bool compatible_with_sp(const GroupDatum& g, const SphericalRoot& sigma,
                        const std::vector<int>& sp) {
  int k = static_cast<int>(sigma.nodes.size());
  if (sigma.pattern == "B-string") {
    for (int t = 1; t + 1 < k; ++t)
      if (!contains(sp, sigma.nodes[t])) return false;
    return !contains(sp, sigma.nodes[k - 1]);
  }
  if (sigma.pattern == "C-string") {
    for (int t = 2; t < k; ++t)
      if (!contains(sp, sigma.nodes[t])) return false;
    return true;
  }
  for (int a : sigma.nodes)
    if (GroupDatum::pairing(a, sigma.weight) == 0 && !contains(sp, a)) return false;
  return true;
}

std::vector<SphericalRoot> sigma_n_gsat(const WeightMonoid& m) {
  if (!m.is_G_saturated())
    fail(Errc::NotGSaturated, "adapted roots via the saturated criteria need lattice = monoid");
  std::vector<SphericalRoot> out;
  for (const SphericalRoot& sigma : spherically_closed_roots(m.group)) {
    if (sigma.is_simple()) continue;
    if (!m.in_lattice(sigma.weight)) continue;
    if (!compatible_with_sp(m.group, sigma, m.sp)) continue;
    if (sigma.is_doubled_simple() && !pairs_evenly(m, sigma.nodes[0])) continue;
    if (sigma.is_orthogonal_pair() && !pairs_equally(m, sigma.nodes[0], sigma.nodes[1])) continue;
    out.push_back(sigma);
  }
  return out;
}

std::vector<SphericalRoot> sigma_n(const WeightMonoid& m) {
  if (!m.is_normal()) fail(Errc::NotNormal, "adapted roots are defined for normal monoids");
  int r = m.group.ss_rank();
  std::vector<IVec> gen_coords;
  for (const IVec& g : m.generators) gen_coords.push_back(m.coords(g));

  std::vector<SphericalRoot> out;
  for (const SphericalRoot& sigma : spherically_closed_roots(m.group)) {
    if (!m.in_lattice(sigma.weight)) continue;
    if (!compatible_with_sp(m.group, sigma, m.sp)) continue;
    IVec sc = m.coords(sigma.weight);
    if (!sigma.is_simple()) {
      // positive pairing with a dual ray forces that ray to be a coroot direction
      bool ok = true;
      for (const IVec& d : m.e_rays) {
        if (dot(d, sc) <= 0) continue;
        bool hit = false;
        for (int b = 0; b < r && !hit; ++b) {
          if (contains(m.sp, b)) continue;
          IVec rho = m.coroot_restriction(b);
          hit = !is_zero(rho) && primitive_of(rho) == d;
        }
        if (!hit) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    } else {
      std::vector<IVec> a = m.a_of(sigma.nodes[0]);
      if (a.size() != 2) continue;
      bool ok = true;
      for (const IVec& d : a)
        for (const IVec& c : gen_coords)
          if (dot(d, c) < 0) ok = false;
      for (const IVec& d : m.e_rays)
        if (dot(d, sc) > 1) ok = false;
      if (!ok) continue;
    }
    if (sigma.is_doubled_simple() && !pairs_evenly(m, sigma.nodes[0])) continue;
    if (sigma.is_orthogonal_pair() && !pairs_equally(m, sigma.nodes[0], sigma.nodes[1])) continue;
    out.push_back(sigma);
  }
  return out;
}

std::vector<int> s_gamma(const WeightMonoid& m, const std::vector<SphericalRoot>& sigma) {
  int r = m.group.ss_rank();
  if (r == 0) return {};
  std::vector<IVec> rows;
  for (int i = 0; i < r; ++i) {
    IVec e = zero_vec(r);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  for (const SphericalRoot& s : sigma) {
    IVec sc = m.coords(s.weight);
    IVec row(r);
    for (int i = 0; i < r; ++i) row[i] = -dot(m.coroot_restriction(i), sc);
    rows.push_back(std::move(row));
  }
  std::vector<char> in(r, 0);
  for (const IVec& ray : dd_pointed(r, rows))
    for (int i = 0; i < r; ++i)
      if (ray[i] != 0) in[i] = 1;
  std::vector<int> out;
  for (int i = 0; i < r; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace wmsmooth
