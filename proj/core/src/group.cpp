#include "wmsmooth/group.hpp"

#include "wmsmooth/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wmsmooth {

char type_letter(SimpleType t) {
  switch (t) {
    case SimpleType::A: return 'A';
    case SimpleType::B: return 'B';
    case SimpleType::C: return 'C';
    case SimpleType::D: return 'D';
    case SimpleType::E: return 'E';
    case SimpleType::F: return 'F';
    case SimpleType::G: return 'G';
  }
  fail(Errc::InvalidComponent, "unknown simple type");
}

IMat cartan_matrix(SimpleType t, int n) {
  auto bounds_ok = [&] {
    switch (t) {
      case SimpleType::A: return n >= 1;
      case SimpleType::B: return n >= 2;
      case SimpleType::C: return n >= 2;
      case SimpleType::D: return n >= 4;
      case SimpleType::E: return n >= 6 && n <= 8;
      case SimpleType::F: return n == 4;
      case SimpleType::G: return n == 2;
    }
    return false;
  };
  if (!bounds_ok())
    fail(Errc::InvalidComponent,
         std::string("rank out of range for type ") + type_letter(t) + ": " + std::to_string(n));

  IMat c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto link = [&](int i, int j) {
    c.at(i, j) = -1;
    c.at(j, i) = -1;
  };
  auto chain = [&] {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
  };
  switch (t) {
    case SimpleType::A:
      chain();
      break;
    case SimpleType::B:  // alpha_n short
      chain();
      c.at(n - 1, n - 2) = -2;
      break;
    case SimpleType::C:  // alpha_n long
      chain();
      c.at(n - 2, n - 1) = -2;
      break;
    case SimpleType::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case SimpleType::E:
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (n >= 7) link(5, 6);
      if (n == 8) link(6, 7);
      link(1, 3);
      break;
    case SimpleType::F:  // alpha_3, alpha_4 short
      chain();
      c.at(2, 1) = -2;
      break;
    case SimpleType::G:  // alpha_1 short
      c.at(0, 1) = -3;
      c.at(1, 0) = -1;
      break;
  }
  return c;
}

GroupDatum GroupDatum::make(std::vector<SimpleComponent> comps, int torus_rank) {
  if (torus_rank < 0) fail(Errc::InvalidComponent, "negative torus rank");
  GroupDatum g;
  g.components = std::move(comps);
  g.torus_rank = torus_rank;
  int r = 0;
  for (const SimpleComponent& c : g.components) {
    cartan_matrix(c.type, c.rank);  // validates
    g.starts_.push_back(r);
    r += c.rank;
  }
  g.cartan_ = IMat(r, r);
  for (size_t k = 0; k < g.components.size(); ++k) {
    IMat block = cartan_matrix(g.components[k].type, g.components[k].rank);
    int s = g.starts_[k];
    for (int i = 0; i < block.nr; ++i)
      for (int j = 0; j < block.nc; ++j) g.cartan_.at(s + i, s + j) = block.at(i, j);
  }
  return g;
}

int GroupDatum::component_of(int node) const {
  if (node < 0 || node >= ss_rank()) fail(Errc::InvalidInput, "node out of range");
  int k = 0;
  while (k + 1 < static_cast<int>(starts_.size()) && starts_[k + 1] <= node) ++k;
  return k;
}

int GroupDatum::component_start(int comp) const {
  if (comp < 0 || comp >= static_cast<int>(starts_.size()))
    fail(Errc::InvalidInput, "component out of range");
  return starts_[comp];
}

std::string GroupDatum::component_label(int comp) const {
  const SimpleComponent& c = components.at(static_cast<size_t>(comp));
  return std::string(1, type_letter(c.type)) + std::to_string(c.rank);
}

std::vector<int> GroupDatum::neighbors(int j) const {
  std::vector<int> out;
  for (int i = 0; i < ss_rank(); ++i)
    if (adjacent(i, j)) out.push_back(i);
  return out;
}

IVec GroupDatum::simple_root(int j) const {
  if (j < 0 || j >= ss_rank()) fail(Errc::NotSimpleRoot, "simple root index out of range");
  IVec v = zero_vec(weight_dim());
  for (int i = 0; i < ss_rank(); ++i) v[i] = cartan_.at(i, j);
  return v;
}

bool GroupDatum::dominant(const IVec& lambda) const {
  if (static_cast<int>(lambda.size()) != weight_dim())
    fail(Errc::DimensionMismatch, "weight has wrong length");
  for (int i = 0; i < ss_rank(); ++i)
    if (lambda[i] < 0) return false;
  return true;
}

IVec GroupDatum::reflect(int i, const IVec& lambda) const {
  if (static_cast<int>(lambda.size()) != weight_dim())
    fail(Errc::DimensionMismatch, "weight has wrong length");
  return vec_sub(lambda, vec_scale(lambda[i], simple_root(i)));
}

IVec GroupDatum::root_to_weight(const IVec& coeffs) const {
  if (static_cast<int>(coeffs.size()) != ss_rank())
    fail(Errc::DimensionMismatch, "root coefficient vector has wrong length");
  IVec v = zero_vec(weight_dim());
  for (int i = 0; i < ss_rank(); ++i)
    for (int j = 0; j < ss_rank(); ++j) v[i] += cartan_.at(i, j) * coeffs[j];
  return v;
}

std::vector<int> support_of(const IVec& coeffs) {
  std::vector<int> s;
  for (size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) s.push_back(static_cast<int>(j));
  return s;
}

namespace {

// Isomorphism type of a connected induced subdiagram.  Induced subdiagrams of
// valid diagrams are again valid, so anything unrecognized is an input error.
std::pair<char, int> classify_connected(const GroupDatum& g, const std::vector<int>& nodes) {
  const IMat& a = g.cartan();
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {'A', 1};

  std::vector<std::pair<int, int>> edges;  // local indices
  int doubles = -1, ndouble = 0, triples = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int m = a.at(nodes[i], nodes[j]) * a.at(nodes[j], nodes[i]);
      if (m == 0) continue;
      edges.push_back({i, j});
      if (m == 2) {
        doubles = static_cast<int>(edges.size()) - 1;
        ++ndouble;
      }
      if (m == 3) ++triples;
    }
  if (ndouble > 1) fail(Errc::InvalidInput, "two double bonds in one component");
  std::vector<int> deg(n, 0);
  for (auto [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }

  if (triples > 0) {
    if (n == 2 && triples == 1) return {'G', 2};
    fail(Errc::InvalidInput, "triple bond outside G2");
  }

  if (doubles >= 0) {
    for (int d : deg)
      if (d > 2) fail(Errc::InvalidInput, "branch node with a double bond");
    if (n == 2) return {'B', 2};
    auto [u, v] = edges[doubles];
    if (deg[u] == 2 && deg[v] == 2) {
      if (n == 4) return {'F', 4};
      fail(Errc::InvalidInput, "interior double bond outside F4");
    }
    int term = deg[u] == 1 ? u : v;
    int other = term == u ? v : u;
    // Short terminal node: its Cartan row carries the -2.
    if (a.at(nodes[term], nodes[other]) == -2) return {'B', n};
    return {'C', n};
  }

  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) fail(Errc::InvalidInput, "node of degree four");
    if (deg[i] == 3) {
      if (branch >= 0) fail(Errc::InvalidInput, "two branch nodes");
      branch = i;
    }
  }
  if (branch < 0) return {'A', n};  // connected, no branch: a path

  std::vector<int> arms;
  for (auto [i, j] : edges) {
    int start = -1;
    if (i == branch) start = j;
    if (j == branch) start = i;
    if (start < 0) continue;
    int len = 1, prev = branch, cur = start;
    for (;;) {
      int next = -1;
      for (auto [x, y] : edges) {
        if (x == cur && y != prev) next = y;
        if (y == cur && x != prev) next = x;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) fail(Errc::InvalidInput, "branch node arm count");
  if (arms[0] == 1 && arms[1] == 1) return {'D', arms[2] + 3};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return {'E', arms[2] + 4};
  fail(Errc::InvalidInput, "unrecognized branched diagram");
}

}  // namespace

std::string support_type(const GroupDatum& g, const std::vector<int>& nodes) {
  std::set<int> left(nodes.begin(), nodes.end());
  for (int v : nodes)
    if (v < 0 || v >= g.ss_rank()) fail(Errc::InvalidInput, "support node out of range");

  std::vector<std::pair<char, int>> labels;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (auto it = left.begin(); it != left.end();) {
        if (g.adjacent(comp[k], *it)) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    labels.push_back(classify_connected(g, comp));
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += 'x';
    out += labels[i].first + std::to_string(labels[i].second);
  }
  return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const GroupDatum& g) {
  const IMat& a = g.cartan();
  const int r = g.ss_rank();

  // Per-node signature: multiset of (a_ij, a_ji) over neighbors.
  std::vector<std::vector<std::pair<Int, Int>>> sig(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j)
      if (i != j && a.at(i, j) != 0) sig[i].push_back({a.at(i, j), a.at(j, i)});
    std::sort(sig[i].begin(), sig[i].end());
  }

  std::vector<std::vector<int>> out;
  std::vector<int> p(r, -1);
  std::vector<bool> used(r, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      out.push_back(p);
      return;
    }
    for (int t = 0; t < r; ++t) {
      if (used[t] || sig[t] != sig[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a.at(t, p[j]) == a.at(i, j) && a.at(p[j], t) == a.at(j, i);
      if (!ok) continue;
      p[i] = t;
      used[t] = true;
      self(self, i + 1);
      used[t] = false;
      p[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> diagram_embeddings(const GroupDatum& g, const IMat& pat,
                                                 const std::vector<int>& allowed) {
  const IMat& a = g.cartan();
  const int k = pat.nr;
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> phi(k, -1);
  std::vector<bool> used(g.ss_rank(), false);
  auto rec = [&](auto&& self, int t) -> void {
    if (t == k) {
      out.push_back(phi);
      return;
    }
    for (int cand : allowed) {
      if (used[cand]) continue;
      bool ok = true;
      for (int u = 0; u < t && ok; ++u)
        ok = a.at(cand, phi[u]) == pat.at(t, u) && a.at(phi[u], cand) == pat.at(u, t);
      if (!ok) continue;
      phi[t] = cand;
      used[cand] = true;
      self(self, t + 1);
      used[cand] = false;
      phi[t] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> diagram_components(const GroupDatum& g,
                                                 const std::vector<int>& nodes) {
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> seen(g.ss_rank(), false);
  std::vector<std::vector<int>> out;
  for (int start : sorted) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : sorted)
        if (!seen[w] && g.adjacent(v, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace wmsmooth
