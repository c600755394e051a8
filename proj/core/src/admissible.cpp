#include <wmsmooth/admissible.hpp>

#include <algorithm>
#include <set>

#include <wmsmooth/errors.hpp>

namespace wmsmooth {

bool admissible_triple(const GroupDatum& g, const std::vector<int>& s_nodes,
                       const std::vector<int>& sp, const std::vector<IVec>& sigma) {
  const int r = g.ss_rank();
  std::set<int> s_set(s_nodes.begin(), s_nodes.end());
  std::set<int> sp_set(sp.begin(), sp.end());
  for (int v : s_set)
    if (v < 0 || v >= r) fail(Errc::InvalidInput, "S contains an invalid simple-root index");
  for (int v : sp_set)
    if (!s_set.count(v)) fail(Errc::InvalidInput, "S^p must be contained in S");
  std::set<IVec> sigma_set;
  for (const IVec& s : sigma) {
    if (static_cast<int>(s.size()) != r)
      fail(Errc::DimensionMismatch, "sigma entries must have one coefficient per simple root");
    bool nonzero = false;
    for (int i = 0; i < r; ++i) {
      if (s[i] < 0) fail(Errc::InvalidInput, "sigma coefficients must be nonnegative");
      if (s[i] != 0) {
        nonzero = true;
        if (!s_set.count(i)) fail(Errc::InvalidInput, "sigma must be supported on S");
      }
    }
    if (!nonzero) fail(Errc::InvalidInput, "sigma entries must be nonzero");
    sigma_set.insert(s);
  }
  const std::vector<IVec> sig(sigma_set.begin(), sigma_set.end());
  const int ns = static_cast<int>(sig.size());

  const auto comps = diagram_components(g, std::vector<int>(s_set.begin(), s_set.end()));
  const int nc = static_cast<int>(comps.size());
  std::vector<char> comp_done(nc, 0), sig_done(ns, 0);

  // Each shape consumes whole components plus every not-yet-consumed sigma
  // touching them, so a cover attempt is: the S^p nodes inside `nodes` equal
  // `want_sp` and the pending sigmas touching `nodes` equal `want_sig`.
  auto solve = [&](auto&& self) -> bool {
    int ci = 0;
    while (ci < nc && comp_done[ci]) ++ci;
    if (ci == nc) return std::find(sig_done.begin(), sig_done.end(), 0) == sig_done.end();

    const std::vector<int>& comp = comps[ci];
    const int n = static_cast<int>(comp.size());
    const std::set<int> comp_set(comp.begin(), comp.end());

    auto attempt = [&](const std::vector<int>& comp_ids, const std::set<int>& nodes,
                       const std::set<int>& want_sp, const std::set<IVec>& want_sig) -> bool {
      std::set<int> got_sp;
      for (int v : sp_set)
        if (nodes.count(v)) got_sp.insert(v);
      if (got_sp != want_sp) return false;
      std::vector<int> touched;
      std::set<IVec> got_sig;
      for (int j = 0; j < ns; ++j) {
        if (sig_done[j]) continue;
        bool hit = false;
        for (int v : nodes)
          if (sig[j][v] != 0) {
            hit = true;
            break;
          }
        if (!hit) continue;
        touched.push_back(j);
        got_sig.insert(sig[j]);
      }
      if (got_sig != want_sig) return false;
      for (int id : comp_ids) comp_done[id] = 1;
      for (int j : touched) sig_done[j] = 1;
      if (self(self)) return true;
      for (int id : comp_ids) comp_done[id] = 0;
      for (int j : touched) sig_done[j] = 0;
      return false;
    };

    // Whole component inside S^p, no sigma.
    if (attempt({ci}, comp_set, comp_set, {})) return true;

    // A_n chain with S^p the chain minus one end node.
    for (const auto& phi : diagram_embeddings(g, cartan_matrix(SimpleType::A, n), comp))
      if (attempt({ci}, comp_set, std::set<int>(phi.begin() + 1, phi.end()), {})) return true;

    // A_n (n >= 4 even), alternating S^p, sigma strings across the gaps.
    if (n >= 4 && n % 2 == 0) {
      for (const auto& phi : diagram_embeddings(g, cartan_matrix(SimpleType::A, n), comp)) {
        std::set<int> want_sp;
        for (int j = 0; j < n; j += 2) want_sp.insert(phi[j]);
        std::set<IVec> want_sig;
        for (int j = 0; j + 2 < n; j += 2) {
          IVec v = zero_vec(r);
          v[phi[j]] = 1;
          v[phi[j + 1]] = 2;
          v[phi[j + 2]] = 1;
          want_sig.insert(std::move(v));
        }
        if (attempt({ci}, comp_set, want_sp, want_sig)) return true;
      }
    }

    // C_n chain with S^p the chain minus the long-root end node.
    if (n >= 2) {
      for (const auto& phi : diagram_embeddings(g, cartan_matrix(SimpleType::C, n), comp))
        if (attempt({ci}, comp_set, std::set<int>(phi.begin() + 1, phi.end()), {})) return true;
    }

    // D_5 with the three middle nodes in S^p and one doubled-tail sigma.
    if (n == 5) {
      for (const auto& phi : diagram_embeddings(g, cartan_matrix(SimpleType::D, 5), comp)) {
        IVec v = zero_vec(r);
        v[phi[1]] = 1;
        v[phi[2]] = 2;
        v[phi[3]] = 1;
        v[phi[4]] = 2;
        if (attempt({ci}, comp_set, {phi[1], phi[2], phi[3]}, {std::move(v)})) return true;
      }
    }

    // A_n x A_k (n > k >= 2) glued by the pair sigmas alpha_i + alpha_i'.
    for (int di = 0; di < nc; ++di) {
      if (di == ci || comp_done[di]) continue;
      for (int flip = 0; flip < 2; ++flip) {
        const std::vector<int>& big = flip ? comps[di] : comp;
        const std::vector<int>& small = flip ? comp : comps[di];
        const int bn = static_cast<int>(big.size());
        const int sk = static_cast<int>(small.size());
        if (bn <= sk || sk < 2) continue;
        auto big_isos = diagram_embeddings(g, cartan_matrix(SimpleType::A, bn), big);
        if (big_isos.empty()) continue;
        std::set<int> nodes(big.begin(), big.end());
        nodes.insert(small.begin(), small.end());
        for (const auto& phi : big_isos)
          for (const auto& psi : diagram_embeddings(g, cartan_matrix(SimpleType::A, sk), small)) {
            std::set<IVec> want_sig;
            for (int i = 0; i < sk; ++i) {
              IVec v = zero_vec(r);
              v[phi[i]] = 1;
              v[psi[i]] = 1;
              want_sig.insert(std::move(v));
            }
            if (attempt({ci, di}, nodes, std::set<int>(phi.begin() + sk + 1, phi.end()),
                        want_sig))
              return true;
          }
      }
    }

    return false;
  };

  return solve(solve);
}

}  // namespace wmsmooth
