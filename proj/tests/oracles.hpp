// Test-only oracles: deliberately naive, independent routes used to
// freeze expected values. Nothing here shares code with the library
// search paths it cross-checks.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "sglab/core.hpp"

namespace oracle {

using sgl::Cycle;
using sgl::SignedGraph;

// All simple cycles of length ell, each exactly once: sequences starting
// at their minimum vertex with second vertex smaller than the last.
inline std::vector<Cycle> all_cycles(const SignedGraph& g, int ell) {
  const int n = g.order();
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) == ell) {
      if (g.has_edge(v, path.front()) && path[1] < path.back()) out.push_back(Cycle{path});
      return;
    }
    for (int w = path.front() + 1; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !g.has_edge(v, w)) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (int start = 0; start < n; ++start) {
    std::fill(used.begin(), used.end(), 0);
    used[static_cast<std::size_t>(start)] = 1;
    path.assign(1, start);
    rec(rec, start);
  }
  return out;
}

inline int raw_cycle_sign(const SignedGraph& g, const Cycle& c) {
  int s = 1;
  const int l = c.length();
  for (int i = 0; i < l; ++i)
    s *= g.sign(c.vertices[static_cast<std::size_t>(i)],
                c.vertices[static_cast<std::size_t>((i + 1) % l)]);
  return s;
}

inline std::vector<Cycle> negative_cycles(const SignedGraph& g, int ell) {
  std::vector<Cycle> out;
  for (const auto& c : all_cycles(g, ell))
    if (raw_cycle_sign(g, c) == -1) out.push_back(c);
  return out;
}

inline bool has_negative_cycle(const SignedGraph& g, int ell) {
  return !negative_cycles(g, ell).empty();
}

// Balance by brute force over switching sets (first vertex pinned).
inline bool is_balanced_bruteforce(const SignedGraph& g) {
  const int n = g.order();
  if (n == 0) return true;
  const auto edges = g.edges();
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    bool ok = true;
    for (auto [u, v] : edges) {
      const int su = u == 0 ? 1 : ((mask >> (u - 1)) & 1u ? -1 : 1);
      const int sv = v == 0 ? 1 : ((mask >> (v - 1)) & 1u ? -1 : 1);
      if (g.sign(u, v) * su * sv != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline int frustration_bruteforce(const SignedGraph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto edges = g.edges();
  int best = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    int bad = 0;
    for (auto [u, v] : edges) {
      const int su = u == 0 ? 1 : ((mask >> (u - 1)) & 1u ? -1 : 1);
      const int sv = v == 0 ? 1 : ((mask >> (v - 1)) & 1u ? -1 : 1);
      bad += g.sign(u, v) * su * sv == -1;
    }
    best = std::min(best, bad);
  }
  return best;
}

// Shortest negative cycle via breadth-first search on the signed double
// cover: the least r with dist((v,+),(v,-)) = r over all v.
inline std::optional<int> negative_girth_double_cover(const SignedGraph& g) {
  const int n = g.order();
  int best = INT32_MAX;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(2 * n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(2 * s)] = 0;
    q.push(2 * s);
    while (!q.empty()) {
      const int cur = q.front();
      q.pop();
      const int v = cur / 2, p = cur % 2;
      for (int w = 0; w < n; ++w) {
        const int sg = g.sign_or_zero(v, w);
        if (sg == 0) continue;
        const int np = p ^ (sg == -1);
        const int nxt = 2 * w + np;
        if (dist[static_cast<std::size_t>(nxt)] == -1) {
          dist[static_cast<std::size_t>(nxt)] = dist[static_cast<std::size_t>(cur)] + 1;
          q.push(nxt);
        }
      }
    }
    if (dist[static_cast<std::size_t>(2 * s + 1)] >= 0)
      best = std::min(best, dist[static_cast<std::size_t>(2 * s + 1)]);
  }
  if (best == INT32_MAX) return std::nullopt;
  return best;
}

// Exact characteristic polynomial by the Leibniz expansion; n <= 8.
inline std::vector<long long> char_poly_leibniz(const SignedGraph& g) {
  const int n = g.order();
  std::vector<long long> coeff(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int fix = 0;
    long long prod = 1;
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      const int j = perm[static_cast<std::size_t>(i)];
      if (i == j) {
        ++fix;
        continue;
      }
      const int a = g.sign_or_zero(i, j);
      if (a == 0)
        zero = true;
      else
        prod *= -a;
    }
    if (zero) continue;
    // permutation parity by counting inversions
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    coeff[static_cast<std::size_t>(fix)] += (inv % 2 ? -1 : 1) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return coeff;
}

inline int clique_bruteforce(const SignedGraph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) vs.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
        clique = g.has_edge(vs[i], vs[j]);
    if (clique) best = std::max(best, static_cast<int>(vs.size()));
  }
  return best;
}

inline SignedGraph induced(const SignedGraph& g, const std::vector<int>& vs) {
  SignedGraph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j), g.sign(vs[i], vs[j]));
  return h;
}

inline int balanced_clique_bruteforce(const SignedGraph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) vs.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
        clique = g.has_edge(vs[i], vs[j]);
    if (!clique) continue;
    if (is_balanced_bruteforce(induced(g, vs))) best = std::max(best, static_cast<int>(vs.size()));
  }
  return best;
}

inline SignedGraph switch_by_mask(const SignedGraph& g, std::uint32_t mask) {
  SignedGraph out = g;
  for (auto [u, v] : g.edges())
    if (((mask >> u) & 1u) != ((mask >> v) & 1u)) out.flip_sign(u, v);
  return out;
}

inline SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SignedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < density) g.add_edge(u, v, unit(rng) < 0.5 ? 1 : -1);
  return g;
}

inline bool connected_bruteforce(const SignedGraph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (g.sign_or_zero(u, v) != 0 && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

inline SignedGraph random_connected_signed_graph(std::mt19937_64& rng, int n, double density) {
  for (;;) {
    SignedGraph g = random_signed_graph(rng, n, density);
    if (connected_bruteforce(g)) return g;
  }
}

}  // namespace oracle
