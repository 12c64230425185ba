#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sglab/core.hpp"

namespace sgl {

namespace detail {

// Small unsigned graphs as 16-bit adjacency rows; enough for the
// built-in generator (n <= 8) with headroom.
struct TinyGraph {
  int n = 0;
  std::array<std::uint16_t, 12> adj{};

  void add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(u)] | (1u << v));
    adj[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(v)] | (1u << u));
  }
  bool has_edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
};

// Packs the upper triangle in placement order: when vertex k is placed,
// its k adjacency bits to earlier vertices are appended (earliest vertex
// most significant). Total C(n,2) bits, so n <= 11 fits in 64.
inline std::uint64_t pack_in_order(const TinyGraph& g, const std::array<int, 12>& perm, int n) {
  std::uint64_t code = 0;
  for (int k = 1; k < n; ++k)
    for (int j = 0; j < k; ++j)
      code = (code << 1) |
             (g.has_edge(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(j)]) ? 1u : 0u);
  return code;
}

inline TinyGraph unpack_code(std::uint64_t code, int n) {
  TinyGraph g;
  g.n = n;
  const int bits = n * (n - 1) / 2;
  int at = bits;
  for (int k = 1; k < n; ++k)
    for (int j = 0; j < k; ++j) {
      --at;
      if ((code >> at) & 1u) g.add_edge(k, j);
    }
  return g;
}

// Canonical code: the minimum placement-order packing over all vertex
// orderings compatible with a cheap isomorphism-invariant vertex key
// (degree, then sorted neighbor degrees). Greedy with ties: at each
// placement only candidates minimizing (key, adjacency word) can lead to
// the minimum, and all tie branches are explored.
class TinyCanonicalizer {
public:
  explicit TinyCanonicalizer(const TinyGraph& g) : g_(g), n_(g.n) {
    std::array<std::vector<int>, 12> keys;
    for (int v = 0; v < n_; ++v) {
      auto& k = keys[static_cast<std::size_t>(v)];
      k.push_back(std::popcount(g_.adj[static_cast<std::size_t>(v)]));
      std::vector<int> nbr;
      for (int w = 0; w < n_; ++w)
        if (g_.has_edge(v, w)) nbr.push_back(std::popcount(g_.adj[static_cast<std::size_t>(w)]));
      std::sort(nbr.begin(), nbr.end());
      k.insert(k.end(), nbr.begin(), nbr.end());
    }
    std::vector<std::vector<int>> uniq(keys.begin(), keys.begin() + n_);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n_; ++v)
      rank_[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), keys[static_cast<std::size_t>(v)]) - uniq.begin());
  }

  std::uint64_t run() {
    best_ = ~std::uint64_t{0};
    used_ = 0;
    place(0, 0);
    return best_;
  }

private:
  void place(int k, std::uint64_t code) {
    if (k == n_) {
      best_ = std::min(best_, code);
      return;
    }
    int best_rank = INT32_MAX;
    std::uint32_t best_word = UINT32_MAX;
    std::array<int, 12> ties{};
    int tie_count = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1u) continue;
      if (rank_[static_cast<std::size_t>(v)] > best_rank) continue;
      std::uint32_t w = 0;
      for (int j = 0; j < k; ++j)
        w = (w << 1) | (g_.has_edge(v, perm_[static_cast<std::size_t>(j)]) ? 1u : 0u);
      if (rank_[static_cast<std::size_t>(v)] < best_rank ||
          (rank_[static_cast<std::size_t>(v)] == best_rank && w < best_word)) {
        best_rank = rank_[static_cast<std::size_t>(v)];
        best_word = w;
        tie_count = 0;
      }
      if (rank_[static_cast<std::size_t>(v)] == best_rank && w == best_word)
        ties[static_cast<std::size_t>(tie_count++)] = v;
    }
    for (int i = 0; i < tie_count; ++i) {
      const int v = ties[static_cast<std::size_t>(i)];
      perm_[static_cast<std::size_t>(k)] = v;
      used_ |= 1u << v;
      place(k + 1, (code << k) | best_word);
      used_ &= ~(1u << v);
    }
  }

  const TinyGraph& g_;
  int n_;
  std::array<int, 12> rank_{};
  std::array<int, 12> perm_{};
  std::uint32_t used_ = 0;
  std::uint64_t best_ = 0;
};

inline std::uint64_t canonical_code(const TinyGraph& g) { return TinyCanonicalizer(g).run(); }

inline bool tiny_connected(const TinyGraph& g) {
  if (g.n == 0) return true;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1u) next |= g.adj[static_cast<std::size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1);
}

}  // namespace detail

/// One representative per isomorphism class of graphs on n vertices,
/// generated by vertex augmentation with canonical-code deduplication.
/// Deterministic output order (ascending canonical code). The built-in
/// generator covers n <= 8; larger orders must come from graph6 files.
inline std::vector<SignedGraph> enumerate_underlying_graphs(int n, bool connected_only) {
  if (n < 1 || n > 8)
    throw std::domain_error(
        "enumerate_underlying_graphs: built-in generation covers 1 <= n <= 8; "
        "ingest graph6 files for larger orders");
  std::vector<std::uint64_t> level{0};  // the 1-vertex graph
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> next;
    for (const std::uint64_t code : level) {
      const detail::TinyGraph g = detail::unpack_code(code, k - 1);
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        detail::TinyGraph h = g;
        h.n = k;
        for (int j = 0; j < k - 1; ++j)
          if ((nb >> j) & 1u) h.add_edge(k - 1, j);
        next.insert(detail::canonical_code(h));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<SignedGraph> out;
  for (const std::uint64_t code : level) {
    const detail::TinyGraph g = detail::unpack_code(code, n);
    if (connected_only && !detail::tiny_connected(g)) continue;
    SignedGraph s(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v)) s.add_edge(u, v, +1);
    out.push_back(std::move(s));
  }
  return out;
}

/// Indexable enumeration of switching classes of one underlying graph.
///
/// Every class has a unique representative that is +1 on the canonical
/// spanning forest; the iterator walks all 2^(m-n+c) sign patterns on
/// the non-forest edges in lexicographic order. Pattern 0 is the
/// balanced class.
class SignClassIterator {
public:
  explicit SignClassIterator(const SignedGraph& underlying) {
    base_ = SignedGraph(underlying.order());
    for (auto [u, v] : underlying.edges()) base_.add_edge(u, v, +1);
    const auto canon = tree_canonical_form(base_);
    forest_ = canon.forest;
    edges_ = base_.edges();
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (!std::binary_search(forest_.begin(), forest_.end(), edges_[i]))
        nonforest_.push_back(static_cast<int>(i));
    if (nonforest_.size() >= 63)
      throw std::domain_error("SignClassIterator: pattern space above 2^62");
  }

  std::uint64_t count() const { return std::uint64_t{1} << nonforest_.size(); }
  int nonforest_count() const { return static_cast<int>(nonforest_.size()); }
  const std::vector<std::pair<int, int>>& forest() const { return forest_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& nonforest_edge_indices() const { return nonforest_; }

  /// Representative of class `pattern`: bit j set makes non-forest edge j
  /// negative.
  SignedGraph signature(std::uint64_t pattern) const {
    SignedGraph g = base_;
    for (std::size_t j = 0; j < nonforest_.size(); ++j)
      if ((pattern >> j) & 1u) {
        const auto [u, v] = edges_[static_cast<std::size_t>(nonforest_[j])];
        g.set_sign(u, v, -1);
      }
    return g;
  }

private:
  SignedGraph base_;
  std::vector<std::pair<int, int>> forest_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> nonforest_;
};

}  // namespace sgl
