#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sglab/bitgraph.hpp"
#include "sglab/core.hpp"

namespace sgl {

/// Parameters for negative-cycle queries. The wanted sign is fixed to -1
/// throughout this library.
struct CycleQuery {
  int length = 3;
  std::size_t limit = 0;  // 0 = existence only
};

namespace detail {

/// Anchored depth-first search for negative cycles of one fixed length.
///
/// Works on a tree-canonical signature: every negative cycle passes
/// through at least one negative edge, and in canonical form the set of
/// negative edges is small for the graphs this library cares about. For
/// each anchor edge the search enumerates simple paths between its
/// endpoints, pruned by an exact-length walk-reachability table split by
/// sign parity. Paths found at anchor i never use negative edges with a
/// smaller index, so every cycle is reported exactly once.
class NegativeCycleSearch {
public:
  NegativeCycleSearch(const BitGraph& g, int ell,
                      std::uint64_t node_budget = UINT64_MAX)
      : g_(g), ell_(ell), budget_(node_budget) {}

  bool budget_exhausted() const { return budget_hit_; }
  std::uint64_t nodes_visited() const { return nodes_; }

  /// Enumerate all negative ell-cycles; emit returns false to stop.
  /// Emitted vertex sequences are in cycle order, not canonicalized.
  void run_all(const std::function<bool(const std::vector<int>&)>& emit) {
    std::vector<std::pair<int, int>> negs;
    for (int u = 0; u < g_.n; ++u) {
      const std::uint64_t above = u == 63 ? 0 : ~std::uint64_t{0} << (u + 1);
      std::uint64_t row = g_.neg[static_cast<std::size_t>(u)] & above;
      while (row) {
        const int v = std::countr_zero(row);
        row &= row - 1;
        negs.emplace_back(u, v);
      }
    }
    work_ = g_;
    for (auto [a, b] : negs) {
      // Anchor parity: the anchor edge is negative, so the completing
      // path must carry an even number of negative edges.
      if (!search_anchor(a, b, 0, emit)) return;
      work_.remove_edge(a, b);
    }
  }

  /// Enumerate all negative ell-cycles through the edge (a,b).
  void run_through(int a, int b,
                   const std::function<bool(const std::vector<int>&)>& emit) {
    work_ = g_;
    const int target = g_.sign(a, b) == -1 ? 0 : 1;
    search_anchor(a, b, target, emit);
  }

private:
  // Walk-reachability masks: reach_[r][p] holds the vertices from which
  // some walk of exactly r edges and negative-edge parity p ends at the
  // goal. Walks overapproximate simple paths, so this is a sound prune.
  void build_reach(int goal) {
    reach_[0][0] = std::uint64_t{1} << goal;
    reach_[0][1] = 0;
    for (int r = 1; r < ell_; ++r) {
      reach_[r][0] = reach_[r][1] = 0;
      for (int v = 0; v < g_.n; ++v) {
        const std::uint64_t pos = work_.adj[static_cast<std::size_t>(v)] &
                                  ~work_.neg[static_cast<std::size_t>(v)];
        const std::uint64_t neg = work_.neg[static_cast<std::size_t>(v)];
        for (int p = 0; p < 2; ++p)
          if ((pos & reach_[r - 1][p]) || (neg & reach_[r - 1][p ^ 1]))
            reach_[r][p] |= std::uint64_t{1} << v;
      }
    }
  }

  // Paths start at the sparser endpoint; the reach table then guards the
  // dense side. Returns false if the emit callback stopped the search.
  bool search_anchor(int a, int b, int target_parity,
                     const std::function<bool(const std::vector<int>&)>& emit) {
    if (!work_.has_edge(a, b)) return true;
    const int start = work_.degree(a) <= work_.degree(b) ? a : b;
    goal_ = start == a ? b : a;
    build_reach(goal_);
    if (!((reach_[static_cast<std::size_t>(ell_ - 1)][target_parity] >> start) & 1u)) return true;
    path_.assign(1, start);
    used_ = (std::uint64_t{1} << start) | (std::uint64_t{1} << goal_);
    return dfs(start, 0, target_parity, emit);
  }

  bool dfs(int v, int parity, int target,
           const std::function<bool(const std::vector<int>&)>& emit) {
    if (++nodes_ > budget_) {
      budget_hit_ = true;
      return false;
    }
    const int rem = ell_ - 1 - static_cast<int>(path_.size() - 1);
    const std::uint64_t vneg = work_.neg[static_cast<std::size_t>(v)];
    if (rem == 1) {
      if (!work_.has_edge(v, goal_)) return true;
      const int p = parity ^ static_cast<int>((vneg >> goal_) & 1u);
      if (p != target) return true;
      path_.push_back(goal_);
      const bool keep = emit(path_);
      path_.pop_back();
      return keep;
    }
    const std::uint64_t cand = work_.adj[static_cast<std::size_t>(v)] & ~used_;
    const int need = target ^ parity;
    std::uint64_t next =
        (cand & ~vneg & reach_[static_cast<std::size_t>(rem - 1)][need]) |
        (cand & vneg & reach_[static_cast<std::size_t>(rem - 1)][need ^ 1]);
    while (next) {
      const int w = std::countr_zero(next);
      next &= next - 1;
      used_ |= std::uint64_t{1} << w;
      path_.push_back(w);
      const bool keep = dfs(w, parity ^ static_cast<int>((vneg >> w) & 1u), target, emit);
      path_.pop_back();
      used_ &= ~(std::uint64_t{1} << w);
      if (!keep) return false;
    }
    return true;
  }

  const BitGraph& g_;
  BitGraph work_;
  int ell_;
  int goal_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::uint64_t used_ = 0;
  std::vector<int> path_;
  std::array<std::array<std::uint64_t, 2>, 64> reach_{};
};

inline void check_cycle_length(const SignedGraph& g, int ell) {
  if (ell < 3 || ell > g.order())
    throw std::invalid_argument("cycle length out of range (need 3 <= l <= n)");
}

}  // namespace detail

/// A negative cycle with exactly `ell` vertices, or nothing. The search
/// runs on the tree-canonical form, whose negative edges certify every
/// negative cycle; existence transfers back because switching preserves
/// cycle signs.
inline std::optional<Cycle> find_negative_cycle_of_length(const SignedGraph& g, int ell) {
  detail::check_cycle_length(g, ell);
  const auto canon = tree_canonical_form(g);
  const BitGraph bits = compile_bits(canon.graph);
  std::optional<Cycle> found;
  detail::NegativeCycleSearch search(bits, ell);
  search.run_all([&](const std::vector<int>& vs) {
    found = canonical_rotation(Cycle{vs});
    return false;
  });
  return found;
}

inline bool is_Cl_minus_free(const SignedGraph& g, int ell) {
  return !find_negative_cycle_of_length(g, ell).has_value();
}

/// Smallest length of a negative cycle; empty iff balanced.
inline std::optional<int> negative_girth(const SignedGraph& g) {
  if (is_balanced(g).balanced) return std::nullopt;
  const auto canon = tree_canonical_form(g);
  const BitGraph bits = compile_bits(canon.graph);
  for (int ell = 3; ell <= g.order(); ++ell) {
    bool hit = false;
    detail::NegativeCycleSearch search(bits, ell);
    search.run_all([&](const std::vector<int>&) {
      hit = true;
      return false;
    });
    if (hit) return ell;
  }
  return std::nullopt;  // unreachable: unbalanced graphs have a negative cycle
}

/// Up to `limit` distinct negative ell-cycles in canonical rotation,
/// deterministic discovery order.
inline std::vector<Cycle> enumerate_negative_cycles(const SignedGraph& g, int ell,
                                                    std::size_t limit) {
  detail::check_cycle_length(g, ell);
  if (limit < 1) throw std::invalid_argument("enumerate_negative_cycles: limit must be >= 1");
  const auto canon = tree_canonical_form(g);
  const BitGraph bits = compile_bits(canon.graph);
  std::vector<Cycle> out;
  detail::NegativeCycleSearch search(bits, ell);
  search.run_all([&](const std::vector<int>& vs) {
    out.push_back(canonical_rotation(Cycle{vs}));
    return out.size() < limit;
  });
  return out;
}

/// Typed entry point: limit 0 asks for existence only (at most one
/// witness comes back), otherwise up to `limit` cycles.
inline std::vector<Cycle> query_negative_cycles(const SignedGraph& g, const CycleQuery& q) {
  if (q.limit == 0) {
    const auto c = find_negative_cycle_of_length(g, q.length);
    return c ? std::vector<Cycle>{*c} : std::vector<Cycle>{};
  }
  return enumerate_negative_cycles(g, q.length, q.limit);
}

/// Outcome of a budgeted through-edge query. `exhausted` means the node
/// budget ran out before the search settled, so absence is unproven.
struct ThroughEdgeResult {
  std::optional<Cycle> cycle;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Negative ell-cycle containing the edge (u,v), if any. Used by the
/// incremental checks of the falsification search, where only cycles
/// through a freshly changed edge can break freeness.
inline ThroughEdgeResult find_negative_cycle_through(const SignedGraph& g, int u, int v, int ell,
                                                     std::uint64_t node_budget = UINT64_MAX) {
  detail::check_cycle_length(g, ell);
  if (!g.has_edge(u, v))
    throw std::invalid_argument("find_negative_cycle_through: not an edge");
  const auto canon = tree_canonical_form(g);
  const BitGraph bits = compile_bits(canon.graph);
  ThroughEdgeResult res;
  detail::NegativeCycleSearch search(bits, ell, node_budget);
  search.run_through(u, v, [&](const std::vector<int>& vs) {
    res.cycle = canonical_rotation(Cycle{vs});
    return false;
  });
  res.exhausted = search.budget_exhausted();
  res.nodes = search.nodes_visited();
  return res;
}

}  // namespace sgl
