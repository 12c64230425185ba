#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "sglab/core.hpp"

namespace sgl {

/// Word-sized adjacency view used by the search kernels. Limited to 64
/// vertices, which covers everything the cycle, clique and enumeration
/// code is specified for.
struct BitGraph {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};  // neighbor masks
  std::array<std::uint64_t, 64> neg{};  // negative-neighbor masks, subset of adj

  bool has_edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
  int sign(int u, int v) const { return (neg[static_cast<std::size_t>(u)] >> v) & 1u ? -1 : 1; }

  void add_edge(int u, int v, int s) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    if (s < 0) {
      neg[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      neg[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
  }

  void remove_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    neg[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    neg[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  }

  int degree(int u) const { return std::popcount(adj[static_cast<std::size_t>(u)]); }
};

inline BitGraph compile_bits(const SignedGraph& g) {
  if (g.order() > 64) throw std::domain_error("BitGraph: order above 64 not supported");
  BitGraph b;
  b.n = g.order();
  for (auto [u, v] : g.edges()) b.add_edge(u, v, g.sign(u, v));
  return b;
}

}  // namespace sgl
