#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sglab/core.hpp"

namespace sgl {

/// Identify vertex v1 of g1 with vertex v2 of g2. Vertices of g1 keep
/// their labels; the remaining vertices of g2 follow in their own order.
inline SignedGraph coalescence(const SignedGraph& g1, int v1, const SignedGraph& g2, int v2) {
  if (v1 < 0 || v1 >= g1.order()) throw std::out_of_range("coalescence: v1 out of range");
  if (v2 < 0 || v2 >= g2.order()) throw std::out_of_range("coalescence: v2 out of range");
  const int n1 = g1.order();
  SignedGraph out(n1 + g2.order() - 1);
  for (auto [u, v] : g1.edges()) out.add_edge(u, v, g1.sign(u, v));
  std::vector<int> relabel(static_cast<std::size_t>(g2.order()));
  int next = n1;
  for (int w = 0; w < g2.order(); ++w) relabel[static_cast<std::size_t>(w)] = w == v2 ? v1 : next++;
  for (auto [u, v] : g2.edges())
    out.add_edge(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)],
                 g2.sign(u, v));
  return out;
}

/// The graph G_{s,t}: an all-positive clique on s+t vertices, a vertex u
/// attached positively to the first s clique vertices, a vertex v to the
/// last t, and a single negative edge uv. Labels: clique 0..s+t-1
/// (u-side first), u = s+t, v = s+t+1.
inline SignedGraph build_G_st(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("build_G_st: need s >= 1 and t >= 1");
  const int n = s + t + 2;
  SignedGraph g(n);
  for (int i = 0; i < s + t; ++i)
    for (int j = i + 1; j < s + t; ++j) g.add_edge(i, j, +1);
  const int u = s + t, v = s + t + 1;
  for (int i = 0; i < s; ++i) g.add_edge(u, i, +1);
  for (int i = s; i < s + t; ++i) g.add_edge(v, i, +1);
  g.add_edge(u, v, -1);
  return g;
}

/// The coalescence of a negative triangle with an all-positive complete
/// graph on n-2 vertices. Labels: 0 and 1 are the degree-two triangle
/// vertices (the unique negative edge is {0,1}), 2 is the cut vertex,
/// 3..n-1 the rest of the clique.
inline SignedGraph build_C3minus_K(int n) {
  if (n < 4) throw std::invalid_argument("build_C3minus_K: need n >= 4");
  SignedGraph g(n);
  g.add_edge(0, 1, -1);
  g.add_edge(0, 2, +1);
  g.add_edge(1, 2, +1);
  for (int i = 2; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, +1);
  return g;
}

/// Selects one of the three attachment signatures of H_{n,a}.
/// For kind 3, negative_attach lists clique positions (0-based, relative
/// to the clique block) that receive negative edges from endpoint v; it
/// must be nonempty and proper.
struct HnaVariant {
  int kind = 1;
  std::vector<int> negative_attach;
};

/// H_{n,a}: a path on a vertices whose endpoints u,v are joined by an
/// edge (unless a = 2) and attached to every vertex of a clique on n-a
/// vertices. Signature-normalized so the path, the u-attachments and the
/// uv edge are positive; v's attachments follow the variant. The clique
/// is positive unless an override is supplied (lex order over clique
/// pairs), which lets callers sweep unbalanced completions of kind 2.
/// Labels: path 0..a-1 with u = 0 and v = a-1, clique a..n-1.
inline SignedGraph build_H_na(int n, int a, const HnaVariant& variant,
                              const std::optional<std::vector<Sign>>& clique_signs = std::nullopt) {
  if (a < 2) throw std::invalid_argument("build_H_na: need a >= 2");
  if (n < a + 2) throw std::invalid_argument("build_H_na: need n >= a + 2");
  if (variant.kind < 1 || variant.kind > 3) throw std::invalid_argument("build_H_na: kind in {1,2,3}");
  const int k = n - a;  // clique order
  if (variant.kind == 3) {
    if (variant.negative_attach.empty() ||
        static_cast<int>(variant.negative_attach.size()) >= k)
      throw std::invalid_argument("build_H_na: kind-3 subset must be nonempty and proper");
    for (int i : variant.negative_attach)
      if (i < 0 || i >= k) throw std::out_of_range("build_H_na: kind-3 subset out of range");
  } else if (!variant.negative_attach.empty()) {
    throw std::invalid_argument("build_H_na: negative_attach only valid for kind 3");
  }

  SignedGraph g(n);
  const int u = 0, v = a - 1;
  for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1, +1);
  if (a >= 3) g.add_edge(u, v, +1);

  std::size_t next_clique_sign = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Sign s = +1;
      if (clique_signs) {
        if (next_clique_sign >= clique_signs->size())
          throw std::invalid_argument("build_H_na: clique sign override too short");
        s = (*clique_signs)[next_clique_sign++];
      }
      g.add_edge(a + i, a + j, s);
    }
  if (clique_signs && next_clique_sign != clique_signs->size())
    throw std::invalid_argument("build_H_na: clique sign override too long");

  std::vector<char> neg_at(static_cast<std::size_t>(k), 0);
  if (variant.kind == 1)
    neg_at.assign(static_cast<std::size_t>(k), 1);
  else if (variant.kind == 3)
    for (int i : variant.negative_attach) neg_at[static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < k; ++i) {
    g.add_edge(u, a + i, +1);
    g.add_edge(v, a + i, neg_at[static_cast<std::size_t>(i)] ? -1 : +1);
  }
  return g;
}

/// K_n with the listed edges negative, all others positive.
inline SignedGraph complete_signed(int n, const std::vector<std::pair<int, int>>& negative_edges) {
  SignedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, +1);
  for (auto [u, v] : negative_edges) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("complete_signed: invalid edge");
    g.set_sign(u, v, -1);
  }
  return g;
}

inline SignedGraph build_path(int n, const std::vector<Sign>& signs) {
  if (n < 2) throw std::invalid_argument("build_path: need n >= 2");
  if (static_cast<int>(signs.size()) != n - 1)
    throw std::invalid_argument("build_path: need n - 1 signs");
  SignedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, signs[static_cast<std::size_t>(i)]);
  return g;
}

inline SignedGraph build_cycle(int n, const std::vector<Sign>& signs) {
  if (n < 3) throw std::invalid_argument("build_cycle: need n >= 3");
  if (static_cast<int>(signs.size()) != n)
    throw std::invalid_argument("build_cycle: need n signs");
  SignedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, signs[static_cast<std::size_t>(i)]);
  g.add_edge(n - 1, 0, signs[static_cast<std::size_t>(n - 1)]);
  return g;
}

}  // namespace sgl
