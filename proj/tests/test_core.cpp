#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "sglab/constructions.hpp"
#include "sglab/core.hpp"

using namespace sgl;

namespace {

SignedGraph triangle(Sign a, Sign b, Sign c) {
  SignedGraph g(3);
  g.add_edge(0, 1, a);
  g.add_edge(1, 2, b);
  g.add_edge(0, 2, c);
  return g;
}

SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm) {
  SignedGraph out(g.order());
  for (auto [u, v] : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)], g.sign(u, v));
  return out;
}

}  // namespace

TEST_CASE("SignedGraph invariants") {
  SignedGraph g(4);
  g.add_edge(0, 1, +1);
  CHECK(g.edge_count() == 1);
  CHECK(g.sign(1, 0) == 1);
  CHECK_THROWS_AS(g.add_edge(0, 1, -1), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(g.add_edge(2, 2, +1), std::invalid_argument);   // loop
  CHECK_THROWS_AS(g.add_edge(0, 4, +1), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(0, 2, 0), std::invalid_argument);    // bad sign
  CHECK_THROWS_AS(g.sign(0, 2), std::invalid_argument);           // non-edge
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("switching basics") {
  const SignedGraph k3 = triangle(+1, +1, +1);
  CHECK(switched(k3, VertexSet{}) == k3);

  const SignedGraph s = switched(k3, VertexSet{0});
  CHECK(s.sign(0, 1) == -1);
  CHECK(s.sign(0, 2) == -1);
  CHECK(s.sign(1, 2) == +1);

  CHECK_THROWS_AS(switched(k3, VertexSet{5}), std::out_of_range);

  // Switching on U and on its complement produce the same signature.
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.5);
    const std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << n));
    VertexSet u, comp;
    for (int v = 0; v < n; ++v) ((mask >> v) & 1u ? u : comp).add(v);
    CHECK(switched(g, u) == switched(g, comp));
  }
}

TEST_CASE("cycle_sign") {
  const SignedGraph t = triangle(+1, +1, -1);
  CHECK(cycle_sign(t, Cycle{{0, 1, 2}}) == -1);

  const SignedGraph c4 = build_cycle(4, {-1, -1, -1, -1});
  CHECK(cycle_sign(c4, Cycle{{0, 1, 2, 3}}) == +1);

  const SignedGraph c5 = build_cycle(5, {+1, +1, +1, +1, +1});
  CHECK(cycle_sign(c5, Cycle{{0, 1, 2, 3, 4}}) == +1);

  CHECK_THROWS_AS(cycle_sign(t, Cycle{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_sign(t, Cycle{{0, 1, 0}}), std::invalid_argument);
  SignedGraph p = build_path(4, {+1, +1, +1});
  CHECK_THROWS_AS(cycle_sign(p, Cycle{{0, 1, 2, 3}}), std::invalid_argument);  // 3-0 not an edge
}

TEST_CASE("cycle signs are switching invariant") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.6);
    const std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << n));
    const SignedGraph h = oracle::switch_by_mask(g, mask);
    for (int ell = 3; ell <= std::min(n, 6); ++ell)
      for (const auto& c : oracle::all_cycles(g, ell))
        CHECK(cycle_sign(g, c) == cycle_sign(h, c));
  }
}

TEST_CASE("is_balanced with witnesses") {
  const SignedGraph k5 = complete_signed(5, {});
  const auto all_pos = is_balanced(k5);
  CHECK(all_pos.balanced);
  CHECK(all_pos.potentials == std::vector<Sign>(5, 1));

  const SignedGraph t = triangle(-1, +1, +1);
  const auto res = is_balanced(t);
  REQUIRE_FALSE(res.balanced);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->length() == 3);
  CHECK(cycle_sign(t, *res.witness) == -1);

  // A negative bridge lies on no cycle, so it cannot unbalance anything.
  SignedGraph bridged(6);
  bridged.add_edge(0, 1, +1);
  bridged.add_edge(1, 2, +1);
  bridged.add_edge(0, 2, +1);
  bridged.add_edge(2, 3, -1);  // bridge
  bridged.add_edge(3, 4, +1);
  bridged.add_edge(4, 5, +1);
  bridged.add_edge(3, 5, +1);
  CHECK(is_balanced(bridged).balanced);
  CHECK(oracle::is_balanced_bruteforce(bridged));
}

TEST_CASE("is_balanced agrees with brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.55);
    const auto res = is_balanced(g);
    CHECK(res.balanced == oracle::is_balanced_bruteforce(g));
    if (res.balanced) {
      for (auto [u, v] : g.edges())
        CHECK(g.sign(u, v) * res.potentials[static_cast<std::size_t>(u)] *
                  res.potentials[static_cast<std::size_t>(v)] ==
              1);
    } else {
      CHECK(cycle_sign(g, *res.witness) == -1);
    }
  }
}

TEST_CASE("tree_canonical_form") {
  const SignedGraph balanced = triangle(+1, -1, -1);
  CHECK(is_balanced(balanced).balanced);
  const auto canon = tree_canonical_form(balanced);
  for (auto [u, v] : canon.graph.edges()) CHECK(canon.graph.sign(u, v) == +1);

  const SignedGraph unbal = triangle(-1, +1, +1);
  const auto canon2 = tree_canonical_form(unbal);
  CHECK(canon2.graph.negative_edge_count() == 1);
  for (auto [u, v] : canon2.forest) CHECK(canon2.graph.sign(u, v) == +1);

  // Idempotence and equivalence with the input.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.5);
    const auto c1 = tree_canonical_form(g);
    CHECK(switching_equivalent(g, c1.graph));
    const auto c2 = tree_canonical_form(c1.graph);
    CHECK(c1.graph == c2.graph);
    // Two switching-equivalent inputs canonicalize identically.
    const SignedGraph h = oracle::switch_by_mask(g, static_cast<std::uint32_t>(rng() % (1u << n)));
    CHECK(tree_canonical_form(h).graph == c1.graph);
  }
}

TEST_CASE("tree_canonical_form with an explicit forest") {
  const SignedGraph c4 = build_cycle(4, {-1, +1, +1, +1});
  const std::vector<std::pair<int, int>> forest{{0, 1}, {1, 2}, {2, 3}};
  const auto canon = tree_canonical_form(c4, forest);
  CHECK(canon.graph.sign(0, 1) == +1);
  CHECK(canon.graph.sign(1, 2) == +1);
  CHECK(canon.graph.sign(2, 3) == +1);
  CHECK(canon.graph.sign(0, 3) == -1);  // carries the negative cycle sign

  const std::vector<std::pair<int, int>> cyclic{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  CHECK_THROWS_AS(tree_canonical_form(c4, cyclic), std::invalid_argument);
  const std::vector<std::pair<int, int>> short_forest{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(tree_canonical_form(c4, short_forest), std::invalid_argument);
  const std::vector<std::pair<int, int>> non_edge{{0, 2}, {1, 2}, {2, 3}};
  CHECK_THROWS_AS(tree_canonical_form(c4, non_edge), std::invalid_argument);
}

TEST_CASE("switching_equivalent") {
  const SignedGraph one_neg = triangle(-1, +1, +1);
  const SignedGraph three_neg = triangle(-1, -1, -1);
  CHECK(switching_equivalent(one_neg, three_neg));
  // Brute-force confirmation over all 8 switching sets.
  bool reachable = false;
  for (std::uint32_t mask = 0; mask < 8; ++mask)
    reachable = reachable || oracle::switch_by_mask(one_neg, mask) == three_neg;
  CHECK(reachable);

  const SignedGraph c4_pos = build_cycle(4, {+1, +1, +1, +1});
  const SignedGraph c4_neg = build_cycle(4, {-1, +1, +1, +1});
  CHECK_FALSE(switching_equivalent(c4_pos, c4_neg));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.6);
    CHECK(switching_equivalent(g, oracle::switch_by_mask(g, static_cast<std::uint32_t>(rng() % (1u << n)))));
  }

  const SignedGraph p3 = build_path(3, {+1, +1});
  CHECK_THROWS_AS(switching_equivalent(one_neg, p3), std::invalid_argument);
}

TEST_CASE("switching_equivalent is an equivalence relation") {
  std::mt19937_64 rng(13);
  const int n = 5;
  SignedGraph base = oracle::random_connected_signed_graph(rng, n, 0.6);
  const SignedGraph a = oracle::switch_by_mask(base, 9);
  const SignedGraph b = oracle::switch_by_mask(base, 22);
  CHECK(switching_equivalent(a, a));
  CHECK(switching_equivalent(a, b) == switching_equivalent(b, a));
  CHECK((switching_equivalent(a, b) && switching_equivalent(b, base) &&
         switching_equivalent(a, base)));
}

TEST_CASE("switching_isomorphic") {
  const SignedGraph g12 = build_G_st(1, 2);
  // A relabeled, switched copy of G_{1,2} is recognized.
  std::vector<int> perm{3, 0, 4, 1, 2};
  const SignedGraph copy = oracle::switch_by_mask(relabel(g12, perm), 11);
  CHECK(switching_isomorphic(g12, copy));

  CHECK_FALSE(switching_isomorphic(build_G_st(1, 3), build_G_st(2, 2)));

  const SignedGraph k3 = triangle(+1, +1, +1);
  CHECK_FALSE(switching_isomorphic(k3, negated(k3)));
  CHECK(switching_isomorphic(k3, triangle(-1, -1, +1)));  // balanced signature of K3
}

TEST_CASE("frustration_index") {
  CHECK(frustration_index(complete_signed(5, {})) == 0);
  CHECK(frustration_index(triangle(-1, +1, +1)) == 1);

  const SignedGraph all_neg_k4 = negated(complete_signed(4, {}));
  CHECK(oracle::frustration_bruteforce(all_neg_k4) == 2);
  CHECK(frustration_index(all_neg_k4) == 2);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.55);
    const int l = frustration_index(g);
    CHECK(l == oracle::frustration_bruteforce(g));
    CHECK((l == 0) == is_balanced(g).balanced);
    // Invariant under switching.
    CHECK(frustration_index(oracle::switch_by_mask(g, static_cast<std::uint32_t>(rng() % (1u << n)))) == l);
    // Monotone under edge deletion.
    const auto edges = g.edges();
    if (!edges.empty()) {
      SignedGraph smaller = g;
      const auto [u, v] = edges[static_cast<std::size_t>(rng() % edges.size())];
      smaller.remove_edge(u, v);
      CHECK(frustration_index(smaller) <= l);
    }
  }

  CHECK_THROWS_AS(frustration_index(SignedGraph(27)), std::domain_error);
}

TEST_CASE("negate") {
  const SignedGraph k3 = triangle(+1, +1, +1);
  const SignedGraph neg = negated(k3);
  for (auto [u, v] : neg.edges()) CHECK(neg.sign(u, v) == -1);
  CHECK(negated(neg) == k3);
}

TEST_CASE("canonical cycle rotation") {
  const Cycle c{{4, 2, 7, 3}};
  const Cycle r = canonical_rotation(c);
  CHECK(r.vertices.front() == 2);
  CHECK(r.vertices[1] <= r.vertices.back());
  // All rotations and reflections agree on the canonical form.
  const Cycle rot{{7, 3, 4, 2}};
  const Cycle refl{{3, 7, 2, 4}};
  CHECK(canonical_rotation(rot) == r);
  CHECK(canonical_rotation(refl) == r);
}
