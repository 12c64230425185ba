#include <catch2/catch.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sglab/constructions.hpp"
#include "sglab/enumerate.hpp"

using namespace sgl;

TEST_CASE("unlabeled graph counts match the census") {
  // 1, 2, 4, 11, 34, 156, 1044 graphs; 1, 1, 2, 6, 21, 112, 853 connected.
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_underlying_graphs(n, false).size() == all[static_cast<std::size_t>(n - 1)]);
    CHECK(enumerate_underlying_graphs(n, true).size() ==
          connected[static_cast<std::size_t>(n - 1)]);
  }
  CHECK_THROWS_AS(enumerate_underlying_graphs(9, false), std::domain_error);
}

TEST_CASE("n = 8 census", "[slow]") {
  CHECK(enumerate_underlying_graphs(8, false).size() == 12346);
  CHECK(enumerate_underlying_graphs(8, true).size() == 11117);
}

TEST_CASE("canonical codes are relabeling invariant") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    sgl::detail::TinyGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    sgl::detail::TinyGraph h;
    h.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v))
          h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    CHECK(sgl::detail::canonical_code(g) == sgl::detail::canonical_code(h));
    // The code decodes to a graph in the same isomorphism class, so a
    // second canonicalization is a fixed point.
    const auto code = sgl::detail::canonical_code(g);
    CHECK(sgl::detail::canonical_code(sgl::detail::unpack_code(code, n)) == code);
  }
}

TEST_CASE("representatives at n = 4 cover every labeled graph") {
  // Independent route: group all 64 labeled graphs on 4 vertices by
  // brute-force isomorphism and compare class counts.
  std::vector<SignedGraph> reps;
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<int> perm{0, 1, 2, 3};
  std::vector<std::uint32_t> seen_masks;
  int classes = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    bool found = false;
    std::sort(perm.begin(), perm.end());
    do {
      std::uint32_t im = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1u) {
          const int u = perm[static_cast<std::size_t>(pairs[i].first)];
          const int v = perm[static_cast<std::size_t>(pairs[i].second)];
          for (std::size_t j = 0; j < pairs.size(); ++j)
            if (pairs[j] == std::make_pair(std::min(u, v), std::max(u, v))) im |= 1u << j;
        }
      if (std::find(seen_masks.begin(), seen_masks.end(), im) != seen_masks.end()) found = true;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    if (!found) {
      seen_masks.push_back(mask);
      ++classes;
    }
  }
  CHECK(classes == 11);
  CHECK(enumerate_underlying_graphs(4, false).size() == 11);
}

TEST_CASE("enumerated graphs are all-positive and ordered deterministically") {
  const auto a = enumerate_underlying_graphs(6, true);
  const auto b = enumerate_underlying_graphs(6, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i].negative_edge_count() == 0);
  }
}

TEST_CASE("SignClassIterator counts") {
  CHECK(SignClassIterator(complete_signed(3, {})).count() == 2);
  CHECK(SignClassIterator(build_path(5, {+1, +1, +1, +1})).count() == 1);
  CHECK(SignClassIterator(complete_signed(4, {})).count() == 8);

  // count = 2^(m - n + c) with c the number of components.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.45);
    int components = 0;
    {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++components;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
          const int u = stack.back();
          stack.pop_back();
          for (int v = 0; v < n; ++v)
            if (g.sign_or_zero(u, v) != 0 && !seen[static_cast<std::size_t>(v)]) {
              seen[static_cast<std::size_t>(v)] = 1;
              stack.push_back(v);
            }
        }
      }
    }
    const SignClassIterator it(g);
    CHECK(it.count() == std::uint64_t{1} << (g.edge_count() - n + components));
  }
}

TEST_CASE("SignClassIterator yields canonical, pairwise-inequivalent signatures") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const SignedGraph g = oracle::random_signed_graph(rng, n, 0.6);
    const SignClassIterator it(g);
    if (it.count() > 64) continue;
    std::vector<SignedGraph> sigs;
    for (std::uint64_t p = 0; p < it.count(); ++p) sigs.push_back(it.signature(p));
    for (const auto& s : sigs) {
      for (auto [u, v] : it.forest()) CHECK(s.sign(u, v) == +1);
      CHECK(tree_canonical_form(s).graph == s);  // already canonical
    }
    CHECK(is_balanced(sigs[0]).balanced);
    for (std::size_t i = 1; i < sigs.size(); ++i) CHECK_FALSE(is_balanced(sigs[i]).balanced);
    for (std::size_t i = 0; i < sigs.size(); ++i)
      for (std::size_t j = i + 1; j < sigs.size(); ++j)
        CHECK_FALSE(switching_equivalent(sigs[i], sigs[j]));
  }
}

TEST_CASE("every signature is hit by exactly one representative") {
  // For a fixed small underlying graph, all 2^m signatures partition into
  // the iterator's classes.
  const SignedGraph k4 = complete_signed(4, {});
  const SignClassIterator it(k4);
  std::vector<SignedGraph> reps;
  for (std::uint64_t p = 0; p < it.count(); ++p) reps.push_back(it.signature(p));
  const auto edges = k4.edges();
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    SignedGraph sig(4);
    for (std::size_t i = 0; i < edges.size(); ++i)
      sig.add_edge(edges[i].first, edges[i].second, (mask >> i) & 1u ? -1 : +1);
    int hits = 0;
    for (const auto& rep : reps) hits += switching_equivalent(sig, rep);
    CHECK(hits == 1);
  }
}
