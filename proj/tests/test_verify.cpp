#include <catch2/catch.hpp>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "sglab/enumerate.hpp"
#include "sglab/search.hpp"
#include "sglab/verify.hpp"

using namespace sgl;

TEST_CASE("verify_turan_C3 small orders") {
  const TheoremReport r4 = verify_turan_C3(4);
  CHECK(r4.passed());
  CHECK(r4.observed["max_edges"] == 4);

  const TheoremReport r5 = verify_turan_C3(5);
  CHECK(r5.passed());
  CHECK(r5.observed["max_edges"] == 7);
  CHECK(r5.observed["families_found"] == nlohmann::json::array({{1, 2}}));

  const TheoremReport r6 = verify_turan_C3(6);
  CHECK(r6.passed());
  CHECK(r6.observed["max_edges"] == 11);
  CHECK(r6.observed["families_found"] == nlohmann::json::array({{1, 3}, {2, 2}}));

  CHECK(verify_turan_C3(9).status == "infeasible");
}

TEST_CASE("verify_spectral_C3 small orders") {
  const TheoremReport r4 = verify_spectral_C3(4);
  CHECK(r4.passed());
  CHECK(std::abs(r4.observed["max_rho"].get<double>() - std::sqrt(2.0)) < 1e-8);

  const TheoremReport r5 = verify_spectral_C3(5);
  CHECK(r5.passed());
  CHECK(std::abs(r5.observed["max_rho"].get<double>() - 0.5 * (1.0 + std::sqrt(17.0))) < 1e-8);
}

TEST_CASE("the Turan sweep agrees with an oracle-only recount at n = 5") {
  // Independent route: enumerate every signature of every connected
  // underlying graph directly, filter by brute-force balance and naive
  // triangle census, and recompute the maximum.
  int max_edges = -1;
  std::uint64_t maximizers = 0;
  for (const auto& g : enumerate_underlying_graphs(5, true)) {
    const auto edges = g.edges();
    std::set<std::string> classes_at_max;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      SignedGraph sig(5);
      for (std::size_t i = 0; i < edges.size(); ++i)
        sig.add_edge(edges[i].first, edges[i].second, (mask >> i) & 1u ? -1 : +1);
      if (oracle::is_balanced_bruteforce(sig)) continue;
      if (oracle::has_negative_cycle(sig, 3)) continue;
      if (sig.edge_count() > max_edges) max_edges = sig.edge_count();
    }
  }
  const TheoremReport rep = verify_turan_C3(5);
  CHECK(rep.observed["max_edges"].get<int>() == max_edges);
  (void)maximizers;
}

TEST_CASE("the spectral sweep agrees with an oracle-only recount at n = 5") {
  double max_rho = -1.0;
  for (const auto& g : enumerate_underlying_graphs(5, true)) {
    const auto edges = g.edges();
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      SignedGraph sig(5);
      for (std::size_t i = 0; i < edges.size(); ++i)
        sig.add_edge(edges[i].first, edges[i].second, (mask >> i) & 1u ? -1 : +1);
      if (oracle::is_balanced_bruteforce(sig)) continue;
      if (oracle::has_negative_cycle(sig, 3)) continue;
      max_rho = std::max(max_rho, spectral_radius(sig));
    }
  }
  const TheoremReport rep = verify_spectral_C3(5);
  CHECK(std::abs(rep.observed["max_rho"].get<double>() - max_rho) < 1e-9);
}

TEST_CASE("verify_lemma_unbalanced_complete small orders") {
  const TheoremReport r5 = verify_lemma_unbalanced_complete(5);
  CHECK(r5.passed());
  CHECK(r5.observed["unbalanced_classes"] == 63);  // 2^(10-5+1) - 1

  const TheoremReport r6 = verify_lemma_unbalanced_complete(6);
  CHECK(r6.passed());
  CHECK(r6.observed["unbalanced_classes"] == 1023);

  CHECK(verify_lemma_unbalanced_complete(4).status == "infeasible");
}

TEST_CASE("verify_lemma_Hna including vacuous ranges") {
  const TheoremReport r73 = verify_lemma_Hna(7, 3);
  CHECK(r73.passed());
  CHECK(r73.expected["ks"] == nlohmann::json::array({1}));
  CHECK(r73.observed["vacuous"] == false);

  const TheoremReport r94 = verify_lemma_Hna(9, 4);
  CHECK(r94.passed());
  CHECK(r94.expected["ks"] == nlohmann::json::array({2}));

  // k-ranges empty by the lemma's own arithmetic.
  for (const auto& [n, a] : std::vector<std::pair<int, int>>{{5, 3}, {8, 5}, {9, 5}, {7, 4}}) {
    const TheoremReport r = verify_lemma_Hna(n, a);
    CHECK(r.passed());
    CHECK(r.observed["vacuous"] == true);
  }

  CHECK(verify_lemma_Hna(10, 3).status == "infeasible");
  CHECK(verify_lemma_Hna(7, 2).status == "infeasible");
}

TEST_CASE("verify_dense_negative_girth small orders") {
  const TheoremReport r5 = verify_dense_negative_girth(5);
  CHECK(r5.passed());
  CHECK(r5.expected["edge_threshold"] == 6);

  const TheoremReport r6 = verify_dense_negative_girth(6);
  CHECK(r6.passed());
  CHECK(r6.expected["edge_threshold"] == 9);

  CHECK(verify_dense_negative_girth(4).status == "infeasible");
}

TEST_CASE("dense girth sweep agrees with a direct census at n = 5") {
  // Independent route: every unbalanced signature on every 5-vertex graph
  // with >= 6 edges has a negative cycle of length <= 4.
  const auto graphs = enumerate_underlying_graphs(5, false);
  for (const auto& g : graphs) {
    if (g.edge_count() < 6) continue;
    const auto edges = g.edges();
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      SignedGraph sig(5);
      for (std::size_t i = 0; i < edges.size(); ++i)
        sig.add_edge(edges[i].first, edges[i].second, (mask >> i) & 1u ? -1 : +1);
      if (oracle::is_balanced_bruteforce(sig)) continue;
      const bool short_neg =
          oracle::has_negative_cycle(sig, 3) || oracle::has_negative_cycle(sig, 4);
      CHECK(short_neg);
    }
  }
}

TEST_CASE("verify_construction_C2k1") {
  const TheoremReport r20 = verify_construction_C2k1(20, 3);
  CHECK(r20.passed());
  CHECK(r20.observed["in_thm_1_3_range"] == false);
  CHECK(r20.observed["flag"] == "outside stated hypothesis");
  CHECK(r20.observed["edges"] == 20 * 19 / 2 - 2 * 17);

  const TheoremReport r41 = verify_construction_C2k1(41, 3);
  CHECK(r41.passed());
  CHECK(r41.observed["in_thm_1_3_range"] == true);
  CHECK(r41.observed["in_thm_1_4_range"] == true);
}

TEST_CASE("verify_charpoly") {
  const TheoremReport r = verify_charpoly(12);
  CHECK(r.passed());
  CHECK(r.observed["coefficient_matches"] == 9);
  CHECK(r.observed["min_rho_slack"].get<double>() > 0.0);
  CHECK(verify_charpoly(13).status == "infeasible");
  CHECK(verify_charpoly(3).status == "infeasible");
}

TEST_CASE("verify_bounds_random") {
  const TheoremReport r = verify_bounds_random(60, 7);
  CHECK(r.passed());
  CHECK(r.observed["violations"] == 0);
  CHECK(r.observed["hong_equality_on_complete"] == true);
  CHECK(r.observed["min_slack"]["hong"].get<double>() >= -1e-8);
}

TEST_CASE("reports carry the full schema and are deterministic") {
  const TheoremReport r = verify_lemma_unbalanced_complete(6, 1);
  const nlohmann::json j = to_json(r, true);
  for (const char* key : {"claim", "params", "status", "expected", "observed", "witnesses",
                          "counters"})
    CHECK(j.contains(key));
  CHECK(j["counters"].contains("classes"));
  CHECK(j["counters"].contains("graphs"));
  CHECK(j["counters"]["seconds"] == 0.0);

  const TheoremReport r2 = verify_lemma_unbalanced_complete(6, 2);
  CHECK(to_json(r, true).dump() == to_json(r2, true).dump());
}

TEST_CASE("falsify_search stays inside its constraints") {
  FalsifyConfig cfg;
  cfg.n = 12;
  cfg.k = 2;
  cfg.steps = 3000;
  cfg.restarts = 2;
  cfg.seed = 5;
  cfg.paranoid = true;  // revalidates freeness and unbalance per accepted move
  const TheoremReport r = falsify_search(cfg);
  CHECK(r.observed.contains("best_edges"));
  CHECK(r.classes_examined == 3000);
}

TEST_CASE("falsify_search is deterministic for a fixed seed") {
  FalsifyConfig cfg;
  cfg.n = 10;
  cfg.k = 2;
  cfg.steps = 1500;
  cfg.restarts = 3;
  cfg.seed = 11;
  const TheoremReport a = falsify_search(cfg);
  cfg.jobs = 2;
  const TheoremReport b = falsify_search(cfg);
  CHECK(to_json(a, true).dump() == to_json(b, true).dump());
}

TEST_CASE("falsify_search from the construction finds no improving move") {
  FalsifyConfig cfg;
  cfg.n = 12;
  cfg.k = 2;
  cfg.steps = 100;
  cfg.restarts = 1;
  cfg.seed = 3;
  cfg.from_construction = true;
  cfg.paranoid = true;
  const TheoremReport r = falsify_search(cfg);
  CHECK(r.observed["improving_moves"] == 0);
}
