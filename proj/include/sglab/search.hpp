#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sglab/constructions.hpp"
#include "sglab/core.hpp"
#include "sglab/cycles.hpp"
#include "sglab/spectral.hpp"
#include "sglab/verify.hpp"

namespace sgl {

/// Adversarial search settings. `steps` is the total proposal budget,
/// split evenly across restarts. Deterministic for a fixed seed: every
/// restart derives its own generator from (seed, restart), so results do
/// not depend on the worker count.
struct FalsifyConfig {
  int n = 40;
  int k = 3;
  std::uint64_t steps = 1'000'000;
  int restarts = 20;
  std::uint64_t seed = 0;
  bool from_construction = false;  // start at C3- . K_{n-2}, scan for improving moves
  int jobs = 0;
  std::uint64_t node_budget = 2'000'000;  // per constraint check
  double kick_probability = 0.02;         // chance of accepting an edge deletion
  bool paranoid = false;                   // revalidate all constraints per accepted move
};

namespace detail {

struct RestartOutcome {
  int best_edges = 0;
  double best_rho = 0.0;
  std::string best_sg;
  std::uint64_t proposals = 0;
  std::uint64_t accepted_adds = 0, accepted_flips = 0, accepted_kicks = 0;
  std::uint64_t budget_rejections = 0;
};

class HillClimb {
public:
  HillClimb(const FalsifyConfig& cfg, std::uint64_t restart_index)
      : cfg_(cfg), ell_(2 * cfg.k + 1) {
    std::seed_seq sseq{cfg.seed, restart_index};
    rng_.seed(sseq);
  }

  RestartOutcome run(std::uint64_t steps) {
    init_state();
    for (std::uint64_t s = 0; s < steps; ++s) {
      ++out_.proposals;
      const std::uint64_t dice = rng_() % 100;
      if (dice < 60)
        propose_add();
      else if (dice < 80)
        propose_flip();
      else
        propose_delete();
    }
    return out_;
  }

  struct ImprovingScan {
    std::uint64_t legal = 0;
    std::string first_witness;  // .sg of the first improved state, if any
  };

  /// All legal edge additions from the initial state; used to certify
  /// that the extremal construction admits no improving move.
  ImprovingScan scan_improving_moves() {
    init_state();
    ImprovingScan scan;
    for (int u = 0; u < cfg_.n; ++u)
      for (int v = u + 1; v < cfg_.n; ++v) {
        if (g_.has_edge(u, v)) continue;
        for (const Sign s : {+1, -1}) {
          SignedGraph g2 = g_;
          g2.add_edge(u, v, s);
          const auto res = find_negative_cycle_through(g2, u, v, ell_, UINT64_MAX);
          if (!res.cycle) {
            if (scan.first_witness.empty()) scan.first_witness = to_sg_string(g2);
            ++scan.legal;
          }
        }
      }
    return scan;
  }

private:
  void init_state() {
    if (cfg_.from_construction) {
      g_ = build_C3minus_K(cfg_.n);
    } else {
      // A lone negative triangle is unbalanced and C_{2k+1}--free for
      // every k >= 2; everything else grows from there.
      g_ = SignedGraph(cfg_.n);
      int a = pick_vertex(), b, c;
      do { b = pick_vertex(); } while (b == a);
      do { c = pick_vertex(); } while (c == a || c == b);
      g_.add_edge(std::min(a, b), std::max(a, b), -1);
      g_.add_edge(std::min(a, c), std::max(a, c), +1);
      g_.add_edge(std::min(b, c), std::max(b, c), +1);
    }
    if (is_balanced(g_).balanced) throw std::logic_error("falsify: initial state balanced");
    if (ell_ <= cfg_.n && !is_Cl_minus_free(g_, ell_))
      throw std::logic_error("falsify: initial state not free");
    rho_ = spectral_radius(g_);
    record_best();
  }

  int pick_vertex() { return static_cast<int>(rng_() % static_cast<std::uint64_t>(cfg_.n)); }

  bool pick_edge(int& u, int& v) {
    for (int tries = 0; tries < 256; ++tries) {
      u = pick_vertex();
      v = pick_vertex();
      if (u != v && g_.has_edge(u, v)) {
        if (u > v) std::swap(u, v);
        return true;
      }
    }
    const auto all = g_.edges();
    if (all.empty()) return false;
    const auto [a, b] = all[static_cast<std::size_t>(rng_() % all.size())];
    u = a;
    v = b;
    return true;
  }

  // A fresh edge can only create negative ell-cycles through itself.
  void propose_add() {
    int u = -1, v = -1;
    bool found = false;
    for (int tries = 0; tries < 64 && !found; ++tries) {
      u = pick_vertex();
      v = pick_vertex();
      found = u != v && !g_.has_edge(u, v);
    }
    if (!found) return;
    const Sign s = (rng_() & 1u) ? +1 : -1;
    SignedGraph g2 = g_;
    g2.add_edge(u, v, s);
    if (ell_ <= cfg_.n) {
      const auto res = find_negative_cycle_through(g2, u, v, ell_, cfg_.node_budget);
      if (res.exhausted) {
        ++out_.budget_rejections;
        return;
      }
      if (res.cycle) return;
    }
    accept(std::move(g2), &RestartOutcome::accepted_adds);
  }

  // Flipping one sign inverts exactly the cycles through that edge, so
  // the state stays free iff no negative ell-cycle runs through it
  // afterwards. Accepted only on a strict spectral-radius gain.
  void propose_flip() {
    int u, v;
    if (!pick_edge(u, v)) return;
    SignedGraph g2 = g_;
    g2.flip_sign(u, v);
    if (is_balanced(g2).balanced) return;
    if (ell_ <= cfg_.n) {
      const auto res = find_negative_cycle_through(g2, u, v, ell_, cfg_.node_budget);
      if (res.exhausted) {
        ++out_.budget_rejections;
        return;
      }
      if (res.cycle) return;
    }
    const double rho2 = spectral_radius(g2);
    if (rho2 <= rho_ + 1e-12) return;
    accept(std::move(g2), &RestartOutcome::accepted_flips, rho2);
  }

  // Deletions never create cycles; they are taken only as occasional
  // kicks to escape plateaus, and only while the state stays unbalanced.
  void propose_delete() {
    int u, v;
    if (!pick_edge(u, v)) return;
    if (std::uniform_real_distribution<double>(0.0, 1.0)(rng_) >= cfg_.kick_probability) return;
    SignedGraph g2 = g_;
    g2.remove_edge(u, v);
    if (is_balanced(g2).balanced) return;
    accept(std::move(g2), &RestartOutcome::accepted_kicks);
  }

  void accept(SignedGraph&& g2, std::uint64_t RestartOutcome::* counter, double rho2 = -1.0) {
    g_ = std::move(g2);
    rho_ = rho2 >= 0.0 ? rho2 : spectral_radius(g_);
    ++(out_.*counter);
    if (cfg_.paranoid) {
      if (is_balanced(g_).balanced) throw std::logic_error("falsify: accepted a balanced state");
      if (ell_ <= cfg_.n && !is_Cl_minus_free(g_, ell_))
        throw std::logic_error("falsify: accepted a non-free state");
    }
    record_best();
  }

  void record_best() {
    if (g_.edge_count() > out_.best_edges ||
        (g_.edge_count() == out_.best_edges && rho_ > out_.best_rho)) {
      out_.best_edges = g_.edge_count();
      out_.best_rho = rho_;
      out_.best_sg = to_sg_string(g_);
    }
  }

  const FalsifyConfig& cfg_;
  int ell_;
  std::mt19937_64 rng_;
  SignedGraph g_;
  double rho_ = 0.0;
  RestartOutcome out_;
};

}  // namespace detail

/// Randomized hill climbing over unbalanced C_{2k+1}--free signed graphs
/// of order n, maximizing the edge count with the spectral radius as a
/// tiebreaker. Moves that cannot be certified legal within the node
/// budget are rejected, so every held state satisfies the constraints.
/// Status is "fail" exactly when the search beats the theorem's bound,
/// which would be a counterexample.
inline TheoremReport falsify_search(const FalsifyConfig& cfg) {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.claim = "thm-1.3-falsification";
  rep.params = {{"n", cfg.n},           {"k", cfg.k},
                {"steps", cfg.steps},   {"restarts", cfg.restarts},
                {"seed", cfg.seed},     {"from_construction", cfg.from_construction}};
  if (cfg.n < 4 || cfg.k < 1 || cfg.restarts < 1) {
    rep.status = "infeasible";
    rep.observed["reason"] = "need n >= 4, k >= 1, restarts >= 1";
    return rep;
  }
  const long long bound = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2 - 2 * (cfg.n - 3);
  rep.expected["bound"] = bound;
  rep.expected["bound_not_exceeded"] = true;
  if (cfg.from_construction) rep.expected["improving_moves"] = 0;
  rep.observed["in_thm_1_3_range"] = cfg.k >= 3 && 10 * (cfg.k + 1) <= cfg.n;

  const std::uint64_t per_restart =
      std::max<std::uint64_t>(1, cfg.steps / static_cast<std::uint64_t>(cfg.restarts));
  detail::HillClimb::ImprovingScan improving;
  if (cfg.from_construction) {
    detail::HillClimb probe(cfg, 0);
    improving = probe.scan_improving_moves();
  }

  const auto outcomes = detail::run_blocks<detail::RestartOutcome>(
      static_cast<std::uint64_t>(cfg.restarts), 1, cfg.jobs,
      [&](std::uint64_t r, std::uint64_t, std::uint64_t) {
        detail::HillClimb climb(cfg, r);
        return climb.run(per_restart);
      });

  detail::RestartOutcome best;
  std::uint64_t proposals = 0, budget_rejections = 0;
  std::uint64_t adds = 0, flips = 0, kicks = 0;
  for (const auto& o : outcomes) {
    proposals += o.proposals;
    budget_rejections += o.budget_rejections;
    adds += o.accepted_adds;
    flips += o.accepted_flips;
    kicks += o.accepted_kicks;
    if (o.best_edges > best.best_edges ||
        (o.best_edges == best.best_edges && o.best_rho > best.best_rho))
      best = o;
  }
  rep.classes_examined = proposals;
  rep.observed["best_edges"] = best.best_edges;
  rep.observed["best_rho"] = best.best_rho;
  rep.observed["accepted"] = {{"adds", adds}, {"flips", flips}, {"kicks", kicks}};
  rep.observed["budget_rejections"] = budget_rejections;
  if (cfg.from_construction) rep.observed["improving_moves"] = improving.legal;
  if (!best.best_sg.empty() && best.best_edges >= bound - 2)
    rep.witnesses.push_back(
        nlohmann::json{{"kind", "graph"}, {"note", "best state found"}, {"sg", best.best_sg}});

  const bool exceeded = best.best_edges > bound;
  const bool improved = cfg.from_construction && improving.legal > 0;
  if (improved)
    rep.witnesses.push_back(nlohmann::json{{"kind", "graph"},
                                           {"note", "legal improving move from the construction"},
                                           {"sg", improving.first_witness}});
  rep.status = (exceeded || improved) ? "fail" : "pass";
  rep.seconds = clock.seconds();
  return rep;
}

}  // namespace sgl
