// Command-line front end: constructions, checks, spectra, bounds,
// frustration, theorem verification and falsification search.
//
// Exit codes: 0 pass/success, 1 check failure or theorem contradiction,
// 2 usage or input errors.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sglab/constructions.hpp"
#include "sglab/core.hpp"
#include "sglab/cycles.hpp"
#include "sglab/enumerate.hpp"
#include "sglab/io.hpp"
#include "sglab/search.hpp"
#include "sglab/spectral.hpp"
#include "sglab/verify.hpp"

namespace {

struct Options {
  std::string family, in_path, out_path, claim, graphs_path, format = "text";
  std::string signs, neg_attach, negative_edges;
  int n = 0, s = 1, t = 1, a = 3, k = 3, variant = 1, ell = 3, nmax = 12;
  std::uint64_t trials = 1000, seed = 0, budget = 1'000'000;
  int restarts = 20, jobs = 0;
  bool witness = false, charpoly = false, no_timestamp = false, from_construction = false;
};

std::vector<sgl::Sign> parse_signs(const std::string& s) {
  std::vector<sgl::Sign> out;
  for (const char c : s) {
    if (c == '+')
      out.push_back(+1);
    else if (c == '-')
      out.push_back(-1);
    else
      throw CLI::ValidationError("--signs", "expected a string over +-");
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw CLI::ValidationError("--negative-edges", "expected u-v pairs like 0-1,2-3");
    out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
  f << text;
}

int run_construct(const Options& opt) {
  sgl::SignedGraph g;
  std::string note;
  if (opt.family == "gst") {
    g = sgl::build_G_st(opt.s, opt.t);
    note = "G_{" + std::to_string(std::min(opt.s, opt.t)) + "," +
           std::to_string(std::max(opt.s, opt.t)) + "}";
  } else if (opt.family == "c3k") {
    g = sgl::build_C3minus_K(opt.n);
    note = "C_3^- . K_{n-2}, n = " + std::to_string(opt.n);
  } else if (opt.family == "hna") {
    sgl::HnaVariant variant{opt.variant, parse_int_list(opt.neg_attach)};
    g = sgl::build_H_na(opt.n, opt.a, variant);
    note = "H_{" + std::to_string(opt.n) + "," + std::to_string(opt.a) + "} kind " +
           std::to_string(opt.variant);
  } else if (opt.family == "complete") {
    g = sgl::complete_signed(opt.n, parse_edge_list(opt.negative_edges));
    note = "signed K_" + std::to_string(opt.n);
  } else if (opt.family == "path") {
    g = sgl::build_path(opt.n, parse_signs(opt.signs));
    note = "signed path";
  } else if (opt.family == "cycle") {
    g = sgl::build_cycle(opt.n, parse_signs(opt.signs));
    note = "signed cycle";
  } else {
    throw CLI::ValidationError("--family", "unknown family " + opt.family);
  }
  std::ostringstream out;
  sgl::write_sg(out, g, note);
  emit(out.str(), opt.out_path);
  return 0;
}

int run_check(const Options& opt) {
  const sgl::SignedGraph g = sgl::read_sg_file(opt.in_path);
  const auto cycle = sgl::find_negative_cycle_of_length(g, opt.ell);
  std::ostringstream out;
  out << "free: " << (cycle ? "false" : "true") << "\n";
  if (cycle && opt.witness) {
    out << "witness:";
    for (const int v : cycle->vertices) out << " " << v;
    out << "\n";
  }
  emit(out.str(), opt.out_path);
  return cycle ? 1 : 0;
}

int run_spectrum(const Options& opt) {
  const sgl::SignedGraph g = sgl::read_sg_file(opt.in_path);
  const sgl::Spectrum spec = sgl::eigenvalues(g);
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  {
    nlohmann::json eig = nlohmann::json::array();
    for (const double x : spec.eigenvalues) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", x);
      eig.push_back(std::string(buf));
    }
    j["eigenvalues"] = eig;
  }
  {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", spec.rho);
    j["rho"] = std::string(buf);
  }
  if (opt.charpoly || g.order() <= sgl::kCharPolyMaxOrder) {
    if (g.order() > sgl::kCharPolyMaxOrder)
      throw std::domain_error("char_poly: order above exact limit (n > 16)");
    const sgl::CharPoly cp = sgl::char_poly(g);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const long long c : cp.coeffs) coeffs.push_back(std::to_string(c));
    j["charpoly"] = coeffs;
  }
  if (opt.format == "json") {
    emit(j.dump(2) + "\n", opt.out_path);
  } else {
    std::ostringstream out;
    out << "n " << g.order() << ", edges " << g.edge_count() << "\n";
    out << "eigenvalues:";
    for (const auto& x : j["eigenvalues"]) out << " " << x.get<std::string>();
    out << "\nrho: " << j["rho"].get<std::string>() << "\n";
    if (j.contains("charpoly")) {
      out << "charpoly (c0..cn):";
      for (const auto& c : j["charpoly"]) out << " " << c.get<std::string>();
      out << "\n";
    }
    emit(out.str(), opt.out_path);
  }
  return 0;
}

nlohmann::json bound_json(const sgl::BoundReport& r) {
  return nlohmann::json{{"name", r.name},
                        {"value", r.value},
                        {"observed", r.observed},
                        {"slack", r.slack},
                        {"satisfied", r.satisfied}};
}

int run_bounds(const Options& opt) {
  const sgl::SignedGraph g = sgl::read_sg_file(opt.in_path);
  nlohmann::json arr = nlohmann::json::array();
  bool all_ok = true;
  for (const auto& r : {sgl::hong_bound(g), sgl::stanic_bound(g), sgl::wyq_bound(g),
                        sgl::turan_report(g)}) {
    arr.push_back(bound_json(r));
    all_ok = all_ok && r.satisfied;
  }
  if (opt.format == "json") {
    emit(arr.dump(2) + "\n", opt.out_path);
  } else {
    std::ostringstream out;
    for (const auto& b : arr)
      out << b["name"].get<std::string>() << ": value " << b["value"].get<double>()
          << ", observed " << b["observed"].get<double>() << ", slack "
          << b["slack"].get<double>() << (b["satisfied"].get<bool>() ? " (ok)" : " (VIOLATED)")
          << "\n";
    emit(out.str(), opt.out_path);
  }
  return all_ok ? 0 : 1;
}

int run_frustration(const Options& opt) {
  const sgl::SignedGraph g = sgl::read_sg_file(opt.in_path);
  emit(std::to_string(sgl::frustration_index(g)) + "\n", opt.out_path);
  return 0;
}

int finish_report(const sgl::TheoremReport& rep, const Options& opt) {
  nlohmann::json j = sgl::to_json(rep, opt.no_timestamp);
  if (!opt.no_timestamp) {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = std::string(buf);
  }
  if (opt.format == "text") {
    std::ostringstream out;
    out << rep.claim << ": " << rep.status << "\n";
    out << j.dump(2) << "\n";
    emit(out.str(), opt.out_path);
  } else {
    emit(j.dump(2) + "\n", opt.out_path);
  }
  if (rep.status == "fail") return 1;
  return 0;  // pass and infeasible both exit 0
}

int run_verify(const Options& opt) {
  std::optional<std::vector<sgl::SignedGraph>> supplied;
  if (!opt.graphs_path.empty()) supplied = sgl::read_graph6_file(opt.graphs_path);
  const auto* graphs = supplied ? &*supplied : nullptr;

  sgl::TheoremReport rep;
  if (opt.claim == "thm-1.1") {
    rep = sgl::verify_turan_C3(opt.n, opt.jobs, graphs);
  } else if (opt.claim == "thm-1.2") {
    rep = sgl::verify_spectral_C3(opt.n, opt.jobs, graphs);
  } else if (opt.claim == "lem-2.3") {
    rep = sgl::verify_lemma_unbalanced_complete(opt.n, opt.jobs);
  } else if (opt.claim == "lem-2.4") {
    rep = sgl::verify_lemma_Hna(opt.n, opt.a, opt.jobs);
  } else if (opt.claim == "lem-2.5") {
    rep = sgl::verify_dense_negative_girth(opt.n, opt.jobs, graphs);
  } else if (opt.claim == "thm-1.3-construction" || opt.claim == "thm-1.4-construction") {
    rep = sgl::verify_construction_C2k1(opt.n, opt.k);
    rep.claim = opt.claim;
  } else if (opt.claim == "lem-3.4") {
    rep = sgl::verify_charpoly(opt.nmax);
  } else if (opt.claim == "bounds") {
    rep = sgl::verify_bounds_random(opt.trials, opt.seed, opt.jobs);
  } else {
    throw CLI::ValidationError("--claim", "unknown claim id " + opt.claim);
  }
  return finish_report(rep, opt);
}

int run_search(const Options& opt) {
  sgl::FalsifyConfig cfg;
  cfg.n = opt.n;
  cfg.k = opt.k;
  cfg.steps = opt.budget;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  cfg.from_construction = opt.from_construction;
  cfg.jobs = opt.jobs;
  return finish_report(sgl::falsify_search(cfg), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-graph laboratory: constructions, spectra and theorem checks"};
  app.require_subcommand(1);
  Options opt;

  auto* construct = app.add_subcommand("construct", "emit a named signed graph as .sg");
  construct->add_option("--family", opt.family, "gst|c3k|hna|complete|path|cycle")->required();
  construct->add_option("--n", opt.n, "order");
  construct->add_option("--s", opt.s, "G_{s,t}: s");
  construct->add_option("--t", opt.t, "G_{s,t}: t");
  construct->add_option("--a", opt.a, "H_{n,a}: path order a");
  construct->add_option("--variant", opt.variant, "H_{n,a} attachment kind 1|2|3");
  construct->add_option("--neg-attach", opt.neg_attach, "kind-3 clique positions, e.g. 0,2");
  construct->add_option("--negative-edges", opt.negative_edges, "complete: e.g. 0-1,2-3");
  construct->add_option("--signs", opt.signs, "path/cycle signs, e.g. ++-");
  construct->add_option("--out", opt.out_path, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "negative l-cycle freeness check");
  check->add_option("--in", opt.in_path, ".sg input")->required();
  check->add_option("--ell", opt.ell, "cycle length")->required();
  check->add_flag("--witness", opt.witness, "print a witness cycle if found");
  check->add_option("--out", opt.out_path, "output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, rho, char poly");
  spectrum->add_option("--in", opt.in_path, ".sg input")->required();
  spectrum->add_flag("--charpoly", opt.charpoly, "require the exact char poly");
  spectrum->add_option("--format", opt.format, "text|json");
  spectrum->add_option("--out", opt.out_path, "output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "Hong/Stanic/WYQ/Turan bound reports");
  bounds->add_option("--in", opt.in_path, ".sg input")->required();
  bounds->add_option("--format", opt.format, "text|json");
  bounds->add_option("--out", opt.out_path, "output file (default stdout)");

  auto* frustration = app.add_subcommand("frustration", "exact frustration index");
  frustration->add_option("--in", opt.in_path, ".sg input")->required();
  frustration->add_option("--out", opt.out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run one theorem/lemma verification");
  verify->add_option("--claim", opt.claim,
                     "thm-1.1|thm-1.2|lem-2.3|lem-2.4|lem-2.5|thm-1.3-construction|"
                     "thm-1.4-construction|lem-3.4|bounds")
      ->required();
  verify->add_option("--n", opt.n, "order");
  verify->add_option("--a", opt.a, "H_{n,a} path order");
  verify->add_option("--k", opt.k, "forbidden length parameter (l = 2k+1)");
  verify->add_option("--nmax", opt.nmax, "lem-3.4 upper order");
  verify->add_option("--trials", opt.trials, "bounds: number of random graphs");
  verify->add_option("--seed", opt.seed, "rng seed");
  verify->add_option("--graphs", opt.graphs_path, "graph6 file of underlying graphs");
  verify->add_option("--jobs", opt.jobs, "worker count (default SGLAB_JOBS or hardware)");
  verify->add_option("--format", opt.format, "text|json");
  verify->add_option("--out", opt.out_path, "report file (default stdout)");
  verify->add_flag("--no-timestamp", opt.no_timestamp, "deterministic report bytes");

  auto* search = app.add_subcommand("search", "falsification search for the edge bound");
  search->add_option("--n", opt.n, "order")->required();
  search->add_option("--k", opt.k, "forbidden length parameter (l = 2k+1)");
  search->add_option("--budget", opt.budget, "total proposal count");
  search->add_option("--restarts", opt.restarts, "number of restarts");
  search->add_option("--seed", opt.seed, "rng seed");
  search->add_flag("--from-construction", opt.from_construction,
                   "start at C3- . K_{n-2} and scan for improving moves");
  search->add_option("--jobs", opt.jobs, "worker count");
  search->add_option("--format", opt.format, "text|json");
  search->add_option("--out", opt.out_path, "report file (default stdout)");
  search->add_flag("--no-timestamp", opt.no_timestamp, "deterministic report bytes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(opt);
    if (check->parsed()) return run_check(opt);
    if (spectrum->parsed()) return run_spectrum(opt);
    if (bounds->parsed()) return run_bounds(opt);
    if (frustration->parsed()) return run_frustration(opt);
    if (verify->parsed()) return run_verify(opt);
    if (search->parsed()) return run_search(opt);
  } catch (const sgl::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
