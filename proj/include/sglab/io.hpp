#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sglab/core.hpp"

namespace sgl {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Reads the .sg text format:
///   n <N>
///   e <u> <v> <+|->      one line per edge, 0 <= u < v < N
/// '#' starts a comment, blank lines are ignored.
inline SignedGraph read_sg(std::istream& in) {
  SignedGraph g;
  bool have_n = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "n") {
      if (have_n) throw ParseError(lineno, "duplicate 'n' line");
      long long n;
      if (!(line >> n) || n < 0) throw ParseError(lineno, "expected 'n <count>'");
      if (n > 100000) throw ParseError(lineno, "vertex count too large");
      g = SignedGraph(static_cast<int>(n));
      have_n = true;
    } else if (tag == "e") {
      if (!have_n) throw ParseError(lineno, "edge before 'n' line");
      long long u, v;
      std::string s;
      if (!(line >> u >> v >> s)) throw ParseError(lineno, "expected 'e <u> <v> <+|->'");
      if (s != "+" && s != "-") throw ParseError(lineno, "sign must be '+' or '-'");
      if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw ParseError(lineno, "vertex index out of range");
      if (u == v) throw ParseError(lineno, "loops are not allowed");
      if (u > v) throw ParseError(lineno, "edges must satisfy u < v");
      if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
        throw ParseError(lineno, "duplicate edge");
      g.add_edge(static_cast<int>(u), static_cast<int>(v), s == "+" ? +1 : -1);
    } else {
      throw ParseError(lineno, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (line >> extra) throw ParseError(lineno, "trailing tokens");
  }
  if (!have_n) throw ParseError(lineno ? lineno : 1, "missing 'n' line");
  return g;
}

/// Writes .sg with edges sorted by (u,v).
inline void write_sg(std::ostream& out, const SignedGraph& g, const std::string& comment = "") {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges())
    out << "e " << u << " " << v << " " << (g.sign(u, v) > 0 ? '+' : '-') << "\n";
}

inline std::string to_sg_string(const SignedGraph& g) {
  std::ostringstream out;
  write_sg(out, g);
  return out.str();
}

inline SignedGraph read_sg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sg(in);
}

inline void write_sg_file(const std::string& path, const SignedGraph& g,
                          const std::string& comment = "") {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_sg(out, g, comment);
  if (!out) throw std::runtime_error("write failed: " + path);
}

// ---------------------------------------------------------------------------
// graph6 (unsigned underlying graphs, the standard <= 62 vertex encoding)
// ---------------------------------------------------------------------------

/// Decodes one graph6 line into an all-positive signed graph.
inline SignedGraph read_graph6_line(const std::string& line, int lineno = 1) {
  std::size_t at = 0;
  if (line.rfind(">>graph6<<", 0) == 0) at = 10;
  if (at >= line.size()) throw ParseError(lineno, "empty graph6 record");
  const unsigned char first = static_cast<unsigned char>(line[at]);
  if (first == 126) throw ParseError(lineno, "graph6 orders above 62 are not supported");
  if (first < 63 || first > 125) throw ParseError(lineno, "invalid graph6 order byte");
  const int n = first - 63;
  ++at;
  SignedGraph g(n);
  int bit = 5;
  unsigned char cur = 0;
  auto next_bit = [&]() -> int {
    if (bit == 5) {
      if (at >= line.size()) throw ParseError(lineno, "graph6 record truncated");
      cur = static_cast<unsigned char>(line[at++]);
      if (cur < 63 || cur > 126) throw ParseError(lineno, "invalid graph6 data byte");
      cur -= 63;
    }
    const int b = (cur >> bit) & 1;
    bit = bit == 0 ? 5 : bit - 1;
    return b;
  };
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (next_bit()) g.add_edge(u, v, +1);
  return g;
}

/// Encodes the underlying graph (signs dropped) as graph6.
inline std::string write_graph6(const SignedGraph& g) {
  const int n = g.order();
  if (n > 62) throw std::domain_error("write_graph6: orders above 62 are not supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit = 5;
  unsigned char cur = 0;
  auto push_bit = [&](int b) {
    cur = static_cast<unsigned char>(cur | (b << bit));
    if (bit == 0) {
      out.push_back(static_cast<char>(cur + 63));
      cur = 0;
      bit = 5;
    } else {
      --bit;
    }
  };
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) push_bit(g.has_edge(u, v) ? 1 : 0);
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

/// One graph per non-empty line.
inline std::vector<SignedGraph> read_graph6_stream(std::istream& in) {
  std::vector<SignedGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(read_graph6_line(line, lineno));
  }
  return out;
}

inline std::vector<SignedGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

}  // namespace sgl
