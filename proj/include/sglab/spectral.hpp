#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sglab/bitgraph.hpp"
#include "sglab/core.hpp"

namespace sgl {

/// Full real spectrum of a signed adjacency matrix, sorted descending.
/// rho = max(lambda_1, -lambda_n); `tolerance` is the off-diagonal norm
/// the eigensolver stopped at.
struct Spectrum {
  std::vector<double> eigenvalues;
  double rho = 0.0;
  double tolerance = 0.0;

  double lambda_1() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double lambda_n() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

namespace detail {

/// Cyclic Jacobi rotations on a dense symmetric matrix (row-major).
/// Deterministic sweep order, fixed threshold; returns eigenvalues
/// sorted descending and stores the final off-diagonal Frobenius norm.
inline std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int n,
                                              double* residual = nullptr,
                                              double off_tol = 1e-12) {
  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a[static_cast<std::size_t>(p) * n + q] * a[static_cast<std::size_t>(p) * n + q];
    return std::sqrt(2.0 * s);
  };
  double off = off_norm();
  for (int sweep = 0; sweep < 100 && off > off_tol; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[static_cast<std::size_t>(p) * n + q];
        if (apq == 0.0) continue;
        const double app = a[static_cast<std::size_t>(p) * n + p];
        const double aqq = a[static_cast<std::size_t>(q) * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0;
        if (theta != 0.0) {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
        a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
        a[static_cast<std::size_t>(p) * n + q] = 0.0;
        a[static_cast<std::size_t>(q) * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double& arp = a[static_cast<std::size_t>(r) * n + p];
          double& arq = a[static_cast<std::size_t>(r) * n + q];
          const double old_rp = arp, old_rq = arq;
          arp = old_rp - s * (old_rq + tau * old_rp);
          arq = old_rq + s * (old_rp - tau * old_rq);
          a[static_cast<std::size_t>(p) * n + r] = arp;
          a[static_cast<std::size_t>(q) * n + r] = arq;
        }
      }
    }
    off = off_norm();
  }
  if (residual) *residual = off;
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

inline std::vector<double> adjacency_matrix(const SignedGraph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + v] = g.sign(u, v);
    a[static_cast<std::size_t>(v) * n + u] = g.sign(u, v);
  }
  return a;
}

}  // namespace detail

inline Spectrum eigenvalues(const SignedGraph& g) {
  const int n = g.order();
  Spectrum s;
  if (n == 0) return s;
  auto a = detail::adjacency_matrix(g);
  s.eigenvalues = detail::jacobi_eigenvalues(a, n, &s.tolerance);
  s.rho = std::max(s.eigenvalues.front(), -s.eigenvalues.back());
  return s;
}

inline double spectral_radius(const SignedGraph& g) { return eigenvalues(g).rho; }

/// 128-bit integers carry the exact polynomial arithmetic.
__extension__ typedef __int128 wide_int;

/// Exact integer characteristic polynomial det(xI - A).
/// coeffs[i] is the coefficient of x^i; the leading coefficient is 1.
struct CharPoly {
  std::vector<long long> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Exact evaluation at an integer point.
  wide_int eval(long long x) const {
    wide_int acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  }

  /// Horner evaluation at a double point (used for residual checks).
  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + static_cast<double>(coeffs[i]);
    return acc;
  }

  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
};

namespace detail {

using int128 = wide_int;
__extension__ typedef unsigned __int128 uint128;

inline constexpr int128 kInt128Max = static_cast<int128>((static_cast<uint128>(1) << 127) - 1);
inline constexpr int128 kInt128Min = -kInt128Max - 1;

inline int128 mul_checked(int128 x, int128 y) {
  if (x == 0 || y == 0) return 0;
  if (x == -1) {
    if (y == kInt128Min) throw std::overflow_error("char_poly: overflow");
    return -y;
  }
  const int128 r = x * y;
  if (r / x != y) throw std::overflow_error("char_poly: overflow");
  return r;
}

inline int128 add_checked(int128 a, int128 b) {
  if (b > 0 && a > kInt128Max - b) throw std::overflow_error("char_poly: overflow");
  if (b < 0 && a < kInt128Min - b) throw std::overflow_error("char_poly: overflow");
  return a + b;
}

inline long long to_int64_checked(int128 x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw std::overflow_error("char_poly: coefficient exceeds 64 bits");
  return static_cast<long long>(x);
}

}  // namespace detail

/// Hard cap for the exact characteristic polynomial; the intermediate
/// Faddeev-LeVerrier matrices are overflow-audited for this range only.
inline constexpr int kCharPolyMaxOrder = 16;

/// Faddeev-LeVerrier trace recursion over 128-bit integers; every
/// division is exact and every product overflow-checked.
inline CharPoly char_poly(const SignedGraph& g) {
  const int n = g.order();
  if (n > kCharPolyMaxOrder)
    throw std::domain_error("char_poly: order above exact limit (n > 16)");
  CharPoly out;
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
  out.coeffs[static_cast<std::size_t>(n)] = 1;
  if (n == 0) return out;

  using detail::int128;
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<int128> a(nn * nn, 0), b(nn * nn, 0), tmp(nn * nn, 0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)] = g.sign(u, v);
    a[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(u)] = g.sign(u, v);
  }
  b = a;
  std::vector<int128> c(nn + 1, 0);
  c[nn] = 1;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // b := a * (b_prev + c_{n-k+1} I)
      for (std::size_t i = 0; i < nn; ++i) b[i * nn + i] = detail::add_checked(b[i * nn + i], c[nn - static_cast<std::size_t>(k) + 1]);
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
          int128 acc = 0;
          for (std::size_t l = 0; l < nn; ++l)
            acc = detail::add_checked(acc, detail::mul_checked(a[i * nn + l], b[l * nn + j]));
          tmp[i * nn + j] = acc;
        }
      std::swap(b, tmp);
    }
    int128 tr = 0;
    for (std::size_t i = 0; i < nn; ++i) tr = detail::add_checked(tr, b[i * nn + i]);
    if (tr % k != 0) throw std::logic_error("char_poly: inexact division");
    c[nn - static_cast<std::size_t>(k)] = -(tr / k);
  }
  for (std::size_t i = 0; i <= nn; ++i) out.coeffs[i] = detail::to_int64_checked(c[i]);
  return out;
}

namespace detail {

inline std::vector<long long> poly_mul(const std::vector<long long>& p,
                                       const std::vector<long long>& q) {
  std::vector<int128> acc(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      acc[i + j] = add_checked(acc[i + j], mul_checked(p[i], q[j]));
  std::vector<long long> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = to_int64_checked(acc[i]);
  return out;
}

}  // namespace detail

/// Closed-form characteristic polynomial of C3- . K_{n-2}:
/// (x+1)^{n-4} (x-1) (x^3 - (n-5)x^2 - (2n-5)x + (n-5)), expanded.
inline CharPoly char_poly_C3K(int n) {
  if (n < 4) throw std::invalid_argument("char_poly_C3K: need n >= 4");
  std::vector<long long> p{1};
  const std::vector<long long> x_plus_1{1, 1};
  for (int i = 0; i < n - 4; ++i) p = detail::poly_mul(p, x_plus_1);
  p = detail::poly_mul(p, {-1, 1});
  const long long m = n;
  p = detail::poly_mul(p, {m - 5, -(2 * m - 5), -(m - 5), 1});
  return CharPoly{std::move(p)};
}

/// The cubic factor of char_poly_C3K whose largest root is lambda_1.
inline CharPoly c3k_cubic_factor(int n) {
  if (n < 4) throw std::invalid_argument("c3k_cubic_factor: need n >= 4");
  const long long m = n;
  return CharPoly{{m - 5, -(2 * m - 5), -(m - 5), 1}};
}

// ---------------------------------------------------------------------------
// Clique numbers
// ---------------------------------------------------------------------------

namespace detail {

// Branch and bound with greedy-coloring bounds (Tomita style).
class MaxCliqueSolver {
public:
  explicit MaxCliqueSolver(const BitGraph& g) : g_(g) {}

  int run() {
    if (g_.n == 0) return 0;
    const std::uint64_t all =
        g_.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g_.n) - 1;
    expand(0, all);
    return best_;
  }

private:
  void expand(int size, std::uint64_t cand) {
    if (cand == 0) {
      if (size > best_) best_ = size;
      return;
    }
    std::array<int, 64> order{}, bound{};
    int cnt = 0;
    std::uint64_t rest = cand;
    for (int color = 1; rest; ++color) {
      std::uint64_t cls = rest;
      while (cls) {
        const int v = std::countr_zero(cls);
        cls &= ~g_.adj[static_cast<std::size_t>(v)];
        cls &= cls - 1;
        order[static_cast<std::size_t>(cnt)] = v;
        bound[static_cast<std::size_t>(cnt)] = color;
        ++cnt;
        rest &= ~(std::uint64_t{1} << v);
      }
    }
    std::uint64_t left = cand;
    for (int i = cnt - 1; i >= 0; --i) {
      if (size + bound[static_cast<std::size_t>(i)] <= best_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(size + 1, left & g_.adj[static_cast<std::size_t>(v)]);
      left &= ~(std::uint64_t{1} << v);
    }
  }

  const BitGraph& g_;
  int best_ = 0;
};

}  // namespace detail

/// Clique number of the underlying graph (signs ignored). Exact, n <= 64.
inline int clique_number(const SignedGraph& g) {
  if (g.order() > 64) throw std::domain_error("clique_number: order above 64");
  const BitGraph bits = compile_bits(g);
  detail::MaxCliqueSolver solver(bits);
  return solver.run();
}

/// Maximum order of a clique whose induced signed subgraph is balanced.
/// A clique is balanced iff its vertices admit relative potentials r with
/// sign(uv) = r_u r_v, which the recursion maintains incrementally.
/// Exact, n <= 32.
inline int balanced_clique_number(const SignedGraph& g) {
  const int n = g.order();
  if (n > 32) throw std::domain_error("balanced_clique_number: order above 32");
  if (n == 0) return 0;
  const BitGraph bits = compile_bits(g);

  int best = 1;  // a single vertex is a balanced clique
  std::vector<int> members, potentials;
  auto rec = [&](auto&& self, std::uint64_t cand) -> void {
    const int size = static_cast<int>(members.size());
    if (size > best) best = size;
    if (size + std::popcount(cand) <= best) return;
    std::uint64_t rest = cand;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      int rv = 1;
      bool ok = true;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const int s = bits.sign(members[i], v);
        if (i == 0) {
          rv = s * potentials[i];
        } else if (s != rv * potentials[i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      members.push_back(v);
      potentials.push_back(rv);
      std::uint64_t next = cand & bits.adj[static_cast<std::size_t>(v)];
      next &= v == 63 ? 0 : ~std::uint64_t{0} << (v + 1);  // ascending enumeration
      self(self, next);
      members.pop_back();
      potentials.pop_back();
    }
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  rec(rec, all);
  return best;
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

/// One evaluated inequality. `slack` is the margin in the satisfied
/// direction (bound minus quantity for upper bounds, quantity minus
/// bound for the Turan clique guarantee), so satisfied <=> slack >= -1e-8
/// uniformly.
struct BoundReport {
  std::string name;
  double value = 0.0;
  double observed = 0.0;
  double slack = 0.0;
  bool satisfied = false;
};

inline constexpr double kBoundSlackTolerance = 1e-8;

namespace detail {

inline bool underlying_connected(const SignedGraph& g) {
  const int n = g.order();
  if (n == 0) return true;
  const auto f = bfs_forest(g);
  int roots = 0;
  for (int p : f.parent) roots += p == -1;
  return roots == 1;
}

inline BoundReport make_report(std::string name, double value, double observed) {
  BoundReport r;
  r.name = std::move(name);
  r.value = value;
  r.observed = observed;
  r.slack = value - observed;
  r.satisfied = r.slack >= -kBoundSlackTolerance;
  return r;
}

}  // namespace detail

/// Hong: rho(G) <= sqrt(2e - n + 1) for connected graphs; evaluated on
/// the underlying all-positive graph.
inline BoundReport hong_bound(const SignedGraph& g) {
  if (!detail::underlying_connected(g))
    throw std::invalid_argument("hong_bound: requires a connected graph");
  const int n = g.order();
  const double value = std::sqrt(std::max(0.0, 2.0 * g.edge_count() - n + 1));
  SignedGraph pos(n);
  for (auto [u, v] : g.edges()) pos.add_edge(u, v, +1);
  return detail::make_report("hong", value, spectral_radius(pos));
}

/// Stanic: lambda_1 <= sqrt(2(e - l) - n + 1) with l the frustration
/// index, computed exactly or not at all.
inline BoundReport stanic_bound(const SignedGraph& g) {
  if (!detail::underlying_connected(g))
    throw std::invalid_argument("stanic_bound: requires a connected graph");
  const int l = frustration_index(g);
  const int n = g.order();
  const double value = std::sqrt(std::max(0.0, 2.0 * (g.edge_count() - l) - n + 1));
  return detail::make_report("stanic", value, eigenvalues(g).lambda_1());
}

/// Wang-Yan-Qian: lambda_1 <= (1 - 1/omega_b) n. On all-positive graphs
/// omega_b equals omega, so this doubles as the unsigned clique bound.
inline BoundReport wyq_bound(const SignedGraph& g) {
  if (g.order() < 1) throw std::invalid_argument("wyq_bound: empty graph");
  const int wb = balanced_clique_number(g);
  const double value = (1.0 - 1.0 / wb) * g.order();
  return detail::make_report("wyq", value, eigenvalues(g).lambda_1());
}

/// Largest guaranteed clique order from the Turan criterion: the maximal
/// r+1 with e > (1 - 1/r) n^2 / 2, or 1 when no r >= 1 qualifies.
inline int turan_clique_guarantee(int n, long long e) {
  if (n < 0 || e < 0 || 2 * e > static_cast<long long>(n) * (n - 1))
    throw std::invalid_argument("turan_clique_guarantee: invalid (n, e)");
  int best = 1;
  for (long long r = 1; r <= n; ++r)
    if (2 * e * r > (r - 1) * static_cast<long long>(n) * n) best = static_cast<int>(r) + 1;
  return best;
}

/// Turan guarantee evaluated against the actual clique number.
inline BoundReport turan_report(const SignedGraph& g) {
  const int guarantee = turan_clique_guarantee(g.order(), g.edge_count());
  const int omega = clique_number(g);
  BoundReport r;
  r.name = "turan";
  r.value = guarantee;
  r.observed = omega;
  r.slack = static_cast<double>(omega) - guarantee;
  r.satisfied = r.slack >= -kBoundSlackTolerance;
  return r;
}

}  // namespace sgl
