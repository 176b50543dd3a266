// SPDX-License-Identifier: Apache-2.0
#pragma once

// Inequalities between BH and the Zagreb, forgotten, and Kirchhoff indices,
// each evaluated on a concrete graph with its slack and equality status.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bhix/charpoly.hpp"
#include "bhix/error.hpp"
#include "bhix/graph.hpp"
#include "bhix/indices.hpp"
#include "bhix/spectra.hpp"

namespace bhix {

enum class BoundId {
  zagreb_ratio,            // BH <= n(n-1)^2/(4(2m+M1)) (r + 1/r)^2
  zagreb_ratio_alt,        // same with 4 + (r - 1/r)^2
  power_sum,               // BH >= n ((2m)^{p+1} / sum lambda^{3p+1})^{1/p}
  zagreb_lower,            // BH >= 16 n m^4 / (2m+M1)^3
  forgotten_lower,         // BH >= sqrt(32 n^2 m^5 / (sum lambda^3)^3)
  kirchhoff_upper,         // BH <= (1/l2 + 1/ln) Kf - n(n-1)/(l2 ln)
  tree_count_lower,        // Kf^2/(n(n-2)) - n(n-1)/(n-2) (n tau)^{-2/(n-1)} <= BH
  tree_count_upper,        // BH <= Kf^2/n - n(n-1)(n-2) (n tau)^{-2/(n-1)}
  kirchhoff_deviation,     // |n(n-1)BH - Kf^2| <= parity-weighted spread
};

/// Wire identifiers used in reports.
constexpr std::string_view to_string(BoundId id) noexcept {
  switch (id) {
    case BoundId::zagreb_ratio: return "T3_1";
    case BoundId::zagreb_ratio_alt: return "T3_2";
    case BoundId::power_sum: return "T3_3";
    case BoundId::zagreb_lower: return "C3_1";
    case BoundId::forgotten_lower: return "C3_2";
    case BoundId::kirchhoff_upper: return "T4_1";
    case BoundId::tree_count_lower: return "T4_2_lower";
    case BoundId::tree_count_upper: return "T4_2_upper";
    case BoundId::kirchhoff_deviation: return "T4_3";
  }
  return "?";
}

inline constexpr double holds_tolerance = 1e-9;
inline constexpr double equality_tolerance = 1e-7;

struct BoundReport {
  BoundId id{};
  std::optional<double> p;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;  // positive when the inequality holds strictly
  bool equality = false;
  /// forgotten_lower: right-hand side with the published +6t trace term.
  std::optional<double> rhs_published;
  /// kirchhoff_deviation: right-hand side re-derived over the n-1 nonzero eigenvalues.
  std::optional<double> rhs_alternate;
  std::vector<std::string> notes;
};

/// Everything the bounds read off one connected graph.
struct BoundInputs {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> lambda;  // lambda_2 .. lambda_n ascending
  std::int64_t m1 = 0;
  std::int64_t f = 0;
  std::size_t triangles = 0;
  mpz_class tau = 0;
  double bh = 0.0;
  double kf = 0.0;

  double l2() const { return lambda.front(); }
  double ln() const { return lambda.back(); }
  double ratio() const { return ln() / l2(); }
};

inline BoundInputs bound_inputs(const Graph& g, const Spectrum& s) {
  if (g.order() < 2) throw error(errc::too_small, "bounds need n >= 2");
  if (s.zero_count != 1) throw error(errc::disconnected, "bounds need a connected graph");
  BoundInputs in;
  in.n = g.order();
  in.m = g.size();
  in.lambda.assign(s.nonzero().begin(), s.nonzero().end());
  const auto z = zagreb_forgotten(g);
  in.m1 = z.m1;
  in.f = z.f;
  in.triangles = triangle_count(g);
  in.tau = spanning_tree_count(g);
  in.bh = biharmonic_from_spectrum(s);
  in.kf = kirchhoff_from_spectrum(s);
  return in;
}

inline BoundInputs bound_inputs(const Graph& g) {
  if (!is_connected(g)) throw error(errc::disconnected, "bounds need a connected graph");
  return bound_inputs(g, spectrum(g));
}

namespace detail {

inline BoundReport finish(BoundId id, double lhs, double rhs, bool upper) {
  BoundReport r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = upper ? rhs - lhs : lhs - rhs;
  const double scale = std::max(1.0, std::abs(rhs));
  r.holds = r.slack >= -holds_tolerance * scale;
  r.equality = r.holds && std::abs(r.slack) < equality_tolerance * scale;
  return r;
}

/// ln(mpz) without overflowing double.
inline double log_mpz(const mpz_class& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

/// (1 / (n tau))^{2/(n-1)}
inline double tree_count_term(const BoundInputs& in) {
  const double nd = static_cast<double>(in.n);
  return std::exp(-2.0 / (nd - 1.0) * (std::log(nd) + log_mpz(in.tau)));
}

}  // namespace detail

inline BoundReport check_t3_1(const BoundInputs& in) {
  const double n = static_cast<double>(in.n);
  const double r = in.ratio();
  const double rhs = n * (n - 1) * (n - 1) / (4.0 * static_cast<double>(2 * in.m + in.m1)) *
                     (r + 1.0 / r) * (r + 1.0 / r);
  return detail::finish(BoundId::zagreb_ratio, in.bh, rhs, true);
}

inline BoundReport check_t3_2(const BoundInputs& in) {
  const double n = static_cast<double>(in.n);
  const double r = in.ratio();
  const double rhs = n * (n - 1) * (n - 1) / (4.0 * static_cast<double>(2 * in.m + in.m1)) *
                     (4.0 + (r - 1.0 / r) * (r - 1.0 / r));
  return detail::finish(BoundId::zagreb_ratio_alt, in.bh, rhs, true);
}

inline BoundReport check_t3_3(const BoundInputs& in, double p) {
  if (!(p > 0.0)) throw error(errc::non_positive_p, "exponent p must be positive");
  const double n = static_cast<double>(in.n);
  const double rhs =
      n * std::pow(std::pow(2.0 * static_cast<double>(in.m), p + 1.0) / power_sum(in.lambda, 3.0 * p + 1.0),
                   1.0 / p);
  auto r = detail::finish(BoundId::power_sum, in.bh, rhs, false);
  r.p = p;
  return r;
}

inline BoundReport check_c3_1(const BoundInputs& in) {
  const double n = static_cast<double>(in.n);
  const double m = static_cast<double>(in.m);
  const double denom = static_cast<double>(2 * in.m + in.m1);
  const double rhs = 16.0 * n * std::pow(m, 4) / (denom * denom * denom);
  return detail::finish(BoundId::zagreb_lower, in.bh, rhs, false);
}

/// Judged on the trace identity sum lambda^3 = 3M1 + F - 6t; the +6t variant
/// is carried alongside in `rhs_published`.
inline BoundReport check_c3_2(const BoundInputs& in) {
  const double n = static_cast<double>(in.n);
  const double m = static_cast<double>(in.m);
  const auto t = static_cast<std::int64_t>(in.triangles);
  const std::int64_t cubic = 3 * in.m1 + in.f - 6 * t;
  const std::int64_t cubic_published = 3 * in.m1 + in.f + 6 * t;
  auto rhs_for = [&](std::int64_t s) {
    const double sd = static_cast<double>(s);
    return std::sqrt(32.0 * n * n * std::pow(m, 5) / (sd * sd * sd));
  };
  auto r = detail::finish(BoundId::forgotten_lower, in.bh, rhs_for(cubic), false);
  r.rhs_published = rhs_for(cubic_published);
  if (t > 0) {
    r.notes.push_back("trace(L^3) = 3*M1 + F - 6t = " + std::to_string(cubic) +
                      "; the published form 3*M1 + F + 6t = " + std::to_string(cubic_published) +
                      " gives rhs_published");
  }
  return r;
}

inline BoundReport check_t4_1(const BoundInputs& in) {
  const double n = static_cast<double>(in.n);
  const double rhs = (1.0 / in.l2() + 1.0 / in.ln()) * in.kf - n * (n - 1) / (in.l2() * in.ln());
  return detail::finish(BoundId::kirchhoff_upper, in.bh, rhs, true);
}

struct TreeCountBounds {
  BoundReport lower;
  BoundReport upper;
};

inline TreeCountBounds check_t4_2(const BoundInputs& in) {
  if (in.n < 3) throw error(errc::too_small, "tree-count bounds need n >= 3");
  const double n = static_cast<double>(in.n);
  const double g = detail::tree_count_term(in);
  const double lower = in.kf * in.kf / (n * (n - 2)) - n * (n - 1) / (n - 2) * g;
  const double upper = in.kf * in.kf / n - n * (n - 1) * (n - 2) * g;
  return {detail::finish(BoundId::tree_count_lower, in.bh, lower, false),
          detail::finish(BoundId::tree_count_upper, in.bh, upper, true)};
}

/// The right-hand side uses the parity factor 1 - (1 + (-1)^{n+1}) / (2n^2).
/// rhs_alternate applies the same Chebyshev-type estimate to the n-1 values
/// 1/lambda_i, i.e. n^2 (n-1) floor((n-1)/2) (1 - floor((n-1)/2)/(n-1)) (1/l2 - 1/ln)^2.
inline BoundReport check_t4_3(const BoundInputs& in) {
  const double n = static_cast<double>(in.n);
  const double spread = (1.0 / in.l2() - 1.0 / in.ln()) * (1.0 / in.l2() - 1.0 / in.ln());
  const double parity = (in.n % 2 == 1) ? 2.0 : 0.0;  // 1 + (-1)^{n+1}
  const double rhs = n * n * (n - 1) * (n - 1) / 4.0 * (1.0 - parity / (2.0 * n * n)) * spread;
  const double lhs = std::abs(n * (n - 1) * in.bh - in.kf * in.kf);
  auto r = detail::finish(BoundId::kirchhoff_deviation, lhs, rhs, true);

  const double count = n - 1;
  const double half = std::floor(count / 2);
  r.rhs_alternate = n * n * count * half * (1.0 - half / count) * spread;
  if (!r.holds) {
    const bool alt_holds = r.rhs_alternate.value() - lhs >= -holds_tolerance * std::max(1.0, std::abs(*r.rhs_alternate));
    r.notes.push_back(std::string("parity-factor right-hand side violated; the estimate over the ") +
                      "n-1 nonzero eigenvalues gives rhs_alternate, which " +
                      (alt_holds ? "holds" : "is also violated"));
  }
  return r;
}

inline const std::vector<double>& default_p_grid() {
  static const std::vector<double> grid{1.0 / 3.0, 2.0 / 3.0, 1.0, 2.0};
  return grid;
}

/// Every bound on one graph; the power-sum bound once per p. The tree-count
/// pair is skipped below n = 3.
inline std::vector<BoundReport> check_all(const BoundInputs& in,
                                          std::span<const double> p_grid = default_p_grid()) {
  std::vector<BoundReport> out;
  out.reserve(8 + p_grid.size());
  out.push_back(check_t3_1(in));
  out.push_back(check_t3_2(in));
  for (double p : p_grid) out.push_back(check_t3_3(in, p));
  out.push_back(check_c3_1(in));
  out.push_back(check_c3_2(in));
  out.push_back(check_t4_1(in));
  if (in.n >= 3) {
    auto [lo, hi] = check_t4_2(in);
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
  }
  out.push_back(check_t4_3(in));
  return out;
}

inline std::vector<BoundReport> check_all(const Graph& g,
                                          std::span<const double> p_grid = default_p_grid()) {
  return check_all(bound_inputs(g), p_grid);
}

inline BoundReport check_t3_1(const Graph& g) { return check_t3_1(bound_inputs(g)); }
inline BoundReport check_t3_2(const Graph& g) { return check_t3_2(bound_inputs(g)); }
inline BoundReport check_t3_3(const Graph& g, double p) { return check_t3_3(bound_inputs(g), p); }
inline BoundReport check_c3_1(const Graph& g) { return check_c3_1(bound_inputs(g)); }
inline BoundReport check_c3_2(const Graph& g) { return check_c3_2(bound_inputs(g)); }
inline BoundReport check_t4_1(const Graph& g) { return check_t4_1(bound_inputs(g)); }
inline TreeCountBounds check_t4_2(const Graph& g) { return check_t4_2(bound_inputs(g)); }
inline BoundReport check_t4_3(const Graph& g) { return check_t4_3(bound_inputs(g)); }

/// Number of distinct values in an ascending list, merging within `rel_tol`.
inline std::size_t distinct_values(std::span<const double> sorted, double rel_tol = equality_tolerance) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > rel_tol * std::max(1.0, std::abs(sorted[i]))) ++count;
  }
  return count;
}

}  // namespace bhix
