// SPDX-License-Identifier: Apache-2.0
#pragma once

// Closed-form BH for stars, double stars and fireflies, and the exhaustive
// scans over trees and small graphs that test the extremal statements.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bhix/charpoly.hpp"
#include "bhix/error.hpp"
#include "bhix/families.hpp"
#include "bhix/graph.hpp"
#include "bhix/indices.hpp"
#include "bhix/io.hpp"
#include "bhix/spectra.hpp"
#include "bhix/sweep.hpp"
#include "bhix/trees.hpp"

namespace bhix {

// ---------------------------------------------------------------- closed forms

struct ClosedForm {
  FamilySpec family;
  mpq_class value;
  std::string case_label;
};

namespace detail {
inline mpq_class rat(long num, long den = 1) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace detail

/// BH(K_{1,n-1}) = n^2 - 2n + 1/n.
inline mpq_class star_bh(long n) { return detail::rat(n * n - 2 * n) + detail::rat(1, n); }

/// BH(S(a,b)) = n^2 - 2n + 4ab + (ab+1)^2 / n with n = a + b + 2.
inline mpq_class double_star_bh(long a, long b) {
  const long n = a + b + 2;
  const long ab = a * b;
  return detail::rat(n * n - 2 * n + 4 * ab) + detail::rat((ab + 1) * (ab + 1), n);
}

/// BH of the firefly with s triangles, t pendant paths and q pendant edges,
/// one formula per parameter regime.
inline ClosedForm firefly_closed_form(int s, int t, int q) {
  using detail::rat;
  const long n = 2L * s + 2L * t + q + 1;
  ClosedForm cf{FamilySpec::firefly(s, t, q), 0, ""};
  const mpq_class triangles = -rat(8 * s * n, 9);
  const mpq_class paths = rat(9L * t * t + (5 * n * n - 16 * n - 6) * t + 1, n);
  if (s == 0 && t == 0) {
    cf.value = rat(n * n - 2 * n) + rat(1, n);
    cf.case_label = "firefly_star";
  } else if (s == 0 && t == 1) {
    cf.value = rat(n * n + 3 * n - 16) + rat(4, n);
    cf.case_label = "firefly_one_path";
  } else if (s == 0) {
    cf.value = rat(n * n - 2 * n) + paths;
    cf.case_label = "firefly_paths";
  } else if (t == 0) {
    cf.value = rat(n * n - 2 * n) + triangles + rat(1, n);
    cf.case_label = "firefly_triangles";
  } else {
    cf.value = rat(n * n - 2 * n) + triangles + paths;
    cf.case_label = "firefly_mixed";
  }
  return cf;
}

inline ClosedForm closed_form_bh(const FamilySpec& f) {
  f.validate();
  switch (f.kind) {
    case FamilyKind::star:
      return {f, star_bh(f.n), "star"};
    case FamilyKind::double_star:
      return {f, double_star_bh(f.a, f.b), "double_star"};
    case FamilyKind::firefly:
      return firefly_closed_form(f.s, f.t, f.q);
    default:
      throw error(errc::unsupported_family, std::string(to_string(f.kind)) + " has no closed form");
  }
}

/// The factored Laplacian characteristic polynomial of a double star or
/// firefly. When the (x-1) exponent would be negative the factor moves to
/// `divisor`; the identity to check is phi * divisor == product.
struct FactoredForm {
  IntPoly product;
  IntPoly divisor = IntPoly{1};
};

inline FactoredForm factored_char_poly(const FamilySpec& f) {
  f.validate();
  const IntPoly x = IntPoly::x();
  auto xm = [](long r) { return IntPoly::linear_factor(r); };
  const IntPoly golden{1, -3, 1};  // x^2 - 3x + 1
  const long n = f.n;
  FactoredForm out;
  auto ones = [&](long e) {
    if (e >= 0) return xm(1).pow(static_cast<unsigned>(e));
    out.divisor = xm(1).pow(static_cast<unsigned>(-e));
    return IntPoly{1};
  };
  switch (f.kind) {
    case FamilyKind::star:
      out.product = x * xm(n) * ones(n - 2);
      break;
    case FamilyKind::double_star: {
      const long ab = static_cast<long>(f.a) * f.b;
      const IntPoly cubic{-n, 2 * n + ab + 1, -(n + 2), 1};
      out.product = x * ones(n - 4) * cubic;
      break;
    }
    case FamilyKind::firefly: {
      const long s = f.s;
      const long t = f.t;
      if (t == 0) {
        out.product = x * xm(n) * xm(3).pow(static_cast<unsigned>(s)) * ones(n - s - 2);
      } else {
        const IntPoly cubic{-n, 3 * n - 3 * t + 1, -(n - t + 3), 1};
        out.product = x * xm(3).pow(static_cast<unsigned>(s)) * ones(n - s - 2 * t - 2) *
                      golden.pow(static_cast<unsigned>(t - 1)) * cubic;
      }
      break;
    }
    default:
      throw error(errc::unsupported_family, std::string(to_string(f.kind)) + " has no factored form");
  }
  return out;
}

// ---------------------------------------------------------------- tree scans

struct TreeWitness {
  std::string levels;
  std::string graph6;
  double value = 0.0;
};

struct ScanReport {
  int n = 0;
  std::size_t tree_count = 0;
  double min_value = 0.0;
  TreeWitness min_witness;
  double max_value = 0.0;
  TreeWitness max_witness;
  double min_runner_up = 0.0;  // second-smallest BH
  double max_runner_up = 0.0;  // second-largest BH
  bool min_is_star = false;
  bool max_is_path = false;
  bool ambiguous_witness = false;
  bool conjecture_verified = false;
  std::vector<TreeWitness> counterexamples;
  std::size_t interlacing_violations = 0;   // lambda_2 <= 2(1 - cos(pi/(d+1)))
  std::size_t small_count_violations = 0;   // #{lambda < 2 - 2/n} >= ceil(n/2)
};

inline constexpr double witness_gap = 1e-6;

inline bool is_star(const Graph& g) {
  return g.order() >= 2 && g.size() + 1 == g.order() &&
         structure_report(g).max_degree + 1 == g.order();
}

inline bool is_path(const Graph& g) {
  return is_tree(g) && structure_report(g).max_degree <= 2;
}

inline TreeWitness make_witness(const LevelSequence& levels, const Graph& g, double value) {
  return {to_string(levels), to_graph6(g), value};
}

/// Exhaustive check of BH(star) <= BH(T) <= BH(path) over all free trees of order n.
inline ScanReport conjecture_scan(int n) {
  if (n < 5) throw error(errc::invalid_params, "tree scan needs n >= 5");
  ScanReport r;
  r.n = n;
  r.min_value = std::numeric_limits<double>::infinity();
  r.max_value = -std::numeric_limits<double>::infinity();
  r.min_runner_up = r.min_value;
  r.max_runner_up = r.max_value;
  bool min_star = false;
  bool max_path = false;
  std::vector<std::pair<LevelSequence, double>> all;

  const double half_n = std::ceil(n / 2.0);
  const double average_degree = 2.0 - 2.0 / n;
  FreeTreeIterator it(n);
  while (it.next()) {
    const Graph g = it.graph();
    const Spectrum s = spectrum(g);
    const double bh = biharmonic_from_spectrum(s);
    ++r.tree_count;
    all.emplace_back(it.levels(), bh);

    const int d = diameter(g).value();
    if (s.algebraic_connectivity() > 2.0 * (1.0 - std::cos(std::numbers::pi / (d + 1))) + 1e-9) {
      ++r.interlacing_violations;
    }
    std::size_t below = 0;
    for (double x : s.values)
      if (x < average_degree - 1e-9) ++below;
    if (static_cast<double>(below) < half_n) ++r.small_count_violations;

    if (bh < r.min_value) {
      r.min_runner_up = r.min_value;
      r.min_value = bh;
      r.min_witness = make_witness(it.levels(), g, bh);
      min_star = is_star(g);
    } else if (bh < r.min_runner_up) {
      r.min_runner_up = bh;
    }
    if (bh > r.max_value) {
      r.max_runner_up = r.max_value;
      r.max_value = bh;
      r.max_witness = make_witness(it.levels(), g, bh);
      max_path = is_path(g);
    } else if (bh > r.max_runner_up) {
      r.max_runner_up = bh;
    }
  }
  r.min_is_star = min_star;
  r.max_is_path = max_path;

  const double star_value = biharmonic_from_spectrum(spectrum(generate(FamilySpec::star(n))));
  const double path_value = biharmonic_from_spectrum(spectrum(generate(FamilySpec::path(n))));
  for (const auto& [levels, bh] : all) {
    const Graph g = tree_from_levels(levels);
    if ((!is_star(g) && bh < star_value + witness_gap) || (!is_path(g) && bh > path_value - witness_gap)) {
      r.counterexamples.push_back(make_witness(levels, g, bh));
    }
  }
  r.ambiguous_witness = (r.min_runner_up - r.min_value <= witness_gap) ||
                        (r.max_value - r.max_runner_up <= witness_gap);
  r.conjecture_verified = r.min_is_star && r.max_is_path && !r.ambiguous_witness &&
                          r.counterexamples.empty();
  return r;
}

struct DiameterThresholdReport {
  int n = 0;
  double threshold = 0.0;  // pi (7n/8)^{1/4} - 1
  std::size_t tree_count = 0;
  std::size_t hypothesis_count = 0;
  double star_value = 0.0;  // n (n - 2 + 1/n^2)
  std::optional<double> min_value_meeting_hypothesis;
  std::vector<TreeWitness> violations;
  bool verified() const { return violations.empty(); }
};

/// Every tree with diameter >= pi (7n/8)^{1/4} - 1 must have BH above the star's.
inline DiameterThresholdReport diameter_threshold_scan(int n) {
  if (n < 8) throw error(errc::invalid_params, "diameter threshold scan needs n >= 8");
  DiameterThresholdReport r;
  r.n = n;
  r.threshold = std::numbers::pi * std::pow(7.0 * n / 8.0, 0.25) - 1.0;
  r.star_value = n * (n - 2 + 1.0 / (static_cast<double>(n) * n));
  FreeTreeIterator it(n);
  while (it.next()) {
    ++r.tree_count;
    const Graph g = it.graph();
    if (static_cast<double>(diameter(g).value()) < r.threshold) continue;
    ++r.hypothesis_count;
    const double bh = biharmonic_from_spectrum(spectrum(g));
    if (!r.min_value_meeting_hypothesis || bh < *r.min_value_meeting_hypothesis) {
      r.min_value_meeting_hypothesis = bh;
    }
    if (!(bh > r.star_value)) r.violations.push_back(make_witness(it.levels(), g, bh));
  }
  return r;
}

// ---------------------------------------------------------------- diameter two

inline constexpr int diameter2_max_order = 7;

struct Diameter2Report {
  int n = 0;
  std::uint64_t masks = 0;
  std::uint64_t connected = 0;
  std::uint64_t diameter2_count = 0;
  std::uint64_t star_count = 0;
  double star_value = 0.0;
  double max_non_star_value = 0.0;
  std::string max_non_star_witness;  // graph6
  double gap = 0.0;                   // star_value - max_non_star_value
  double min_lambda2 = std::numeric_limits<double>::infinity();
  std::uint64_t lambda2_violations = 0;  // diameter-2 graphs with lambda_2 < 1 - 1e-9
  std::vector<std::string> violations;   // graph6 of non-stars reaching the star's BH
  bool verified() const { return violations.empty() && lambda2_violations == 0 && star_count > 0; }
};

namespace detail {
inline void merge(Diameter2Report& a, Diameter2Report&& b) {
  a.masks += b.masks;
  a.connected += b.connected;
  a.diameter2_count += b.diameter2_count;
  a.star_count += b.star_count;
  if (b.max_non_star_value > a.max_non_star_value) {
    a.max_non_star_value = b.max_non_star_value;
    a.max_non_star_witness = std::move(b.max_non_star_witness);
  }
  a.min_lambda2 = std::min(a.min_lambda2, b.min_lambda2);
  a.lambda2_violations += b.lambda2_violations;
  a.violations.insert(a.violations.end(), b.violations.begin(), b.violations.end());
}
}  // namespace detail

/// Exhaustive over every labeled graph on n vertices: among diameter-2
/// graphs the star is the unique BH maximizer, and lambda_2 >= 1.
inline Diameter2Report diameter2_scan(int n, unsigned workers = 1) {
  if (n < 3) throw error(errc::invalid_params, "diameter-two scan needs n >= 3");
  if (n > diameter2_max_order) {
    throw error(errc::too_large, "diameter-two scan limited to n <= " + std::to_string(diameter2_max_order));
  }
  const double star_value = n * (n - 2 + 1.0 / (static_cast<double>(n) * n));
  const std::uint64_t count = std::uint64_t{1} << pair_count(static_cast<std::size_t>(n));
  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    Diameter2Report r;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      ++r.masks;
      const Graph g = graph_from_mask(static_cast<std::size_t>(n), mask);
      const auto d = diameter(g);
      if (!d) continue;
      ++r.connected;
      if (*d != 2) continue;
      ++r.diameter2_count;
      const Spectrum s = spectrum(g);
      const double bh = biharmonic_from_spectrum(s);
      r.min_lambda2 = std::min(r.min_lambda2, s.algebraic_connectivity());
      if (s.algebraic_connectivity() < 1.0 - 1e-9) ++r.lambda2_violations;
      if (is_star(g)) {
        ++r.star_count;
        continue;
      }
      if (bh > r.max_non_star_value) {
        r.max_non_star_value = bh;
        r.max_non_star_witness = to_graph6(g);
      }
      if (bh >= star_value - witness_gap) r.violations.push_back(to_graph6(g));
    }
    return r;
  };
  auto r = parallel_reduce<Diameter2Report>(
      count, workers, body, [](Diameter2Report& a, Diameter2Report&& b) { detail::merge(a, std::move(b)); });
  r.n = n;
  r.star_value = star_value;
  r.gap = star_value - r.max_non_star_value;
  return r;
}

// ---------------------------------------------------------------- families

struct FamilyCheckFailure {
  std::string family;
  std::string what;
};

struct FamilyReport {
  int n_max = 0;
  std::size_t double_stars = 0;
  std::size_t fireflies = 0;
  double max_rel_error = 0.0;  // closed form vs spectral BH
  std::vector<FamilyCheckFailure> failures;
  bool verified() const { return failures.empty(); }
};

inline constexpr int family_verify_max = 40;

namespace detail {

inline void check_family(const FamilySpec& f, double rel_tol, FamilyReport& r) {
  const Graph g = generate(f);
  const CharPoly phi = char_poly(g);
  const auto factored = factored_char_poly(f);
  if (!(phi * factored.divisor == factored.product)) {
    r.failures.push_back({describe(f), "characteristic polynomial " + phi.to_string() +
                                           " differs from factored form"});
  }
  const ClosedForm cf = closed_form_bh(f);
  if (biharmonic_index_exact(phi, g.order()) != cf.value) {
    r.failures.push_back({describe(f), "exact BH from the characteristic polynomial differs from " +
                                           cf.case_label + " closed form"});
  }
  const double spectral = biharmonic_from_spectrum(spectrum(g));
  const double rel = std::abs(spectral - cf.value.get_d()) / std::max(1.0, cf.value.get_d());
  r.max_rel_error = std::max(r.max_rel_error, rel);
  if (rel > rel_tol) {
    r.failures.push_back({describe(f), "spectral BH " + std::to_string(spectral) + " vs closed form " +
                                           std::to_string(cf.value.get_d())});
  }
}

inline void check_extreme(FamilyReport& r, const std::string& label, const mpq_class& got,
                          const mpq_class& expected) {
  if (got != expected) {
    r.failures.push_back({label, "extreme value " + got.get_str() + " != " + expected.get_str()});
  }
}

}  // namespace detail

/// For every double star and firefly with n <= n_max: the exact characteristic
/// polynomial equals its factored form, the closed form equals the exact BH
/// read off that polynomial, and the spectral BH agrees to `rel_tol`. For
/// n >= 7 the min/max over each parameter regime must equal the stated
/// extreme values.
inline FamilyReport verify_family_factorizations(int n_max, double rel_tol = 1e-8) {
  using detail::rat;
  if (n_max > family_verify_max) {
    throw error(errc::too_large, "family verification limited to n <= " + std::to_string(family_verify_max));
  }
  FamilyReport r;
  r.n_max = n_max;
  for (int n = 4; n <= n_max; ++n) {
    std::optional<mpq_class> lo, hi;
    for (int a = 1; a <= n - 3; ++a) {
      const auto f = FamilySpec::double_star(a, n - 2 - a);
      detail::check_family(f, rel_tol, r);
      ++r.double_stars;
      const mpq_class v = double_star_bh(f.a, f.b);
      if (!lo || v < *lo) lo = v;
      if (!hi || v > *hi) hi = v;
    }
    const long ln = n;
    const long c = (ln - 1) / 2;  // ceil((n-2)/2)
    const long fl = (ln - 2) / 2;
    detail::check_extreme(r, "double_star min n=" + std::to_string(n), *lo, rat(ln * ln + 3 * ln - 16) + rat(4, ln));
    detail::check_extreme(r, "double_star max n=" + std::to_string(n), *hi,
                          rat(ln * ln - 2 * ln + 4 * c * fl) + rat((c * fl + 1) * (c * fl + 1), ln));
  }

  for (int n = 1; n <= n_max; ++n) {
    std::optional<mpq_class> lo3, hi3, lo4, hi4, lo5, hi5;
    auto track = [](std::optional<mpq_class>& lo, std::optional<mpq_class>& hi, const mpq_class& v) {
      if (!lo || v < *lo) lo = v;
      if (!hi || v > *hi) hi = v;
    };
    for (int s = 0; 2 * s + 1 <= n; ++s) {
      for (int t = 0; 2 * s + 2 * t + 1 <= n; ++t) {
        const int qn = n - 2 * s - 2 * t - 1;
        const auto f = FamilySpec::firefly(s, t, qn);
        if (n >= 2) detail::check_family(f, rel_tol, r);
        ++r.fireflies;
        const mpq_class v = firefly_closed_form(s, t, qn).value;
        if (s == 0 && t >= 2) track(lo3, hi3, v);
        if (s >= 1 && t == 0) track(lo4, hi4, v);
        if (s >= 1 && t >= 1) track(lo5, hi5, v);
      }
    }
    if (n < 7) continue;
    const long ln = n;
    const bool odd = n % 2 == 1;
    const std::string tag = " n=" + std::to_string(n);
    detail::check_extreme(r, "firefly_paths min" + tag, *lo3, rat(ln * ln + 8 * ln - 32) + rat(25, ln));
    detail::check_extreme(r, "firefly_paths max" + tag, *hi3,
                          odd ? mpq_class(rat(7 * ln * ln, 2) - rat(41 * ln, 4) + rat(25, 4 * ln) + rat(1, 2))
                              : mpq_class(rat(7 * ln * ln, 2) - rat(51 * ln, 4) + rat(16, ln) + 4));
    detail::check_extreme(r, "firefly_triangles min" + tag, *lo4,
                          odd ? mpq_class(rat(5 * ln * ln, 9) - rat(14 * ln, 9) + rat(1, ln))
                              : mpq_class(rat(5 * ln * ln, 9) - rat(10 * ln, 9) + rat(1, ln)));
    detail::check_extreme(r, "firefly_triangles max" + tag, *hi4, rat(ln * ln) - rat(26 * ln, 9) + rat(1, ln));
    detail::check_extreme(r, "firefly_mixed min" + tag, *lo5,
                          odd ? mpq_class(rat(5 * ln * ln, 9) + rat(13 * ln, 3) + rat(4, ln) - 16)
                              : mpq_class(rat(5 * ln * ln, 9) + rat(43 * ln, 9) + rat(4, ln) - 16));
    detail::check_extreme(r, "firefly_mixed max" + tag, *hi5,
                          odd ? mpq_class(rat(7 * ln * ln, 2) - rat(581 * ln, 36) + rat(121, 4 * ln) + rat(15, 2))
                              : mpq_class(rat(7 * ln * ln, 2) - rat(671 * ln, 36) + rat(49, ln) + 11));
  }
  return r;
}

}  // namespace bhix
