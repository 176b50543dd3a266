// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "bhix/error.hpp"
#include "bhix/graph.hpp"

namespace bhix {

/// Dense square matrix stored row-major.
template <class T>
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<T> data;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order, T fill = T{}) : n(order), data(order * order, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

using IntMatrix = SquareMatrix<std::int64_t>;

/// L(G) = D(G) - A(G).
inline IntMatrix laplacian(const Graph& g) {
  IntMatrix L(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    L(u, u) = static_cast<std::int64_t>(g.degree(u));
    g.for_each_neighbor(u, [&](Vertex v) { L(u, v) = -1; });
  }
  return L;
}

inline constexpr double zero_clamp = 1e-9;
inline constexpr int jacobi_max_sweeps = 100;

/// Eigenvalues ascending; `vectors(i, k)` is component i of eigenvector k.
struct Eigensystem {
  std::vector<double> values;
  SquareMatrix<double> vectors;
};

/// Cyclic Jacobi rotations on a dense symmetric matrix, iterated until the
/// off-diagonal Frobenius norm drops below 1e-12 * n.
inline Eigensystem jacobi_eigensystem(SquareMatrix<double> a, bool want_vectors = true) {
  const std::size_t n = a.n;
  SquareMatrix<double> v;
  if (want_vectors) {
    v = SquareMatrix<double>(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  }

  double frob = 0.0;
  for (double x : a.data) frob += x * x;
  // Roundoff floor so huge matrices cannot stall above the fixed threshold.
  const double target = std::max(1e-12 * static_cast<double>(std::max<std::size_t>(n, 1)),
                                 8.0 * std::numeric_limits<double>::epsilon() * std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  for (; off_norm() >= target; ++sweep) {
    if (sweep == jacobi_max_sweeps) {
      throw error(errc::no_convergence, "Jacobi exceeded " + std::to_string(jacobi_max_sweeps) +
                                            " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a(r, p);
          const double h = a(r, q);
          a(r, p) = a(p, r) = g - s * (h + g * tau);
          a(r, q) = a(q, r) = h + s * (g - h * tau);
        }
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const double g = v(r, p);
            const double h = v(r, q);
            v(r, p) = g - s * (h + g * tau);
            v(r, q) = h + s * (g - h * tau);
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  Eigensystem out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
  if (want_vectors) {
    out.vectors = SquareMatrix<double>(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

inline SquareMatrix<double> to_real(const IntMatrix& m) {
  SquareMatrix<double> r(m.n);
  std::transform(m.data.begin(), m.data.end(), r.data.begin(),
                 [](std::int64_t x) { return static_cast<double>(x); });
  return r;
}

/// Sorted Laplacian eigenvalues with near-zero values clamped to exactly 0.
struct Spectrum {
  std::vector<double> values;
  std::size_t zero_count = 0;
  double tolerance = zero_clamp;

  std::size_t size() const noexcept { return values.size(); }

  /// lambda_2 .. lambda_n for a connected graph (everything past the clamped zeros).
  std::span<const double> nonzero() const noexcept {
    return std::span<const double>(values).subspan(zero_count);
  }
  double algebraic_connectivity() const { return values.size() > 1 ? values[1] : 0.0; }
  double spectral_radius() const { return values.empty() ? 0.0 : values.back(); }
};

namespace detail {
inline std::size_t clamp_zeros(std::vector<double>& values, double tol) {
  std::size_t zeros = 0;
  for (double& x : values) {
    if (std::abs(x) < tol) {
      x = 0.0;
      ++zeros;
    }
  }
  std::sort(values.begin(), values.end());
  return zeros;
}
}  // namespace detail

inline Spectrum spectrum(const Graph& g) {
  Spectrum s;
  s.values = jacobi_eigensystem(to_real(laplacian(g)), false).values;
  s.zero_count = detail::clamp_zeros(s.values, s.tolerance);
  return s;
}

/// Eigenpairs of L(G), zero-clamped like spectrum().
inline Eigensystem laplacian_eigensystem(const Graph& g) {
  auto es = jacobi_eigensystem(to_real(laplacian(g)), true);
  for (double& x : es.values)
    if (std::abs(x) < zero_clamp) x = 0.0;
  return es;
}

/// Squared biharmonic distances d_B^2(u, v), from the spectral expansion of
/// the pseudoinverse of L^2: d_B^2(u,v) = sum_{i>=2} (x_i(u) - x_i(v))^2 / lambda_i^2.
class BiharmonicMatrix {
 public:
  BiharmonicMatrix() = default;
  explicit BiharmonicMatrix(SquareMatrix<double> entries) : d_(std::move(entries)) {}

  std::size_t order() const noexcept { return d_.n; }
  double operator()(Vertex u, Vertex v) const { return d_(u, v); }
  const SquareMatrix<double>& entries() const noexcept { return d_; }

  /// Half the ordered-pair sum, i.e. the sum over unordered pairs.
  double half_sum() const {
    double s = 0.0;
    for (std::size_t u = 0; u < d_.n; ++u)
      for (std::size_t v = u + 1; v < d_.n; ++v) s += d_(u, v);
    return s;
  }

 private:
  SquareMatrix<double> d_;
};

inline BiharmonicMatrix biharmonic_matrix(const Graph& g, const Eigensystem& es) {
  const std::size_t n = g.order();
  if (!is_connected(g)) throw error(errc::disconnected, "biharmonic distance needs a connected graph");
  SquareMatrix<double> d(n);
  std::vector<double> weight(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) weight[k] = 1.0 / (es.values[k] * es.values[k]);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double s = 0.0;
      for (std::size_t k = 1; k < n; ++k) {
        const double diff = es.vectors(u, k) - es.vectors(v, k);
        s += weight[k] * diff * diff;
      }
      d(u, v) = d(v, u) = s;
    }
  }
  return BiharmonicMatrix(std::move(d));
}

inline BiharmonicMatrix biharmonic_matrix(const Graph& g) {
  if (!is_connected(g)) throw error(errc::disconnected, "biharmonic distance needs a connected graph");
  return biharmonic_matrix(g, laplacian_eigensystem(g));
}

/// Power sum of the eigenvalues, sum_i lambda_i^p over the nonzero part.
inline double power_sum(std::span<const double> values, double p) {
  double s = 0.0;
  for (double x : values) s += std::pow(x, p);
  return s;
}

}  // namespace bhix
