// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bhix/charpoly.hpp"
#include "bhix/error.hpp"
#include "bhix/graph.hpp"
#include "bhix/spectra.hpp"

namespace bhix {

namespace detail {
inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw error(errc::disconnected, std::string(what) + " needs a connected graph");
}
}  // namespace detail

/// n * sum_{i>=2} 1/lambda_i^2 from an already computed spectrum.
inline double biharmonic_from_spectrum(const Spectrum& s) {
  double sum = 0.0;
  for (double x : s.nonzero()) sum += 1.0 / (x * x);
  return static_cast<double>(s.size()) * sum;
}

/// n * sum_{i>=2} 1/lambda_i.
inline double kirchhoff_from_spectrum(const Spectrum& s) {
  double sum = 0.0;
  for (double x : s.nonzero()) sum += 1.0 / x;
  return static_cast<double>(s.size()) * sum;
}

struct BiharmonicIndex {
  double spectral = 0.0;      // n * sum 1/lambda^2
  double distance_sum = 0.0;  // sum over unordered pairs of d_B^2
};

inline BiharmonicIndex biharmonic_index(const Graph& g) {
  detail::require_connected(g, "biharmonic index");
  const auto es = laplacian_eigensystem(g);
  Spectrum s{es.values, 1};
  return {biharmonic_from_spectrum(s), biharmonic_matrix(g, es).half_sum()};
}

inline double kirchhoff_index(const Graph& g) {
  detail::require_connected(g, "Kirchhoff index");
  return kirchhoff_from_spectrum(spectrum(g));
}

struct ZagrebForgotten {
  std::int64_t m1 = 0;  // sum d(v)^2
  std::int64_t f = 0;   // sum d(v)^3
};

inline ZagrebForgotten zagreb_forgotten(const Graph& g) {
  ZagrebForgotten z;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    z.m1 += d * d;
    z.f += d * d * d;
  }
  return z;
}

/// Sum of BFS distances over unordered pairs.
inline std::int64_t wiener_index(const Graph& g) {
  std::int64_t w = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex v = s + 1; v < g.order(); ++v) {
      if (dist[v] == unreachable) throw error(errc::disconnected, "Wiener index needs a connected graph");
      w += dist[v];
    }
  }
  return w;
}

struct GeneralizedBiharmonic {
  double sbi = 0.0;        // Schultz: sum (d(u)+d(v)) d_B^2
  double gbi = 0.0;        // Gutman: sum d(u)d(v) d_B^2
  double xi_b = 0.0;       // sum (eps(u)+eps(v)) d_B^2
  double xi_b_star = 0.0;  // sum eps(u)eps(v) d_B^2
  std::vector<double> eccentricity;  // eps_b(u) = max_v d_B^2(u, v)
};

/// All four sums run over unordered pairs; diagonal pairs contribute zero.
inline GeneralizedBiharmonic generalized_bh(const Graph& g, const BiharmonicMatrix& d) {
  const std::size_t n = g.order();
  GeneralizedBiharmonic r;
  r.eccentricity.assign(n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) r.eccentricity[u] = std::max(r.eccentricity[u], d(u, v));

  const auto deg = g.degrees();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double duv = d(u, v);
      const auto du = static_cast<double>(deg[u]);
      const auto dv = static_cast<double>(deg[v]);
      const double eu = r.eccentricity[u];
      const double ev = r.eccentricity[v];
      r.sbi += (du + dv) * duv;
      r.gbi += du * dv * duv;
      r.xi_b += (eu + ev) * duv;
      r.xi_b_star += eu * ev * duv;
    }
  }
  return r;
}

inline GeneralizedBiharmonic generalized_bh(const Graph& g) {
  detail::require_connected(g, "generalized biharmonic indices");
  return generalized_bh(g, biharmonic_matrix(g));
}

/// Every scalar index of one graph. Connectivity-dependent fields stay empty
/// for disconnected input.
struct IndexReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool connected = false;
  std::optional<double> bh_spectral;
  std::optional<double> bh_distance;
  std::optional<double> kirchhoff;
  std::optional<std::int64_t> wiener;
  std::int64_t zagreb_m1 = 0;
  std::int64_t forgotten_f = 0;
  std::size_t triangles = 0;
  mpz_class tau = 0;
  std::optional<double> spectral_ratio;  // lambda_n / lambda_2
  std::optional<double> sbi, gbi, xi_b, xi_b_star;
};

inline IndexReport index_report(const Graph& g) {
  IndexReport r;
  r.n = g.order();
  r.m = g.size();
  r.connected = is_connected(g);
  const auto z = zagreb_forgotten(g);
  r.zagreb_m1 = z.m1;
  r.forgotten_f = z.f;
  r.triangles = triangle_count(g);
  r.tau = r.connected ? spanning_tree_count(g) : mpz_class(0);
  if (!r.connected) return r;

  const auto es = laplacian_eigensystem(g);
  const Spectrum s{es.values, 1};
  const auto d = biharmonic_matrix(g, es);
  r.bh_spectral = biharmonic_from_spectrum(s);
  r.bh_distance = d.half_sum();
  r.kirchhoff = kirchhoff_from_spectrum(s);
  r.wiener = wiener_index(g);
  if (g.order() >= 2) r.spectral_ratio = s.spectral_radius() / s.algebraic_connectivity();
  const auto gen = generalized_bh(g, d);
  r.sbi = gen.sbi;
  r.gbi = gen.gbi;
  r.xi_b = gen.xi_b;
  r.xi_b_star = gen.xi_b_star;
  return r;
}

}  // namespace bhix
