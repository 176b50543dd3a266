// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact Laplacian characteristic polynomials and spanning-tree counts.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bhix/error.hpp"
#include "bhix/graph.hpp"
#include "bhix/polynomial.hpp"
#include "bhix/spectra.hpp"

namespace bhix {

inline constexpr std::size_t char_poly_max_order = 64;

/// det(xI - L(G)) as an exact integer polynomial.
using CharPoly = IntPoly;

/// Faddeev-LeVerrier over the integers: M_k = A M_{k-1} + c_{n-k+1} I and
/// c_{n-k} = -tr(A M_k) / k, where every division is exact. The product A M
/// only walks the nonzero entries of A, which keeps sparse Laplacians cheap.
inline CharPoly char_poly(const IntMatrix& a) {
  const std::size_t n = a.n;
  if (n > char_poly_max_order) {
    throw error(errc::too_large, "exact characteristic polynomial limited to n <= " +
                                     std::to_string(char_poly_max_order));
  }
  std::vector<std::vector<std::pair<std::size_t, long>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) rows[i].emplace_back(j, static_cast<long>(a(i, j)));

  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<mpz_class> m(n * n);  // M_k, row-major
  std::vector<mpz_class> next(n * n);
  mpz_class trace;
  for (std::size_t k = 1; k <= n; ++k) {
    // next = A * M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class& dst = next[i * n + j];
        dst = 0;
        for (const auto& [l, v] : rows[i]) {
          const mpz_class& src = m[l * n + j];
          if (v == 1) dst += src;
          else if (v == -1) dst -= src;
          else if (v > 0) mpz_addmul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(v));
          else mpz_submul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-v));
        }
      }
      next[i * n + i] += c[n - k + 1];
    }
    std::swap(m, next);
    trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [l, v] : rows[i]) trace += v * m[l * n + i];
    mpz_class quotient;
    mpz_divexact_ui(quotient.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -quotient;
  }
  return CharPoly(std::move(c));
}

inline CharPoly char_poly(const Graph& g) { return char_poly(laplacian(g)); }

/// Principal submatrix with row and column `w` removed.
inline IntMatrix delete_row_col(const IntMatrix& a, std::size_t w) {
  IntMatrix out(a.n - 1);
  for (std::size_t i = 0, r = 0; i < a.n; ++i) {
    if (i == w) continue;
    for (std::size_t j = 0, s = 0; j < a.n; ++j) {
      if (j == w) continue;
      out(r, s++) = a(i, j);
    }
    ++r;
  }
  return out;
}

/// Characteristic polynomial of L_w(G), the Laplacian with row/column w deleted.
inline CharPoly char_poly_deleted(const Graph& g, Vertex w) {
  if (w >= g.order()) throw error(errc::out_of_range_vertex, "vertex " + std::to_string(w));
  return char_poly(delete_row_col(laplacian(g), w));
}

/// g1 + g2 plus the edge u-v, with g2's vertices shifted past g1's.
inline Graph join_by_edge(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
  if (u >= g1.order() || v >= g2.order()) {
    throw error(errc::out_of_range_vertex, "cut-edge endpoint outside its component");
  }
  const auto shift = static_cast<Vertex>(g1.order());
  std::vector<Edge> e = g1.edges();
  for (const auto& [a, b] : g2.edges()) e.push_back({a + shift, b + shift});
  e.push_back({u, v + shift});
  return Graph::from_edge_list(g1.order() + g2.order(), e);
}

/// phi(L(G)) for G = g1 + g2 + uv through the cut-edge recursion
/// phi(G1)phi(G2) - phi(G1)phi(L_v(G2)) - phi(L_u(G1))phi(G2).
inline CharPoly char_poly_cut_edge(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
  if (u >= g1.order() || v >= g2.order()) {
    throw error(errc::out_of_range_vertex, "cut-edge endpoint outside its component");
  }
  const CharPoly p1 = char_poly(g1);
  const CharPoly p2 = char_poly(g2);
  return p1 * p2 - p1 * char_poly_deleted(g2, v) - char_poly_deleted(g1, u) * p2;
}

/// Determinant by Bareiss fraction-free elimination.
inline mpz_class bareiss_determinant(const IntMatrix& a) {
  const std::size_t n = a.n;
  if (n == 0) return 1;
  std::vector<mpz_class> m(a.data.begin(), a.data.end());
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

/// tau(G) through the matrix-tree theorem; 0 for disconnected graphs.
inline mpz_class spanning_tree_count(const Graph& g) {
  if (g.order() == 0) return 0;
  if (g.order() == 1) return 1;
  return bareiss_determinant(delete_row_col(laplacian(g), 0));
}

/// BH(G) = n * sum 1/lambda^2 read exactly off phi(L(G)) through Vieta: with
/// p = phi / x having coefficients p_k = c_{k+1}, the nonzero roots satisfy
/// sum 1/r^2 = (p_1/p_0)^2 - 2 p_2/p_0.
inline mpq_class biharmonic_index_exact(const CharPoly& phi, std::size_t n) {
  const mpz_class c1 = phi.coeff(1);
  if (c1 == 0) throw error(errc::disconnected, "phi has a repeated zero root");
  mpq_class r1(phi.coeff(2), c1);
  mpq_class r2(phi.coeff(3), c1);
  r1.canonicalize();
  r2.canonicalize();
  return mpq_class(static_cast<long>(n)) * (r1 * r1 - 2 * r2);
}

/// Kf(G) = n * sum 1/lambda = -n p_1 / p_0.
inline mpq_class kirchhoff_index_exact(const CharPoly& phi, std::size_t n) {
  const mpz_class c1 = phi.coeff(1);
  if (c1 == 0) throw error(errc::disconnected, "phi has a repeated zero root");
  mpq_class r1(phi.coeff(2), c1);
  r1.canonicalize();
  return -mpq_class(static_cast<long>(n)) * r1;
}

}  // namespace bhix
