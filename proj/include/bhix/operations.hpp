// SPDX-License-Identifier: Apache-2.0
#pragma once

// Complement, join, Cartesian and lexicographic products, together with
// their Laplacian spectra predicted from the factors alone.

#include <algorithm>
#include <cmath>
#include <string>
#include <optional>
#include <string_view>
#include <vector>

#include "bhix/error.hpp"
#include "bhix/graph.hpp"
#include "bhix/spectra.hpp"

namespace bhix {

enum class OpKind { complement, join, cartesian, lexicographic };

constexpr std::string_view to_string(OpKind op) noexcept {
  switch (op) {
    case OpKind::complement: return "complement";
    case OpKind::join: return "join";
    case OpKind::cartesian: return "cartesian";
    case OpKind::lexicographic: return "lex";
  }
  return "?";
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.push_back({u, v});
  return Graph::from_edge_list(g.order(), e);
}

/// g1's vertices first, then g2's, with every cross pair joined.
inline Graph join(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.order());
  const auto n2 = static_cast<Vertex>(g2.order());
  std::vector<Edge> e = g1.edges();
  for (const auto& [u, v] : g2.edges()) e.push_back({u + n1, v + n1});
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) e.push_back({u, v + n1});
  return Graph::from_edge_list(g1.order() + g2.order(), e);
}

namespace detail {
/// Row-major pair index: (i, j) -> i * n2 + j.
template <class Adjacent>
Graph product(const Graph& g1, const Graph& g2, Adjacent&& adjacent) {
  const auto n1 = static_cast<Vertex>(g1.order());
  const auto n2 = static_cast<Vertex>(g2.order());
  std::vector<Edge> e;
  for (Vertex a = 0; a < n1 * n2; ++a)
    for (Vertex b = a + 1; b < n1 * n2; ++b)
      if (adjacent(a / n2, a % n2, b / n2, b % n2)) e.push_back({a, b});
  return Graph::from_edge_list(g1.order() * g2.order(), e);
}
}  // namespace detail

inline Graph cartesian(const Graph& g1, const Graph& g2) {
  return detail::product(g1, g2, [&](Vertex i, Vertex s, Vertex j, Vertex t) {
    return (i == j && g2.adjacent(s, t)) || (s == t && g1.adjacent(i, j));
  });
}

inline Graph lexicographic(const Graph& g1, const Graph& g2) {
  return detail::product(g1, g2, [&](Vertex i, Vertex s, Vertex j, Vertex t) {
    return g1.adjacent(i, j) || (i == j && g2.adjacent(s, t));
  });
}

inline Graph apply(OpKind op, const Graph& g1, const Graph* g2) {
  if (op != OpKind::complement && g2 == nullptr) {
    throw error(errc::invalid_input, std::string(to_string(op)) + " needs two graphs");
  }
  switch (op) {
    case OpKind::complement: return complement(g1);
    case OpKind::join: return join(g1, *g2);
    case OpKind::cartesian: return cartesian(g1, *g2);
    case OpKind::lexicographic: return lexicographic(g1, *g2);
  }
  return {};
}

/// Laplacian spectrum of the result assembled from the inputs' spectra
/// (and g1's degrees for the lexicographic product), ascending. Valid for
/// arbitrary inputs; the result graph is never built.
inline std::vector<double> predicted_spectrum(OpKind op, const Graph& g1, const Graph* g2) {
  if (op != OpKind::complement && g2 == nullptr) {
    throw error(errc::invalid_input, std::string(to_string(op)) + " needs two graphs");
  }
  const auto s1 = spectrum(g1).values;
  std::vector<double> out;
  switch (op) {
    case OpKind::complement: {
      const double n = static_cast<double>(g1.order());
      out.push_back(0.0);
      // lambda_i(complement) = n - lambda_{n+2-i}(G), i = 2..n
      for (std::size_t i = 1; i < s1.size(); ++i) out.push_back(n - s1[i]);
      break;
    }
    case OpKind::join: {
      const auto s2 = spectrum(*g2).values;
      const double n1 = static_cast<double>(g1.order());
      const double n2 = static_cast<double>(g2->order());
      out.push_back(0.0);
      out.push_back(n1 + n2);
      for (std::size_t i = 1; i < s1.size(); ++i) out.push_back(s1[i] + n2);
      for (std::size_t j = 1; j < s2.size(); ++j) out.push_back(s2[j] + n1);
      break;
    }
    case OpKind::cartesian: {
      const auto s2 = spectrum(*g2).values;
      for (double a : s1)
        for (double b : s2) out.push_back(a + b);
      break;
    }
    case OpKind::lexicographic: {
      const auto s2 = spectrum(*g2).values;
      const double n2 = static_cast<double>(g2->order());
      for (double a : s1) out.push_back(n2 * a);
      for (std::size_t j = 1; j < s2.size(); ++j)
        for (Vertex u = 0; u < g1.order(); ++u)
          out.push_back(s2[j] + static_cast<double>(g1.degree(u)) * n2);
      break;
    }
  }
  for (double& x : out)
    if (std::abs(x) < zero_clamp) x = 0.0;
  std::sort(out.begin(), out.end());
  return out;
}

/// BH of the operation's result from the input spectra alone.
inline double predicted_bh(OpKind op, const Graph& g1, const Graph* g2 = nullptr) {
  switch (op) {
    case OpKind::complement:
      break;
    case OpKind::join:
      if (g2 == nullptr) throw error(errc::invalid_input, "join needs two graphs");
      if (g1.order() + g2->order() < 1) throw error(errc::invalid_input, "empty join");
      break;
    case OpKind::cartesian:
      if (g2 == nullptr || !is_connected(g1) || !is_connected(*g2)) {
        throw error(errc::invalid_input, "Cartesian product formula needs two connected graphs");
      }
      break;
    case OpKind::lexicographic:
      if (g2 == nullptr || !is_connected(g1) || g2->order() == 0) {
        throw error(errc::invalid_input, "lexicographic product formula needs a connected first factor");
      }
      break;
  }
  const auto s = predicted_spectrum(op, g1, g2);
  const double n = static_cast<double>(s.size());
  if (op == OpKind::complement) {
    // complement is connected iff lambda_n(G) < n
    if (g1.order() >= 2 && s[1] == 0.0) {
      throw error(errc::disconnected_result, "complement is disconnected");
    }
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) sum += 1.0 / (s[i] * s[i]);
  return n * sum;
}

}  // namespace bhix
