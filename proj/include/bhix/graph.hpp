// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhix/error.hpp"

namespace bhix {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr std::size_t max_order = 4096;

/// Simple undirected graph on vertices 0..n-1, stored as a dense symmetric
/// bit matrix. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
    if (n > max_order) {
      throw error(errc::too_large, "graph order " + std::to_string(n) + " exceeds " +
                                       std::to_string(max_order));
    }
  }

  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw error(errc::out_of_range_vertex, "edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") outside [0," +
                                                   std::to_string(n) + ")");
      }
      if (e.u == e.v) {
        throw error(errc::self_loop, "vertex " + std::to_string(e.u));
      }
      g.set(e.u, e.v);
    }
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (row(u)[v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
    return out;
  }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    auto r = row(v);
    for (std::size_t k = 0; k < r.size(); ++k) {
      for (auto w = r[k]; w != 0; w &= w - 1) {
        f(static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for_each_neighbor(u, [&](Vertex v) {
        if (u < v) out.push_back({u, v});
      });
    }
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  /// Row v of the adjacency bit matrix; bit w of word w/64 set iff vw is an edge.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void set(Vertex u, Vertex v) {
    auto& w = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
    const auto mask = std::uint64_t{1} << (v % 64);
    if (w & mask) return;
    w |= mask;
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline constexpr int unreachable = -1;

/// Breadth-first distances from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), unreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    g.for_each_neighbor(u, [&](Vertex v) {
      if (dist[v] == unreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

inline std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t components = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++components;
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] != unreachable) seen[v] = true;
    }
  }
  return components;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == unreachable; });
}

/// All-pairs BFS eccentricity maximum; nullopt when disconnected.
inline std::optional<int> diameter(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d == unreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Triangle count t(G): each triangle is seen once per edge-apex pair, so divide by 3.
inline std::size_t triangle_count(const Graph& g) {
  std::size_t closed = 0;
  for (const auto& [u, v] : g.edges()) {
    auto ru = g.row(u);
    auto rv = g.row(v);
    for (std::size_t k = 0; k < ru.size(); ++k) {
      closed += static_cast<std::size_t>(std::popcount(ru[k] & rv[k]));
    }
  }
  return closed / 3;
}

struct StructureReport {
  bool connected = false;
  std::optional<int> diameter;  // nullopt stands for an infinite diameter
  std::size_t triangles = 0;
  std::vector<std::size_t> degree_sequence;  // non-increasing
  std::size_t max_degree = 0;
  std::size_t second_max_degree = 0;
};

inline StructureReport structure_report(const Graph& g) {
  StructureReport r;
  r.diameter = diameter(g);
  r.connected = r.diameter.has_value();
  r.triangles = triangle_count(g);
  r.degree_sequence = g.degrees();
  std::sort(r.degree_sequence.begin(), r.degree_sequence.end(), std::greater<>{});
  if (!r.degree_sequence.empty()) r.max_degree = r.degree_sequence[0];
  if (r.degree_sequence.size() > 1) r.second_max_degree = r.degree_sequence[1];
  return r;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

}  // namespace bhix
