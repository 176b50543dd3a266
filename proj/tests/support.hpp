// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <vector>

#include "bhix/bhix.hpp"
#include "oracles.hpp"

namespace test {

inline oracle::EdgeList edges_of(const bhix::Graph& g) {
  oracle::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return out;
}

inline bhix::Graph graph_of(int n, const oracle::EdgeList& e) {
  std::vector<bhix::Edge> edges;
  for (auto [u, v] : e) edges.push_back({static_cast<bhix::Vertex>(u), static_cast<bhix::Vertex>(v)});
  return bhix::Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

inline int order(const bhix::Graph& g) { return static_cast<int>(g.order()); }

inline bhix::Graph random_connected(std::mt19937_64& rng, int n, double p) {
  return graph_of(n, oracle::random_connected(rng, n, p));
}

inline bhix::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  return graph_of(n, oracle::random_graph(rng, n, p));
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline void expect_code(bhix::errc code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << bhix::to_string(code);
  } catch (const bhix::error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

inline bhix::Graph star(int n) { return bhix::generate(bhix::FamilySpec::star(n)); }
inline bhix::Graph path(int n) { return bhix::generate(bhix::FamilySpec::path(n)); }
inline bhix::Graph complete(int n) { return bhix::generate(bhix::FamilySpec::complete(n)); }
inline bhix::Graph cycle(int n) { return bhix::generate(bhix::FamilySpec::cycle(n)); }
inline bhix::Graph empty(int n) { return bhix::Graph(static_cast<std::size_t>(n)); }

}  // namespace test
