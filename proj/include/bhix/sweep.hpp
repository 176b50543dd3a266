// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "bhix/error.hpp"
#include "bhix/graph.hpp"

namespace bhix {

inline constexpr std::size_t max_mask_order = 8;

/// Number of vertex pairs, i.e. bits in an adjacency mask.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// Bit k of `mask` is the k-th pair in graph6 column order (0,1), (0,2), (1,2), (0,3), ...
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) e.push_back({i, j});
  return Graph::from_edge_list(n, e);
}

inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1U : hw;
}

/// Splits [0, count) into contiguous shards, runs `body(begin, end)` on each,
/// and folds the partial results left to right in shard order, so the output
/// does not depend on the worker count.
template <class Partial, class Body, class Merge>
Partial parallel_reduce(std::uint64_t count, unsigned workers, Body&& body, Merge&& merge) {
  workers = std::max(1U, workers);
  const std::uint64_t shards = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1));
  if (shards == 1) return body(std::uint64_t{0}, count);

  std::vector<Partial> partial(shards);
  std::vector<std::exception_ptr> failure(shards);
  std::vector<std::thread> pool;
  pool.reserve(shards);
  for (std::uint64_t s = 0; s < shards; ++s) {
    const std::uint64_t begin = count * s / shards;
    const std::uint64_t end = count * (s + 1) / shards;
    pool.emplace_back([&, s, begin, end] {
      try {
        partial[s] = body(begin, end);
      } catch (...) {
        failure[s] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failure)
    if (f) std::rethrow_exception(f);
  Partial out = std::move(partial[0]);
  for (std::uint64_t s = 1; s < shards; ++s) merge(out, std::move(partial[s]));
  return out;
}

}  // namespace bhix
