// SPDX-License-Identifier: Apache-2.0
#pragma once

// Free (unlabeled) trees by canonical level sequences, after the
// Wright-Richmond-Odlyzko-McKay successor rule.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bhix/error.hpp"
#include "bhix/graph.hpp"

namespace bhix {

inline constexpr int max_tree_order = 18;

/// Depth of each vertex in preorder, root at depth 0.
using LevelSequence = std::vector<int>;

inline Graph tree_from_levels(const LevelSequence& levels) {
  std::vector<Edge> e;
  std::vector<Vertex> last_at_depth;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto depth = static_cast<std::size_t>(levels[i]);
    if (depth > 0) e.push_back({last_at_depth[depth - 1], static_cast<Vertex>(i)});
    last_at_depth.resize(depth + 1);
    last_at_depth[depth] = static_cast<Vertex>(i);
  }
  return Graph::from_edge_list(levels.size(), e);
}

inline std::string to_string(const LevelSequence& levels) {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels[i]);
  }
  return out;
}

namespace detail {

/// Successor of a rooted level sequence; p defaults to the last entry above depth 1.
inline std::optional<LevelSequence> next_rooted_tree(const LevelSequence& pred,
                                                     std::optional<std::size_t> from = {}) {
  std::size_t p = 0;
  if (from) {
    p = *from;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  LevelSequence out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

/// Splits at the second child of the root: the first subtree (re-rooted) and
/// the root together with everything after it.
inline std::pair<LevelSequence, LevelSequence> split_tree(const LevelSequence& layout) {
  std::size_t m = layout.size();
  bool first = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (first) {
        m = i;
        break;
      }
      first = true;
    }
  }
  LevelSequence left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  LevelSequence rest{0};
  rest.insert(rest.end(), layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end());
  return {left, rest};
}

/// Returns the candidate itself when it is the canonical (centroid-rooted)
/// form of a free tree, otherwise the next candidate to try.
inline std::optional<LevelSequence> next_tree(const LevelSequence& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (candidate[p] > 2 && next) {
    auto [new_left, new_rest] = split_tree(*next);
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const auto len = static_cast<std::size_t>(new_left_height + 1);
    for (std::size_t k = 0; k < len; ++k) (*next)[next->size() - len + k] = static_cast<int>(k + 1);
  }
  return next;
}

}  // namespace detail

/// Visits every free tree on n vertices exactly once.
///
///   FreeTreeIterator it(n);
///   while (it.next()) use(it.levels());
class FreeTreeIterator {
 public:
  explicit FreeTreeIterator(int n) : n_(n) {
    if (n < 1) throw error(errc::invalid_params, "tree order must be >= 1");
    if (n > max_tree_order) {
      throw error(errc::too_large, "tree enumeration limited to n <= " + std::to_string(max_tree_order));
    }
    if (n >= 2) {
      for (int i = 0; i <= n / 2; ++i) pending_.push_back(i);
      for (int i = 1; i < (n + 1) / 2; ++i) pending_.push_back(i);
    }
  }

  /// Advances to the next tree; false once all trees have been produced.
  bool next() {
    if (n_ == 1) {
      if (done_) return false;
      current_ = {0};
      done_ = true;
      return true;
    }
    if (done_) return false;
    if (started_) {
      auto succ = detail::next_rooted_tree(current_);
      if (!succ) {
        done_ = true;
        return false;
      }
      pending_ = std::move(*succ);
    }
    started_ = true;
    auto tree = detail::next_tree(pending_);
    if (!tree) {
      done_ = true;
      return false;
    }
    current_ = std::move(*tree);
    return true;
  }

  const LevelSequence& levels() const noexcept { return current_; }
  Graph graph() const { return tree_from_levels(current_); }
  int order() const noexcept { return n_; }

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  LevelSequence pending_;
  LevelSequence current_;
};

inline FreeTreeIterator enumerate_trees(int n) { return FreeTreeIterator(n); }

inline std::size_t count_free_trees(int n) {
  FreeTreeIterator it(n);
  std::size_t count = 0;
  while (it.next()) ++count;
  return count;
}

}  // namespace bhix
