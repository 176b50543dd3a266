// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bhix/error.hpp"
#include "bhix/graph.hpp"

namespace bhix {

enum class FamilyKind { star, path, complete, cycle, double_star, firefly };

constexpr std::string_view to_string(FamilyKind k) noexcept {
  switch (k) {
    case FamilyKind::star: return "star";
    case FamilyKind::path: return "path";
    case FamilyKind::complete: return "complete";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::double_star: return "double_star";
    case FamilyKind::firefly: return "firefly";
  }
  return "?";
}

/// A parametric graph family member. Star/Path/Complete/Cycle use `n`;
/// DoubleStar uses (a, b); Firefly uses (s, t, q) with q pendant edges.
struct FamilySpec {
  FamilyKind kind = FamilyKind::star;
  int n = 0;
  int a = 0, b = 0;
  int s = 0, t = 0, q = 0;

  static FamilySpec star(int n) { return {FamilyKind::star, n}; }
  static FamilySpec path(int n) { return {FamilyKind::path, n}; }
  static FamilySpec complete(int n) { return {FamilyKind::complete, n}; }
  static FamilySpec cycle(int n) { return {FamilyKind::cycle, n}; }
  static FamilySpec double_star(int a, int b) {
    return {FamilyKind::double_star, a + b + 2, a, b};
  }
  static FamilySpec firefly(int s, int t, int q) {
    return {FamilyKind::firefly, 2 * s + 2 * t + q + 1, 0, 0, s, t, q};
  }

  /// Number of vertices of the generated graph.
  int order() const noexcept { return n; }

  void validate() const {
    auto fail = [](const std::string& why) { throw error(errc::invalid_params, why); };
    switch (kind) {
      case FamilyKind::star:
      case FamilyKind::path:
      case FamilyKind::complete:
        if (n < 1) fail(std::string(to_string(kind)) + " needs n >= 1");
        break;
      case FamilyKind::cycle:
        if (n < 3) fail("cycle needs n >= 3");
        break;
      case FamilyKind::double_star:
        if (a < 1 || b < 1) fail("double star needs a >= 1 and b >= 1");
        if (n != a + b + 2) fail("double star order must be a + b + 2");
        break;
      case FamilyKind::firefly:
        if (s < 0 || t < 0 || q < 0) fail("firefly needs s, t, q >= 0");
        if (n != 2 * s + 2 * t + q + 1) fail("firefly order must be 2s + 2t + q + 1");
        break;
    }
    if (n > static_cast<int>(max_order)) throw error(errc::too_large, "family order too large");
  }

  /// Closed-form edge count.
  std::size_t expected_size() const noexcept {
    const auto un = static_cast<std::size_t>(n);
    switch (kind) {
      case FamilyKind::star:
      case FamilyKind::path: return un - 1;
      case FamilyKind::complete: return un * (un - 1) / 2;
      case FamilyKind::cycle: return un;
      case FamilyKind::double_star: return static_cast<std::size_t>(a + b + 1);
      case FamilyKind::firefly: return static_cast<std::size_t>(3 * s + 2 * t + q);
    }
    return 0;
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string describe(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::double_star:
      return "double_star(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
    case FamilyKind::firefly:
      return "firefly(" + std::to_string(f.s) + "," + std::to_string(f.t) + "," +
             std::to_string(f.q) + ")";
    default:
      return std::string(to_string(f.kind)) + "(" + std::to_string(f.n) + ")";
  }
}

/// Builds the family member. Star: center 0. DoubleStar: centers 0 and 1,
/// pendants 2..a+1 on 0 and the rest on 1. Firefly: common vertex 0, then the
/// triangles, then the length-2 paths (0-x-y), then the pendant edges.
inline Graph generate(const FamilySpec& f) {
  f.validate();
  const auto n = static_cast<Vertex>(f.n);
  std::vector<Edge> e;
  switch (f.kind) {
    case FamilyKind::star:
      for (Vertex v = 1; v < n; ++v) e.push_back({0, v});
      break;
    case FamilyKind::path:
      for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v});
      break;
    case FamilyKind::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
      break;
    case FamilyKind::cycle:
      for (Vertex v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
      break;
    case FamilyKind::double_star: {
      e.push_back({0, 1});
      Vertex next = 2;
      for (int i = 0; i < f.a; ++i) e.push_back({0, next++});
      for (int i = 0; i < f.b; ++i) e.push_back({1, next++});
      break;
    }
    case FamilyKind::firefly: {
      Vertex next = 1;
      for (int i = 0; i < f.s; ++i, next += 2) {
        e.push_back({0, next});
        e.push_back({0, next + 1});
        e.push_back({next, next + 1});
      }
      for (int i = 0; i < f.t; ++i, next += 2) {
        e.push_back({0, next});
        e.push_back({next, next + 1});
      }
      for (int i = 0; i < f.q; ++i) e.push_back({0, next++});
      break;
    }
  }
  return Graph::from_edge_list(n, e);
}

}  // namespace bhix
