// SPDX-License-Identifier: Apache-2.0
#pragma once

// graph6 (short form, n < 63) and the plain edge-list text format.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bhix/error.hpp"
#include "bhix/graph.hpp"

namespace bhix {

inline constexpr std::size_t graph6_max_order = 62;

/// Decodes one graph6 line. A trailing '\n' (or "\r\n") is tolerated.
inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw error(errc::malformed_header, "empty graph6 input");

  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw error(errc::malformed_header, "long-form graph6 (n >= 63) not supported");
  if (head < 63 || head > 126) throw error(errc::malformed_header, "bad graph6 order byte");

  const std::size_t n = static_cast<std::size_t>(head - 63);
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() < nbytes) throw error(errc::truncated_bits, "graph6 body too short");
  if (body.size() > nbytes) throw error(errc::trailing_garbage, "graph6 body too long");

  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t index) {
    const int c = static_cast<unsigned char>(body[index / 6]) - 63;
    return (c >> (5 - index % 6)) & 1;
  };
  for (char c : body) {
    const int value = static_cast<unsigned char>(c);
    if (value < 63 || value > 126) throw error(errc::truncated_bits, "graph6 byte out of range");
  }
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (bit(k)) edges.push_back({i, j});
    }
  }
  for (; k < nbytes * 6; ++k) {
    if (bit(k)) throw error(errc::trailing_garbage, "non-zero graph6 padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order) throw error(errc::too_large, "graph6 short form needs n < 63");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Edge-list text: first line "n m", then m lines "u v".
inline Graph parse_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw error(errc::invalid_input, "edge list must start with \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw error(errc::invalid_input, "expected " + std::to_string(m) + " edges, got " +
                                           std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw error(errc::out_of_range_vertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) throw error(errc::invalid_input, "unexpected trailing token \"" + rest + "\"");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace bhix
