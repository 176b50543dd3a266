// SPDX-License-Identifier: Apache-2.0
#pragma once

// The bhix command line: compute, verify-bounds, scan and product.
// Standard output carries data only; diagnostics go to the error stream and
// pass/fail is reported through the exit code.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bhix/bhix.hpp"

namespace bhix::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_disconnected = 3;
inline constexpr int exit_violation = 4;
inline constexpr int exit_too_large = 5;

inline constexpr double default_tolerance = 1e-8;

inline int exit_code(errc c) {
  switch (c) {
    case errc::disconnected:
    case errc::disconnected_result: return exit_disconnected;
    case errc::too_large: return exit_too_large;
    case errc::no_convergence: return exit_failure;
    default: return exit_parse;
  }
}

/// 12 significant digits, independent of the C locale.
inline json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[40];
  auto end = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12).ptr;
  double rounded = 0.0;
  std::from_chars(buf, end, rounded);
  return rounded;
}

inline json number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

inline json integer(const mpz_class& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

/// Relative tolerance, overridable through BHIX_TOLERANCE.
inline double tolerance_from_env() {
  const char* raw = std::getenv("BHIX_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return default_tolerance;
  const std::string_view text(raw);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw error(errc::invalid_input, "BHIX_TOLERANCE must be a positive number, got '" + std::string(text) + "'");
  }
  return v;
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// ---------------------------------------------------------------- input

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::invalid_input, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// The single graph6 line of a file; blank lines are ignored.
inline Graph read_graph6_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line, found;
  int lines = 0;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (++lines > 1) throw error(errc::invalid_input, path + ": expected exactly one graph6 line");
    found = line;
  }
  if (lines == 0) throw error(errc::malformed_header, path + ": no graph6 line");
  return parse_graph6(found);
}

/// graph6 when the file ends in .g6, edge list otherwise.
inline Graph read_graph_file(const std::string& path) {
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) return read_graph6_file(path);
  return parse_edge_list(read_file(path));
}

struct GraphSource {
  std::string graph6;
  std::string g6_file;
  std::string edges;
  std::string family;
  int n = 0, a = 0, b = 0, s = 0, t = 0, q = 0;
  bool has_n = false, has_q = false;
  std::optional<FamilySpec> spec;

  void add_options(CLI::App& app) {
    app.add_option("--graph6", graph6, "graph6 string");
    app.add_option("--g6-file", g6_file, "file holding one graph6 line");
    app.add_option("--edges", edges, "edge-list file: 'n m' then one 'u v' per line");
    app.add_option("--family", family, "star, path, complete, cycle, double_star or firefly");
    app.add_option("--n", n, "family order");
    app.add_option("--a", a, "double star: pendants on the first center");
    app.add_option("--b", b, "double star: pendants on the second center");
    app.add_option("--s", s, "firefly: triangles");
    app.add_option("--t", t, "firefly: pendant paths of length 2");
    app.add_option("--q", q, "firefly: pendant edges (default n - 2s - 2t - 1)");
  }

  int given() const {
    return !graph6.empty() + !g6_file.empty() + !edges.empty() + !family.empty();
  }

  Graph load() {
    if (given() != 1) {
      throw error(errc::invalid_input, "give exactly one of --graph6, --g6-file, --edges, --family");
    }
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!g6_file.empty()) return read_graph6_file(g6_file);
    if (!edges.empty()) return parse_edge_list(read_file(edges));
    spec = family_spec();
    return generate(*spec);
  }

  FamilySpec family_spec() const {
    std::string name = family;
    std::replace(name.begin(), name.end(), '-', '_');
    if (name == "star") return FamilySpec::star(n);
    if (name == "path") return FamilySpec::path(n);
    if (name == "complete") return FamilySpec::complete(n);
    if (name == "cycle") return FamilySpec::cycle(n);
    if (name == "double_star") {
      FamilySpec f = FamilySpec::double_star(a, b);
      if (has_n && n != f.n) throw error(errc::invalid_params, "double star order must be a + b + 2");
      return f;
    }
    if (name == "firefly") {
      if (!has_q && !has_n) throw error(errc::invalid_params, "firefly needs --q or --n");
      const int pendants = has_q ? q : n - 2 * s - 2 * t - 1;
      FamilySpec f = FamilySpec::firefly(s, t, pendants);
      if (has_n && n != f.n) throw error(errc::invalid_params, "firefly order must be 2s + 2t + q + 1");
      return f;
    }
    throw error(errc::unsupported_family, "unknown family '" + family + "'");
  }
};

/// Comma-separated exponents; each is a decimal or a fraction a/b.
inline std::vector<double> parse_p_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  auto parse = [](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw error(errc::invalid_input, "bad exponent '" + std::string(s) + "'");
    }
    return v;
  };
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto slash = item.find('/');
    double p = slash == std::string::npos
                   ? parse(item)
                   : parse(std::string_view(item).substr(0, slash)) / parse(std::string_view(item).substr(slash + 1));
    if (!(p > 0.0) || !std::isfinite(p)) throw error(errc::non_positive_p, "exponent must be positive: " + item);
    out.push_back(p);
  }
  if (out.empty()) throw error(errc::invalid_input, "empty exponent list");
  return out;
}

// ---------------------------------------------------------------- output

// nlohmann's float printer does not always pick the shortest digits, so
// floats go through std::to_chars, which does.
inline void write_json(std::ostream& out, const json& v, int indent, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (v.type()) {
    case json::value_t::number_float: {
      char buf[40];
      const double x = v.get<double>();
      auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
      std::string_view text(buf, static_cast<std::size_t>(end - buf));
      out << text;
      if (text.find_first_of(".e") == std::string_view::npos) out << ".0";
      return;
    }
    case json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      std::size_t i = 0;
      for (const auto& [k, item] : v.items()) {
        out << pad << json(k).dump() << ": ";
        write_json(out, item, indent, depth + 1);
        out << (++i < v.size() ? ",\n" : "\n");
      }
      out << close << '}';
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << pad;
        write_json(out, v[i], indent, depth + 1);
        out << (i + 1 < v.size() ? ",\n" : "\n");
      }
      out << close << ']';
      return;
    }
    default:
      out << v.dump();
  }
}

inline std::string scalar_text(const json& v) {
  std::ostringstream s;
  write_json(s, v, 0);
  return s.str();
}

inline void write_text(std::ostream& out, const json& j) {
  for (const auto& [k, v] : j.items()) {
    out << k << ": " << (v.is_string() ? v.get<std::string>() : scalar_text(v)) << '\n';
  }
}

inline std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + '"';
  }
  return scalar_text(v);
}

inline void write_csv_row(std::ostream& out, const std::vector<json>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
  out << '\n';
}

inline void write_csv_header(std::ostream& out, const std::vector<std::string>& names) {
  std::vector<json> cells(names.begin(), names.end());
  write_csv_row(out, cells);
}

inline void emit(std::ostream& out, const std::string& format, const json& j) {
  if (format == "text") write_text(out, j);
  else {
    write_json(out, j, 2);
    out << '\n';
  }
}

inline json graph_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["graph6"] = g.order() <= 62 ? json(to_graph6(g)) : json(nullptr);
  return j;
}

// ---------------------------------------------------------------- compute

inline const std::vector<std::string>& index_names() {
  static const std::vector<std::string> names{
      "bh_spectral", "bh_distance", "kirchhoff", "wiener", "zagreb_m1", "forgotten_f", "triangles",
      "tau", "spectral_ratio", "sbi", "gbi", "xi_b", "xi_b_star"};
  return names;
}

inline bool needs_connected(const std::string& key) {
  return key != "zagreb_m1" && key != "forgotten_f" && key != "triangles" && key != "tau";
}

inline json index_json(const Graph& g, const IndexReport& r, const std::optional<FamilySpec>& spec) {
  json j = graph_json(g);
  j["connected"] = r.connected;
  if (spec) j["family"] = describe(*spec);
  j["bh_spectral"] = number(r.bh_spectral);
  j["bh_distance"] = number(r.bh_distance);
  j["kirchhoff"] = number(r.kirchhoff);
  j["wiener"] = r.wiener ? json(*r.wiener) : json(nullptr);
  j["zagreb_m1"] = r.zagreb_m1;
  j["forgotten_f"] = r.forgotten_f;
  j["triangles"] = r.triangles;
  j["tau"] = integer(r.tau);
  j["spectral_ratio"] = number(r.spectral_ratio);
  j["sbi"] = number(r.sbi);
  j["gbi"] = number(r.gbi);
  j["xi_b"] = number(r.xi_b);
  j["xi_b_star"] = number(r.xi_b_star);
  if (spec && (spec->kind == FamilyKind::star || spec->kind == FamilyKind::double_star ||
               spec->kind == FamilyKind::firefly)) {
    const ClosedForm cf = closed_form_bh(*spec);
    j["bh_closed_form"] = number(cf.value.get_d());
    j["bh_closed_form_exact"] = cf.value.get_str();
    j["closed_form_case"] = cf.case_label;
  }
  return j;
}

struct ComputeConfig {
  GraphSource source;
  std::string format = "json";
  std::vector<std::string> indices;
};

inline int cmd_compute(ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto& k : cfg.indices) {
    if (std::find(index_names().begin(), index_names().end(), k) == index_names().end()) {
      throw error(errc::invalid_input, "unknown index '" + k + "'");
    }
  }
  const Graph g = cfg.source.load();
  const IndexReport r = index_report(g);
  const auto& wanted = cfg.indices.empty() ? index_names() : cfg.indices;
  if (!r.connected && !cfg.indices.empty()) {
    for (const auto& k : wanted) {
      if (needs_connected(k)) {
        err << "bhix: Disconnected: " << k << " needs a connected graph\n";
        return exit_disconnected;
      }
    }
  }
  json full = index_json(g, r, cfg.source.spec);
  json j;
  for (const auto& [k, v] : full.items()) {
    const bool is_index = std::find(index_names().begin(), index_names().end(), k) != index_names().end();
    if (is_index && std::find(wanted.begin(), wanted.end(), k) == wanted.end()) continue;
    if (is_index && v.is_null()) continue;  // not defined for this input
    j[k] = v;
  }
  if (!r.connected) err << "bhix: graph is disconnected; connectivity-dependent indices omitted\n";
  if (cfg.format == "csv") {
    std::vector<std::string> keys;
    std::vector<json> cells;
    for (const auto& [k, v] : j.items()) {
      keys.push_back(k);
      cells.push_back(v);
    }
    write_csv_header(out, keys);
    write_csv_row(out, cells);
  } else {
    emit(out, cfg.format, j);
  }
  return exit_ok;
}

// ---------------------------------------------------------------- verify-bounds

inline json bound_json(const BoundReport& b) {
  json j;
  j["id"] = std::string(to_string(b.id));
  if (b.p) j["p"] = number(*b.p);
  j["lhs"] = number(b.lhs);
  j["rhs"] = number(b.rhs);
  j["holds"] = b.holds;
  j["slack"] = number(b.slack);
  j["equality"] = b.equality;
  if (b.rhs_published) j["rhs_published"] = number(*b.rhs_published);
  if (b.rhs_alternate) j["rhs_alternate"] = number(*b.rhs_alternate);
  j["notes"] = b.notes;
  return j;
}

struct VerifyConfig {
  GraphSource source;
  std::string format = "json";
  std::string p_list = "1/3,2/3,1,2";
  bool exhaustive = false;
  int n_min = 0;
  unsigned workers = 1;
};

inline int verify_single(VerifyConfig& cfg, std::span<const double> grid, std::ostream& out) {
  const Graph g = cfg.source.load();
  if (!is_connected(g)) throw error(errc::disconnected, "bounds need a connected graph");
  const auto reports = check_all(g, grid);
  const auto violations = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.holds; });
  if (cfg.format == "csv") {
    write_csv_header(out, {"id", "p", "lhs", "rhs", "holds", "slack", "equality"});
    for (const auto& b : reports) {
      write_csv_row(out, {std::string(to_string(b.id)), b.p ? number(*b.p) : json(nullptr), number(b.lhs),
                          number(b.rhs), b.holds, number(b.slack), b.equality});
    }
  } else {
    json j = graph_json(g);
    if (cfg.source.spec) j["family"] = describe(*cfg.source.spec);
    j["bounds"] = json::array();
    for (const auto& b : reports) j["bounds"].push_back(bound_json(b));
    j["violations"] = violations;
    j["sound"] = violations == 0;
    if (cfg.format == "text") {
      write_text(out, graph_json(g));
      for (const auto& b : reports) {
        out << bound_label(b) << ": " << (b.holds ? "holds" : "VIOLATED") << (b.equality ? " (equality)" : "")
            << " lhs=" << scalar_text(number(b.lhs)) << " rhs=" << scalar_text(number(b.rhs)) << '\n';
        for (const auto& note : b.notes) out << "  note: " << note << '\n';
      }
    } else {
      write_json(out, j, 2);
      out << '\n';
    }
  }
  return violations == 0 ? exit_ok : exit_violation;
}

inline json sweep_json(const BoundSweepReport& r) {
  json j;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["masks"] = r.masks;
  j["graphs"] = r.graphs;
  j["sound"] = r.sound();
  j["violation_count"] = r.violation_count;
  json tallies = json::object();
  for (const auto& [label, t] : r.tallies) {
    tallies[label] = {{"checked", t.checked}, {"holds", t.holds}, {"equality", t.equality}};
  }
  j["tallies"] = tallies;
  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"graph6", v.graph6}, {"bound", v.bound}, {"lhs", number(v.lhs)},
                               {"rhs", number(v.rhs)}, {"slack", number(v.slack)}});
  }
  j["complete_graphs"] = r.complete_graphs;
  j["two_valued_graphs"] = r.two_valued_graphs;
  j["complete_equality_mismatches"] = r.complete_equality_mismatches;
  j["two_valued_mismatches"] = r.two_valued_mismatches;
  j["ratio_form_mismatches"] = r.ratio_form_mismatches;
  j["trace_identity_failures"] = r.trace_identity_failures;
  j["published_cubic_strict"] = r.published_cubic_strict;
  j["alternate_deviation_violations"] = r.alternate_deviation_violations;
  return j;
}

inline int verify_exhaustive(VerifyConfig& cfg, std::span<const double> grid, std::ostream& out) {
  if (cfg.source.given() != 0) throw error(errc::invalid_input, "--exhaustive takes no graph input");
  if (!cfg.source.has_n) throw error(errc::invalid_input, "--exhaustive needs --n");
  const int n_max = cfg.source.n;
  if (n_max > static_cast<int>(max_mask_order)) {
    throw error(errc::too_large, "exhaustive sweep limited to n <= " + std::to_string(max_mask_order));
  }
  const int n_min = cfg.n_min > 0 ? cfg.n_min : n_max;
  BoundRowCallback on_row;
  bool header = false;
  if (cfg.format == "csv") {
    on_row = [&](const Graph& g, const std::vector<BoundReport>& reports) {
      if (!header) {
        std::vector<std::string> names{"graph6", "n", "m"};
        for (const auto& b : reports) {
          const auto label = bound_label(b);
          names.push_back(label + ":holds");
          names.push_back(label + ":slack");
          names.push_back(label + ":equality");
        }
        write_csv_header(out, names);
        header = true;
      }
      std::vector<json> cells{to_graph6(g), g.order(), g.size()};
      for (const auto& b : reports) {
        cells.emplace_back(b.holds);
        cells.push_back(number(b.slack));
        cells.emplace_back(b.equality);
      }
      write_csv_row(out, cells);
    };
  }
  const auto report = bound_sweep(n_min, n_max, grid, cfg.workers, on_row);
  if (cfg.format != "csv") emit(out, cfg.format, sweep_json(report));
  return report.sound() ? exit_ok : exit_violation;
}

inline int cmd_verify_bounds(VerifyConfig& cfg, std::ostream& out) {
  const auto grid = parse_p_grid(cfg.p_list);
  return cfg.exhaustive ? verify_exhaustive(cfg, grid, out) : verify_single(cfg, grid, out);
}

// ---------------------------------------------------------------- scan

inline json witness_json(const TreeWitness& w) {
  return {{"levels", w.levels}, {"graph6", w.graph6}, {"value", number(w.value)}};
}

inline json scan_json(const ScanReport& r) {
  json j;
  j["n"] = r.n;
  j["tree_count"] = r.tree_count;
  j["min_value"] = number(r.min_value);
  j["min_witness"] = witness_json(r.min_witness);
  j["max_value"] = number(r.max_value);
  j["max_witness"] = witness_json(r.max_witness);
  j["min_runner_up"] = number(r.min_runner_up);
  j["max_runner_up"] = number(r.max_runner_up);
  j["min_is_star"] = r.min_is_star;
  j["max_is_path"] = r.max_is_path;
  j["ambiguous_witness"] = r.ambiguous_witness;
  j["conjecture_verified"] = r.conjecture_verified;
  j["counterexamples"] = json::array();
  for (const auto& w : r.counterexamples) j["counterexamples"].push_back(witness_json(w));
  j["interlacing_violations"] = r.interlacing_violations;
  j["small_count_violations"] = r.small_count_violations;
  return j;
}

inline json threshold_json(const DiameterThresholdReport& r) {
  json j;
  j["n"] = r.n;
  j["threshold"] = number(r.threshold);
  j["tree_count"] = r.tree_count;
  j["hypothesis_count"] = r.hypothesis_count;
  j["star_value"] = number(r.star_value);
  j["min_value_meeting_hypothesis"] = number(r.min_value_meeting_hypothesis);
  j["verified"] = r.verified();
  j["violations"] = json::array();
  for (const auto& w : r.violations) j["violations"].push_back(witness_json(w));
  return j;
}

inline json diameter2_json(const Diameter2Report& r) {
  json j;
  j["n"] = r.n;
  j["masks"] = r.masks;
  j["connected"] = r.connected;
  j["diameter2_count"] = r.diameter2_count;
  j["star_count"] = r.star_count;
  j["star_value"] = number(r.star_value);
  j["max_non_star_value"] = number(r.max_non_star_value);
  j["max_non_star_witness"] = r.max_non_star_witness;
  j["gap"] = number(r.gap);
  j["min_lambda2"] = number(r.min_lambda2);
  j["lambda2_violations"] = r.lambda2_violations;
  j["verified"] = r.verified();
  j["violations"] = r.violations;
  return j;
}

inline json families_json(const FamilyReport& r) {
  json j;
  j["n_max"] = r.n_max;
  j["double_stars"] = r.double_stars;
  j["fireflies"] = r.fireflies;
  j["max_rel_error"] = number(r.max_rel_error);
  j["verified"] = r.verified();
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"family", f.family}, {"what", f.what}});
  return j;
}

struct ScanConfig {
  int n = 0;
  int n_max = 0;
  unsigned workers = 1;
  std::string format = "json";
};

inline int cmd_scan_trees(const ScanConfig& cfg, std::ostream& out) {
  const auto r = conjecture_scan(cfg.n);
  emit(out, cfg.format, scan_json(r));
  const bool ok = r.conjecture_verified && r.interlacing_violations == 0 && r.small_count_violations == 0;
  return ok ? exit_ok : exit_violation;
}

inline int cmd_scan_t52(const ScanConfig& cfg, std::ostream& out) {
  const auto r = diameter_threshold_scan(cfg.n);
  emit(out, cfg.format, threshold_json(r));
  return r.verified() ? exit_ok : exit_violation;
}

inline int cmd_scan_diameter2(const ScanConfig& cfg, std::ostream& out) {
  const auto r = diameter2_scan(cfg.n, cfg.workers);
  emit(out, cfg.format, diameter2_json(r));
  return r.verified() ? exit_ok : exit_violation;
}

inline int cmd_scan_families(const ScanConfig& cfg, double tol, std::ostream& out) {
  if (cfg.n_max > family_verify_max) {
    throw error(errc::too_large, "family scan limited to n <= " + std::to_string(family_verify_max));
  }
  const auto r = verify_family_factorizations(cfg.n_max, tol);
  emit(out, cfg.format, families_json(r));
  return r.verified() ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------- product

struct ProductConfig {
  std::string op;
  std::string a;
  std::string b;
  std::string format = "json";
};

inline OpKind parse_op(const std::string& name) {
  if (name == "complement") return OpKind::complement;
  if (name == "join") return OpKind::join;
  if (name == "cartesian") return OpKind::cartesian;
  if (name == "lex" || name == "lexicographic") return OpKind::lexicographic;
  throw error(errc::invalid_input, "unknown operation '" + name + "'");
}

inline int cmd_product(const ProductConfig& cfg, double tol, std::ostream& out) {
  const OpKind op = parse_op(cfg.op);
  const Graph g1 = read_graph_file(cfg.a);
  std::optional<Graph> g2;
  if (op == OpKind::complement) {
    if (!cfg.b.empty()) throw error(errc::invalid_input, "complement takes one graph");
  } else {
    if (cfg.b.empty()) throw error(errc::invalid_input, std::string(to_string(op)) + " needs --b");
    g2 = read_graph_file(cfg.b);
  }
  const Graph* second = g2 ? &*g2 : nullptr;
  const Graph result = apply(op, g1, second);
  if (!is_connected(result)) throw error(errc::disconnected_result, std::string(to_string(op)) + " result is disconnected");

  const auto predicted_spec = predicted_spectrum(op, g1, second);
  const auto direct_spec = spectrum(result).values;
  double max_diff = 0.0;
  for (std::size_t i = 0; i < direct_spec.size(); ++i) {
    max_diff = std::max(max_diff, std::abs(direct_spec[i] - predicted_spec[i]));
  }
  const double predicted = predicted_bh(op, g1, second);
  const double direct = biharmonic_from_spectrum(spectrum(result));

  json j;
  j["op"] = std::string(to_string(op));
  const json head = graph_json(result);
  for (const auto& [k, v] : head.items()) j[k] = v;
  j["predicted_bh"] = number(predicted);
  j["direct_bh"] = number(direct);
  j["agree"] = close_rel(predicted, direct, tol);
  j["max_eigenvalue_error"] = number(max_diff);
  j["spectra_agree"] = max_diff <= tol * std::max(1.0, direct_spec.back());
  emit(out, cfg.format, j);
  return exit_ok;
}

// ---------------------------------------------------------------- entry

/// Runs one command line (without the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biharmonic index of graphs: indices, bounds, extremal scans and graph operations", "bhix"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "text"};

  ComputeConfig compute;
  auto* c = app.add_subcommand("compute", "index report for one graph");
  compute.source.add_options(*c);
  c->add_option("--format", compute.format)->check(CLI::IsMember(formats));
  c->add_option("--index", compute.indices, "only these indices")->delimiter(',');

  VerifyConfig verify;
  verify.workers = default_workers();
  auto* v = app.add_subcommand("verify-bounds", "check every bound on one graph or an exhaustive sweep");
  verify.source.add_options(*v);
  v->add_option("--format", verify.format)->check(CLI::IsMember(formats));
  v->add_option("--p", verify.p_list, "power-sum exponents, e.g. 1/3,1,2");
  v->add_flag("--exhaustive", verify.exhaustive, "every connected graph of order --n");
  v->add_option("--n-min", verify.n_min, "with --exhaustive: sweep orders n-min..n");
  v->add_option("--workers", verify.workers)->check(CLI::PositiveNumber);

  ScanConfig scan;
  scan.workers = default_workers();
  auto* s = app.add_subcommand("scan", "exhaustive extremal scans");
  s->require_subcommand(1);
  const std::vector<std::string> scan_formats{"json", "text"};
  auto* trees = s->add_subcommand("trees", "star minimizes and path maximizes BH over trees");
  trees->add_option("--n", scan.n)->required();
  auto* t52 = s->add_subcommand("t52", "trees of large diameter beat the star");
  t52->add_option("--n", scan.n)->required();
  auto* d2 = s->add_subcommand("diameter2", "the star maximizes BH among diameter-2 graphs");
  d2->add_option("--n", scan.n)->required();
  d2->add_option("--workers", scan.workers)->check(CLI::PositiveNumber);
  auto* fam = s->add_subcommand("families", "double star and firefly closed forms");
  fam->add_option("--n-max", scan.n_max)->required();
  for (auto* sub : {trees, t52, d2, fam}) sub->add_option("--format", scan.format)->check(CLI::IsMember(scan_formats));

  ProductConfig product;
  auto* p = app.add_subcommand("product", "complement, join, Cartesian or lexicographic product");
  p->add_option("--op", product.op)->required()->check(CLI::IsMember({"complement", "join", "cartesian", "lex"}));
  p->add_option("--a", product.a, "first graph (.g6 or edge list)")->required();
  p->add_option("--b", product.b, "second graph");
  p->add_option("--format", product.format)->check(CLI::IsMember(scan_formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (c->parsed()) {
      compute.source.has_n = c->count("--n") > 0;
      compute.source.has_q = c->count("--q") > 0;
      return cmd_compute(compute, out, err);
    }
    if (v->parsed()) {
      verify.source.has_n = v->count("--n") > 0;
      verify.source.has_q = v->count("--q") > 0;
      return cmd_verify_bounds(verify, out);
    }
    if (s->parsed()) {
      if (trees->parsed()) return cmd_scan_trees(scan, out);
      if (t52->parsed()) return cmd_scan_t52(scan, out);
      if (d2->parsed()) return cmd_scan_diameter2(scan, out);
      return cmd_scan_families(scan, tolerance_from_env(), out);
    }
    return cmd_product(product, tolerance_from_env(), out);
  } catch (const error& e) {
    err << "bhix: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "bhix: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace bhix::cli
