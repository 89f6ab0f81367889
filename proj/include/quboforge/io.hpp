#pragma once

#include <cmath>
#include <iostream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quboforge/graph.hpp"
#include "quboforge/normalize.hpp"
#include "quboforge/numfmt.hpp"
#include "quboforge/qubo.hpp"
#include "quboforge/solve.hpp"
#include "quboforge/tsplib.hpp"

namespace qf {

using nlohmann::json;

/// qbsolv-style .qubo export: optional `c` comments, then
/// `p qubo 0 <maxNodes> <nNodes> <nCouplers>`, then `i i w` diagonal lines and
/// `i j w` coupler lines with i < j (the canonical upper fold of the matrix).
/// Indices are 0-based; a nonzero offset rides along as a `c offset` comment
/// that read_qubo() understands.
inline void write_qubo(const QuboMatrix& m, std::ostream& os, const std::string& comment = {}) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) os << "c " << line << '\n';
  }
  if (m.offset() != 0.0) os << "c offset " << format_number(m.offset()) << '\n';
  QuboMatrix u = m.canonical_upper();
  auto entries = u.sorted_entries();
  long long diag = 0, couplers = 0;
  for (const auto& [i, j, v] : entries) ++(i == j ? diag : couplers);
  os << "p qubo 0 " << u.dim() << ' ' << diag << ' ' << couplers << '\n';
  for (const auto& [i, j, v] : entries)
    if (i == j) os << i << ' ' << i << ' ' << format_number(v) << '\n';
  for (const auto& [i, j, v] : entries)
    if (i != j) os << i << ' ' << j << ' ' << format_number(v) << '\n';
}

/// Reads the format write_qubo() emits (and plain qbsolv files). The result
/// is upper-triangular with 0-based indices; vertex count is inferred when
/// the dimension is a perfect square.
inline QuboMatrix read_qubo(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  double offset = 0.0;
  int max_nodes = -1;
  long long want_diag = -1, want_couplers = -1;
  long long diag = 0, couplers = 0;
  QuboMatrix m = QuboMatrix::raw(1);
  bool have_p = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t[0] == 'c') {
      std::istringstream is(t);
      std::string c, kw;
      if (is >> c >> kw && kw == "offset") {
        double v;
        if (is >> v) offset = v;
      }
      continue;
    }
    if (t[0] == 'p') {
      std::istringstream is(t);
      std::string p, quboword;
      int topology;
      if (!(is >> p >> quboword >> topology >> max_nodes >> want_diag >> want_couplers) ||
          quboword != "qubo" || max_nodes <= 0)
        throw parse_error("malformed qubo program line (line " + std::to_string(line_no) + ")");
      (void)topology;
      int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(max_nodes))));
      m = QuboMatrix::raw(max_nodes, side * side == max_nodes ? side : 0, offset);
      have_p = true;
      continue;
    }
    if (!have_p) throw parse_error("qubo entry before program line (line " + std::to_string(line_no) + ")");
    std::istringstream is(t);
    int i, j;
    double v;
    if (!(is >> i >> j >> v))
      throw parse_error("malformed qubo entry (line " + std::to_string(line_no) + ")");
    if (i < 0 || i >= max_nodes || j < 0 || j >= max_nodes)
      throw parse_error("qubo index out of range (line " + std::to_string(line_no) + ")");
    if (j < i) std::swap(i, j);
    m.add(i, j, v);
    ++(i == j ? diag : couplers);
  }
  if (!have_p) throw parse_error("missing qubo program line");
  m.set_offset(offset);  // a c-offset comment may follow the p line
  if (want_diag != diag || want_couplers != couplers)
    throw parse_error("qubo entry counts do not match program line: declared " +
                      std::to_string(want_diag) + "+" + std::to_string(want_couplers) + ", found " +
                      std::to_string(diag) + "+" + std::to_string(couplers));
  return m;
}

/// {n, dim, offset, entries: [[i, j, w], ...]} sorted by (i, j); indices are
/// 0-based. Normalization stats, when supplied, ride along as m_min / m_max.
inline json qubo_to_json(const QuboMatrix& m, const NormalizationStats* stats = nullptr) {
  json entries = json::array();
  for (const auto& [i, j, v] : m.sorted_entries()) entries.push_back({i, j, v});
  json out{{"n", m.n()}, {"dim", m.dim()}, {"offset", m.offset()}, {"entries", entries}};
  if (stats) {
    out["m_min"] = stats->m_min;
    out["m_max"] = stats->m_max;
  }
  return out;
}

inline QuboMatrix qubo_from_json(const json& j) {
  QuboMatrix m = QuboMatrix::raw(j.at("dim").get<int>(), j.value("n", 0),
                                 j.value("offset", 0.0));
  for (const auto& e : j.at("entries"))
    m.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
  return m;
}

/// Report boundary: vertices and positions are 1-based here.
inline json report_to_json(const SolveReport& r) {
  json vertex = json::array(), position = json::array(), edge = json::array();
  for (int v : r.violations.vertex_violations) vertex.push_back(v + 1);
  for (int p : r.violations.position_violations) position.push_back(p + 1);
  for (auto [u, v] : r.violations.edge_violations) edge.push_back({u + 1, v + 1});
  return json{{"instance", r.instance},
              {"problem", r.problem},
              {"variables", r.variables},
              {"best_energy", r.best_energy},
              {"offset", r.offset},
              {"cost", r.cost},
              {"cost_basis", r.cost_invalid_basis ? "invalid-basis" : "valid"},
              {"valid", r.valid},
              {"success_rate", r.success_rate},
              {"wall_time_ms", r.wall_time_ms},
              {"schedule",
               {{"t_start", r.schedule.t_start},
                {"t_end", r.schedule.t_end},
                {"sweeps", r.schedule.sweeps},
                {"restarts", r.schedule.restarts}}},
              {"seed", r.schedule.seed},
              {"rng", r.rng},
              {"bits", to_bit_string(r.best_bits)},
              {"violations",
               {{"vertex", vertex}, {"position", position}, {"edge", edge}}}};
}

/// Fixed experiment CSV schema, stable across versions.
inline std::string csv_header() {
  return "instance,n,m,k,problem,normalize,seed,best_energy,cost,valid,success_rate,wall_time_ms";
}

inline std::string csv_row(const SolveReport& r, const EdgeCensus& ec, bool normalize) {
  std::ostringstream os;
  os << r.instance << ',' << ec.n << ',' << ec.m << ',' << ec.k << ',' << r.problem << ','
     << (normalize ? "true" : "false") << ',' << r.schedule.seed << ','
     << format_number(r.best_energy) << ',' << format_number(r.cost) << ','
     << (r.valid ? "true" : "false") << ',' << format_number(r.success_rate) << ','
     << format_number(r.wall_time_ms);
  return os.str();
}

}  // namespace qf
