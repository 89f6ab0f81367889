#pragma once

#include <cctype>
#include <cmath>
#include <iostream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quboforge/graph.hpp"
#include "quboforge/numfmt.hpp"

namespace qf {

/// Raised on malformed or unsupported benchmark files; the message names the
/// offending line where one exists.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline bool looks_numeric(const std::string& t) {
  if (t.empty()) return false;
  char c = t[0];
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
}

inline double parse_double(const std::string& t, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected a number, got '" + t + "' (line " + std::to_string(line_no) + ")");
  }
}

inline long parse_int(const std::string& t, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    long v = std::stol(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected an integer, got '" + t + "' (line " + std::to_string(line_no) + ")");
  }
}

struct FileView {
  std::vector<std::string> lines;
  std::size_t i = 0;  // next line to consume

  explicit FileView(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }

  bool done() const { return i >= lines.size(); }
  std::size_t line_no() const { return i + 1; }  // 1-based for messages
};

// Splits "KEY : value" / "KEY: value" / "KEY value" / "KEY".
inline std::pair<std::string, std::string> split_keyword(const std::string& line) {
  auto colon = line.find(':');
  if (colon != std::string::npos)
    return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
  auto ws = line.find_first_of(" \t");
  if (ws != std::string::npos)
    return {trim(line.substr(0, ws)), trim(line.substr(ws + 1))};
  return {trim(line), std::string{}};
}

inline void warn(std::vector<std::string>* sink, const std::string& msg) {
  if (sink)
    sink->push_back(msg);
  else
    std::cerr << "warning: " << msg << '\n';
}

// Collects `count` numbers starting at the current line.
inline std::vector<double> read_numbers(FileView& f, std::size_t count, const char* what) {
  std::vector<double> out;
  out.reserve(count);
  while (out.size() < count) {
    if (f.done())
      throw parse_error(std::string(what) + " ended early: expected " + std::to_string(count) +
                        " values, got " + std::to_string(out.size()));
    std::string line = trim(f.lines[f.i]);
    if (line.empty()) {
      ++f.i;
      continue;
    }
    for (const auto& t : split_ws(line)) {
      if (out.size() == count)
        throw parse_error(std::string(what) + ": trailing data (line " + std::to_string(f.line_no()) + ")");
      if (!looks_numeric(t))
        throw parse_error(std::string(what) + " ended early: expected " + std::to_string(count) +
                          " values, got " + std::to_string(out.size()) + " (line " +
                          std::to_string(f.line_no()) + ")");
      out.push_back(parse_double(t, f.line_no()));
    }
    ++f.i;
  }
  return out;
}

// Consumes purely numeric lines (used for sections we skip).
inline void skip_numeric_lines(FileView& f) {
  while (!f.done()) {
    std::string line = trim(f.lines[f.i]);
    if (!line.empty() && !looks_numeric(split_ws(line)[0])) return;
    ++f.i;
  }
}

struct GeoPoint {
  double lat, lon;
};

inline double geo_radians(double x) {
  constexpr double kPi = 3.141592;
  double deg = std::trunc(x);  // TSPLIB truncates toward zero
  double min = x - deg;
  return kPi * (deg + 5.0 * min / 3.0) / 180.0;
}

inline int geo_distance(const GeoPoint& a, const GeoPoint& b) {
  constexpr double kEarthRadius = 6378.388;
  double q1 = std::cos(a.lon - b.lon);
  double q2 = std::cos(a.lat - b.lat);
  double q3 = std::cos(a.lat + b.lat);
  return static_cast<int>(kEarthRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
}

inline int euc2d_distance(double xi, double yi, double xj, double yj) {
  double dx = xi - xj, dy = yi - yj;
  return static_cast<int>(std::sqrt(dx * dx + dy * dy) + 0.5);
}

struct RawInstance {
  std::string name;
  std::string type;
  int dimension = -1;
  std::string edge_weight_type;
  std::string edge_weight_format;
  std::string edge_data_format;
  std::vector<std::pair<double, double>> coords;  // by 0-based vertex
  std::vector<bool> coord_seen;
  std::vector<double> matrix_values;
  bool have_matrix = false;
  std::vector<std::pair<int, int>> edge_list;  // 1-based as written
};

inline std::size_t explicit_value_count(const std::string& fmt, int n, std::size_t line_no) {
  std::size_t nn = static_cast<std::size_t>(n);
  if (fmt == "FULL_MATRIX") return nn * nn;
  if (fmt == "UPPER_ROW") return nn * (nn - 1) / 2;
  if (fmt == "UPPER_DIAG_ROW" || fmt == "LOWER_DIAG_ROW") return nn * (nn + 1) / 2;
  throw parse_error("unsupported EDGE_WEIGHT_FORMAT '" + fmt + "' (line " + std::to_string(line_no) + ")");
}

inline RawInstance read_raw(std::istream& in, std::vector<std::string>* warnings) {
  FileView f(in);
  RawInstance r;
  bool saw_eof_kw = false;

  while (!f.done()) {
    std::size_t line_no = f.line_no();
    std::string line = trim(f.lines[f.i]);
    ++f.i;
    if (line.empty()) continue;
    if (saw_eof_kw)
      throw parse_error("data after EOF keyword (line " + std::to_string(line_no) + ")");

    auto [key, value] = split_keyword(line);
    if (key == "EOF") {
      saw_eof_kw = true;
    } else if (key == "NAME") {
      r.name = value;
    } else if (key == "COMMENT") {
      // informational only
    } else if (key == "TYPE") {
      r.type = value;
    } else if (key == "DIMENSION") {
      r.dimension = static_cast<int>(parse_int(value, line_no));
      if (r.dimension <= 0)
        throw parse_error("DIMENSION must be positive (line " + std::to_string(line_no) + ")");
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EXPLICIT" && value != "EUC_2D" && value != "GEO")
        throw parse_error("unsupported EDGE_WEIGHT_TYPE '" + value + "' (line " +
                          std::to_string(line_no) + ")");
      r.edge_weight_type = value;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      if (value != "FULL_MATRIX" && value != "UPPER_ROW" && value != "UPPER_DIAG_ROW" &&
          value != "LOWER_DIAG_ROW" && value != "FUNCTION")
        throw parse_error("unsupported EDGE_WEIGHT_FORMAT '" + value + "' (line " +
                          std::to_string(line_no) + ")");
      r.edge_weight_format = value;
    } else if (key == "EDGE_DATA_FORMAT") {
      if (value != "EDGE_LIST")
        throw parse_error("unsupported EDGE_DATA_FORMAT '" + value + "' (line " +
                          std::to_string(line_no) + ")");
      r.edge_data_format = value;
    } else if (key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE") {
      // affects only sections we either read fully or skip
    } else if (key == "CAPACITY") {
      warn(warnings, "ignoring CAPACITY (line " + std::to_string(line_no) + ")");
    } else if (key == "NODE_COORD_SECTION") {
      if (r.dimension <= 0)
        throw parse_error("NODE_COORD_SECTION before DIMENSION (line " + std::to_string(line_no) + ")");
      r.coords.assign(r.dimension, {0.0, 0.0});
      r.coord_seen.assign(r.dimension, false);
      for (int c = 0; c < r.dimension; ++c) {
        if (f.done()) throw parse_error("NODE_COORD_SECTION ended early");
        std::size_t ln = f.line_no();
        auto toks = split_ws(trim(f.lines[f.i]));
        ++f.i;
        if (toks.size() != 3)
          throw parse_error("expected 'index x y' in NODE_COORD_SECTION (line " +
                            std::to_string(ln) + ")");
        long v = parse_int(toks[0], ln);
        if (v < 1 || v > r.dimension)
          throw parse_error("node index " + std::to_string(v) + " out of range 1.." +
                            std::to_string(r.dimension) + " (line " + std::to_string(ln) + ")");
        if (r.coord_seen[v - 1])
          throw parse_error("duplicate coordinates for node " + std::to_string(v) + " (line " +
                            std::to_string(ln) + ")");
        r.coord_seen[v - 1] = true;
        r.coords[v - 1] = {parse_double(toks[1], ln), parse_double(toks[2], ln)};
      }
    } else if (key == "EDGE_WEIGHT_SECTION") {
      if (r.dimension <= 0)
        throw parse_error("EDGE_WEIGHT_SECTION before DIMENSION (line " + std::to_string(line_no) + ")");
      if (r.edge_weight_format.empty())
        throw parse_error("EDGE_WEIGHT_SECTION without EDGE_WEIGHT_FORMAT (line " +
                          std::to_string(line_no) + ")");
      std::size_t count = explicit_value_count(r.edge_weight_format, r.dimension, line_no);
      r.matrix_values = read_numbers(f, count, "EDGE_WEIGHT_SECTION");
      r.have_matrix = true;
    } else if (key == "EDGE_DATA_SECTION") {
      if (r.dimension <= 0)
        throw parse_error("EDGE_DATA_SECTION before DIMENSION (line " + std::to_string(line_no) + ")");
      bool terminated = false;
      std::vector<long> flat;
      while (!f.done() && !terminated) {
        std::size_t ln = f.line_no();
        std::string dl = trim(f.lines[f.i]);
        ++f.i;
        if (dl.empty()) continue;
        for (const auto& t : split_ws(dl)) {
          if (terminated)
            throw parse_error("data after -1 terminator (line " + std::to_string(ln) + ")");
          long v = parse_int(t, ln);
          if (v == -1) {
            terminated = true;
            continue;
          }
          if (v < 1 || v > r.dimension)
            throw parse_error("vertex " + std::to_string(v) + " out of range 1.." +
                              std::to_string(r.dimension) + " in EDGE_DATA_SECTION (line " +
                              std::to_string(ln) + ")");
          flat.push_back(v);
        }
      }
      if (!terminated) throw parse_error("EDGE_DATA_SECTION missing -1 terminator");
      if (flat.size() % 2 != 0) throw parse_error("EDGE_DATA_SECTION has an unpaired vertex");
      for (std::size_t t = 0; t < flat.size(); t += 2)
        r.edge_list.emplace_back(static_cast<int>(flat[t]), static_cast<int>(flat[t + 1]));
    } else if (key == "DISPLAY_DATA_SECTION" || key == "FIXED_EDGES" || key == "FIXED_EDGES_SECTION") {
      warn(warnings, "skipping unsupported section " + key + " (line " + std::to_string(line_no) + ")");
      skip_numeric_lines(f);
    } else {
      throw parse_error("unknown keyword '" + key + "' (line " + std::to_string(line_no) + ")");
    }
  }
  return r;
}

inline Graph explicit_graph(const RawInstance& r) {
  int n = r.dimension;
  Graph g(n, false, r.name);
  const auto& v = r.matrix_values;
  auto put = [&](int i, int j, double w) {
    if (w < 0.0) throw parse_error("negative edge weight in EDGE_WEIGHT_SECTION");
    if (i != j) g.set_edge(i, j, w);  // diagonal entries (often 0 or a sentinel) are dropped
  };
  std::size_t t = 0;
  if (r.edge_weight_format == "FULL_MATRIX") {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++t)
        if (i < j) {
          if (v[static_cast<std::size_t>(i) * n + j] != v[static_cast<std::size_t>(j) * n + i])
            throw parse_error("asymmetric FULL_MATRIX: entries (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") and transpose differ");
          put(i, j, v[t]);
        }
  } else if (r.edge_weight_format == "UPPER_ROW") {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) put(i, j, v[t++]);
  } else if (r.edge_weight_format == "UPPER_DIAG_ROW") {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) put(i, j, v[t++]);
  } else {  // LOWER_DIAG_ROW
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) put(i, j, v[t++]);
  }
  return g;
}

inline Graph coordinate_graph(const RawInstance& r) {
  int n = r.dimension;
  Graph g(n, false, r.name);
  std::vector<GeoPoint> pts;
  if (r.edge_weight_type == "GEO") {
    pts.reserve(n);
    for (const auto& [x, y] : r.coords) pts.push_back({geo_radians(x), geo_radians(y)});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = r.edge_weight_type == "GEO"
                  ? geo_distance(pts[i], pts[j])
                  : euc2d_distance(r.coords[i].first, r.coords[i].second, r.coords[j].first,
                                   r.coords[j].second);
      g.set_edge(i, j, static_cast<double>(d));
    }
  return g;
}

}  // namespace detail

/// Parses a TSPLIB .tsp instance. Supports EXPLICIT (FULL_MATRIX, UPPER_ROW,
/// UPPER_DIAG_ROW, LOWER_DIAG_ROW), EUC_2D, and GEO edge weights; the result
/// is an undirected graph with integer TSPLIB distances for coordinate types.
inline Graph parse_tsplib(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  detail::RawInstance r = detail::read_raw(in, warnings);
  if (!r.type.empty() && r.type != "TSP")
    throw parse_error("expected TYPE TSP, got '" + r.type + "'");
  if (r.dimension <= 0) throw parse_error("missing DIMENSION");
  if (r.edge_weight_type.empty()) throw parse_error("missing EDGE_WEIGHT_TYPE");
  if (r.edge_weight_type == "EXPLICIT") {
    if (!r.have_matrix) throw parse_error("EXPLICIT instance without EDGE_WEIGHT_SECTION");
    return detail::explicit_graph(r);
  }
  if (static_cast<int>(r.coords.size()) != r.dimension)
    throw parse_error(r.edge_weight_type + " instance without NODE_COORD_SECTION");
  return detail::coordinate_graph(r);
}

/// Parses a TSPLIB/FHCP-style .hcp instance (EDGE_DATA_FORMAT EDGE_LIST) into
/// an undirected unit-weight graph. Duplicate edges are accepted idempotently.
inline Graph parse_hcp(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  detail::RawInstance r = detail::read_raw(in, warnings);
  if (!r.type.empty() && r.type != "HCP")
    throw parse_error("expected TYPE HCP, got '" + r.type + "'");
  if (r.dimension <= 0) throw parse_error("missing DIMENSION");
  if (r.edge_data_format.empty() && !r.edge_list.empty())
    detail::warn(warnings, "EDGE_DATA_FORMAT missing, assuming EDGE_LIST");
  Graph g(r.dimension, false, r.name);
  for (auto [u, v] : r.edge_list) {
    if (u == v) throw parse_error("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") in EDGE_DATA_SECTION");
    g.set_edge(u - 1, v - 1, 1.0);
  }
  return g;
}

/// Emits an EXPLICIT FULL_MATRIX .tsp file that parse_tsplib round-trips.
inline void write_tsplib_full_matrix(const Graph& g, std::ostream& os) {
  os << "NAME: " << (g.name.empty() ? "unnamed" : g.name) << '\n'
     << "TYPE: TSP\n"
     << "DIMENSION: " << g.n << '\n'
     << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
     << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
     << "EDGE_WEIGHT_SECTION\n";
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) os << (j ? " " : "") << format_number(g.weight(i, j));
    os << '\n';
  }
  os << "EOF\n";
}

}  // namespace qf
