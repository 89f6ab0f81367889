#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quboforge/graph.hpp"
#include "quboforge/qubo.hpp"

namespace qf {

/// Cyclic vertex order (0-based), canonicalized to start at vertex 0; cost is
/// the weight sum around the cycle including the closing edge.
struct Tour {
  std::vector<int> order;
  double cost = 0.0;
};

/// Every integrity violation of a bit assignment: vertices used other than
/// once, positions filled other than once, and consecutive pairs that use an
/// absent edge. All entries 0-based; formatters add 1 at report boundaries.
struct ValidityReport {
  std::vector<int> vertex_violations;
  std::vector<int> position_violations;
  std::vector<std::pair<int, int>> edge_violations;
  bool valid = true;
};

/// decode() outcome. Invalid assignments are data, not errors: the report
/// carries every violation and `cost` falls back to the weight sum over the
/// existing consecutive edges only (flagged by cost_invalid_basis), so that
/// success-rate statistics can aggregate failed runs.
struct Decoded {
  bool valid = false;
  Tour tour;  // only meaningful when valid
  ValidityReport report;
  double cost = 0.0;
  bool cost_invalid_basis = false;
};

/// Rotates the cycle to start at vertex 0; undirected tours additionally pick
/// the direction with the smaller second vertex, so all 2n encodings of one
/// undirected cycle map to a single representative.
inline std::vector<int> canonical_order(std::vector<int> order, bool directed) {
  int n = static_cast<int>(order.size());
  auto zero = std::find(order.begin(), order.end(), 0);
  if (zero == order.end()) throw std::invalid_argument("tour: vertex 0 missing from order");
  std::rotate(order.begin(), zero, order.end());
  if (!directed && n > 2 && order[n - 1] < order[1]) {
    std::reverse(order.begin() + 1, order.end());
  }
  return order;
}

inline void check_permutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("tour: order length does not match vertex count");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("tour: order is not a permutation");
    seen[v] = 1;
  }
}

/// Bit assignment with exactly n ones: bit (v, p) set when order[p] = v.
inline BinaryAssignment encode_tour(const std::vector<int>& order, int n) {
  check_permutation(order, n);
  BinaryAssignment x(static_cast<std::size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p) x[static_cast<std::size_t>(order[p]) * n + p] = 1;
  return x;
}

/// Cyclic weight sum; throws when a consecutive edge is absent.
inline double tour_cost(const std::vector<int>& order, const Graph& g) {
  check_permutation(order, g.n);
  double c = 0.0;
  for (int p = 0; p < g.n; ++p) {
    int u = order[p], v = order[(p + 1) % g.n];
    if (!g.has_edge(u, v))
      throw std::domain_error("tour: edge (" + std::to_string(u + 1) + "," +
                              std::to_string(v + 1) + ") is absent");
    c += g.weight(u, v);
  }
  return c;
}

/// Decodes a length-n^2 assignment against a graph. Valid permutations with
/// existing edges yield a canonical Tour; everything else yields a full
/// violation report plus the invalid-basis cost.
inline Decoded decode(const BinaryAssignment& x, const Graph& g) {
  int n = g.n;
  if (static_cast<int>(x.size()) != n * n)
    throw std::invalid_argument("decode: assignment length must be n^2");

  Decoded d;
  std::vector<int> vertex_count(n, 0), position_count(n, 0);
  std::vector<std::vector<int>> at_position(n);
  for (int v = 0; v < n; ++v)
    for (int p = 0; p < n; ++p)
      if (x[static_cast<std::size_t>(v) * n + p]) {
        ++vertex_count[v];
        ++position_count[p];
        at_position[p].push_back(v);
      }

  for (int v = 0; v < n; ++v)
    if (vertex_count[v] != 1) d.report.vertex_violations.push_back(v);
  for (int p = 0; p < n; ++p)
    if (position_count[p] != 1) d.report.position_violations.push_back(p);

  double edge_sum = 0.0;
  for (int p = 0; p < n; ++p)
    for (int u : at_position[p])
      for (int v : at_position[(p + 1) % n]) {
        if (g.has_edge(u, v))
          edge_sum += g.weight(u, v);
        else
          d.report.edge_violations.emplace_back(u, v);
      }
  std::sort(d.report.edge_violations.begin(), d.report.edge_violations.end());
  d.report.edge_violations.erase(
      std::unique(d.report.edge_violations.begin(), d.report.edge_violations.end()),
      d.report.edge_violations.end());

  d.report.valid = d.report.vertex_violations.empty() && d.report.position_violations.empty() &&
                   d.report.edge_violations.empty();
  d.valid = d.report.valid;
  if (d.valid) {
    std::vector<int> order(n);
    for (int p = 0; p < n; ++p) order[p] = at_position[p][0];
    d.tour.order = canonical_order(order, g.directed);
    d.tour.cost = edge_sum;
    d.cost = edge_sum;
    d.cost_invalid_basis = false;
  } else {
    d.cost = edge_sum;
    d.cost_invalid_basis = true;
  }
  return d;
}

/// One line of n^2 '0'/'1' characters, vertex-major then position.
inline std::string to_bit_string(const BinaryAssignment& x) {
  std::string s;
  s.reserve(x.size());
  for (auto b : x) s.push_back(b ? '1' : '0');
  return s;
}

inline BinaryAssignment parse_bit_string(const std::string& s) {
  BinaryAssignment x;
  x.reserve(s.size());
  for (char c : s) {
    if (c == '0' || c == '1')
      x.push_back(c == '1');
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("bit string: unexpected character '") + c + "'");
  }
  return x;
}

}  // namespace qf
