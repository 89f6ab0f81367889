#pragma once

#include <stdexcept>

#include "quboforge/graph.hpp"
#include "quboforge/normalize.hpp"
#include "quboforge/qubo.hpp"

namespace qf {

/// Penalty multipliers: c1 scales the integrity constraints (must be
/// positive), c2 the tour cost (zero drops the weight term entirely).
/// Defaults match the worked 4-node construction (both 1).
struct PenaltyConfig {
  double c1 = 1.0;
  double c2 = 1.0;
};

namespace detail {

inline void check_penalties(const PenaltyConfig& cfg) {
  if (cfg.c1 <= 0.0) throw std::invalid_argument("penalty constant c1 must be positive");
  if (cfg.c2 < 0.0) throw std::invalid_argument("penalty constant c2 must not be negative");
}

inline void add_scaled(QuboMatrix& dst, const QuboMatrix& src, double factor) {
  src.for_each_nonzero([&](int i, int j, double v) { dst.add(i, j, v * factor); });
}

// Successor cells (p, p+1) within the block starting at (row0, col0), with
// the cyclic wraparound stored at (n-1, 0).
inline void add_cyclic_block(QuboMatrix& m, int row0, int col0, int n, double w) {
  for (int p = 0; p + 1 < n; ++p) m.add(row0 + p, col0 + p + 1, w);
  m.add(row0 + n - 1, col0 + 0, w);
}

// Same successor structure with the wraparound folded to (0, n-1), keeping
// the block upper-triangular; for n = 2 the fold lands on (0, 1) twice.
inline void add_folded_block(QuboMatrix& m, int row0, int col0, int n, double w) {
  for (int p = 0; p + 1 < n; ++p) m.add(row0 + p, col0 + p + 1, w);
  m.add(row0 + 0, col0 + n - 1, w);
}

}  // namespace detail

/// Penalty for a vertex occupying any number of positions other than one:
/// block-diagonal with per-vertex blocks (diagonal -1, strict upper 2) and
/// offset n, so that energy(X) + n = sum_v (1 - sum_p x_{v,p})^2.
inline QuboMatrix build_vertex_term(int n) {
  QuboMatrix m = QuboMatrix::for_tour(n, static_cast<double>(n));
  for (int v = 0; v < n; ++v) {
    int base = v * n;
    for (int p = 0; p < n; ++p) {
      m.set(base + p, base + p, -1.0);
      for (int q = p + 1; q < n; ++q) m.set(base + p, base + q, 2.0);
    }
  }
  return m;
}

/// Penalty for a position holding any number of vertices other than one:
/// diagonal -1 everywhere, 2 at (i, j) whenever i < j and i = j (mod n),
/// offset n, so that energy(X) + n = sum_p (1 - sum_v x_{v,p})^2.
inline QuboMatrix build_position_term(int n) {
  QuboMatrix m = QuboMatrix::for_tour(n, static_cast<double>(n));
  for (int p = 0; p < n; ++p)
    for (int u = 0; u < n; ++u) {
      m.set(u * n + p, u * n + p, -1.0);
      for (int v = u + 1; v < n; ++v) m.set(u * n + p, v * n + p, 2.0);
    }
  return m;
}

/// Penalty for traversing an absent arc between consecutive positions
/// (position n-1 wraps to 0). Every diagonal block is the folded successor
/// matrix (self-loops are always absent); block (u, v) is the cyclic
/// successor matrix when arc (u, v) is missing. An undirected missing pair
/// populates both (u, v) and (v, u); a directed missing arc only (u, v).
inline QuboMatrix build_missing_edge_term(const Graph& g) {
  int n = g.n;
  QuboMatrix m = QuboMatrix::for_tour(n);
  for (int v = 0; v < n; ++v) detail::add_folded_block(m, v * n, v * n, n, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.weight(u, v) == 0.0) detail::add_cyclic_block(m, u * n, v * n, n, 1.0);
  return m;
}

/// Tour cost: block (u, v) is weight(u, v) times the cyclic successor
/// matrix for every present arc, so energy(X) on a valid tour assignment is
/// the tour's weight sum.
inline QuboMatrix build_weight_term(const Graph& g) {
  int n = g.n;
  QuboMatrix m = QuboMatrix::for_tour(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      double w = u == v ? 0.0 : g.weight(u, v);
      if (w > 0.0) detail::add_cyclic_block(m, u * n, v * n, n, w);
    }
  return m;
}

/// Hamiltonian-cycle QUBO: c1 * (vertex + position + missing-edge terms),
/// offset 2 n c1. Ground energy is -2 n c1 exactly when the graph has a
/// Hamiltonian cycle, in which case energy + offset = 0.
inline QuboMatrix build_hcp(const Graph& g, const PenaltyConfig& cfg = {}) {
  detail::check_penalties(cfg);
  int n = g.n;
  QuboMatrix m = QuboMatrix::for_tour(n, 2.0 * n * cfg.c1);
  detail::add_scaled(m, build_vertex_term(n), cfg.c1);
  detail::add_scaled(m, build_position_term(n), cfg.c1);
  detail::add_scaled(m, build_missing_edge_term(g), cfg.c1);
  return m;
}

/// Traveling-salesman QUBO: the HCP matrix plus c2 times the weight term,
/// min-max normalized first when `normalize` is set (the default, since raw
/// benchmark weights overpower unit penalties). Pass `stats` to receive the
/// normalization extremes.
inline QuboMatrix build_tsp(const Graph& g, const PenaltyConfig& cfg = {}, bool normalize = true,
                            NormalizationStats* stats = nullptr) {
  detail::check_penalties(cfg);
  if (cfg.c2 == 0.0) return build_hcp(g, cfg);
  QuboMatrix m = build_hcp(g, cfg);
  QuboMatrix w = build_weight_term(g);
  if (normalize) {
    auto [nw, st] = min_max_normalize(w);
    if (stats) *stats = st;
    detail::add_scaled(m, nw, cfg.c2);
  } else {
    detail::add_scaled(m, w, cfg.c2);
  }
  return m;
}

}  // namespace qf
