#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qf {

/// Weighted graph over vertices 0..n-1. A weight of 0 means the edge is
/// absent; self-loops are never present. Undirected graphs keep the weight
/// matrix symmetric.
struct Graph {
  int n = 0;
  bool directed = false;
  std::string name;
  std::vector<double> weights;  // row-major n*n, diagonal always 0

  Graph() = default;

  explicit Graph(int n_, bool directed_ = false, std::string name_ = {})
      : n(n_), directed(directed_), name(std::move(name_)) {
    if (n_ <= 0) throw std::invalid_argument("graph: vertex count must be positive");
    weights.assign(static_cast<std::size_t>(n_) * n_, 0.0);
  }

  double weight(int u, int v) const { return weights[idx(u, v)]; }

  bool has_edge(int u, int v) const { return u != v && weights[idx(u, v)] > 0.0; }

  void set_edge(int u, int v, double w) {
    if (u == v) throw std::invalid_argument("graph: self-loops are not representable");
    if (w < 0.0) throw std::invalid_argument("graph: negative edge weight");
    weights[idx(u, v)] = w;
    if (!directed) weights[idx(v, u)] = w;
  }

 private:
  std::size_t idx(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("graph: vertex index out of range");
    return static_cast<std::size_t>(u) * n + v;
  }
};

/// Directed edge counts. Present and missing arcs (u,v), u != v, are counted
/// separately in each direction, so m + k = n(n-1) always holds and both m
/// and k are even for undirected graphs.
struct EdgeCensus {
  int n = 0;
  long long m = 0;  // present arcs
  long long k = 0;  // missing arcs
};

inline EdgeCensus edge_census(const Graph& g) {
  EdgeCensus c{g.n, 0, 0};
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v) ++(g.weight(u, v) > 0.0 ? c.m : c.k);
  return c;
}

}  // namespace qf
