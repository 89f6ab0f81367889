#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace qf {

using BinaryAssignment = std::vector<std::uint8_t>;

/// Matrices up to this dimension are stored densely; larger ones fall back to
/// a coordinate hash map (dim 4096 covers 64-vertex tour instances).
inline constexpr int kDenseDimLimit = 4096;

/// Square QUBO coefficient matrix plus a constant offset term.
///
/// For an n-vertex tour problem the binary variable "vertex v at position p"
/// (both 0-based) lives at index v * n + p, and dim = n * n. The cell layout
/// is kept exactly as constructed: a quadratic term may be split across the
/// (i, j) and (j, i) cells, and energies always sum over every cell. Use
/// canonical_upper() for an upper-triangular view with identical energies.
class QuboMatrix {
 public:
  /// Matrix over the n * n tour variables of an n-vertex instance.
  static QuboMatrix for_tour(int n, double offset = 0.0) {
    if (n <= 0) throw std::invalid_argument("qubo: vertex count must be positive");
    return QuboMatrix(n * n, n, offset);
  }

  /// Matrix with an explicit dimension (imports); n may be 0 when the
  /// variables carry no vertex/position meaning.
  static QuboMatrix raw(int dim, int n = 0, double offset = 0.0) {
    if (dim <= 0) throw std::invalid_argument("qubo: dimension must be positive");
    return QuboMatrix(dim, n, offset);
  }

  int dim() const { return dim_; }
  int n() const { return n_; }
  double offset() const { return offset_; }
  void set_offset(double v) { offset_ = v; }
  bool dense() const { return dense_; }

  double at(int i, int j) const {
    check(i, j);
    if (dense_) return cells_[key(i, j)];
    auto it = map_.find(key(i, j));
    return it == map_.end() ? 0.0 : it->second;
  }

  void set(int i, int j, double w) {
    check(i, j);
    if (dense_)
      cells_[key(i, j)] = w;
    else if (w == 0.0)
      map_.erase(key(i, j));
    else
      map_[key(i, j)] = w;
  }

  void add(int i, int j, double w) {
    check(i, j);
    if (dense_) {
      cells_[key(i, j)] += w;
    } else {
      double& slot = map_[key(i, j)];
      slot += w;
      if (slot == 0.0) map_.erase(key(i, j));
    }
  }

  /// Visits every nonzero cell as f(i, j, value); dense order is row-major,
  /// sparse order unspecified.
  template <class F>
  void for_each_nonzero(F&& f) const {
    if (dense_) {
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
          double v = cells_[key(i, j)];
          if (v != 0.0) f(i, j, v);
        }
    } else {
      for (const auto& [k, v] : map_)
        if (v != 0.0) f(static_cast<int>(k / dim_), static_cast<int>(k % dim_), v);
    }
  }

  std::vector<std::tuple<int, int, double>> sorted_entries() const {
    std::vector<std::tuple<int, int, double>> out;
    for_each_nonzero([&](int i, int j, double v) { out.emplace_back(i, j, v); });
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                return std::tie(std::get<0>(a), std::get<1>(a)) <
                       std::tie(std::get<0>(b), std::get<1>(b));
              });
    return out;
  }

  long long nonzero_cells() const {
    long long c = 0;
    for_each_nonzero([&](int, int, double) { ++c; });
    return c;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for_each_nonzero([&](int, int, double v) { m = std::max(m, std::abs(v)); });
    return m;
  }

  /// x^T M x over every stored cell, optionally plus the constant offset.
  double energy(const BinaryAssignment& x, bool include_offset = true) const {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("qubo: assignment length does not match dimension");
    double e = include_offset ? offset_ : 0.0;
    if (dense_) {
      std::vector<int> on;
      on.reserve(x.size());
      for (int i = 0; i < dim_; ++i)
        if (x[i]) on.push_back(i);
      for (int i : on) {
        const double* row = cells_.data() + static_cast<std::size_t>(i) * dim_;
        for (int j : on) e += row[j];
      }
    } else {
      for (const auto& [k, v] : map_)
        if (x[k / dim_] && x[k % dim_]) e += v;
    }
    return e;
  }

  /// Folds every cell below the diagonal onto its transpose position. Energy
  /// is identical for every assignment; the result has no sub-diagonal cells.
  QuboMatrix canonical_upper() const {
    QuboMatrix r(dim_, n_, offset_);
    for_each_nonzero([&](int i, int j, double v) {
      if (i <= j)
        r.add(i, j, v);
      else
        r.add(j, i, v);
    });
    return r;
  }

 private:
  QuboMatrix(int dim, int n, double offset)
      : n_(n), dim_(dim), offset_(offset), dense_(dim <= kDenseDimLimit) {
    if (dense_) cells_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  }

  void check(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
      throw std::out_of_range("qubo: cell index out of range");
  }
  std::size_t key(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }

  int n_;
  int dim_;
  double offset_;
  bool dense_;
  std::vector<double> cells_;
  std::unordered_map<std::size_t, double> map_;
};

/// Nonzero-cell counts in the as-constructed layout: cells on the diagonal
/// are linear terms, everything else quadratic. A term split across (i, j)
/// and (j, i) counts twice, which is the convention the closed-form count
/// tables assume.
struct ConstraintCensus {
  long long linear = 0;
  long long quadratic = 0;
  long long total = 0;
  bool operator==(const ConstraintCensus&) const = default;
};

inline ConstraintCensus census(const QuboMatrix& m) {
  ConstraintCensus c;
  m.for_each_nonzero([&](int i, int j, double) { ++(i == j ? c.linear : c.quadratic); });
  c.total = c.linear + c.quadratic;
  return c;
}

/// Hamiltonian terms of the tour QUBO, for selecting closed-form counts.
enum class Term {
  vertex_one_hot,    // each vertex in exactly one position
  position_one_hot,  // each position holds exactly one vertex
  missing_edge,      // penalty on consecutive use of an absent arc
  tour_weight,       // weighted cost of consecutive present arcs
  hcp,               // one-hot terms plus missing-edge penalties
  tsp                // hcp plus the weight term
};

/// Closed-form constraint counts for a graph with n vertices, m present and
/// k missing arcs (m + k = n(n-1)). The missing_edge row is the marginal
/// count: the term's within-vertex successor cells coincide with
/// vertex_one_hot cells and are not counted again, so on a complete graph it
/// contributes nothing.
inline ConstraintCensus census_expected(int n, long long m, long long k, Term t,
                                        bool complete = false) {
  if (n <= 0) throw std::invalid_argument("census_expected: n must be positive");
  long long nn = static_cast<long long>(n);
  if (m < 0 || k < 0 || m + k != nn * (nn - 1))
    throw std::invalid_argument("census_expected: m + k must equal n(n-1)");
  if (complete && k != 0)
    throw std::invalid_argument("census_expected: complete graph requires k = 0");
  ConstraintCensus c;
  switch (t) {
    case Term::vertex_one_hot:
    case Term::position_one_hot:
      c.linear = nn * nn;
      c.quadratic = nn * nn * (nn - 1) / 2;
      break;
    case Term::missing_edge:
      c.linear = 0;
      c.quadratic = nn * k;
      break;
    case Term::tour_weight:
      c.linear = 0;
      c.quadratic = nn * m;
      break;
    case Term::hcp:
      c.linear = nn * nn;
      c.quadratic = nn * nn * (nn - 1) + nn * k;
      break;
    case Term::tsp:
      c.linear = nn * nn;
      c.quadratic = nn * nn * (nn - 1) + nn * (m + k);
      break;
  }
  c.total = c.linear + c.quadratic;
  return c;
}

}  // namespace qf
