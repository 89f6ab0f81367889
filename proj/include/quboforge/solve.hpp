#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quboforge/graph.hpp"
#include "quboforge/qubo.hpp"
#include "quboforge/tour.hpp"

namespace qf {

/// Raised when an exact method would exceed its enumeration limit.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// PRNG identifier reported alongside solver output, so reimplementations can
/// state (not share) their stream.
inline constexpr const char* kRngId = "mt19937_64(splitmix64(seed, restart))";

/// Geometric cooling schedule. t_start 0 means automatic: 10 times the
/// largest absolute coefficient of the matrix being solved.
struct AnnealSchedule {
  double t_start = 0.0;
  double t_end = 0.01;
  int sweeps = 2000;
  int restarts = 20;
  std::uint64_t seed = 42;
};

/// Solver outcome in the shared metrics schema. best_energy is the raw
/// objective X^T M X; the matrix offset is carried alongside so the full
/// Hamiltonian value is best_energy + offset. cost/valid/violations come from
/// decoding best_bits against the instance graph; success_rate is the
/// fraction of restarts whose own best state decoded to a valid tour.
/// wall_time_ms is informational only and excluded from the determinism
/// contract.
struct SolveReport {
  std::string instance;
  std::string problem;
  int variables = 0;
  BinaryAssignment best_bits;
  double best_energy = 0.0;
  double offset = 0.0;
  double cost = 0.0;
  bool cost_invalid_basis = false;
  bool valid = false;
  double success_rate = 0.0;
  double wall_time_ms = 0.0;
  AnnealSchedule schedule;
  std::string rng = kRngId;
  ValidityReport violations;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, int restart) {
  return splitmix64(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1));
}

// Uniform in [0, 1) from the top 53 bits, independent of any standard-library
// distribution implementation.
inline double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Row-compressed symmetrized view: cell (i, j), i != j, contributes
// c_ij + c_ji to the coupling between i and j, so a single-bit flip of i
// changes the energy by (1 - 2 x_i) * (diag_i + sum_j a_ij x_j).
struct CompiledQubo {
  int dim = 0;
  double offset = 0.0;
  std::vector<double> diag;
  std::vector<int> adj_start;  // dim + 1 offsets into neighbors
  std::vector<std::pair<int, double>> neighbors;

  explicit CompiledQubo(const QuboMatrix& m) : dim(m.dim()), offset(m.offset()), diag(m.dim(), 0.0) {
    std::vector<std::vector<std::pair<int, double>>> rows(dim);
    m.for_each_nonzero([&](int i, int j, double v) {
      if (i == j) {
        diag[i] += v;
      } else {
        rows[i].emplace_back(j, v);
        rows[j].emplace_back(i, v);
      }
    });
    adj_start.assign(dim + 1, 0);
    for (int i = 0; i < dim; ++i) {
      auto& r = rows[i];
      std::sort(r.begin(), r.end());
      std::size_t w = 0;
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (w > 0 && r[w - 1].first == r[k].first)
          r[w - 1].second += r[k].second;
        else
          r[w++] = r[k];
      }
      r.resize(w);
      adj_start[i + 1] = adj_start[i] + static_cast<int>(w);
    }
    neighbors.reserve(adj_start[dim]);
    for (auto& r : rows) neighbors.insert(neighbors.end(), r.begin(), r.end());
  }

  // Local fields f_i = diag_i + sum_j a_ij x_j for the given state.
  std::vector<double> fields(const BinaryAssignment& x) const {
    std::vector<double> f(diag);
    for (int i = 0; i < dim; ++i)
      for (int k = adj_start[i]; k < adj_start[i + 1]; ++k)
        if (x[neighbors[k].first]) f[i] += neighbors[k].second;
    return f;
  }

  double energy_no_offset(const BinaryAssignment& x) const {
    double e = 0.0;
    for (int i = 0; i < dim; ++i) {
      if (!x[i]) continue;
      e += diag[i];
      for (int k = adj_start[i]; k < adj_start[i + 1]; ++k) {
        auto [j, a] = neighbors[k];
        if (j > i && x[j]) e += a;
      }
    }
    return e;
  }

  // Flips bit i, updating state, fields, and energy in O(degree).
  void flip(int i, BinaryAssignment& x, std::vector<double>& f, double& e) const {
    double delta = x[i] ? -1.0 : 1.0;
    e += delta * f[i];
    x[i] ^= 1;
    for (int k = adj_start[i]; k < adj_start[i + 1]; ++k)
      f[neighbors[k].first] += delta * neighbors[k].second;
  }
};

}  // namespace detail

inline AnnealSchedule resolve_schedule(const QuboMatrix& m, AnnealSchedule s) {
  if (s.t_start == 0.0) s.t_start = std::max(10.0 * m.max_abs_coeff(), 100.0 * s.t_end);
  if (!(s.t_start > s.t_end) || !(s.t_end > 0.0))
    throw std::invalid_argument("anneal schedule requires t_start > t_end > 0");
  if (s.sweeps < 1 || s.restarts < 1)
    throw std::invalid_argument("anneal schedule requires sweeps >= 1 and restarts >= 1");
  return s;
}

/// Metropolis single-bit-flip annealing with geometric cooling. Restarts are
/// independent substreams merged by lowest energy (ties: lowest restart
/// index), so reports are bit-identical for identical inputs regardless of
/// execution order.
inline SolveReport simulated_anneal(const QuboMatrix& m, const Graph& g, AnnealSchedule s = {}) {
  auto clock_start = std::chrono::steady_clock::now();
  s = resolve_schedule(m, s);
  detail::CompiledQubo q(m);

  SolveReport rep;
  rep.instance = g.name;
  rep.variables = m.dim();
  rep.schedule = s;

  double best_energy = std::numeric_limits<double>::infinity();
  BinaryAssignment best_bits;
  int valid_restarts = 0;
  double cool = s.sweeps > 1 ? std::pow(s.t_end / s.t_start, 1.0 / (s.sweeps - 1)) : 1.0;

  for (int r = 0; r < s.restarts; ++r) {
    std::mt19937_64 rng(detail::substream_seed(s.seed, r));
    BinaryAssignment x(q.dim);
    for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1);
    std::vector<double> f = q.fields(x);
    double e = q.energy_no_offset(x);
    double restart_best = e;
    BinaryAssignment restart_bits = x;

    double t = s.t_start;
    for (int sweep = 0; sweep < s.sweeps; ++sweep, t *= cool) {
      for (int i = 0; i < q.dim; ++i) {
        double de = (x[i] ? -1.0 : 1.0) * f[i];
        if (de <= 0.0 || detail::uniform01(rng) < std::exp(-de / t)) {
          q.flip(i, x, f, e);
          if (e < restart_best) {
            restart_best = e;
            restart_bits = x;
          }
        }
      }
    }

#ifndef NDEBUG
    // Incrementally maintained energy must match full re-evaluation.
    assert(std::abs(e - q.energy_no_offset(x)) <=
           1e-6 * std::max(1.0, std::abs(e)) * (s.sweeps + 1.0));
#endif

    if (decode(restart_bits, g).valid) ++valid_restarts;
    if (restart_best < best_energy) {
      best_energy = restart_best;
      best_bits = std::move(restart_bits);
    }
  }

  rep.best_bits = std::move(best_bits);
  rep.best_energy = m.energy(rep.best_bits, false);
  rep.offset = m.offset();
  rep.success_rate = static_cast<double>(valid_restarts) / s.restarts;
  Decoded d = decode(rep.best_bits, g);
  rep.valid = d.valid;
  rep.cost = d.cost;
  rep.cost_invalid_basis = d.cost_invalid_basis;
  rep.violations = d.report;
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               clock_start)
                         .count();
  return rep;
}

/// Exhaustive ground state of a small QUBO. energy is the raw objective
/// X^T M X; add the matrix offset for the full Hamiltonian value.
struct ExactResult {
  double energy = 0.0;
  long long multiplicity = 0;
  BinaryAssignment witness;
};

/// Scans all 2^dim assignments in Gray-code order with O(degree) incremental
/// energy updates. Refuses dimensions above limit_bits (default 25).
inline ExactResult exact_ground_state(const QuboMatrix& m, int limit_bits = 25) {
  if (m.dim() > limit_bits)
    throw limit_error("exact enumeration refused: dim " + std::to_string(m.dim()) +
                      " exceeds limit " + std::to_string(limit_bits));
  detail::CompiledQubo q(m);
  BinaryAssignment x(q.dim, 0);
  std::vector<double> f(q.diag);
  double e = 0.0;

  double best = e;
  long long count = 1;
  BinaryAssignment witness = x;
  const double eps = 1e-9;

  std::uint64_t total = 1ULL << q.dim;
  for (std::uint64_t k = 1; k < total; ++k) {
    int i = std::countr_zero(k);
    q.flip(i, x, f, e);
    if (e < best - eps) {
      best = e;
      count = 1;
      witness = x;
    } else if (e <= best + eps) {
      ++count;
    }
  }
  return {m.energy(witness, false), count, std::move(witness)};
}

enum class TspMethod { permutation, held_karp };

/// Exact minimum-weight Hamiltonian cycle; infeasible when none exists.
struct TspOracleResult {
  bool feasible = false;
  Tour tour;
};

namespace detail {

inline TspOracleResult oracle_tsp_permutation(const Graph& g) {
  int n = g.n;
  if (n > 12) throw limit_error("permutation oracle refused: n > 12");
  TspOracleResult res;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> rest(n > 1 ? n - 1 : 0);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> order(n);
  order[0] = 0;
  do {
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    double c = 0.0;
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) {
      int u = order[p], v = order[(p + 1) % n];
      if (!g.has_edge(u, v))
        ok = false;
      else
        c += g.weight(u, v);
    }
    if (ok && c < best) {
      best = c;
      res.feasible = true;
      res.tour.order = canonical_order(order, g.directed);
      res.tour.cost = c;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return res;
}

template <class T>
TspOracleResult held_karp_impl(const Graph& g) {
  int n = g.n;
  const T inf = std::numeric_limits<T>::max() / 4;
  auto w = [&](int u, int v) -> T {
    return g.has_edge(u, v) ? static_cast<T>(g.weight(u, v)) : inf;
  };
  if (n == 1) return {};
  int rest = n - 1;  // vertices 1..n-1; tours start and end at 0
  std::size_t masks = std::size_t{1} << rest;
  std::vector<T> dp(masks * rest, inf);
  std::vector<std::uint8_t> parent(masks * rest, 0xff);
  auto at = [&](std::size_t mask, int last) -> T& { return dp[mask * rest + (last - 1)]; };

  for (int v = 1; v < n; ++v)
    if (g.has_edge(0, v)) at(std::size_t{1} << (v - 1), v) = w(0, v);

  for (std::size_t mask = 1; mask < masks; ++mask)
    for (int v = 1; v < n; ++v) {
      if (!(mask >> (v - 1) & 1)) continue;
      T cur = at(mask, v);
      if (cur >= inf) continue;
      for (int u = 1; u < n; ++u) {
        if (mask >> (u - 1) & 1) continue;
        if (!g.has_edge(v, u)) continue;
        std::size_t nm = mask | std::size_t{1} << (u - 1);
        T cand = cur + w(v, u);
        if (cand < at(nm, u)) {
          at(nm, u) = cand;
          parent[nm * rest + (u - 1)] = static_cast<std::uint8_t>(v);
        }
      }
    }

  std::size_t full = masks - 1;
  T best = inf;
  int best_last = -1;
  for (int v = 1; v < n; ++v) {
    if (at(full, v) >= inf || !g.has_edge(v, 0)) continue;
    T cand = at(full, v) + w(v, 0);
    if (cand < best) {
      best = cand;
      best_last = v;
    }
  }
  if (best_last < 0) return {};

  std::vector<int> order;
  std::size_t mask = full;
  for (int v = best_last; v != 0xff && mask;) {
    order.push_back(v);
    int p = parent[mask * rest + (v - 1)];
    mask ^= std::size_t{1} << (v - 1);
    v = p;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());

  TspOracleResult res;
  res.feasible = true;
  res.tour.order = canonical_order(order, g.directed);
  res.tour.cost = tour_cost(res.tour.order, g);
  return res;
}

inline bool integral_weights(const Graph& g) {
  for (double v : g.weights)
    if (v != std::floor(v)) return false;
  return true;
}

}  // namespace detail

/// Exact TSP oracle. The permutation method enumerates (n-1)! orders
/// (n <= 12); held_karp runs the subset dynamic program (n <= 20) in integer
/// arithmetic whenever all weights are integral.
inline TspOracleResult oracle_tsp(const Graph& g, TspMethod method = TspMethod::held_karp) {
  if (method == TspMethod::permutation) return detail::oracle_tsp_permutation(g);
  if (g.n > 20) throw limit_error("held_karp oracle refused: n > 20");
  return detail::integral_weights(g) ? detail::held_karp_impl<long long>(g)
                                     : detail::held_karp_impl<double>(g);
}

/// Hamiltonian-cycle existence by backtracking (n <= 20), with a witness
/// cycle when one exists.
struct HcpOracleResult {
  bool exists = false;
  std::vector<int> witness;
};

inline HcpOracleResult oracle_hcp(const Graph& g) {
  int n = g.n;
  if (n > 20) throw limit_error("hcp oracle refused: n > 20");
  if (n == 1) return {};
  std::vector<std::uint32_t> out(n, 0), in(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) {
        out[u] |= 1u << v;
        in[v] |= 1u << u;
      }
  for (int v = 0; v < n; ++v)
    if (!out[v] || !in[v]) return {};

  std::vector<int> path{0};
  std::uint32_t visited = 1;
  std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;

  auto dfs = [&](auto&& self, int v) -> bool {
    if (visited == all) return (out[v] >> 0) & 1;  // close back to vertex 0
    std::uint32_t cand = out[v] & ~visited;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      // Any unvisited vertex stripped of unvisited in-neighbors (other than
      // through u itself) can never be reached later.
      visited |= 1u << u;
      bool dead = false;
      for (std::uint32_t rem = all & ~visited; rem; rem &= rem - 1) {
        int t = std::countr_zero(rem);
        if (!(in[t] & ~visited & ~(1u << t)) && !((in[t] >> u) & 1)) {
          dead = true;
          break;
        }
      }
      if (!dead) {
        path.push_back(u);
        if (self(self, u)) return true;
        path.pop_back();
      }
      visited &= ~(1u << u);
    }
    return false;
  };

  HcpOracleResult res;
  if (dfs(dfs, 0)) {
    res.exists = true;
    res.witness = canonical_order(path, g.directed);
  }
  return res;
}

}  // namespace qf
