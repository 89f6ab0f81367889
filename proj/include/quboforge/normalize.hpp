#pragma once

#include <stdexcept>
#include <utility>

#include "quboforge/qubo.hpp"

namespace qf {

/// Extremes of the weight-term matrix, taken over all dim^2 cells. Structural
/// zeros participate, so any matrix that is not fully populated has m_min 0.
struct NormalizationStats {
  double m_min = 0.0;
  double m_max = 0.0;
};

/// Min-max normalization of a weight-term matrix: every cell is mapped to
/// (value - m_min) / (m_max - m_min), so outputs span [0, 1] and absent edges
/// stay at 0 whenever m_min is 0. Throws std::domain_error when all cells are
/// equal, since the formula divides by m_max - m_min.
inline std::pair<QuboMatrix, NormalizationStats> min_max_normalize(const QuboMatrix& mw) {
  long long dim2 = static_cast<long long>(mw.dim()) * mw.dim();
  bool has_zero_cell = mw.nonzero_cells() < dim2;
  double lo = has_zero_cell ? 0.0 : mw.at(0, 0);
  double hi = has_zero_cell ? 0.0 : mw.at(0, 0);
  mw.for_each_nonzero([&](int, int, double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  });
  if (lo == hi)
    throw std::domain_error("min-max normalization undefined: all matrix cells are equal");

  NormalizationStats stats{lo, hi};
  double span = hi - lo;
  QuboMatrix out = QuboMatrix::raw(mw.dim(), mw.n(), mw.offset());
  if (lo == 0.0) {
    mw.for_each_nonzero([&](int i, int j, double v) { out.set(i, j, v / span); });
  } else if (mw.dense()) {
    for (int i = 0; i < mw.dim(); ++i)
      for (int j = 0; j < mw.dim(); ++j) out.set(i, j, (mw.at(i, j) - lo) / span);
  } else {
    // A sparse matrix with a nonzero minimum would normalize to a dense one.
    throw std::domain_error("min-max normalization of a sparse matrix requires m_min = 0");
  }
  return {std::move(out), stats};
}

}  // namespace qf
