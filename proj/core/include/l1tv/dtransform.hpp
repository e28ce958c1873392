#pragma once

// L1 distance transforms on non-uniform grids,
//
//   D_k = min_l { B_l + alpha * d(v_k, v_l) },
//
// computed in O(K) by one forward and one backward sweep. The circular
// variant unrolls the grid three times, (v - 2pi, v, v + 2pi), runs the real
// sweep on the 3K entries and keeps the middle block.

#include <cstddef>
#include <span>
#include <vector>

#include "l1tv/core.hpp"

namespace l1tv {

// Cost vector aligned index-for-index with a candidate grid.
using CostTable = std::vector<double>;

// Reusable transform bound to one grid and alpha. The sweep increments and,
// for the circular metric, the tripled grid and its scratch buffer are set up
// once, so repeated calls do not allocate.
class DistanceTransform {
 public:
  // Throws std::invalid_argument on a grid that is empty or not strictly
  // ascending, a non-canonical circular grid, or an invalid alpha.
  DistanceTransform(std::span<const double> grid, double alpha, Metric metric);

  // Replaces costs by their transform. Throws std::invalid_argument on a
  // length mismatch.
  void apply(std::span<double> costs);

  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  Metric metric_;
  // alpha * (v'_k - v'_{k-1}) for k >= 1, over the (possibly tripled) grid.
  std::vector<double> steps_;
  std::vector<double> scratch_;
};

// Two-pass sweep on an ascending grid.
CostTable dist_trans_real(std::span<const double> costs, std::span<const double> grid,
                          double alpha);

// Tripled-grid transform under arc length on an ascending grid in (-pi, pi].
CostTable dist_trans_circ(std::span<const double> costs, std::span<const double> grid,
                          double alpha);

CostTable dist_trans(std::span<const double> costs, std::span<const double> grid, double alpha,
                     Metric metric);

// O(K^2) double loop over the definition. Reference for the sweeps.
CostTable naive_dist_trans(std::span<const double> costs, std::span<const double> grid,
                           double alpha, Metric metric);

}  // namespace l1tv
