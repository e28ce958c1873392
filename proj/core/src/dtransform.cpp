#include "l1tv/dtransform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace l1tv {

namespace {

void check_grid(std::span<const double> grid, Metric metric) {
  if (grid.empty()) throw std::invalid_argument("distance transform: empty grid");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k - 1] < grid[k])) {
      throw std::invalid_argument("distance transform: grid not strictly ascending");
    }
  }
  if (metric == Metric::Circular) {
    for (double v : grid) {
      if (!is_canonical_angle(v)) {
        throw std::invalid_argument("distance transform: grid angle outside (-pi, pi]");
      }
    }
  }
}

void check_lengths(std::size_t costs, std::size_t grid) {
  if (costs != grid) {
    throw std::invalid_argument("distance transform: " + std::to_string(costs) +
                                " costs for a grid of " + std::to_string(grid));
  }
}

// Ties keep the stored value.
void sweep(std::span<double> d, std::span<const double> steps) {
  const std::size_t n = d.size();
  for (std::size_t k = 1; k < n; ++k) {
    const double via = d[k - 1] + steps[k];
    if (via < d[k]) d[k] = via;
  }
  for (std::size_t k = n - 1; k-- > 0;) {
    const double via = d[k + 1] + steps[k + 1];
    if (via < d[k]) d[k] = via;
  }
}

}  // namespace

DistanceTransform::DistanceTransform(std::span<const double> grid, double alpha, Metric metric)
    : size_(grid.size()), metric_(metric) {
  check_alpha(alpha);
  check_grid(grid, metric);
  std::vector<double> unrolled;
  if (metric == Metric::Real) {
    unrolled.assign(grid.begin(), grid.end());
  } else {
    unrolled.reserve(3 * size_);
    for (double v : grid) unrolled.push_back(v - kTwoPi);
    unrolled.insert(unrolled.end(), grid.begin(), grid.end());
    for (double v : grid) unrolled.push_back(v + kTwoPi);
    scratch_.resize(unrolled.size());
  }
  steps_.resize(unrolled.size(), 0.0);
  for (std::size_t k = 1; k < unrolled.size(); ++k) {
    steps_[k] = alpha * (unrolled[k] - unrolled[k - 1]);
  }
}

void DistanceTransform::apply(std::span<double> costs) {
  check_lengths(costs.size(), size_);
  if (metric_ == Metric::Real) {
    sweep(costs, steps_);
    return;
  }
  auto out = std::copy(costs.begin(), costs.end(), scratch_.begin());
  out = std::copy(costs.begin(), costs.end(), out);
  std::copy(costs.begin(), costs.end(), out);
  sweep(scratch_, steps_);
  const auto middle = scratch_.begin() + static_cast<std::ptrdiff_t>(size_);
  std::copy(middle, middle + static_cast<std::ptrdiff_t>(size_), costs.begin());
}

CostTable dist_trans(std::span<const double> costs, std::span<const double> grid, double alpha,
                     Metric metric) {
  check_lengths(costs.size(), grid.size());
  DistanceTransform transform(grid, alpha, metric);
  CostTable d(costs.begin(), costs.end());
  transform.apply(d);
  return d;
}

CostTable dist_trans_real(std::span<const double> costs, std::span<const double> grid,
                          double alpha) {
  return dist_trans(costs, grid, alpha, Metric::Real);
}

CostTable dist_trans_circ(std::span<const double> costs, std::span<const double> grid,
                          double alpha) {
  return dist_trans(costs, grid, alpha, Metric::Circular);
}

CostTable naive_dist_trans(std::span<const double> costs, std::span<const double> grid,
                           double alpha, Metric metric) {
  check_alpha(alpha);
  check_grid(grid, metric);
  check_lengths(costs.size(), grid.size());
  CostTable d(costs.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double best = costs[k];
    for (std::size_t l = 0; l < grid.size(); ++l) {
      best = std::min(best, costs[l] + alpha * distance(metric, grid[k], grid[l]));
    }
    d[k] = best;
  }
  return d;
}

}  // namespace l1tv
