#include "l1tv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "l1tv/solver.hpp"

namespace l1tv::oracle {

namespace {

void check_weights(std::span<const double> y, std::span<const double> w) {
  if (y.empty() || y.size() != w.size()) {
    throw std::invalid_argument("weighted median: bad input sizes");
  }
  double total = 0.0;
  for (double x : w) total += x;
  if (!(total > 0.0)) throw std::invalid_argument("weighted median: all weights are zero");
}

double median_over(std::vector<double> candidates, std::span<const double> y,
                   std::span<const double> w, Metric metric) {
  std::sort(candidates.begin(), candidates.end());
  double best = candidates.front();
  double best_cost = std::numeric_limits<double>::infinity();
  for (double mu : candidates) {
    double cost = 0.0;
    for (std::size_t n = 0; n < y.size(); ++n) cost += w[n] * distance(metric, mu, y[n]);
    if (cost < best_cost) {
      best_cost = cost;
      best = mu;
    }
  }
  return best;
}

}  // namespace

OracleResult exhaustive_solve(const Signal& signal, const CandidateGrid& grid, double alpha,
                              std::uint64_t max_states) {
  const std::size_t n_total = signal.size();
  const std::size_t k_size = grid.size();
  std::uint64_t states = 1;
  for (std::size_t n = 0; n < n_total; ++n) {
    if (states > max_states / k_size) {
      throw std::length_error("exhaustive_solve: more than max_states tuples");
    }
    states *= k_size;
  }

  OracleResult result;
  result.energy = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> digits(n_total, 0);
  std::vector<double> x(n_total, grid[0]);
  for (;;) {
    const double e = energy(signal, x, alpha);
    ++result.evaluated_count;
    if (e < result.energy) {
      result.energy = e;
      result.minimizer = x;
    }
    // Odometer with the last coordinate fastest, giving lexicographic order.
    std::size_t pos = n_total;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < k_size) {
        x[pos] = grid[digits[pos]];
        break;
      }
      digits[pos] = 0;
      x[pos] = grid[0];
      if (pos == 0) return result;
    }
  }
}

double continuous_probe(const Signal& signal, double alpha, int resolution, int trials,
                        std::uint64_t seed) {
  if (resolution < 2) throw std::invalid_argument("continuous_probe: resolution too small");
  const Metric metric = signal.metric();
  const auto y = signal.values();
  const auto w = signal.weights();
  const std::size_t n_total = y.size();

  std::vector<double> points(static_cast<std::size_t>(resolution));
  const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
  for (int i = 0; i < resolution; ++i) {
    if (metric == Metric::Real) {
      points[i] = *lo_it + (*hi_it - *lo_it) * i / (resolution - 1);
    } else {
      points[i] = canonicalize_angle(-kPi + kTwoPi * (i + 1) / resolution);
    }
  }

  // Minimum over all resolution^N tuples by a min-plus recursion with the
  // transition minimum taken by brute force.
  const std::size_t r = points.size();
  std::vector<double> prev(r), cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = w[0] * distance(metric, points[i], y[0]);
  for (std::size_t n = 1; n < n_total; ++n) {
    std::swap(prev, cur);
    for (std::size_t i = 0; i < r; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < r; ++j) {
        best = std::min(best, prev[j] + alpha * distance(metric, points[i], points[j]));
      }
      cur[i] = best + w[n] * distance(metric, points[i], y[n]);
    }
  }
  double best = *std::min_element(cur.begin(), cur.end());

  const std::vector<double> center = solve(signal, alpha).minimizer;
  const double span = metric == Metric::Real ? std::max(*hi_it - *lo_it, 1.0) : kPi;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> log_scale(std::log(1e-6), std::log(span));
  std::bernoulli_distribution touch(0.5);
  std::vector<double> x(n_total);
  for (int t = 0; t < trials; ++t) {
    const double scale = std::exp(log_scale(rng));
    for (std::size_t n = 0; n < n_total; ++n) {
      x[n] = center[n];
      if (touch(rng)) x[n] += scale * unit(rng);
      if (metric == Metric::Circular) x[n] = canonicalize_angle(x[n]);
    }
    best = std::min(best, energy(signal, x, alpha));
  }
  return best;
}

double weighted_median_real(std::span<const double> y, std::span<const double> w) {
  check_weights(y, w);
  return median_over({y.begin(), y.end()}, y, w, Metric::Real);
}

double weighted_median_circular(std::span<const double> y, std::span<const double> w) {
  check_weights(y, w);
  std::vector<double> candidates;
  for (double theta : y) {
    candidates.push_back(theta);
    candidates.push_back(canonicalize_angle(theta + kPi));
  }
  return median_over(std::move(candidates), y, w, Metric::Circular);
}

}  // namespace l1tv::oracle
