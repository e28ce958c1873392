#pragma once

// Shared domain types for L1-TV regularization of real- and circle-valued
// signals: the data space metric, validated signals, angle canonicalization
// and the L1-TV energy
//
//   E(x) = alpha * sum_{n<N} d(x_n, x_{n+1}) + sum_n w_n * d(x_n, y_n)
//
// Angles are radians in the half-open interval (-pi, pi].

#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace l1tv {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Metric { Real, Circular };

std::string_view to_string(Metric metric);

// Maps theta to its representative in (-pi, pi]. Throws std::invalid_argument
// on non-finite input.
double canonicalize_angle(double theta);

// True when theta lies in (-pi, pi].
bool is_canonical_angle(double theta);

// |u - v| for Real; arc length in [0, pi] for Circular. Circular inputs are
// expected to be canonical.
inline double distance(Metric metric, double u, double v) {
  const double diff = u > v ? u - v : v - u;
  if (metric == Metric::Real) return diff;
  const double around = kTwoPi - diff;
  return around < diff ? around : diff;
}

// Throws std::invalid_argument unless alpha is finite and nonnegative.
void check_alpha(double alpha);

// Ordered samples with nonnegative weights. Immutable after construction.
// Circular values are canonicalized on construction (so -pi becomes pi).
class Signal {
 public:
  Signal(std::vector<double> values, std::vector<double> weights, Metric metric);

  // All weights equal to one.
  static Signal with_unit_weights(std::vector<double> values, Metric metric);

  std::span<const double> values() const { return values_; }
  std::span<const double> weights() const { return weights_; }
  Metric metric() const { return metric_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
  Metric metric_;
};

// sum_{n<N} d(x_n, x_{n+1})
double total_variation(Metric metric, std::span<const double> x);

// L1-TV energy of candidate x for data `signal`. Throws std::invalid_argument
// when x.size() != signal.size().
double energy(const Signal& signal, std::span<const double> x, double alpha);

}  // namespace l1tv
