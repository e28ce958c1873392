#include "l1tv/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace l1tv {

std::string_view to_string(Metric metric) {
  return metric == Metric::Real ? "real" : "circular";
}

double canonicalize_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("canonicalize_angle: non-finite angle");
  }
  // std::remainder is exact and lands in [-pi, pi].
  const double r = std::remainder(theta, kTwoPi);
  return r <= -kPi ? kPi : r;
}

bool is_canonical_angle(double theta) { return theta > -kPi && theta <= kPi; }

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("alpha must be finite and nonnegative");
  }
}

Signal::Signal(std::vector<double> values, std::vector<double> weights, Metric metric)
    : values_(std::move(values)), weights_(std::move(weights)), metric_(metric) {
  if (values_.empty()) throw std::invalid_argument("Signal: empty signal");
  if (values_.size() != weights_.size()) {
    throw std::invalid_argument("Signal: " + std::to_string(values_.size()) + " values but " +
                                std::to_string(weights_.size()) + " weights");
  }
  bool any_positive = false;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("Signal: weights must be finite and nonnegative");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw std::invalid_argument("Signal: all weights are zero");
  for (double& v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Signal: non-finite value");
    if (metric_ == Metric::Circular) v = canonicalize_angle(v);
  }
}

Signal Signal::with_unit_weights(std::vector<double> values, Metric metric) {
  std::vector<double> weights(values.size(), 1.0);
  return Signal(std::move(values), std::move(weights), metric);
}

double total_variation(Metric metric, std::span<const double> x) {
  double tv = 0.0;
  for (std::size_t n = 1; n < x.size(); ++n) tv += distance(metric, x[n - 1], x[n]);
  return tv;
}

double energy(const Signal& signal, std::span<const double> x, double alpha) {
  if (x.size() != signal.size()) {
    throw std::invalid_argument("energy: candidate has " + std::to_string(x.size()) +
                                " samples, signal has " + std::to_string(signal.size()));
  }
  const auto y = signal.values();
  const auto w = signal.weights();
  double data = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) data += w[n] * distance(signal.metric(), x[n], y[n]);
  return alpha * total_variation(signal.metric(), x) + data;
}

}  // namespace l1tv
