#include "l1tv/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace l1tv {

namespace {

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<double> values_of(std::span<const double> y) {
  if (y.empty()) throw std::invalid_argument("values_of: empty input");
  std::vector<double> v(y.begin(), y.end());
  sort_unique(v);
  return v;
}

double antipodal(double theta) {
  const double flipped = theta > 0.0 ? theta - kPi : theta + kPi;
  // theta - pi rounds to -pi for tiny positive theta.
  return flipped <= -kPi ? kPi : flipped;
}

CandidateGrid::CandidateGrid(std::vector<double> values, Metric metric)
    : values_(std::move(values)), metric_(metric) {
  if (values_.empty()) throw std::invalid_argument("CandidateGrid: empty grid");
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (!(values_[k - 1] < values_[k])) {
      throw std::invalid_argument("CandidateGrid: values not strictly ascending");
    }
  }
  if (metric_ == Metric::Circular) {
    for (double v : values_) {
      if (!is_canonical_angle(v)) {
        throw std::invalid_argument("CandidateGrid: angle outside (-pi, pi]");
      }
    }
  }
}

std::optional<std::size_t> CandidateGrid::index_of(double value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

CandidateGrid build_grid(const Signal& signal) {
  const auto y = signal.values();
  std::vector<double> v(y.begin(), y.end());
  if (signal.metric() == Metric::Circular) {
    v.reserve(2 * y.size());
    for (double theta : y) v.push_back(antipodal(theta));
  }
  sort_unique(v);
  return CandidateGrid(std::move(v), signal.metric());
}

}  // namespace l1tv
