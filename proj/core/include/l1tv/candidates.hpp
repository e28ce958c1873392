#pragma once

// Finite search space for L1-TV: some global minimizer takes all its values in
// the data values (real case) or in the data values united with their
// antipodes (circular case).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "l1tv/core.hpp"

namespace l1tv {

// Sorted distinct values of y. Throws std::invalid_argument on empty input.
std::vector<double> values_of(std::span<const double> y);

// The diametrically opposite angle of a canonical theta, again canonical.
// Computed as theta -/+ pi so that pairs whose member of larger magnitude is
// at least pi/2 map onto each other exactly in floating point.
double antipodal(double theta);

// Strictly ascending candidate values. Circular grids hold canonical angles.
class CandidateGrid {
 public:
  // Throws std::invalid_argument if values is empty, not strictly ascending,
  // or (Circular) not canonical.
  CandidateGrid(std::vector<double> values, Metric metric);

  std::span<const double> values() const { return values_; }
  Metric metric() const { return metric_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }

  // Index of an exact match, if any.
  std::optional<std::size_t> index_of(double value) const;
  bool contains(double value) const { return index_of(value).has_value(); }

 private:
  std::vector<double> values_;
  Metric metric_;
};

// Val(y) for Real signals, Val(y) and its antipodes for Circular signals.
// Deduplication is by exact equality.
CandidateGrid build_grid(const Signal& signal);

}  // namespace l1tv
