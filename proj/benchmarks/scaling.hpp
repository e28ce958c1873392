#pragma once

// Empirical runtime scaling of the solver at a fixed number of quantization
// levels, plus the quadratic reference tabulation used to cross-check the
// fast one.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "l1tv/candidates.hpp"
#include "l1tv/core.hpp"
#include "l1tv/solver.hpp"

namespace l1tv::bench {

struct BenchRecord {
  Metric metric = Metric::Circular;
  std::size_t length = 0;
  std::size_t grid_size = 0;
  double alpha = 0.0;
  double seconds = 0.0;  // median over repeats
  double energy = 0.0;
};

struct ScalingConfig {
  int levels = 360;
  std::vector<std::size_t> lengths;  // ascending
  int repeats = 3;
  std::uint64_t seed = 1;
  Metric metric = Metric::Circular;
  double alpha = 1.0;
  SolveOptions options{};
};

// Quantized piecewise-constant signal in which every one of the `levels`
// levels occurs. Levels missing from the random draw are planted at evenly
// spaced positions. Requires length >= levels.
Signal quantized_instance(Metric metric, std::size_t length, int levels, std::uint64_t seed);

// One record per length: a warm-up solve is discarded, then the median wall
// time over `repeats` solves is recorded.
std::vector<BenchRecord> scaling_run(const ScalingConfig& config);

// Least-squares slope of log(seconds) against log(length).
double loglog_slope(std::span<const BenchRecord> records);

// Header "metric,N,K,alpha,seconds,energy" and one row per record.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

// The Viterbi tables with every transition minimum taken by a double loop,
// O(K^2 N).
Tabulation naive_tabulate(const Signal& signal, const CandidateGrid& grid, double alpha);

}  // namespace l1tv::bench
