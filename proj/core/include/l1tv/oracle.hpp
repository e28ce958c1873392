#pragma once

// Brute-force references for testing the solver. Written against the core
// distance and energy functions only.

#include <cstdint>
#include <span>
#include <vector>

#include "l1tv/candidates.hpp"
#include "l1tv/core.hpp"

namespace l1tv::oracle {

struct OracleResult {
  std::vector<double> minimizer;
  double energy = 0.0;
  std::uint64_t evaluated_count = 0;
};

// Evaluates the energy of all K^N tuples over `grid` and returns the
// lexicographically first minimizer. Throws std::length_error when K^N
// exceeds max_states.
OracleResult exhaustive_solve(const Signal& signal, const CandidateGrid& grid, double alpha,
                              std::uint64_t max_states = 10'000'000);

// Best energy found off the candidate grid: the exact minimum over all tuples
// of a uniform `resolution`-point grid per coordinate (spanning the data range
// for Real, the whole circle for Circular), and `trials` random perturbations
// of the solver's minimizer.
double continuous_probe(const Signal& signal, double alpha, int resolution, int trials,
                        std::uint64_t seed);

// A data value minimizing mu -> sum_n w_n |mu - y_n|; ties go to the smallest.
double weighted_median_real(std::span<const double> y, std::span<const double> w);

// An element of Val(y) united with the antipodes minimizing the weighted arc
// length sum; ties go to the smallest canonical angle.
double weighted_median_circular(std::span<const double> y, std::span<const double> w);

}  // namespace l1tv::oracle
