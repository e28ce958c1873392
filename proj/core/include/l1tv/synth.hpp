#pragma once

// Synthetic test signals: piecewise-constant ground truth with additive
// (wrapped) Laplacian noise, and level quantization.
//
// Random numbers come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Uniform variates are formed from the top 53 bits of each
// draw and integers by rejection sampling, so a given seed produces the same
// signal with every standard library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "l1tv/core.hpp"

namespace l1tv::synth {

struct SynthSpec {
  std::size_t length = 0;
  std::size_t segment_count = 1;
  double noise_scale = 0.0;  // Laplacian scale b
  std::uint64_t seed = 0;
  Metric metric = Metric::Real;
  std::optional<int> quant_levels;
  // Segment value range for Real signals.
  double low = 0.0;
  double high = 1.0;
};

struct SynthInstance {
  std::vector<double> ground_truth;
  Signal noisy;
};

// Throws std::invalid_argument on length 0, segment_count outside [1, length],
// a negative noise scale, quant_levels < 2 or low > high.
SynthInstance gen_piecewise_constant(const SynthSpec& spec);

// Snaps each value to the nearest of `levels` levels: evenly spaced over
// [min, max] of the data for Real, multiples of 2pi/levels for Circular.
// Idempotent. Throws std::invalid_argument if levels < 2.
Signal quantize(const Signal& signal, int levels);

// The real quantization levels over [lo, hi], ascending; the last is hi.
std::vector<double> real_levels(double lo, double hi, int levels);

// The circular quantization levels in ascending order. For even counts each
// level's antipode, as computed by antipodal(), is bit-exactly another level.
std::vector<double> circular_levels(int levels);

}  // namespace l1tv::synth
