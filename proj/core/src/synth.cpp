#include "l1tv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace l1tv::synth {

namespace {

class Source {
 public:
  explicit Source(std::uint64_t seed) : engine_(seed) {}

  // [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // (0, 1)
  double open_uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  // [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  double laplace(double scale) {
    const double u = open_uniform();
    return u < 0.5 ? scale * std::log(2.0 * u) : -scale * std::log(2.0 - 2.0 * u);
  }

 private:
  std::mt19937_64 engine_;
};

void check_levels(int levels) {
  if (levels < 2) throw std::invalid_argument("quantize: need at least 2 levels");
}

// Smallest level index; levels are indexed j_min..j_min + levels - 1 and sit
// at j * 2pi / levels.
long long first_index(int levels) { return -static_cast<long long>((levels - 1) / 2); }

double real_level(double lo, double hi, int levels, long long i) {
  if (i == levels - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (levels - 1);
}

}  // namespace

std::vector<double> real_levels(double lo, double hi, int levels) {
  check_levels(levels);
  std::vector<double> out(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) out[i] = real_level(lo, hi, levels, i);
  return out;
}

std::vector<double> circular_levels(int levels) {
  check_levels(levels);
  const auto count = static_cast<long long>(levels);
  auto direct = [&](long long j) { return (2.0 * static_cast<double>(j) / levels) * kPi; };
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(levels));
  for (long long j = first_index(levels); j < first_index(levels) + count; ++j) {
    if (levels % 2 != 0 || 4 * std::llabs(j) >= count) {
      out.push_back(direct(j));
    } else if (j == 0) {
      out.push_back(0.0);
    } else if (j > 0) {
      // Derive the small-magnitude member of an antipodal pair from the large
      // one; the subtraction is exact there.
      out.push_back(direct(j - count / 2) + kPi);
    } else {
      out.push_back(direct(j + count / 2) - kPi);
    }
  }
  return out;
}

Signal quantize(const Signal& signal, int levels) {
  check_levels(levels);
  const auto y = signal.values();
  std::vector<double> out(y.begin(), y.end());
  if (signal.metric() == Metric::Circular) {
    const std::vector<double> table = circular_levels(levels);
    const long long j_min = first_index(levels);
    for (double& v : out) {
      long long j = std::llround(v / kTwoPi * levels);
      j = ((j - j_min) % levels + levels) % levels;
      v = table[static_cast<std::size_t>(j)];
    }
  } else {
    const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo < hi) {
      for (double& v : out) {
        long long i = std::llround((v - lo) / (hi - lo) * (levels - 1));
        i = std::clamp<long long>(i, 0, levels - 1);
        v = real_level(lo, hi, levels, i);
      }
    }
  }
  const auto w = signal.weights();
  return Signal(std::move(out), {w.begin(), w.end()}, signal.metric());
}

SynthInstance gen_piecewise_constant(const SynthSpec& spec) {
  if (spec.length == 0) throw std::invalid_argument("synth: length must be positive");
  if (spec.segment_count < 1 || spec.segment_count > spec.length) {
    throw std::invalid_argument("synth: segment count must lie in [1, length]");
  }
  if (!(spec.noise_scale >= 0.0) || !std::isfinite(spec.noise_scale)) {
    throw std::invalid_argument("synth: noise scale must be finite and nonnegative");
  }
  if (spec.quant_levels && *spec.quant_levels < 2) {
    throw std::invalid_argument("synth: quantization needs at least 2 levels");
  }
  if (!(spec.low <= spec.high)) throw std::invalid_argument("synth: low exceeds high");

  Source source(spec.seed);

  // Cut positions 1..N-1, drawn without replacement by a partial shuffle.
  std::vector<std::size_t> positions(spec.length - 1);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  const std::size_t cuts = spec.segment_count - 1;
  for (std::size_t i = 0; i < cuts; ++i) {
    const auto pick = i + source.below(positions.size() - i);
    std::swap(positions[i], positions[pick]);
  }
  std::vector<std::size_t> boundaries(positions.begin(), positions.begin() + cuts);
  std::sort(boundaries.begin(), boundaries.end());
  boundaries.push_back(spec.length);

  std::vector<double> truth(spec.length);
  std::size_t begin = 0;
  for (std::size_t end : boundaries) {
    const double u = source.uniform();
    const double value = spec.metric == Metric::Circular ? kPi - kTwoPi * u
                                                         : spec.low + (spec.high - spec.low) * u;
    std::fill(truth.begin() + begin, truth.begin() + end, value);
    begin = end;
  }

  std::vector<double> noisy(truth);
  for (double& v : noisy) {
    v += source.laplace(spec.noise_scale);
    if (spec.metric == Metric::Circular) v = canonicalize_angle(v);
  }

  Signal signal = Signal::with_unit_weights(std::move(noisy), spec.metric);
  if (spec.quant_levels) signal = quantize(signal, *spec.quant_levels);
  return {std::move(truth), std::move(signal)};
}

}  // namespace l1tv::synth
