#include "scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "l1tv/synth.hpp"

namespace l1tv::bench {

Signal quantized_instance(Metric metric, std::size_t length, int levels, std::uint64_t seed) {
  if (levels < 2 || length < static_cast<std::size_t>(levels)) {
    throw std::invalid_argument("quantized_instance: need length >= levels >= 2");
  }
  synth::SynthSpec spec;
  spec.length = length;
  spec.segment_count = std::max<std::size_t>(1, length / 50);
  spec.noise_scale = metric == Metric::Circular ? 0.5 : 0.1;
  spec.seed = seed;
  spec.metric = metric;
  spec.quant_levels = levels;
  const Signal drawn = synth::gen_piecewise_constant(spec).noisy;

  const auto y = drawn.values();
  std::vector<double> table;
  if (metric == Metric::Circular) {
    table = synth::circular_levels(levels);
  } else {
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    table = synth::real_levels(*lo, *hi, levels);
  }

  std::vector<double> values(y.begin(), y.end());
  std::vector<std::size_t> level(values.size());
  std::vector<std::size_t> count(table.size(), 0);
  for (std::size_t n = 0; n < values.size(); ++n) {
    const auto it = std::lower_bound(table.begin(), table.end(), values[n]);
    level[n] = static_cast<std::size_t>(it - table.begin());
    ++count[level[n]];
  }
  // Overwrite samples whose level occurs elsewhere too, so no level is lost.
  const std::size_t stride = length / table.size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (count[i] > 0) continue;
    std::size_t n = i * stride;
    while (count[level[n]] < 2) n = (n + 1) % length;
    --count[level[n]];
    level[n] = i;
    values[n] = table[i];
    count[i] = 1;
  }
  return Signal::with_unit_weights(std::move(values), metric);
}

std::vector<BenchRecord> scaling_run(const ScalingConfig& config) {
  if (config.repeats < 1) throw std::invalid_argument("scaling_run: repeats must be positive");
  if (!std::is_sorted(config.lengths.begin(), config.lengths.end())) {
    throw std::invalid_argument("scaling_run: lengths must be ascending");
  }
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < config.lengths.size(); ++i) {
    const std::size_t n = config.lengths[i];
    const Signal signal = quantized_instance(config.metric, n, config.levels, config.seed + i);

    SolveReport report = solve(signal, config.alpha, config.options);  // warm-up
    std::vector<double> times;
    for (int r = 0; r < config.repeats; ++r) {
      report = solve(signal, config.alpha, config.options);
      times.push_back(report.elapsed.count());
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());

    BenchRecord record;
    record.metric = config.metric;
    record.length = n;
    record.grid_size = report.grid_size;
    record.alpha = config.alpha;
    record.seconds = times[times.size() / 2];
    record.energy = report.energy;
    records.push_back(record);
  }
  return records;
}

double loglog_slope(std::span<const BenchRecord> records) {
  if (records.size() < 2) throw std::invalid_argument("loglog_slope: need two records");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : records) {
    const double x = std::log(static_cast<double>(r.length));
    const double y = std::log(r.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(records.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "metric,N,K,alpha,seconds,energy\n";
  const auto precision = out.precision(17);
  for (const auto& r : records) {
    out << to_string(r.metric) << ',' << r.length << ',' << r.grid_size << ',' << r.alpha << ','
        << r.seconds << ',' << r.energy << '\n';
  }
  out.precision(precision);
}

Tabulation naive_tabulate(const Signal& signal, const CandidateGrid& grid, double alpha) {
  check_alpha(alpha);
  if (signal.metric() != grid.metric()) {
    throw std::invalid_argument("naive_tabulate: signal and grid metrics differ");
  }
  const Metric metric = grid.metric();
  const auto v = grid.values();
  const auto y = signal.values();
  const auto w = signal.weights();
  Tabulation tables(signal.size(), grid.size());
  for (std::size_t k = 0; k < v.size(); ++k) tables.row(0)[k] = w[0] * distance(metric, v[k], y[0]);
  for (std::size_t n = 1; n < signal.size(); ++n) {
    const auto prev = tables.row(n - 1);
    auto cur = tables.row(n);
    for (std::size_t k = 0; k < v.size(); ++k) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < v.size(); ++l) {
        best = std::min(best, prev[l] + alpha * distance(metric, v[k], v[l]));
      }
      cur[k] = w[n] * distance(metric, v[k], y[n]) + best;
    }
  }
  return tables;
}

}  // namespace l1tv::bench
