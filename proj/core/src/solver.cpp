#include "l1tv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace l1tv {

namespace {

// Produces B^1 and then B^n from B^{n-1}.
class Recursion {
 public:
  Recursion(const Signal& signal, const CandidateGrid& grid, double alpha)
      : signal_(signal), grid_(grid), transform_(grid.values(), alpha, grid.metric()) {
    if (signal.metric() != grid.metric()) {
      throw std::invalid_argument("tabulate: signal and grid metrics differ");
    }
  }

  void first(std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    add_data(0, out);
  }

  void next(std::size_t n, std::span<const double> prev, std::span<double> out) {
    std::copy(prev.begin(), prev.end(), out.begin());
    transform_.apply(out);
    add_data(n, out);
  }

 private:
  void add_data(std::size_t n, std::span<double> out) const {
    const double y = signal_.values()[n];
    const double w = signal_.weights()[n];
    if (w == 0.0) return;
    const auto v = grid_.values();
    const Metric metric = grid_.metric();
    for (std::size_t k = 0; k < v.size(); ++k) out[k] += w * distance(metric, v[k], y);
  }

  const Signal& signal_;
  const CandidateGrid& grid_;
  DistanceTransform transform_;
};

std::size_t argmin(std::span<const double> costs) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < costs.size(); ++k) {
    if (costs[k] < costs[best]) best = k;
  }
  return best;
}

// argmin_k costs_k + alpha d(v_k, v_next)
std::size_t argmin_towards(std::span<const double> costs, const CandidateGrid& grid,
                           double alpha, std::size_t next) {
  const auto v = grid.values();
  const Metric metric = grid.metric();
  const double target = v[next];
  std::size_t best = 0;
  double best_cost = costs[0] + alpha * distance(metric, v[0], target);
  for (std::size_t k = 1; k < v.size(); ++k) {
    const double c = costs[k] + alpha * distance(metric, v[k], target);
    if (c < best_cost) {
      best_cost = c;
      best = k;
    }
  }
  return best;
}

std::vector<double> values_at(const CandidateGrid& grid, std::span<const std::size_t> path) {
  std::vector<double> x(path.size());
  for (std::size_t n = 0; n < path.size(); ++n) x[n] = grid[path[n]];
  return x;
}

// Returns the path and min_k B^N_k.
std::pair<BacktrackPath, double> solve_checkpointed(const Signal& signal,
                                                    const CandidateGrid& grid, double alpha) {
  const std::size_t n_total = signal.size();
  const std::size_t k_size = grid.size();
  const auto block = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_total))));
  const std::size_t blocks = (n_total + block - 1) / block;

  Recursion recursion(signal, grid, alpha);
  std::vector<double> checkpoints(blocks * k_size);
  std::vector<double> prev(k_size), cur(k_size);

  recursion.first(cur);
  std::copy(cur.begin(), cur.end(), checkpoints.begin());
  for (std::size_t n = 1; n < n_total; ++n) {
    std::swap(prev, cur);
    recursion.next(n, prev, cur);
    if (n % block == 0) {
      std::copy(cur.begin(), cur.end(), checkpoints.begin() + (n / block) * k_size);
    }
  }
  const double optimum = cur[argmin(cur)];

  BacktrackPath path;
  path.indices.resize(n_total);
  Tabulation scratch(block, k_size);
  for (std::size_t b = blocks; b-- > 0;) {
    const std::size_t start = b * block;
    const std::size_t stop = std::min(start + block, n_total);
    auto first_row = scratch.row(0);
    std::copy_n(checkpoints.begin() + b * k_size, k_size, first_row.begin());
    for (std::size_t n = start + 1; n < stop; ++n) {
      recursion.next(n, scratch.row(n - start - 1), scratch.row(n - start));
    }
    for (std::size_t n = stop; n-- > start;) {
      const auto row = scratch.row(n - start);
      path.indices[n] = n + 1 == n_total ? argmin(row)
                                         : argmin_towards(row, grid, alpha, path.indices[n + 1]);
    }
  }
  return {std::move(path), optimum};
}

}  // namespace

Tabulation::Tabulation(std::size_t length, std::size_t grid_size)
    : length_(length), grid_size_(grid_size), data_(length * grid_size, 0.0) {}

Tabulation tabulate(const Signal& signal, const CandidateGrid& grid, double alpha) {
  Recursion recursion(signal, grid, alpha);
  Tabulation tables(signal.size(), grid.size());
  recursion.first(tables.row(0));
  for (std::size_t n = 1; n < signal.size(); ++n) {
    recursion.next(n, tables.row(n - 1), tables.row(n));
  }
  return tables;
}

BacktrackPath backtrack(const Tabulation& tables, const CandidateGrid& grid, double alpha) {
  if (tables.grid_size() != grid.size()) {
    throw std::invalid_argument("backtrack: tables do not match the grid");
  }
  if (tables.length() == 0) throw std::invalid_argument("backtrack: no tables");
  check_alpha(alpha);
  const std::size_t n_total = tables.length();
  BacktrackPath path;
  path.indices.resize(n_total);
  path.indices[n_total - 1] = argmin(tables.row(n_total - 1));
  for (std::size_t n = n_total - 1; n-- > 0;) {
    path.indices[n] = argmin_towards(tables.row(n), grid, alpha, path.indices[n + 1]);
  }
  return path;
}

SolveReport solve(const Signal& signal, double alpha, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  check_alpha(alpha);
  const CandidateGrid grid = build_grid(signal);

  SolveReport report;
  report.grid_size = grid.size();
  report.signal_length = signal.size();
  report.alpha = alpha;

  if (alpha == 0.0) {
    // Every data term is minimized on its own by x_n = y_n.
    const auto y = signal.values();
    report.minimizer.assign(y.begin(), y.end());
    report.energy = 0.0;
  } else {
    TableStorage storage = options.storage;
    if (storage == TableStorage::Auto) {
      const double bytes = static_cast<double>(signal.size()) *
                           static_cast<double>(grid.size()) * sizeof(double);
      storage = bytes > static_cast<double>(options.full_table_budget_bytes)
                    ? TableStorage::Checkpointed
                    : TableStorage::Full;
    }
    BacktrackPath path;
    if (storage == TableStorage::Full) {
      const Tabulation tables = tabulate(signal, grid, alpha);
      const auto last = tables.row(tables.length() - 1);
      report.energy = *std::min_element(last.begin(), last.end());
      path = backtrack(tables, grid, alpha);
    } else {
      std::tie(path, report.energy) = solve_checkpointed(signal, grid, alpha);
    }
    report.minimizer = values_at(grid, path.indices);
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace l1tv
