#pragma once

// Exact global minimizer of the L1-TV energy for real- and circle-valued
// signals. The search space is reduced to the candidate grid, and the
// resulting finite problem is solved by the Viterbi recursion
//
//   B^1_k = w_1 d(v_k, y_1)
//   B^n_k = w_n d(v_k, y_n) + min_l { B^{n-1}_l + alpha d(v_k, v_l) }
//
// with the inner minimum computed by an O(K) distance transform, followed by
// backtracking. Total cost is O(KN) plus the O(K log K) grid sort.

#include <chrono>
#include <cstddef>
#include <span>
#include <vector>

#include "l1tv/candidates.hpp"
#include "l1tv/core.hpp"
#include "l1tv/dtransform.hpp"

namespace l1tv {

// N cost tables of K entries each, stored row-major. Row n holds B^{n+1}.
class Tabulation {
 public:
  Tabulation(std::size_t length, std::size_t grid_size);

  std::size_t length() const { return length_; }
  std::size_t grid_size() const { return grid_size_; }

  std::span<double> row(std::size_t n) {
    return {data_.data() + n * grid_size_, grid_size_};
  }
  std::span<const double> row(std::size_t n) const {
    return {data_.data() + n * grid_size_, grid_size_};
  }

 private:
  std::size_t length_;
  std::size_t grid_size_;
  std::vector<double> data_;
};

// Zero-based grid indices, one per sample; the minimizer is grid[indices[n]].
struct BacktrackPath {
  std::vector<std::size_t> indices;
};

struct SolveReport {
  std::vector<double> minimizer;
  double energy = 0.0;  // min_k B^N_k
  std::size_t grid_size = 0;
  std::size_t signal_length = 0;
  double alpha = 0.0;
  std::chrono::duration<double> elapsed{};
};

// How the cost tables are kept for backtracking. Full stores all N tables.
// Checkpointed stores every c-th table with c ~ sqrt(N) and recomputes one
// block at a time while backtracking: O(K sqrt(N)) memory, about twice the
// tabulation work, and the same minimizer as Full.
enum class TableStorage { Auto, Full, Checkpointed };

struct SolveOptions {
  TableStorage storage = TableStorage::Auto;
  // Auto switches to Checkpointed above this many bytes of tables.
  std::size_t full_table_budget_bytes = std::size_t{256} << 20;
};

// All N tables. The grid may be any grid for the signal's metric, typically
// build_grid(signal). Throws std::invalid_argument on a metric mismatch or an
// invalid alpha.
Tabulation tabulate(const Signal& signal, const CandidateGrid& grid, double alpha);

// Backtracking with argmin ties broken towards the smallest index.
BacktrackPath backtrack(const Tabulation& tables, const CandidateGrid& grid, double alpha);

SolveReport solve(const Signal& signal, double alpha, const SolveOptions& options = {});

}  // namespace l1tv
