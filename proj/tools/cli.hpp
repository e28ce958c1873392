#pragma once

// Command line front end: signal file parsing, result and report writing, and
// the end-to-end run.
//
// Signal files hold one sample per line, `value` or `value,weight`, with the
// two fields separated by a comma or whitespace. Blank lines and lines whose
// first non-blank character is '#' are skipped.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "l1tv/core.hpp"
#include "l1tv/solver.hpp"

namespace l1tv::cli {

enum class AngleUnit { Radians, Degrees };

struct SyntheticArgs {
  std::size_t length = 0;
  std::size_t segments = 1;
  double scale = 0.0;
  std::uint64_t seed = 0;
};

struct RunConfig {
  std::optional<std::filesystem::path> input;
  std::optional<SyntheticArgs> synthetic;
  double alpha = 0.0;
  Metric metric = Metric::Real;
  AngleUnit unit = AngleUnit::Radians;
  bool require_weights = false;
  std::optional<int> quantize;
  std::optional<std::filesystem::path> output;  // stdout when absent
  std::optional<std::filesystem::path> report;
  bool json_report = false;
  std::optional<std::filesystem::path> plot;   // "index,value" rows of the minimizer
  std::optional<std::filesystem::path> truth;  // synthetic ground truth
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Throws std::invalid_argument unless exactly one input source is set, alpha
// is valid, and degrees are only combined with circular data.
void validate(const RunConfig& config);

// Degrees are converted to radians before the signal canonicalizes circular
// values. Missing weights default to 1 unless config.require_weights is set.
// Throws ParseError naming the 1-based line, or for an empty file.
Signal read_signal(std::istream& in, const RunConfig& config);
Signal read_signal(const std::filesystem::path& path, const RunConfig& config);

// One value per line in the configured unit, 17 significant digits.
void write_result(std::ostream& out, std::span<const double> x, const RunConfig& config);

// "N,segments,scale,seed"
SyntheticArgs parse_synthetic(std::string_view text);

// Flat key=value lines (N, K, alpha, metric, energy, elapsed_seconds) or the
// same keys as one JSON object. Energy is in radians for circular data.
void write_report(std::ostream& out, const SolveReport& report, Metric metric, bool json);

// Returns the process exit status; failures are described on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace l1tv::cli
