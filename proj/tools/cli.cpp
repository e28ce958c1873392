#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "l1tv/synth.hpp"

namespace l1tv::cli {

namespace {

std::string format_double(double x) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(n));
}

bool parse_double(std::string_view field, double& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Comma separated when the line holds a comma, whitespace separated otherwise.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    for (;;) {
      const auto comma = line.find(',', pos);
      fields.push_back(trim(line.substr(pos, comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return fields;
  }
  std::size_t pos = 0;
  while ((pos = line.find_first_not_of(" \t\r", pos)) != std::string_view::npos) {
    const auto end = line.find_first_of(" \t\r", pos);
    fields.push_back(line.substr(pos, end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return fields;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

double to_output_unit(double x, const RunConfig& config) {
  return config.unit == AngleUnit::Degrees ? x / kPi * 180.0 : x;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

void validate(const RunConfig& config) {
  if (config.input.has_value() == config.synthetic.has_value()) {
    throw std::invalid_argument("exactly one of --input and --synthetic is required");
  }
  check_alpha(config.alpha);
  if (config.unit == AngleUnit::Degrees && config.metric != Metric::Circular) {
    throw std::invalid_argument("--degrees requires --circular");
  }
  if (config.quantize && *config.quantize < 2) {
    throw std::invalid_argument("--quantize needs at least 2 levels");
  }
  if (config.truth && !config.synthetic) {
    throw std::invalid_argument("--truth is only available with --synthetic");
  }
}

Signal read_signal(std::istream& in, const RunConfig& config) {
  std::vector<double> values;
  std::vector<double> weights;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto fields = split_fields(std::string_view(line).substr(start));
    if (fields.size() > 2) throw ParseError(number, "expected `value` or `value,weight`");
    double value = 0.0;
    if (!parse_double(fields[0], value)) {
      throw ParseError(number, "cannot parse value '" + std::string(fields[0]) + "'");
    }
    double weight = 1.0;
    if (fields.size() == 2) {
      if (!parse_double(fields[1], weight)) {
        throw ParseError(number, "cannot parse weight '" + std::string(fields[1]) + "'");
      }
      if (!(weight >= 0.0)) throw ParseError(number, "negative weight");
    } else if (config.require_weights) {
      throw ParseError(number, "missing weight column");
    }
    if (config.unit == AngleUnit::Degrees) value = value / 180.0 * kPi;
    values.push_back(value);
    weights.push_back(weight);
  }
  if (values.empty()) throw ParseError(0, "signal file holds no samples");
  try {
    return Signal(std::move(values), std::move(weights), config.metric);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

Signal read_signal(const std::filesystem::path& path, const RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_signal(in, config);
}

void write_result(std::ostream& out, std::span<const double> x, const RunConfig& config) {
  for (double v : x) out << format_double(to_output_unit(v, config)) << '\n';
}

SyntheticArgs parse_synthetic(std::string_view text) {
  const auto fields = split_fields(text);
  if (fields.size() != 4) {
    throw std::invalid_argument("--synthetic expects N,segments,scale,seed");
  }
  SyntheticArgs args;
  auto parse_count = [](std::string_view f, auto& out) {
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
    if (ec != std::errc{} || ptr != f.data() + f.size()) {
      throw std::invalid_argument("--synthetic: bad integer '" + std::string(f) + "'");
    }
  };
  parse_count(fields[0], args.length);
  parse_count(fields[1], args.segments);
  if (!parse_double(fields[2], args.scale)) {
    throw std::invalid_argument("--synthetic: bad scale '" + std::string(fields[2]) + "'");
  }
  parse_count(fields[3], args.seed);
  return args;
}

void write_report(std::ostream& out, const SolveReport& report, Metric metric, bool json) {
  if (json) {
    nlohmann::ordered_json doc;
    doc["N"] = report.signal_length;
    doc["K"] = report.grid_size;
    doc["alpha"] = report.alpha;
    doc["metric"] = std::string(to_string(metric));
    doc["energy"] = report.energy;
    doc["elapsed_seconds"] = report.elapsed.count();
    out << doc.dump(2) << '\n';
    return;
  }
  out << "N=" << report.signal_length << '\n'
      << "K=" << report.grid_size << '\n'
      << "alpha=" << format_double(report.alpha) << '\n'
      << "metric=" << to_string(metric) << '\n'
      << "energy=" << format_double(report.energy) << '\n'
      << "elapsed_seconds=" << format_double(report.elapsed.count()) << '\n';
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::optional<std::vector<double>> truth;
    std::optional<Signal> signal;
    if (config.input) {
      signal = read_signal(*config.input, config);
    } else {
      synth::SynthSpec spec;
      spec.length = config.synthetic->length;
      spec.segment_count = config.synthetic->segments;
      spec.noise_scale = config.synthetic->scale;
      spec.seed = config.synthetic->seed;
      spec.metric = config.metric;
      auto instance = synth::gen_piecewise_constant(spec);
      truth = std::move(instance.ground_truth);
      signal = std::move(instance.noisy);
    }
    if (config.quantize) signal = synth::quantize(*signal, *config.quantize);

    const SolveReport report = solve(*signal, config.alpha);

    if (config.output) {
      auto file = open_out(*config.output);
      write_result(file, report.minimizer, config);
    } else {
      write_result(out, report.minimizer, config);
    }
    if (config.plot) {
      auto file = open_out(*config.plot);
      for (std::size_t n = 0; n < report.minimizer.size(); ++n) {
        file << n << ',' << format_double(to_output_unit(report.minimizer[n], config)) << '\n';
      }
    }
    if (config.truth) {
      auto file = open_out(*config.truth);
      write_result(file, *truth, config);
    }
    if (config.report) {
      auto file = open_out(*config.report);
      write_report(file, report, config.metric, config.json_report);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace l1tv::cli
