// l1tv: exact L1-TV regularization of real- or circle-valued signals.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact L1-TV regularization of real- or circle-valued signals"};
  l1tv::cli::RunConfig config;
  std::string input, output, report, plot, truth, synthetic;
  bool circular = false;
  bool degrees = false;
  int levels = 0;

  app.add_option("--alpha", config.alpha, "Regularization parameter (>= 0)")->required();
  app.add_flag("--circular", circular, "Treat values as angles (radians unless --degrees)");
  app.add_flag("--degrees", degrees, "Angles in the input and output are in degrees");
  app.add_flag("--weights", config.require_weights, "Every line must carry a weight column");
  auto* quantize = app.add_option("--quantize", levels, "Snap values to this many levels");
  auto* in_opt = app.add_option("--input", input, "Signal file")->check(CLI::ExistingFile);
  auto* syn_opt = app.add_option("--synthetic", synthetic,
                                 "Generate a piecewise-constant test signal: N,segments,scale,seed");
  in_opt->excludes(syn_opt);
  app.add_option("--output", output, "Minimizer file (default: stdout)");
  app.add_option("--report", report, "Run report file (key=value lines)");
  app.add_flag("--json", config.json_report, "Write the report as JSON");
  app.add_option("--plot", plot, "Write index,value rows of the minimizer");
  app.add_option("--truth", truth, "Write the synthetic ground truth");
  CLI11_PARSE(app, argc, argv);

  try {
    if (circular) config.metric = l1tv::Metric::Circular;
    if (degrees) config.unit = l1tv::cli::AngleUnit::Degrees;
    if (*quantize) config.quantize = levels;
    if (*in_opt) config.input = input;
    if (*syn_opt) config.synthetic = l1tv::cli::parse_synthetic(synthetic);
    if (!output.empty()) config.output = output;
    if (!report.empty()) config.report = report;
    if (!plot.empty()) config.plot = plot;
    if (!truth.empty()) config.truth = truth;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return l1tv::cli::run(config, std::cout, std::cerr);
}
