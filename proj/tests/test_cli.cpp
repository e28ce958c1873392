#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "support/instances.hpp"

namespace l1tv::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("l1tv_cli_" + std::to_string(std::random_device{}()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::map<std::string, std::string> parse_report(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

TEST(ReadSignal, DegreesOnTheCircle) {
  RunConfig config;
  config.metric = Metric::Circular;
  config.unit = AngleUnit::Degrees;
  std::istringstream in("0\n90\n180\n");
  const Signal s = read_signal(in, config);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.values()[0], 0.0);
  EXPECT_EQ(s.values()[1], kPi / 2);
  EXPECT_EQ(s.values()[2], kPi);
}

TEST(ReadSignal, WeightColumnAndSeparators) {
  RunConfig config;
  std::istringstream in("# header\n1.5,2.0\n\n  -3 0.5\n4\t1\n7\n");
  const Signal s = read_signal(in, config);
  EXPECT_THAT(testing::as_vector(s.values()), ::testing::ElementsAre(1.5, -3.0, 4.0, 7.0));
  EXPECT_THAT(testing::as_vector(s.weights()), ::testing::ElementsAre(2.0, 0.5, 1.0, 1.0));
}

TEST(ReadSignal, ErrorsNameTheLine) {
  RunConfig config;
  std::istringstream bad("abc\n");
  try {
    read_signal(bad, config);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }

  std::istringstream later("1\n# fine\n2,x\n");
  try {
    read_signal(later, config);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }

  std::istringstream three("1,2,3\n");
  EXPECT_THROW(read_signal(three, config), ParseError);
  std::istringstream negative("1,-2\n");
  EXPECT_THROW(read_signal(negative, config), ParseError);
}

TEST(ReadSignal, EmptyFileAndRequiredWeights) {
  RunConfig config;
  std::istringstream empty("# nothing\n\n");
  EXPECT_THROW(read_signal(empty, config), ParseError);

  config.require_weights = true;
  std::istringstream missing("1,1\n2\n");
  try {
    read_signal(missing, config);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(WriteResult, RoundTripsThroughReadSignal) {
  std::mt19937_64 rng(61);
  for (Metric metric : {Metric::Real, Metric::Circular}) {
    for (AngleUnit unit : {AngleUnit::Radians, AngleUnit::Degrees}) {
      if (unit == AngleUnit::Degrees && metric == Metric::Real) continue;
      RunConfig config;
      config.metric = metric;
      config.unit = unit;
      const Signal s = testing::random_signal(rng, metric, 200, 50);
      std::stringstream buffer;
      write_result(buffer, s.values(), config);
      const Signal back = read_signal(buffer, config);
      ASSERT_EQ(back.size(), s.size());
      for (std::size_t n = 0; n < s.size(); ++n) {
        EXPECT_NEAR(back.values()[n], s.values()[n], 1e-12);
        if (unit == AngleUnit::Radians) EXPECT_EQ(back.values()[n], s.values()[n]);
      }
    }
  }
}

TEST(ParseSynthetic, AcceptsFourFields) {
  const SyntheticArgs a = parse_synthetic("500,5,0.3,42");
  EXPECT_EQ(a.length, 500u);
  EXPECT_EQ(a.segments, 5u);
  EXPECT_EQ(a.scale, 0.3);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_THROW(parse_synthetic("500,5,0.3"), std::invalid_argument);
  EXPECT_THROW(parse_synthetic("500,five,0.3,1"), std::invalid_argument);
}

TEST(Validate, RejectsInconsistentConfigs) {
  RunConfig none;
  EXPECT_THROW(validate(none), std::invalid_argument);
  RunConfig both;
  both.input = "x";
  both.synthetic = SyntheticArgs{10, 1, 0.1, 1};
  EXPECT_THROW(validate(both), std::invalid_argument);
  RunConfig degrees;
  degrees.input = "x";
  degrees.unit = AngleUnit::Degrees;
  EXPECT_THROW(validate(degrees), std::invalid_argument);
  RunConfig alpha;
  alpha.input = "x";
  alpha.alpha = -1.0;
  EXPECT_THROW(validate(alpha), std::invalid_argument);
}

TEST(Run, ZeroAlphaEchoesInput) {
  TempDir dir;
  spit(dir / "in.txt", "0.5,1\n-1.25,0\n3,2\n");
  RunConfig config;
  config.input = dir / "in.txt";
  config.output = dir / "out.txt";
  std::ostringstream out, err;
  ASSERT_EQ(run(config, out, err), 0) << err.str();
  EXPECT_EQ(slurp(dir / "out.txt"), "0.5\n-1.25\n3\n");
}

TEST(Run, ReportEnergyMatchesEmittedOutput) {
  TempDir dir;
  std::mt19937_64 rng(71);
  const Signal s = testing::random_signal(rng, Metric::Circular, 300, 40);
  RunConfig config;
  config.metric = Metric::Circular;
  config.unit = AngleUnit::Degrees;
  config.alpha = 0.6;
  {
    std::ofstream f(dir / "in.txt");
    for (std::size_t n = 0; n < s.size(); ++n) {
      f << s.values()[n] / kPi * 180.0 << ',' << s.weights()[n] << '\n';
    }
  }
  config.input = dir / "in.txt";
  config.output = dir / "out.txt";
  config.report = dir / "report.txt";
  std::ostringstream out, err;
  ASSERT_EQ(run(config, out, err), 0) << err.str();

  const Signal input = read_signal(dir / "in.txt", config);
  RunConfig plain = config;
  const Signal emitted = read_signal(dir / "out.txt", plain);
  const auto kv = parse_report(slurp(dir / "report.txt"));
  EXPECT_EQ(kv.at("N"), "300");
  EXPECT_EQ(kv.at("metric"), "circular");
  const double reported = std::stod(kv.at("energy"));
  EXPECT_TRUE(testing::rel_close(reported, energy(input, emitted.values(), 0.6), 1e-10));
  EXPECT_GE(std::stod(kv.at("elapsed_seconds")), 0.0);
}

TEST(Run, JsonReport) {
  TempDir dir;
  spit(dir / "in.txt", "0\n1\n");
  RunConfig config;
  config.input = dir / "in.txt";
  config.alpha = 0.5;
  config.report = dir / "report.json";
  config.json_report = true;
  std::ostringstream out, err;
  ASSERT_EQ(run(config, out, err), 0);
  EXPECT_EQ(out.str(), "0\n1\n");
  const auto doc = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(doc.at("N"), 2);
  EXPECT_EQ(doc.at("K"), 2);
  EXPECT_EQ(doc.at("alpha"), 0.5);
  EXPECT_EQ(doc.at("energy"), 0.5);
  EXPECT_EQ(doc.at("metric"), "real");
}

TEST(Run, SyntheticIsDeterministic) {
  TempDir dir;
  RunConfig config;
  config.metric = Metric::Circular;
  config.synthetic = SyntheticArgs{500, 5, 0.3, 7};
  config.alpha = 1.0;
  config.output = dir / "a.txt";
  config.truth = dir / "truth.txt";
  std::ostringstream out, err;
  ASSERT_EQ(run(config, out, err), 0) << err.str();
  config.output = dir / "b.txt";
  ASSERT_EQ(run(config, out, err), 0);
  EXPECT_EQ(slurp(dir / "a.txt"), slurp(dir / "b.txt"));
  EXPECT_FALSE(slurp(dir / "truth.txt").empty());
}

TEST(Run, WindStyleQuantizedData) {
  TempDir dir;
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> deg(0, 359);
  {
    std::ofstream f(dir / "wind.txt");
    f << "# direction in degrees\n";
    for (int i = 0; i < 5000; ++i) f << deg(rng) << '\n';
  }
  RunConfig config;
  config.metric = Metric::Circular;
  config.unit = AngleUnit::Degrees;
  config.quantize = 360;
  config.alpha = 2.0;
  config.input = dir / "wind.txt";
  config.output = dir / "out.txt";
  config.report = dir / "report.txt";
  config.plot = dir / "plot.csv";
  std::ostringstream out, err;
  ASSERT_EQ(run(config, out, err), 0) << err.str();
  const auto kv = parse_report(slurp(dir / "report.txt"));
  EXPECT_LE(std::stoul(kv.at("K")), 720u);
  EXPECT_EQ(std::stoul(kv.at("K")), 360u);
  const std::string plot = slurp(dir / "plot.csv");
  EXPECT_EQ(plot.substr(0, 2), "0,");
}

TEST(Run, FailuresReturnNonZero) {
  TempDir dir;
  spit(dir / "bad.txt", "1\noops\n");
  RunConfig config;
  config.input = dir / "bad.txt";
  std::ostringstream out, err;
  EXPECT_EQ(run(config, out, err), 1);
  EXPECT_NE(err.str().find("line 2"), std::string::npos);

  RunConfig missing;
  missing.input = dir / "does_not_exist.txt";
  EXPECT_EQ(run(missing, out, err), 1);
}

// Drives the installed executable through its flags.
TEST(Executable, FlagsEndToEnd) {
  TempDir dir;
  spit(dir / "in.txt", "10\n20\n350\n");
  const std::string tool = L1TV_TOOL_PATH;
  const std::string cmd = tool + " --alpha 0 --circular --degrees --input " +
                          (dir / "in.txt").string() + " --output " + (dir / "out.txt").string() +
                          " --report " + (dir / "r.txt").string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::istringstream lines(slurp(dir / "out.txt"));
  double a, b, c;
  lines >> a >> b >> c;
  EXPECT_NEAR(a, 10.0, 1e-12);
  EXPECT_NEAR(b, 20.0, 1e-12);
  EXPECT_NEAR(c, -10.0, 1e-12);  // canonical form of 350 degrees

  const std::string syn = tool + " --alpha 1 --circular --synthetic 200,3,0.2,5 --quantize 36 --output " +
                          (dir / "s.txt").string() + " --report " + (dir / "s.json").string() +
                          " --json";
  ASSERT_EQ(std::system(syn.c_str()), 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "s.json"));
  EXPECT_EQ(doc.at("N"), 200);
  EXPECT_LE(doc.at("K").get<int>(), 36);

  const std::string bad = tool + " --alpha 1 --input " + (dir / "in.txt").string() +
                          " --synthetic 10,1,0,1 2>/dev/null";
  EXPECT_NE(std::system(bad.c_str()), 0);
  const std::string no_alpha = tool + " --input " + (dir / "in.txt").string() + " 2>/dev/null";
  EXPECT_NE(std::system(no_alpha.c_str()), 0);
}

}  // namespace
}  // namespace l1tv::cli
