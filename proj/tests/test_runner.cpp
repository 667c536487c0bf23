#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "wavegraph/counterexample.hpp"
#include "wavegraph/dualnorm.hpp"
#include "wavegraph/errors.hpp"
#include "wavegraph/lsq.hpp"
#include "wavegraph/runner.hpp"
#include "wavegraph/sampling.hpp"

using namespace wavegraph;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "wavegraph_unit";
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const std::string& name, const std::string& body) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& content) {
  return content.substr(0, content.find('\n'));
}

// UsageError whose message mentions the offending field.
template <typename Fn>
void expect_usage_error(Fn&& fn, const std::string& needle) {
  bool caught = false;
  try {
    fn();
  } catch (const UsageError& e) {
    caught = true;
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
  CHECK(caught);
}

}  // namespace

TEST_SUITE("runner") {

TEST_CASE("double formatting is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  SeededRng rng(99);
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(-1e6, 1e6);
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("config parsing round-trips every field") {
  const fs::path path = write_config("full.json",
                                     "{\"command\":\"verify\",\"domain\":[1.0,0.5],\"T\":2.5,"
                                     "\"J\":7,\"K\":9,\"M_list\":[4,8,16,32],\"J_fit\":120,"
                                     "\"out\":\"somewhere\",\"seed\":42}");
  const RunConfig cfg = load_config(path.string());
  CHECK(cfg.command == "verify");
  CHECK(cfg.domain == std::vector<double>{1.0, 0.5});
  CHECK(cfg.T == 2.5);
  CHECK(cfg.J == 7);
  CHECK(cfg.K == 9);
  CHECK(cfg.M_list == std::vector<int>{4, 8, 16, 32});
  CHECK(cfg.J_fit == 120);
  CHECK(cfg.out_dir == "somewhere");
  CHECK(cfg.seed == 42);
}

TEST_CASE("config errors name the offending field") {
  expect_usage_error([] { load_config((scratch_dir() / "missing.json").string()); }, "cannot open");
  expect_usage_error(
      [] { load_config(write_config("broken.json", "{\"T\": ").string()); }, "parse error");
  expect_usage_error(
      [] { load_config(write_config("unknown.json", "{\"commnad\":\"verify\"}").string()); },
      "commnad");
  expect_usage_error(
      [] { load_config(write_config("badT.json", "{\"T\": -1.0}").string()); }, "T");
  expect_usage_error(
      [] { load_config(write_config("badJ.json", "{\"J\": 0}").string()); }, "J");
  expect_usage_error(
      [] { load_config(write_config("baddom.json", "{\"domain\": []}").string()); }, "domain");
  expect_usage_error(
      [] { load_config(write_config("badM.json", "{\"M_list\": [4, \"x\"]}").string()); },
      "M_list");
  expect_usage_error(
      [] { load_config(write_config("badseed.json", "{\"seed\": -3}").string()); }, "seed");
  expect_usage_error(
      [] { load_config(write_config("badout.json", "{\"out\": \"\"}").string()); }, "out");
}

TEST_CASE("run validates the assembled config") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.domain = {};
  expect_usage_error([&] { run(cfg); }, "domain");
  cfg.domain = {1.0};
  cfg.command = "frobnicate";
  expect_usage_error([&] { run(cfg); }, "command");
  cfg.command = "counterexample";
  cfg.M_list = {};
  cfg.out_dir = (scratch_dir() / "never").string();
  expect_usage_error([&] { run(cfg); }, "M_list");
}

TEST_CASE("verify command passes and writes its summary") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.J = 6;
  cfg.out_dir = (scratch_dir() / "verify_run").string();
  const RunResult result = run(cfg);
  CHECK(result.all_pass);
  REQUIRE(!result.summary_lines.empty());
  CHECK(result.summary_lines.front() == "command=verify");
  CHECK(result.summary_lines.back() == "RESULT PASS");
  bool saw_stability = false;
  for (const auto& c : result.checks) {
    if (c.name == "stability_bound") saw_stability = true;
    CHECK(c.pass);
  }
  CHECK(saw_stability);
  const std::string summary = slurp(fs::path(cfg.out_dir) / "summary.txt");
  CHECK(summary.find("RESULT PASS") != std::string::npos);
}

TEST_CASE("failed checks surface in the result") {
  // Two ranks cannot produce the required ratio growth, so the command fails.
  RunConfig cfg;
  cfg.command = "infsup";
  cfg.J = 2;
  cfg.K = 8;
  cfg.out_dir = (scratch_dir() / "infsup_fail").string();
  const RunResult result = run(cfg);
  CHECK(!result.all_pass);
  CHECK(result.summary_lines.back() == "RESULT FAIL");
  bool growth_failed = false;
  for (const auto& c : result.checks) {
    if (c.name == "ratio_growth" && !c.pass) growth_failed = true;
  }
  CHECK(growth_failed);
}

TEST_CASE("csv files open with the documented headers") {
  RunConfig cfg;
  cfg.domain = {1.0};
  cfg.T = 1.0;

  cfg.command = "counterexample";
  cfg.M_list = {8, 16, 32, 64};
  cfg.out_dir = (scratch_dir() / "ce_hdr").string();
  run(cfg);
  CHECK(first_line(slurp(fs::path(cfg.out_dir) / "counterexample.csv")) ==
        kCounterexampleCsvHeader);

  cfg.command = "lsq";
  cfg.J = 1;
  cfg.K = 6;
  cfg.out_dir = (scratch_dir() / "lsq_hdr").string();
  run(cfg);
  CHECK(first_line(slurp(fs::path(cfg.out_dir) / "lsq.csv")) == kLsqCsvHeader);

  cfg.command = "infsup";
  cfg.J = 6;
  cfg.K = 8;
  cfg.out_dir = (scratch_dir() / "infsup_hdr").string();
  const RunResult result = run(cfg);
  CHECK(result.all_pass);
  CHECK(first_line(slurp(fs::path(cfg.out_dir) / "infsup.csv")) ==
        std::string(kDualnormCsvHeader));
}

TEST_CASE("identical configs produce byte-identical outputs") {
  RunConfig cfg;
  cfg.command = "counterexample";
  cfg.M_list = {8, 16, 32, 64, 128};
  const fs::path dir_a = scratch_dir() / "det_a";
  const fs::path dir_b = scratch_dir() / "det_b";
  cfg.out_dir = dir_a.string();
  run(cfg);
  cfg.out_dir = dir_b.string();
  run(cfg);
  CHECK(slurp(dir_a / "summary.txt") == slurp(dir_b / "summary.txt"));
  CHECK(slurp(dir_a / "counterexample.csv") == slurp(dir_b / "counterexample.csv"));
  CHECK(!slurp(dir_a / "counterexample.csv").empty());

  RunConfig vcfg;
  vcfg.command = "verify";
  vcfg.J = 6;
  const fs::path dir_c = scratch_dir() / "det_c";
  const fs::path dir_d = scratch_dir() / "det_d";
  vcfg.out_dir = dir_c.string();
  run(vcfg);
  vcfg.out_dir = dir_d.string();
  run(vcfg);
  CHECK(slurp(dir_c / "summary.txt") == slurp(dir_d / "summary.txt"));
}

}  // TEST_SUITE
