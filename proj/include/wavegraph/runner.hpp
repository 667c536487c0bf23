#pragma once

// Batch orchestration behind the CLI: run configuration, the five commands
// (verify, counterexample, lsq, infsup, weyl), CSV emission and the PASS/FAIL
// summary. Everything an exit status depends on lives here so it can be
// driven from tests without spawning a process.

#include <cstdint>
#include <string>
#include <vector>

namespace wavegraph {

struct RunConfig {
  std::string command;  // verify | counterexample | lsq | infsup | weyl
  std::vector<double> domain{1.0};
  double T = 1.0;
  int J = 8;
  int K = 12;
  std::vector<int> M_list;
  // Top of the fit range for the weyl command; 0 means 4*J.
  int J_fit = 0;
  std::string out_dir = "out";
  std::uint64_t seed = 193727;
};

// Parses the JSON run configuration. Unknown keys and out-of-range values
// throw UsageError naming the offending field.
RunConfig load_config(const std::string& path);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // "measured=... limit=..." style, deterministic
};

struct RunResult {
  bool all_pass = false;
  std::vector<CheckLine> checks;
  std::vector<std::string> summary_lines;  // exactly what summary.txt holds
};

// Executes the command, writes the command's CSVs and summary.txt under
// config.out_dir. Throws UsageError for config problems; module errors
// propagate as their own exception types.
RunResult run(const RunConfig& config);

// Shortest round-trip decimal representation; the only numeric formatting
// used in CSV and summary output, so identical runs are byte-identical.
std::string format_double(double x);

}  // namespace wavegraph
