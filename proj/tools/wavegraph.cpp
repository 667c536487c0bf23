#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavegraph/errors.hpp"
#include "wavegraph/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"space-time wave equation verification suite"};
  app.get_formatter()->column_width(26);

  std::string command;
  std::string config_path;
  std::string out_dir;
  double T = 0.0;
  int J = 0;
  int K = 0;
  std::vector<int> m_list;
  std::uint64_t seed = 0;

  app.add_option("command", command, "one of: verify, counterexample, lsq, infsup, weyl")
      ->required();
  app.add_option("--config", config_path, "JSON run configuration file")->required();
  auto* opt_T = app.add_option("--T", T, "horizon override");
  auto* opt_J = app.add_option("--J", J, "spatial mode count override");
  auto* opt_K = app.add_option("--K", K, "temporal basis size override");
  auto* opt_M = app.add_option("--M-list", m_list, "partial-sum sizes override")->delimiter(',');
  auto* opt_out = app.add_option("--out", out_dir, "output directory override");
  auto* opt_seed = app.add_option("--seed", seed, "random seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    wavegraph::RunConfig cfg = wavegraph::load_config(config_path);
    cfg.command = command;
    if (opt_T->count() > 0) cfg.T = T;
    if (opt_J->count() > 0) cfg.J = J;
    if (opt_K->count() > 0) cfg.K = K;
    if (opt_M->count() > 0) cfg.M_list = m_list;
    if (opt_out->count() > 0) cfg.out_dir = out_dir;
    if (opt_seed->count() > 0) cfg.seed = seed;

    const wavegraph::RunResult result = wavegraph::run(cfg);
    for (const auto& line : result.summary_lines) std::printf("%s\n", line.c_str());
    return result.all_pass ? 0 : 1;
  } catch (const wavegraph::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
