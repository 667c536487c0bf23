#include "wavegraph/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <utility>

#include <json.hpp>

#include "wavegraph/counterexample.hpp"
#include "wavegraph/dualnorm.hpp"
#include "wavegraph/eigenbasis.hpp"
#include "wavegraph/errors.hpp"
#include "wavegraph/lsq.hpp"
#include "wavegraph/oracle.hpp"
#include "wavegraph/sampling.hpp"
#include "wavegraph/timefun.hpp"

namespace wavegraph {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CommandOutput {
  std::vector<CheckLine> checks;
  std::vector<std::string> extra_header;
  // filename -> lines (without trailing newlines)
  std::vector<std::pair<std::string, std::vector<std::string>>> csv_files;
};

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_double(v[i]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void write_lines(const fs::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path.string());
  for (const auto& line : lines) out << line << '\n';
}

CheckLine check(std::string name, bool pass, std::string detail) {
  return CheckLine{std::move(name), pass, std::move(detail)};
}

// Largest canonical-term coefficient of (got - want) relative to want's scale.
double rel_coeff_error(const TrigPoly& got, const TrigPoly& want) {
  const double scale = std::max(want.max_abs_coeff(), 1e-300);
  return (got - want).max_abs_coeff() / scale;
}

// ---------------------------------------------------------------- verify ---

CommandOutput cmd_verify(const RunConfig& cfg) {
  const BoxDomain domain(cfg.domain);
  SeededRng rng(cfg.seed);
  constexpr double kTol = 1e-10;

  const double horizons[3] = {0.5, 1.0, std::numbers::pi};
  double worst_stab = 0.0;      // h11 / ((T/sqrt(2)) ||f||)
  double worst_equiv_hi = 0.0;  // graph / (sqrt(T^2/2+1) ||box u||)
  double worst_equiv_lo = 0.0;  // ||box u|| / graph
  double worst_rt_coeff = 0.0;  // per-mode coefficient error of box(solve(f)) vs f
  double worst_rt_norm = 0.0;   // | ||box u|| - ||f|| | / ||f||
  double worst_ic = 0.0;        // scaled |u_j(0)|, |u_j'(0)|

  for (int i = 0; i < 100; ++i) {
    const double T = horizons[i % 3];
    const SpaceTimeField f = random_source_field(rng, domain, T, FieldParams{});
    const SpaceTimeField u = solve_field(f);
    const NormReport nf = norms(f);
    const NormReport nu = norms(u);

    if (nf.l2 > 0.0) {
      worst_stab = std::max(worst_stab, nu.h11 / (T / std::numbers::sqrt2 * nf.l2));
      worst_rt_norm = std::max(worst_rt_norm, std::abs(nu.box - nf.l2) / nf.l2);
    }
    if (nu.box > 0.0) {
      worst_equiv_hi = std::max(worst_equiv_hi, nu.graph / (std::sqrt(T * T / 2.0 + 1.0) * nu.box));
    }
    if (nu.graph > 0.0) worst_equiv_lo = std::max(worst_equiv_lo, nu.box / nu.graph);

    const SpaceTimeField back = apply_box(u);
    for (const auto& m : f.modes()) {
      const FieldMode* bm = back.find_mode(m.pair.rank);
      if (bm == nullptr) {
        worst_rt_coeff = std::max(worst_rt_coeff, 1.0);
        continue;
      }
      worst_rt_coeff = std::max(worst_rt_coeff, rel_coeff_error(bm->coeff, m.coeff));
    }
    for (const auto& m : u.modes()) {
      const double scale = std::max(1.0, m.coeff.max_abs_coeff());
      worst_ic = std::max(worst_ic, std::abs(evaluate(m.coeff, 0.0)) / scale);
      worst_ic = std::max(worst_ic, std::abs(evaluate(differentiate(m.coeff), 0.0)) / scale);
    }
  }

  // Weak identity: the H1 form against single-mode tests vanishing at t = T.
  double worst_weak = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double T = cfg.T;
    const SpaceTimeField f = random_source_field(rng, domain, T, FieldParams{});
    const SpaceTimeField u = solve_field(f);
    for (const auto& m : f.modes()) {
      std::vector<TrigTerm> qt;
      for (int p = 0; p <= 2; ++p) {
        const double c = rng.uniform(-1.0, 1.0);
        qt.push_back(TrigTerm{T * c, p, 0.0, TrigKind::Cos});
        qt.push_back(TrigTerm{-c, p + 1, 0.0, TrigKind::Cos});
      }
      const TrigPoly psi = TrigPoly::from_terms(std::move(qt));  // psi(T) = 0
      SpaceTimeField w(domain, T);
      w.add_mode(m.pair, psi);
      const double lhs = a_h1(u, w);
      const double rhs = inner_product_0T(m.coeff, psi, T);
      const double denom = std::max(std::abs(lhs), std::abs(rhs));
      if (denom < 1e-13) continue;
      worst_weak = std::max(worst_weak, std::abs(lhs - rhs) / denom);
    }
  }

  // Projection Pythagoras on full-span least-squares instances.
  const int J_lsq = std::min(cfg.J, 6);
  const int K_lsq = std::min(cfg.K, 8);
  const TrialSpace space = build_trial_space(J_lsq, K_lsq, cfg.T);
  double worst_pyth = 0.0;
  for (int i = 0; i < 20; ++i) {
    FieldParams fp;
    fp.max_modes = J_lsq;
    const SpaceTimeField f = random_source_field(rng, domain, cfg.T, fp);
    const LsqSolution sol = solve(f, space);
    const double f_l2 = norms(f).l2;
    const double box_uh = norms(sol.u_h).box;
    const double lhs = box_uh * box_uh + sol.residual * sol.residual;
    worst_pyth = std::max(worst_pyth, std::abs(lhs - f_l2 * f_l2) / (f_l2 * f_l2));
  }

  CommandOutput out;
  out.checks.push_back(check("stability_bound", worst_stab <= 1.0 + kTol,
                             "worst_ratio=" + format_double(worst_stab) +
                                 " limit=" + format_double(1.0 + kTol)));
  out.checks.push_back(check("norm_equivalence",
                             worst_equiv_hi <= 1.0 + kTol && worst_equiv_lo <= 1.0 + kTol,
                             "worst_upper=" + format_double(worst_equiv_hi) +
                                 " worst_lower=" + format_double(worst_equiv_lo) +
                                 " limit=" + format_double(1.0 + kTol)));
  out.checks.push_back(check("round_trip", worst_rt_coeff < kTol && worst_rt_norm <= kTol,
                             "worst_coeff_err=" + format_double(worst_rt_coeff) +
                                 " worst_norm_err=" + format_double(worst_rt_norm) +
                                 " limit=" + format_double(kTol)));
  out.checks.push_back(check("initial_conditions", worst_ic <= kTol,
                             "worst=" + format_double(worst_ic) +
                                 " limit=" + format_double(kTol)));
  out.checks.push_back(check("weak_identity", worst_weak <= kTol,
                             "worst=" + format_double(worst_weak) +
                                 " limit=" + format_double(kTol)));
  out.checks.push_back(check("pythagoras", worst_pyth <= kTol,
                             "worst=" + format_double(worst_pyth) +
                                 " limit=" + format_double(kTol)));
  return out;
}

// -------------------------------------------------------- counterexample ---

CommandOutput cmd_counterexample(const RunConfig& cfg) {
  if (cfg.M_list.empty()) {
    throw UsageError("M_list: required and nonempty for the counterexample command");
  }
  if (cfg.M_list.size() < 4) {
    throw UsageError("M_list: needs at least 4 entries for the slope fit");
  }
  for (std::size_t i = 0; i < cfg.M_list.size(); ++i) {
    if (cfg.M_list[i] < 1 || (i > 0 && cfg.M_list[i] <= cfg.M_list[i - 1])) {
      throw UsageError("M_list: entries must be positive and strictly increasing");
    }
  }

  const BoxDomain domain(cfg.domain);
  const int d = domain.dim();
  const DivergenceDiagnostic diag = divergence_diagnostic(domain, cfg.T, cfg.M_list);

  std::vector<std::string> csv;
  csv.push_back(kCounterexampleCsvHeader);
  for (const auto& row : diag.rows) {
    csv.push_back(std::to_string(row.M) + ',' + format_double(row.l2_sq) + ',' +
                  format_double(row.dt_sq) + ',' + format_double(row.grad_sq) + ',' +
                  format_double(row.box_sq) + ',' + format_double(row.dtt_sq) + ',' +
                  format_double(row.ln_M));
  }

  bool monotone = true;
  for (std::size_t i = 1; i < diag.rows.size(); ++i) {
    if (!(diag.rows[i].dtt_sq > diag.rows[i - 1].dtt_sq)) monotone = false;
  }

  CommandOutput out;
  out.extra_header.push_back("M_list=" + join_ints(cfg.M_list));
  out.csv_files.emplace_back("counterexample.csv", std::move(csv));
  out.checks.push_back(check("dtt_monotone", monotone,
                             "rows=" + std::to_string(diag.rows.size())));
  if (d == 1) {
    const double target = cfg.T * cfg.T * cfg.T / (6.0 * std::numbers::pi);
    const double rel = std::abs(diag.dtt_slope_vs_lnM - target) / target;
    out.checks.push_back(check("dtt_slope", rel <= 0.02,
                               "slope=" + format_double(diag.dtt_slope_vs_lnM) +
                                   " target=" + format_double(target) +
                                   " rel_err=" + format_double(rel) + " limit=0.02"));
  } else {
    const double first = diag.rows.front().dtt_sq;
    const double last = diag.rows.back().dtt_sq;
    out.checks.push_back(check("dtt_growth", last > first,
                               "first=" + format_double(first) +
                                   " last=" + format_double(last)));
  }
  out.checks.push_back(check("tail_convergence", diag.last_step_max_rel_change < 1e-3,
                             "last_step_rel_change=" +
                                 format_double(diag.last_step_max_rel_change) +
                                 " limit=0.001"));
  return out;
}

// ------------------------------------------------------------------- lsq ---

CommandOutput cmd_lsq(const RunConfig& cfg) {
  if (cfg.K > 14) throw UsageError("K: the trial basis supports K <= 14");
  const BoxDomain domain(cfg.domain);

  const PartialSum ref = partial_sum(CounterexampleConfig{domain, cfg.T, cfg.J});
  const SpaceTimeField f = apply_box(ref.field);
  const double f_l2 = norms(f).l2;

  std::vector<std::string> csv;
  csv.push_back(kLsqCsvHeader);
  std::vector<double> residuals, box_norms, distances;
  for (int k = 1; k <= cfg.K; ++k) {
    const TrialSpace space = build_trial_space(cfg.J, k, cfg.T);
    const LsqSolution sol = solve(f, space);
    const double box_uh = norms(sol.u_h).box;
    const double dist = norms(ref.field - sol.u_h).graph;
    residuals.push_back(sol.residual);
    box_norms.push_back(box_uh);
    distances.push_back(dist);
    csv.push_back(std::to_string(k) + ',' + format_double(sol.residual) + ',' +
                  format_double(box_uh) + ',' + format_double(dist));
  }

  bool res_monotone = true;
  double worst_res_jump = 0.0;
  bool dist_monotone = true;
  double worst_dist_jump = 0.0;
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    const double rj = residuals[i] / std::max(residuals[i - 1], 1e-300);
    worst_res_jump = std::max(worst_res_jump, rj);
    if (residuals[i] > residuals[i - 1] * (1.0 + 1e-10)) res_monotone = false;
    const double dj = distances[i] / std::max(distances[i - 1], 1e-300);
    worst_dist_jump = std::max(worst_dist_jump, dj);
    if (distances[i] > distances[i - 1] * (1.0 + 1e-10)) dist_monotone = false;
  }
  double worst_pyth = 0.0;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    const double lhs = box_norms[i] * box_norms[i] + residuals[i] * residuals[i];
    worst_pyth = std::max(worst_pyth, std::abs(lhs - f_l2 * f_l2) / (f_l2 * f_l2));
  }
  const double worst_box = *std::max_element(box_norms.begin(), box_norms.end());

  CommandOutput out;
  out.csv_files.emplace_back("lsq.csv", std::move(csv));
  out.checks.push_back(check("residual_nonincreasing", res_monotone,
                             "worst_step_ratio=" + format_double(worst_res_jump)));
  out.checks.push_back(check("pythagoras", worst_pyth <= 1e-10,
                             "worst=" + format_double(worst_pyth) + " limit=" +
                                 format_double(1e-10)));
  out.checks.push_back(check("box_contraction", worst_box <= f_l2 * (1.0 + 1e-12),
                             "worst_box_norm=" + format_double(worst_box) +
                                 " datum_norm=" + format_double(f_l2)));
  out.checks.push_back(check("graph_distance_nonincreasing", dist_monotone,
                             "worst_step_ratio=" + format_double(worst_dist_jump)));
  return out;
}

// ---------------------------------------------------------------- infsup ---

CommandOutput cmd_infsup(const RunConfig& cfg) {
  const BoxDomain domain(cfg.domain);

  std::vector<std::string> csv;
  csv.push_back(std::string(kDualnormCsvHeader));
  std::vector<RatioRecord> records;
  for (int j = 1; j <= cfg.J; ++j) {
    records.push_back(infsup_ratio(j, domain, cfg.T, cfg.K));
    const RatioRecord& r = records.back();
    csv.push_back(std::to_string(r.j) + ',' + format_double(r.mu) + ',' +
                  format_double(r.h11_norm_u) + ',' + format_double(r.dual_norm_f) + ',' +
                  format_double(r.ratio) + ',' + std::to_string(r.K));
  }

  // The resonant datum sin(j pi t / ...) alternates between symmetric and
  // antisymmetric about T/2 with the parity of j, and the polynomial test
  // space resolves the two classes with slightly different boundary weights.
  // Growth is therefore monotone along each parity chain j -> j+2; adjacent
  // ranks of opposite parity may swap order by a few percent at large j.
  bool increasing = true;
  for (std::size_t i = 2; i < records.size(); ++i) {
    if (!(records[i].ratio > records[i - 2].ratio)) increasing = false;
  }
  if (records.size() > 1 && !(records[1].ratio > records[0].ratio)) increasing = false;
  const double growth = records.back().ratio / records.front().ratio;

  // Truncation diagnostic for the dual norm at the first rank's datum.
  const double mu1 = records.front().mu;
  const TrigPoly g = TrigPoly::harmonic(1.0, 0, std::sqrt(mu1), TrigKind::Sin);
  const int K_lo = std::max(1, cfg.K - 2);
  const double v_hi = dual_norm_mode(g, TestSpaceMode{mu1, cfg.T, cfg.K});
  const double v_lo = dual_norm_mode(g, TestSpaceMode{mu1, cfg.T, K_lo});
  const double conv = std::abs(v_hi - v_lo) / v_hi;

  CommandOutput out;
  out.csv_files.emplace_back("infsup.csv", std::move(csv));
  out.checks.push_back(check("ratio_increasing", increasing,
                             "first=" + format_double(records.front().ratio) +
                                 " last=" + format_double(records.back().ratio)));
  out.checks.push_back(check("ratio_growth", growth > 4.0,
                             "growth=" + format_double(growth) + " limit=4"));
  out.checks.push_back(check("dual_convergence", conv < 1e-6,
                             "K=" + std::to_string(cfg.K) + " vs " + std::to_string(K_lo) +
                                 " rel_diff=" + format_double(conv) + " limit=" +
                                 format_double(1e-6)));
  return out;
}

// ------------------------------------------------------------------ weyl ---

CommandOutput cmd_weyl(const RunConfig& cfg) {
  const BoxDomain domain(cfg.domain);
  const int d = domain.dim();
  const int J_fit = cfg.J_fit > 0 ? cfg.J_fit : 4 * cfg.J;
  if (J_fit < cfg.J) throw UsageError("J_fit: must be at least J");
  const int j_min = std::min(100, cfg.J);

  const auto eigs = enumerate_eigenpairs(domain, J_fit);
  const WeylFit fit = weyl_fit(eigs, d, j_min);

  bool inside = true;
  for (int j = j_min; j <= cfg.J; ++j) {
    const double ratio =
        eigs[static_cast<std::size_t>(j - 1)].mu / std::pow(double(j), 2.0 / d);
    if (ratio < fit.c1_hat || ratio > fit.c2_hat) inside = false;
  }

  // Counting cross-check against a direct lattice scan, at thresholds placed
  // strictly between consecutive distinct eigenvalues.
  bool counts_match = true;
  std::string count_detail;
  const int probes[3] = {cfg.J / 10, cfg.J / 2, cfg.J};
  for (int probe : probes) {
    if (probe < 1) continue;
    int r = probe;
    while (r + 1 <= J_fit &&
           !(eigs[static_cast<std::size_t>(r - 1)].mu < eigs[static_cast<std::size_t>(r)].mu)) {
      ++r;  // move past a tied cluster so the threshold separates cleanly
    }
    if (r + 1 > J_fit) continue;
    const double R = 0.5 * (eigs[static_cast<std::size_t>(r - 1)].mu +
                            eigs[static_cast<std::size_t>(r)].mu);
    // Brute-force lattice count of multi-indices with sum (k_i pi / L_i)^2 <= R.
    std::vector<int> bound(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
      bound[static_cast<std::size_t>(i)] =
          static_cast<int>(std::floor(domain.edge(i) * std::sqrt(R) / std::numbers::pi)) + 1;
    }
    long long count = 0;
    std::vector<int> k(static_cast<std::size_t>(d), 1);
    while (true) {
      double mu = 0.0;
      for (int i = 0; i < d; ++i) {
        const double w = k[static_cast<std::size_t>(i)] * std::numbers::pi / domain.edge(i);
        mu += w * w;
      }
      if (mu <= R) ++count;
      int axis = 0;
      while (axis < d) {
        if (++k[static_cast<std::size_t>(axis)] <= bound[static_cast<std::size_t>(axis)]) break;
        k[static_cast<std::size_t>(axis)] = 1;
        ++axis;
      }
      if (axis == d) break;
    }
    if (count != r) counts_match = false;
    if (!count_detail.empty()) count_detail += ' ';
    count_detail += "rank" + std::to_string(r) + ":" + std::to_string(count);
  }

  CommandOutput out;
  out.extra_header.push_back("J_fit=" + std::to_string(J_fit));
  out.checks.push_back(check("weyl_envelope", inside,
                             "c1_hat=" + format_double(fit.c1_hat) +
                                 " c2_hat=" + format_double(fit.c2_hat) +
                                 " spread=" + format_double(fit.c2_hat / fit.c1_hat) +
                                 " j_min=" + std::to_string(j_min)));
  out.checks.push_back(check("lattice_count", counts_match, count_detail));
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // collapse -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("config: parse error in '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config: top level must be an object");

  RunConfig cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& val = it.value();
    if (key == "command") {
      if (!val.is_string()) throw UsageError("command: must be a string");
      cfg.command = val.get<std::string>();
    } else if (key == "domain") {
      if (!val.is_array() || val.empty() || val.size() > 3) {
        throw UsageError("domain: must be an array of 1 to 3 edge lengths");
      }
      cfg.domain.clear();
      for (const auto& e : val) {
        if (!e.is_number() || !(e.get<double>() > 0.0)) {
          throw UsageError("domain: edge lengths must be positive numbers");
        }
        cfg.domain.push_back(e.get<double>());
      }
    } else if (key == "T") {
      if (!val.is_number() || !(val.get<double>() > 0.0)) {
        throw UsageError("T: must be a positive number");
      }
      cfg.T = val.get<double>();
    } else if (key == "J") {
      if (!val.is_number_integer() || val.get<int>() < 1) {
        throw UsageError("J: must be an integer >= 1");
      }
      cfg.J = val.get<int>();
    } else if (key == "K") {
      if (!val.is_number_integer() || val.get<int>() < 1) {
        throw UsageError("K: must be an integer >= 1");
      }
      cfg.K = val.get<int>();
    } else if (key == "M_list") {
      if (!val.is_array()) throw UsageError("M_list: must be an array of integers");
      cfg.M_list.clear();
      for (const auto& e : val) {
        if (!e.is_number_integer() || e.get<int>() < 1) {
          throw UsageError("M_list: entries must be integers >= 1");
        }
        cfg.M_list.push_back(e.get<int>());
      }
    } else if (key == "J_fit") {
      if (!val.is_number_integer() || val.get<int>() < 1) {
        throw UsageError("J_fit: must be an integer >= 1");
      }
      cfg.J_fit = val.get<int>();
    } else if (key == "out") {
      if (!val.is_string() || val.get<std::string>().empty()) {
        throw UsageError("out: must be a nonempty string");
      }
      cfg.out_dir = val.get<std::string>();
    } else if (key == "seed") {
      if (!val.is_number_unsigned() && !(val.is_number_integer() && val.get<long long>() >= 0)) {
        throw UsageError("seed: must be a nonnegative integer");
      }
      cfg.seed = val.get<std::uint64_t>();
    } else {
      throw UsageError("config: unknown field '" + key + "'");
    }
  }
  return cfg;
}

RunResult run(const RunConfig& cfg) {
  if (cfg.domain.empty() || cfg.domain.size() > 3) {
    throw UsageError("domain: needs 1 to 3 edge lengths");
  }
  for (double L : cfg.domain) {
    if (!(L > 0.0)) throw UsageError("domain: edge lengths must be positive");
  }
  if (!(cfg.T > 0.0)) throw UsageError("T: must be positive");
  if (cfg.J < 1) throw UsageError("J: must be >= 1");
  if (cfg.K < 1) throw UsageError("K: must be >= 1");
  if (cfg.out_dir.empty()) throw UsageError("out: must be nonempty");

  CommandOutput out;
  if (cfg.command == "verify") {
    out = cmd_verify(cfg);
  } else if (cfg.command == "counterexample") {
    out = cmd_counterexample(cfg);
  } else if (cfg.command == "lsq") {
    out = cmd_lsq(cfg);
  } else if (cfg.command == "infsup") {
    out = cmd_infsup(cfg);
  } else if (cfg.command == "weyl") {
    out = cmd_weyl(cfg);
  } else {
    throw UsageError("command: unknown '" + cfg.command +
                     "' (expected verify, counterexample, lsq, infsup or weyl)");
  }

  RunResult result;
  result.checks = out.checks;
  result.all_pass = std::all_of(out.checks.begin(), out.checks.end(),
                                [](const CheckLine& c) { return c.pass; });

  auto& lines = result.summary_lines;
  lines.push_back("command=" + cfg.command);
  lines.push_back("domain=" + join_doubles(cfg.domain));
  lines.push_back("T=" + format_double(cfg.T));
  lines.push_back("J=" + std::to_string(cfg.J));
  lines.push_back("K=" + std::to_string(cfg.K));
  lines.push_back("seed=" + std::to_string(cfg.seed));
  for (const auto& extra : out.extra_header) lines.push_back(extra);
  lines.push_back("");
  for (const auto& c : result.checks) {
    lines.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.name +
                    (c.detail.empty() ? "" : " " + c.detail));
  }
  lines.push_back(result.all_pass ? "RESULT PASS" : "RESULT FAIL");

  fs::create_directories(cfg.out_dir);
  for (const auto& [name, file_lines] : out.csv_files) {
    write_lines(fs::path(cfg.out_dir) / name, file_lines);
  }
  write_lines(fs::path(cfg.out_dir) / "summary.txt", lines);
  return result;
}

}  // namespace wavegraph
