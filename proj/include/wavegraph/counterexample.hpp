#pragma once

// The witness series u_M = sum_{j<=M} phi_j mu_j^{-d/4-1/2} v_j(t) with
// v_j(t) = int_0^t s sin(sqrt(mu_j) s) ds. Its L2, d_t, grad and box norms
// converge as M grows while ||d_tt u_M||^2 accumulates a harmonic tail and
// diverges logarithmically; divergence_diagnostic pins the d=1 slope.

#include <cstdint>
#include <vector>

#include "wavegraph/eigenbasis.hpp"
#include "wavegraph/oracle.hpp"
#include "wavegraph/timefun.hpp"

namespace wavegraph {

struct CounterexampleConfig {
  BoxDomain domain;
  double T = 1.0;
  int M = 1;  // modes in the partial sum
};

// The four closed-form temporal quantities for one eigenvalue mu.
struct ModeNormSet {
  double vj_sq = 0.0;      // ||v_j||^2_{L2(0,T)}
  double dt_vj_sq = 0.0;   // ||v_j'||^2
  double dtt_vj_sq = 0.0;  // ||v_j''||^2
  double box_term = 0.0;   // 2T - sin(2T sqrt(mu))/sqrt(mu)
};

// v(t) = (sin(sqrt(mu) t) - sqrt(mu) t cos(sqrt(mu) t)) / mu, the running
// integral of s sin(sqrt(mu) s).
TrigPoly v_closed_form(double mu);

ModeNormSet paper_norm_formulas(double mu, double T);

// Builds u_M and its NormReport assembled from the closed forms (not from
// TrigPoly integration; the two agree and are cross-checked in tests).
struct PartialSum {
  SpaceTimeField field;
  NormReport report;
};
PartialSum partial_sum(const CounterexampleConfig& config);

struct DivergenceRow {
  std::int64_t M = 0;
  double l2_sq = 0.0;
  double dt_sq = 0.0;
  double grad_sq = 0.0;
  double box_sq = 0.0;
  double dtt_sq = 0.0;
  double ln_M = 0.0;
};

struct DivergenceDiagnostic {
  std::vector<DivergenceRow> rows;
  double dtt_slope_vs_lnM = 0.0;  // least-squares slope of dtt_sq against ln M
  // Relative change of the convergent squares over the final step in M_list.
  double last_step_max_rel_change = 0.0;
};

inline constexpr char kCounterexampleCsvHeader[] =
    "M,l2_sq,dt_sq,grad_sq,box_sq,dtt_sq,ln_M";

// Closed-form norm accumulation along strictly increasing M_list (at least 4
// entries); no fields are materialized, so M in the tens of thousands is cheap.
DivergenceDiagnostic divergence_diagnostic(const BoxDomain& domain, double T,
                                           const std::vector<int>& M_list);

}  // namespace wavegraph
