#pragma once

// Conforming least squares in the wave-operator graph norm: per spatial mode,
// minimize ||psi'' + mu psi - f_j||_{L2(0,T)} over a polynomial-in-time trial
// space whose members vanish to second order at t = 0, so the discrete space
// sits inside the solution space and the projection identities hold exactly.

#include <utility>
#include <vector>

#include "wavegraph/eigenbasis.hpp"
#include "wavegraph/oracle.hpp"
#include "wavegraph/timefun.hpp"

namespace wavegraph {

struct TrialSpace {
  int J = 0;          // spatial modes
  int K = 0;          // temporal basis functions
  double T = 0.0;     // horizon
  std::vector<TrigPoly> temporal_basis;  // psi_k(0) = psi_k'(0) = 0
};

struct ModeLsqResult {
  int rank = 0;
  std::vector<double> coefficients;  // in the psi_k basis
  double residual = 0.0;             // ||psi'' + mu psi - f_j|| at the minimum
  double pivot_ratio = 1.0;          // leading/smallest orthonormalization pivot
};

struct LsqSolution {
  SpaceTimeField u_h;
  double residual = 0.0;  // ||box(u_h) - f_J||_{L2(Q)}
  std::vector<ModeLsqResult> per_mode;
  // Ranks of f beyond the trial span, dropped under TruncationPolicy::Truncate,
  // with the L2(Q) mass they carry.
  std::vector<std::pair<int, double>> dropped;
};

enum class TruncationPolicy { Strict, Truncate };

inline constexpr char kLsqCsvHeader[] = "K,residual,box_norm_uh,graph_dist_to_oracle";

// Temporal basis psi_k(t) = t^2 P_{k-1}(2t/T - 1), k = 1..K, Legendre P_i,
// each L2(0,T)-normalized. K is capped at 14 by the term power budget.
TrialSpace build_trial_space(int J, int K, double T);

// Least squares for one mode: orthonormalize the images g_k = psi_k'' + mu psi_k
// in the exact L2(0,T) inner product (modified Gram-Schmidt, reorthogonalized),
// project f_mode, back-substitute. Throws RankDeficiencyError when a pivot
// falls below 1e-12 of the leading pivot.
ModeLsqResult solve_mode_lsq(double mu, const TrigPoly& f_mode, const TrialSpace& space);

// Mode-wise solve over the first space.J ranks of f. Under Strict, modes of f
// beyond the span are an error; under Truncate they are dropped and reported.
LsqSolution solve(const SpaceTimeField& f, const TrialSpace& space,
                  TruncationPolicy policy = TruncationPolicy::Strict);

}  // namespace wavegraph
