#pragma once

// Quantifies the failure of the naive space-time bilinear form to be
// inf-sup stable: along the resonant family f_j = phi_j sin(sqrt(mu_j) t)
// the solution stays O(1) in H^{1,1} while the dual norm of the datum
// decays like mu_j^{-1/2}, so the stability ratio grows without bound.
//
// For a single-spatial-mode datum the global dual norm over the tensor
// test space reduces exactly (by orthogonality of the eigenbasis) to a
// one-dimensional dual norm in t with the mu-weighted inner product
// ||w||_X^2 = int_0^T (w'^2 + mu w^2) dt, which is what this module
// computes; no multidimensional Riesz solve is needed.

#include <string_view>
#include <vector>

#include "wavegraph/eigenbasis.hpp"
#include "wavegraph/oracle.hpp"
#include "wavegraph/timefun.hpp"

namespace wavegraph {

// Per-mode test space: the span of (T - t) P_i(2t/T - 1), i = 0..K-1,
// inside H^1(0,T) with w(T) = 0, measured in the X inner product above.
struct TestSpaceMode {
  double mu = 0.0;
  double T = 0.0;
  int K = 0;
};

struct RatioRecord {
  int j = 0;
  double mu = 0.0;
  double h11_norm_u = 0.0;
  double dual_norm_f = 0.0;
  double ratio = 0.0;  // h11_norm_u / dual_norm_f
  int K = 0;
};

inline constexpr std::string_view kDualnormCsvHeader =
    "j,mu,h11_norm_u,dual_norm_f,ratio,K";

// sum_j int_0^T (-v_j' w_j' + mu_j v_j w_j) dt. Spatial orthonormality
// collapses the x-integral, so only ranks present in both fields contribute.
double a_h1(const SpaceTimeField& v, const SpaceTimeField& w);

// sup over the K-dimensional subspace of <g,w>_{L2} / ||w||_X, computed as
// sqrt(b^T G^{-1} b) with b_i = <g,w_i> and G the exact X-Gram matrix.
// Nondecreasing in K; bounded above by ||g||_{L2} / sqrt(mu).
double dual_norm_mode(const TrigPoly& g, const TestSpaceMode& mode);

// Same computation, also reporting the maximizing subspace element w* so
// callers can check <g,w*> / ||w*||_X against the returned value.
struct DualNormWitness {
  double value = 0.0;
  TrigPoly maximizer;
};
DualNormWitness dual_norm_witness(const TrigPoly& g, const TestSpaceMode& mode);

// Resonant-datum stability ratio for rank j: f = phi_j sin(sqrt(mu_j) t),
// u its solution, ratio = ||u||_{H^{1,1}} / dual norm of f.
RatioRecord infsup_ratio(int j, const BoxDomain& domain, double T, int K);

}  // namespace wavegraph
