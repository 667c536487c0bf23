#include "wavegraph/lsq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wavegraph/errors.hpp"
#include "legendre.hpp"

namespace wavegraph {

namespace {

constexpr double kPivotTol = 1e-12;

}  // namespace

TrialSpace build_trial_space(int J, int K, double T) {
  if (J < 1 || K < 1) throw std::invalid_argument("build_trial_space: J and K must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("build_trial_space: T must be positive");
  if (K > 14) {
    throw CapabilityError("build_trial_space: K = " + std::to_string(K) +
                          " exceeds the supported maximum of 14");
  }
  const auto legendre = detail::legendre_monomials(K - 1);
  TrialSpace space{J, K, T, {}};
  space.temporal_basis.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    const auto in_t = detail::compose_affine(legendre[static_cast<std::size_t>(k - 1)], T);
    std::vector<TrigTerm> terms;
    terms.reserve(in_t.size());
    for (std::size_t m = 0; m < in_t.size(); ++m) {
      terms.push_back(TrigTerm{in_t[m], static_cast<int>(m) + 2, 0.0, TrigKind::Cos});
    }
    TrigPoly psi = TrigPoly::from_terms(std::move(terms));
    psi *= 1.0 / std::sqrt(l2_norm_sq(psi, T));
    space.temporal_basis.push_back(std::move(psi));
  }
  return space;
}

ModeLsqResult solve_mode_lsq(double mu, const TrigPoly& f_mode, const TrialSpace& space) {
  if (!(mu > 0.0)) throw std::invalid_argument("solve_mode_lsq: mu must be positive");
  const int K = static_cast<int>(space.temporal_basis.size());
  if (K < 1) throw std::invalid_argument("solve_mode_lsq: empty trial space");
  const double T = space.T;

  std::vector<TrigPoly> images;
  images.reserve(static_cast<std::size_t>(K));
  for (const auto& psi : space.temporal_basis) {
    images.push_back(differentiate(differentiate(psi)) + psi * mu);
  }

  // Modified Gram-Schmidt with one reorthogonalization pass, in the exact
  // L2(0,T) inner product.
  std::vector<TrigPoly> q;
  q.reserve(static_cast<std::size_t>(K));
  std::vector<std::vector<double>> R(static_cast<std::size_t>(K),
                                     std::vector<double>(static_cast<std::size_t>(K), 0.0));
  double lead_pivot = 0.0;
  for (int k = 0; k < K; ++k) {
    TrigPoly v = images[static_cast<std::size_t>(k)];
    for (int pass = 0; pass < 2; ++pass) {
      for (int r = 0; r < k; ++r) {
        const double h = inner_product_0T(q[static_cast<std::size_t>(r)], v, T);
        v -= q[static_cast<std::size_t>(r)] * h;
        R[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] += h;
      }
    }
    const double nv = std::sqrt(l2_norm_sq(v, T));
    if (k == 0) lead_pivot = nv;
    if (!(nv > kPivotTol * lead_pivot)) {
      throw RankDeficiencyError(
          "solve_mode_lsq: image of basis function " + std::to_string(k + 1) +
              " is numerically dependent (pivot " + std::to_string(nv) + ")",
          k + 1);
    }
    R[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = nv;
    q.push_back(v * (1.0 / nv));
  }

  std::vector<double> beta(static_cast<std::size_t>(K), 0.0);
  for (int r = 0; r < K; ++r) {
    beta[static_cast<std::size_t>(r)] = inner_product_0T(f_mode, q[static_cast<std::size_t>(r)], T);
  }

  // Residual measured directly as ||f - sum beta_r q_r||, never as the
  // difference ||f||^2 - sum beta^2, whose noise floor is sqrt(eps)||f||.
  // All terms go through one canonicalize so its compensated merge absorbs
  // the coefficient-level cancellation; each product carries its fma low part
  // as a sibling term to keep the merge exact.
  std::vector<TrigTerm> res_terms(f_mode.terms());
  for (int r = 0; r < K; ++r) {
    const double b = beta[static_cast<std::size_t>(r)];
    for (const auto& t : q[static_cast<std::size_t>(r)].terms()) {
      const double h = -b * t.coeff;
      res_terms.push_back(TrigTerm{h, t.power, t.freq, t.kind});
      res_terms.push_back(TrigTerm{std::fma(-b, t.coeff, -h), t.power, t.freq, t.kind});
    }
  }
  const double res_sq = l2_norm_sq(TrigPoly::from_terms(std::move(res_terms)), T);

  // Back-substitute R c = beta.
  std::vector<double> c(static_cast<std::size_t>(K), 0.0);
  for (int k = K - 1; k >= 0; --k) {
    double s = beta[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < K; ++m) {
      s -= R[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(m)];
    }
    c[static_cast<std::size_t>(k)] = s / R[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }

  double pmax = 0.0, pmin = 0.0;
  for (int k = 0; k < K; ++k) {
    const double p = R[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    pmax = (k == 0) ? p : std::max(pmax, p);
    pmin = (k == 0) ? p : std::min(pmin, p);
  }

  ModeLsqResult result;
  result.coefficients = std::move(c);
  result.residual = std::sqrt(res_sq);
  result.pivot_ratio = pmax / pmin;
  return result;
}

LsqSolution solve(const SpaceTimeField& f, const TrialSpace& space, TruncationPolicy policy) {
  if (static_cast<int>(space.temporal_basis.size()) != space.K || space.K < 1) {
    throw std::invalid_argument("solve: malformed trial space");
  }
  if (f.horizon() != space.T) {
    throw std::invalid_argument("solve: field horizon does not match trial space");
  }

  LsqSolution sol{SpaceTimeField(f.domain(), f.horizon()), 0.0, {}, {}};
  double res_sq = 0.0;
  for (const auto& m : f.modes()) {
    if (m.pair.rank > space.J) {
      if (policy == TruncationPolicy::Strict) {
        throw std::invalid_argument("solve: mode rank " + std::to_string(m.pair.rank) +
                                    " lies beyond the trial span J=" +
                                    std::to_string(space.J) +
                                    " (use TruncationPolicy::Truncate)");
      }
      sol.dropped.emplace_back(m.pair.rank, std::sqrt(l2_norm_sq(m.coeff, space.T)));
      continue;
    }
    ModeLsqResult mode = solve_mode_lsq(m.pair.mu, m.coeff, space);
    mode.rank = m.pair.rank;
    TrigPoly u_mode;
    for (int k = 0; k < space.K; ++k) {
      u_mode += space.temporal_basis[static_cast<std::size_t>(k)] *
                mode.coefficients[static_cast<std::size_t>(k)];
    }
    sol.u_h.add_mode(m.pair, u_mode);
    res_sq += mode.residual * mode.residual;
    sol.per_mode.push_back(std::move(mode));
  }
  sol.residual = std::sqrt(res_sq);
  return sol;
}

}  // namespace wavegraph
