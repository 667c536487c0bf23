#include "wavegraph/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavegraph {

namespace {

class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// mu^{-d/4 - 1/2}, the modal weight of the series.
double mode_weight(double mu, int d) { return std::pow(mu, -0.25 * d - 0.5); }

}  // namespace

TrigPoly v_closed_form(double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("v_closed_form: mu must be positive");
  const double a = std::sqrt(mu);
  return TrigPoly::from_terms({
      {1.0 / mu, 0, a, TrigKind::Sin},
      {-1.0 / a, 1, a, TrigKind::Cos},
  });
}

ModeNormSet paper_norm_formulas(double mu, double T) {
  if (!(mu > 0.0)) throw std::invalid_argument("paper_norm_formulas: mu must be positive");
  if (!(T > 0.0)) throw std::invalid_argument("paper_norm_formulas: T must be positive");
  const double rt = std::sqrt(mu);
  const double s = std::sin(2.0 * T * rt);
  const double c = std::cos(2.0 * T * rt);
  const double T2 = T * T;
  const double T3 = T2 * T;
  ModeNormSet n;
  n.vj_sq = T3 / (6.0 * mu) + T2 * s / (4.0 * mu * rt) + T / (2.0 * mu * mu) -
            5.0 * s / (8.0 * mu * mu * rt) + 3.0 * T * c / (4.0 * mu * mu);
  n.dt_vj_sq = -T2 * s / (4.0 * rt) + s / (8.0 * mu * rt) - T * c / (4.0 * mu) + T3 / 6.0;
  n.dtt_vj_sq = T3 * mu / 6.0 + T2 * rt * s / 4.0 - s / (8.0 * rt) - T * c / 4.0 + T / 2.0;
  n.box_term = 2.0 * T - s / rt;
  return n;
}

PartialSum partial_sum(const CounterexampleConfig& config) {
  if (config.M < 1) throw std::invalid_argument("partial_sum: M must be >= 1");
  if (!(config.T > 0.0)) throw std::invalid_argument("partial_sum: T must be positive");
  const int d = config.domain.dim();
  const auto eigs = enumerate_eigenpairs(config.domain, config.M);

  SpaceTimeField field(config.domain, config.T);
  KahanSum l2, dt, grad, box, dtt;
  for (const auto& e : eigs) {
    const double w = mode_weight(e.mu, d);
    field.add_mode(e, v_closed_form(e.mu) * w);
    const ModeNormSet n = paper_norm_formulas(e.mu, config.T);
    const double w2 = w * w;  // mu^{-d/2-1}
    l2.add(w2 * n.vj_sq);
    dt.add(w2 * n.dt_vj_sq);
    grad.add(w2 * e.mu * n.vj_sq);
    box.add(w2 * n.box_term);
    dtt.add(w2 * n.dtt_vj_sq);
  }
  return PartialSum{std::move(field),
                    NormReport::from_squares(l2.value(), dt.value(), grad.value(),
                                             box.value(), dtt.value())};
}

DivergenceDiagnostic divergence_diagnostic(const BoxDomain& domain, double T,
                                           const std::vector<int>& M_list) {
  if (M_list.size() < 4) {
    throw std::invalid_argument("divergence_diagnostic: need at least 4 M values");
  }
  for (std::size_t i = 0; i + 1 < M_list.size(); ++i) {
    if (M_list[i + 1] <= M_list[i]) {
      throw std::invalid_argument("divergence_diagnostic: M_list must be strictly increasing");
    }
  }
  if (M_list.front() < 1) {
    throw std::invalid_argument("divergence_diagnostic: M values must be >= 1");
  }
  if (!(T > 0.0)) throw std::invalid_argument("divergence_diagnostic: T must be positive");

  const int d = domain.dim();
  const int M_max = M_list.back();
  const auto eigs = enumerate_eigenpairs(domain, M_max);

  DivergenceDiagnostic diag;
  KahanSum l2, dt, grad, box, dtt;
  std::size_t next = 0;
  for (int j = 1; j <= M_max; ++j) {
    const auto& e = eigs[static_cast<std::size_t>(j - 1)];
    const ModeNormSet n = paper_norm_formulas(e.mu, T);
    const double w2 = std::pow(e.mu, -0.5 * d - 1.0);
    l2.add(w2 * n.vj_sq);
    dt.add(w2 * n.dt_vj_sq);
    grad.add(w2 * e.mu * n.vj_sq);
    box.add(w2 * n.box_term);
    dtt.add(w2 * n.dtt_vj_sq);
    if (next < M_list.size() && j == M_list[next]) {
      diag.rows.push_back(DivergenceRow{j, l2.value(), dt.value(), grad.value(),
                                        box.value(), dtt.value(), std::log(double(j))});
      ++next;
    }
  }

  // Least-squares slope of dtt_sq against ln M.
  const double n = static_cast<double>(diag.rows.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& r : diag.rows) {
    sx += r.ln_M;
    sy += r.dtt_sq;
    sxx += r.ln_M * r.ln_M;
    sxy += r.ln_M * r.dtt_sq;
  }
  diag.dtt_slope_vs_lnM = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  const auto& last = diag.rows.back();
  const auto& prev = diag.rows[diag.rows.size() - 2];
  double rel = 0.0;
  const double pairs[4][2] = {{last.l2_sq, prev.l2_sq},
                              {last.dt_sq, prev.dt_sq},
                              {last.grad_sq, prev.grad_sq},
                              {last.box_sq, prev.box_sq}};
  for (const auto& p : pairs) {
    rel = std::max(rel, std::abs(p[0] - p[1]) / std::abs(p[0]));
  }
  diag.last_step_max_rel_change = rel;
  return diag;
}

}  // namespace wavegraph
