#pragma once

// Exact solution engine for the forced wave equation on a box, expanded in
// the Dirichlet eigenbasis. Each spatial mode decouples into the oscillator
// ODE u'' + mu u = f with homogeneous initial data, solved in closed form by
// the Duhamel convolution; spatial orthonormality turns every space-time norm
// into an exact sum of temporal integrals, so no quadrature enters anywhere.

#include <vector>

#include "wavegraph/eigenbasis.hpp"
#include "wavegraph/timefun.hpp"

namespace wavegraph {

// One spatial mode phi_j paired with its temporal coefficient function.
struct FieldMode {
  Eigenpair pair;
  TrigPoly coeff;
};

// u(x,t) = sum_j phi_j(x) u_j(t), finitely many modes.
class SpaceTimeField {
 public:
  SpaceTimeField(BoxDomain domain, double horizon);

  const BoxDomain& domain() const { return domain_; }
  double horizon() const { return horizon_; }
  const std::vector<FieldMode>& modes() const { return modes_; }
  bool empty() const { return modes_.empty(); }

  // Adds into the mode for pair.rank, inserting it if absent. The eigenpair
  // of an existing rank must match.
  void add_mode(const Eigenpair& pair, const TrigPoly& coeff);

  const FieldMode* find_mode(int rank) const;

  SpaceTimeField& operator+=(const SpaceTimeField& rhs);
  SpaceTimeField& operator-=(const SpaceTimeField& rhs);
  friend SpaceTimeField operator+(SpaceTimeField lhs, const SpaceTimeField& rhs) {
    return lhs += rhs;
  }
  friend SpaceTimeField operator-(SpaceTimeField lhs, const SpaceTimeField& rhs) {
    return lhs -= rhs;
  }

  double evaluate(const std::vector<double>& x, double t) const;

 private:
  BoxDomain domain_;
  double horizon_;
  std::vector<FieldMode> modes_;  // sorted by rank, unique
};

// The Bochner-space norms of a modal field (norms, not squares).
struct NormReport {
  double l2 = 0.0;    // ||u||_{L2(Q)}
  double dt = 0.0;    // ||d_t u||
  double grad = 0.0;  // ||grad_x u||
  double box = 0.0;   // ||(d_tt - Laplace) u||
  double dtt = 0.0;   // ||d_tt u||
  double h11 = 0.0;   // sqrt(dt^2 + grad^2)
  double graph = 0.0; // sqrt(dt^2 + grad^2 + box^2)

  static NormReport from_squares(double l2_sq, double dt_sq, double grad_sq,
                                 double box_sq, double dtt_sq);
};

// Closed-form solution of u'' + mu u = f_mode, u(0) = u'(0) = 0, via the
// convolution a^{-1} int_0^t sin(a(t-s)) f(s) ds with a = sqrt(mu). Exactly
// resonant forcing frequencies produce secular t*sin / t*cos terms.
TrigPoly duhamel_mode(double mu, const TrigPoly& f_mode, double T);

// Mode-wise Duhamel solve; the unique solution of the weak problem on the
// modal span, with box(u) = f.
SpaceTimeField solve_field(const SpaceTimeField& f);

// The wave operator: per mode u_j'' + mu_j u_j.
SpaceTimeField apply_box(const SpaceTimeField& u);

NormReport norms(const SpaceTimeField& u);

}  // namespace wavegraph
