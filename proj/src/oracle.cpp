#include "wavegraph/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wavegraph {

namespace {

// Fixed-order compensated reduction so reports are reproducible.
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

}  // namespace

SpaceTimeField::SpaceTimeField(BoxDomain domain, double horizon)
    : domain_(std::move(domain)), horizon_(horizon) {
  if (!(horizon_ > 0.0)) {
    throw std::invalid_argument("SpaceTimeField: horizon must be positive");
  }
}

void SpaceTimeField::add_mode(const Eigenpair& pair, const TrigPoly& coeff) {
  if (pair.rank < 1) throw std::invalid_argument("SpaceTimeField: rank must be >= 1");
  if (static_cast<int>(pair.multi_index.size()) != domain_.dim()) {
    throw std::invalid_argument("SpaceTimeField: eigenpair dimension mismatch");
  }
  auto it = std::lower_bound(
      modes_.begin(), modes_.end(), pair.rank,
      [](const FieldMode& m, int rank) { return m.pair.rank < rank; });
  if (it != modes_.end() && it->pair.rank == pair.rank) {
    if (it->pair.multi_index != pair.multi_index || it->pair.mu != pair.mu) {
      throw std::invalid_argument("SpaceTimeField: conflicting eigenpair for rank " +
                                  std::to_string(pair.rank));
    }
    it->coeff += coeff;
    return;
  }
  modes_.insert(it, FieldMode{pair, coeff});
}

const FieldMode* SpaceTimeField::find_mode(int rank) const {
  auto it = std::lower_bound(
      modes_.begin(), modes_.end(), rank,
      [](const FieldMode& m, int r) { return m.pair.rank < r; });
  if (it == modes_.end() || it->pair.rank != rank) return nullptr;
  return &*it;
}

SpaceTimeField& SpaceTimeField::operator+=(const SpaceTimeField& rhs) {
  if (!(domain_ == rhs.domain_) || horizon_ != rhs.horizon_) {
    throw std::invalid_argument("SpaceTimeField: mismatched domain or horizon");
  }
  for (const auto& m : rhs.modes_) add_mode(m.pair, m.coeff);
  return *this;
}

SpaceTimeField& SpaceTimeField::operator-=(const SpaceTimeField& rhs) {
  if (!(domain_ == rhs.domain_) || horizon_ != rhs.horizon_) {
    throw std::invalid_argument("SpaceTimeField: mismatched domain or horizon");
  }
  for (const auto& m : rhs.modes_) add_mode(m.pair, -m.coeff);
  return *this;
}

double SpaceTimeField::evaluate(const std::vector<double>& x, double t) const {
  double sum = 0.0;
  for (const auto& m : modes_) {
    sum += eigenfunction_value(m.pair, domain_, x) * wavegraph::evaluate(m.coeff, t);
  }
  return sum;
}

NormReport NormReport::from_squares(double l2_sq, double dt_sq, double grad_sq,
                                    double box_sq, double dtt_sq) {
  NormReport r;
  r.l2 = std::sqrt(std::max(0.0, l2_sq));
  r.dt = std::sqrt(std::max(0.0, dt_sq));
  r.grad = std::sqrt(std::max(0.0, grad_sq));
  r.box = std::sqrt(std::max(0.0, box_sq));
  r.dtt = std::sqrt(std::max(0.0, dtt_sq));
  r.h11 = std::sqrt(std::max(0.0, dt_sq + grad_sq));
  r.graph = std::sqrt(std::max(0.0, dt_sq + grad_sq + box_sq));
  return r;
}

TrigPoly duhamel_mode(double mu, const TrigPoly& f_mode, double T) {
  if (!(mu > 0.0)) throw std::invalid_argument("duhamel_mode: mu must be positive");
  if (!(T > 0.0)) throw std::invalid_argument("duhamel_mode: T must be positive");
  if (f_mode.is_zero()) return TrigPoly::zero();
  const double a = std::sqrt(mu);
  const TrigPoly sin_at = TrigPoly::harmonic(1.0, 0, a, TrigKind::Sin);
  const TrigPoly cos_at = TrigPoly::harmonic(1.0, 0, a, TrigKind::Cos);
  // sin(a(t-s)) = sin(at)cos(as) - cos(at)sin(as); both running integrals stay
  // in the class, resonant collisions in the products fall onto frequency zero
  // and integrate to secular terms.
  const TrigPoly C = antiderivative(multiply(cos_at, f_mode));
  const TrigPoly S = antiderivative(multiply(sin_at, f_mode));
  return (multiply(sin_at, C) - multiply(cos_at, S)) * (1.0 / a);
}

SpaceTimeField solve_field(const SpaceTimeField& f) {
  SpaceTimeField u(f.domain(), f.horizon());
  for (const auto& m : f.modes()) {
    u.add_mode(m.pair, duhamel_mode(m.pair.mu, m.coeff, f.horizon()));
  }
  return u;
}

SpaceTimeField apply_box(const SpaceTimeField& u) {
  SpaceTimeField g(u.domain(), u.horizon());
  for (const auto& m : u.modes()) {
    g.add_mode(m.pair, differentiate(differentiate(m.coeff)) + m.coeff * m.pair.mu);
  }
  return g;
}

NormReport norms(const SpaceTimeField& u) {
  const double T = u.horizon();
  KahanSum l2, dt, grad, box, dtt;
  for (const auto& m : u.modes()) {
    const TrigPoly d1 = differentiate(m.coeff);
    const TrigPoly d2 = differentiate(d1);
    const double nsq = l2_norm_sq(m.coeff, T);
    l2.add(nsq);
    dt.add(l2_norm_sq(d1, T));
    grad.add(m.pair.mu * nsq);
    box.add(l2_norm_sq(d2 + m.coeff * m.pair.mu, T));
    dtt.add(l2_norm_sq(d2, T));
  }
  return NormReport::from_squares(l2.value(), dt.value(), grad.value(), box.value(),
                                  dtt.value());
}

}  // namespace wavegraph
