#include "wavegraph/timefun.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>
#include <tuple>

#include "wavegraph/errors.hpp"

namespace wavegraph {

namespace {

bool freq_equal(double a, double b) {
  return std::abs(a - b) <= kFreqRelTol * std::max(std::abs(a), std::abs(b));
}

void check_term(const TrigTerm& t, int power_cap) {
  if (!std::isfinite(t.coeff) || !std::isfinite(t.freq)) {
    throw std::invalid_argument("TrigTerm: coefficient and frequency must be finite");
  }
  if (t.freq < 0.0) {
    throw std::invalid_argument("TrigTerm: frequency must be nonnegative");
  }
  if (t.power < 0) {
    throw std::invalid_argument("TrigTerm: power must be nonnegative");
  }
  if (t.power > power_cap) {
    throw CapabilityError("TrigTerm: power " + std::to_string(t.power) +
                          " exceeds cap " + std::to_string(power_cap));
  }
}

bool term_order(const TrigTerm& a, const TrigTerm& b) {
  return std::tie(a.freq, a.kind, a.power) < std::tie(b.freq, b.kind, b.power);
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Moments \int_0^T t^p sin(a t) dt and \int_0^T t^p cos(a t) dt, a > 0.
// Both branches run the integration-by-parts recurrence in its stable
// direction: power lowered when the phase theta = a T dominates p, power
// raised (with a zero-seeded tail) otherwise.
struct Moments {
  double s;  // sine moment
  double c;  // cosine moment
};

Moments trig_moments(int p, double a, double T) {
  const double theta = a * T;
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  if (theta > std::max<double>(p, 1.0)) {
    // S(k) = -T^k cos(theta)/a + (k/a) C(k-1), C(k) = T^k sin(theta)/a - (k/a) S(k-1)
    double s = 2.0 * std::sin(0.5 * theta) * std::sin(0.5 * theta) / a;  // (1 - cos)/a
    double c = st / a;
    double Tk = 1.0;
    for (int k = 1; k <= p; ++k) {
      Tk *= T;
      const double sk = -Tk * ct / a + (k / a) * c;
      const double ck = Tk * st / a - (k / a) * s;
      s = sk;
      c = ck;
    }
    return {s, c};
  }
  // Normalized tail recurrence for \int_0^1 x^q trig(theta x) dx, seeded with
  // zero far enough up that the truncation error decays below roundoff.
  int n = 1;
  {
    double prod = 1.0;
    while (prod > 1e-22 && n < 512) {
      prod *= theta / (p + n);
      ++n;
    }
  }
  double sh = 0.0, ch = 0.0;
  for (int q = p + n - 1; q >= p; --q) {
    const double sq = st / (q + 1) - theta / (q + 1) * ch;
    const double cq = ct / (q + 1) + theta / (q + 1) * sh;
    sh = sq;
    ch = cq;
  }
  const double scale = ipow(T, p) * T;
  return {scale * sh, scale * ch};
}

void append_term(std::vector<TrigTerm>& out, double coeff, int power, double freq,
                 TrigKind kind) {
  if (coeff == 0.0) return;
  out.push_back(TrigTerm{coeff, power, freq, kind});
}

// Neumaier compensated accumulator. Orthogonal bases written in power form
// carry large alternating monomial coefficients, so sums of term products
// cancel by many orders of magnitude; plain summation would cap accuracy at
// eps * max|term| absolute.
struct CompSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Moment split into hi + lo so that a rounding in the moment itself is not
// amplified by a large coefficient: 1/(p+1) rounded once and multiplied by a
// coefficient product ~1e14 would alone cost ~1e-3 absolute.
struct SplitMoment {
  double hi = 0.0;
  double lo = 0.0;
};

// Adds c * m to acc with the multiply split exactly via fma.
void add_product(CompSum& acc, double c, const SplitMoment& m) {
  const double h = c * m.hi;
  acc.add(h);
  acc.add(std::fma(c, m.hi, -h));
  acc.add(c * m.lo);
}

}  // namespace

TrigPoly TrigPoly::constant(double c) { return monomial(c, 0); }

TrigPoly TrigPoly::monomial(double c, int power) {
  return harmonic(c, power, 0.0, TrigKind::Cos);
}

TrigPoly TrigPoly::harmonic(double c, int power, double freq, TrigKind kind) {
  TrigTerm t{c, power, freq, kind};
  check_term(t, kPowerCap);
  TrigPoly p;
  p.terms_.push_back(t);
  p.canonicalize();
  return p;
}

TrigPoly TrigPoly::from_terms(std::vector<TrigTerm> terms) {
  for (const auto& t : terms) check_term(t, kPowerCap);
  TrigPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

TrigPoly TrigPoly::make_internal(std::vector<TrigTerm> terms) {
  TrigPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

int TrigPoly::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.power);
  return d;
}

double TrigPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

void TrigPoly::canonicalize() {
  for (const auto& t : terms_) {
    if (t.power > kEnginePowerCap) {
      throw CapabilityError("TrigPoly: power " + std::to_string(t.power) +
                            " exceeds engine cap " + std::to_string(kEnginePowerCap));
    }
  }
  std::sort(terms_.begin(), terms_.end(), term_order);

  // Cluster near-equal frequencies onto the first (smallest) representative,
  // then merge identical (freq, kind, power) keys.
  std::vector<TrigTerm> merged;
  merged.reserve(terms_.size());
  std::size_t i = 0;
  while (i < terms_.size()) {
    const double rep = terms_[i].freq;
    std::size_t j = i;
    while (j < terms_.size() && freq_equal(terms_[j].freq, rep)) ++j;
    std::vector<TrigTerm> cluster(terms_.begin() + i, terms_.begin() + j);
    for (auto& t : cluster) t.freq = rep;
    std::sort(cluster.begin(), cluster.end(), term_order);
    std::size_t k = 0;
    while (k < cluster.size()) {
      std::size_t l = k;
      CompSum acc;
      while (l < cluster.size() && cluster[l].kind == cluster[k].kind &&
             cluster[l].power == cluster[k].power) {
        acc.add(cluster[l].coeff);
        ++l;
      }
      TrigTerm t = cluster[k];
      t.coeff = acc.value();
      merged.push_back(t);
      k = l;
    }
    i = j;
  }

  double maxc = 0.0;
  for (const auto& t : merged) maxc = std::max(maxc, std::abs(t.coeff));
  const double floor = kCoeffRelTol * maxc;

  terms_.clear();
  for (const auto& t : merged) {
    if (std::abs(t.coeff) <= floor || t.coeff == 0.0) continue;
    if (t.freq == 0.0 && t.kind == TrigKind::Sin) continue;  // identically zero
    terms_.push_back(t);
  }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& rhs) {
  terms_.reserve(terms_.size() + rhs.terms_.size());
  for (auto t : rhs.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(t);
  }
  canonicalize();
  return *this;
}

TrigPoly& TrigPoly::operator*=(double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("TrigPoly: scale must be finite");
  for (auto& t : terms_) t.coeff *= s;
  canonicalize();
  return *this;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

TrigPoly differentiate(const TrigPoly& f) {
  std::vector<TrigTerm> out;
  out.reserve(2 * f.terms_.size());
  for (const auto& t : f.terms_) {
    if (t.power > 0) {
      append_term(out, t.coeff * t.power, t.power - 1, t.freq, t.kind);
    }
    if (t.freq > 0.0) {
      if (t.kind == TrigKind::Sin) {
        append_term(out, t.coeff * t.freq, t.power, t.freq, TrigKind::Cos);
      } else {
        append_term(out, -t.coeff * t.freq, t.power, t.freq, TrigKind::Sin);
      }
    }
  }
  return TrigPoly::make_internal(std::move(out));
}

namespace {

// Antiderivative of one term, accumulated into out. The parts recurrence
// lowers the power; each level divides by the frequency.
void antider_term(std::vector<TrigTerm>& out, double coeff, int power, double freq,
                  TrigKind kind) {
  if (freq == 0.0) {
    if (power + 1 > kEnginePowerCap) {
      throw CapabilityError("antiderivative: power cap exceeded");
    }
    append_term(out, coeff / (power + 1), power + 1, 0.0, TrigKind::Cos);
    return;
  }
  double c = coeff;
  int p = power;
  TrigKind k = kind;
  while (true) {
    if (k == TrigKind::Sin) {
      // \int t^p sin = -t^p cos/a + (p/a) \int t^{p-1} cos
      append_term(out, -c / freq, p, freq, TrigKind::Cos);
      if (p == 0) break;
      c = c * p / freq;
      k = TrigKind::Cos;
      --p;
    } else {
      // \int t^p cos = t^p sin/a - (p/a) \int t^{p-1} sin
      append_term(out, c / freq, p, freq, TrigKind::Sin);
      if (p == 0) break;
      c = -c * p / freq;
      k = TrigKind::Sin;
      --p;
    }
  }
}

}  // namespace

TrigPoly antiderivative(const TrigPoly& f) {
  std::vector<TrigTerm> out;
  out.reserve(4 * f.terms_.size());
  for (const auto& t : f.terms_) {
    antider_term(out, t.coeff, t.power, t.freq, t.kind);
  }
  TrigPoly raw = TrigPoly::make_internal(std::move(out));
  const double at0 = evaluate(raw, 0.0);
  if (at0 != 0.0) {
    std::vector<TrigTerm> shifted = raw.terms();
    shifted.push_back(TrigTerm{-at0, 0, 0.0, TrigKind::Cos});
    raw = TrigPoly::make_internal(std::move(shifted));
  }
  return raw;
}

TrigPoly multiply(const TrigPoly& f, const TrigPoly& g) {
  std::vector<TrigTerm> out;
  out.reserve(2 * f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      const int p = a.power + b.power;
      if (p > kEnginePowerCap) {
        throw CapabilityError("multiply: power cap exceeded");
      }
      const double c = a.coeff * b.coeff;
      double diff = a.freq - b.freq;
      if (freq_equal(a.freq, b.freq)) diff = 0.0;
      const double sum = a.freq + b.freq;
      if (a.kind == TrigKind::Cos && b.kind == TrigKind::Cos) {
        // cos cos = (cos(a-b) + cos(a+b)) / 2
        append_term(out, 0.5 * c, p, std::abs(diff), TrigKind::Cos);
        append_term(out, 0.5 * c, p, sum, TrigKind::Cos);
      } else if (a.kind == TrigKind::Sin && b.kind == TrigKind::Sin) {
        // sin sin = (cos(a-b) - cos(a+b)) / 2
        append_term(out, 0.5 * c, p, std::abs(diff), TrigKind::Cos);
        append_term(out, -0.5 * c, p, sum, TrigKind::Cos);
      } else {
        // sin(a) cos(b) = (sin(a+b) + sin(a-b)) / 2, with a the Sin factor
        const double sgn = (a.kind == TrigKind::Sin) ? 1.0 : -1.0;
        append_term(out, 0.5 * c, p, sum, TrigKind::Sin);
        if (diff != 0.0) {
          append_term(out, 0.5 * c * (sgn * diff > 0.0 ? 1.0 : -1.0), p,
                      std::abs(diff), TrigKind::Sin);
        }
      }
    }
  }
  return TrigPoly::make_internal(std::move(out));
}

namespace {

// \int_0^T t^p trig(freq t) dt for a single canonical term shape. The
// zero-frequency moment T^{p+1}/(p+1) is returned with its division remainder
// in the lo part (exact whenever T^{p+1} is exact, e.g. T a power of two).
SplitMoment term_moment(int p, double freq, TrigKind kind, double T) {
  if (freq == 0.0) {
    if (kind == TrigKind::Sin) return {};
    const double pw = ipow(T, p) * T;
    const double n = p + 1;
    const double hi = pw / n;
    return {hi, -std::fma(hi, n, -pw) / n};
  }
  const Moments m = trig_moments(p, freq, T);
  return {kind == TrigKind::Sin ? m.s : m.c, 0.0};
}

}  // namespace

double integrate_0T(const TrigPoly& f, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("integrate_0T: T must be positive");
  CompSum acc;
  for (const auto& t : f.terms()) {
    add_product(acc, t.coeff, term_moment(t.power, t.freq, t.kind, T));
  }
  return acc.value();
}

// Pairwise product-to-sum expansion integrated termwise. Going through
// multiply() first would merge the raw product terms in plain arithmetic and
// lose the cancellation that this accumulator preserves.
double inner_product_0T(const TrigPoly& f, const TrigPoly& g, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("inner_product_0T: T must be positive");
  CompSum acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      const int p = a.power + b.power;
      if (p > kEnginePowerCap) {
        throw CapabilityError("inner_product_0T: power cap exceeded");
      }
      const double c = 0.5 * (a.coeff * b.coeff);
      const double ce = 0.5 * std::fma(a.coeff, b.coeff, -2.0 * c);
      double diff = a.freq - b.freq;
      if (freq_equal(a.freq, b.freq)) diff = 0.0;
      const double sum = a.freq + b.freq;
      if (a.kind == b.kind) {
        const double sgn = (a.kind == TrigKind::Sin) ? -1.0 : 1.0;
        SplitMoment m1 = term_moment(p, std::abs(diff), TrigKind::Cos, T);
        SplitMoment m2 = term_moment(p, sum, TrigKind::Cos, T);
        m2.hi *= sgn;
        m2.lo *= sgn;
        add_product(acc, c, m1);
        add_product(acc, ce, m1);
        add_product(acc, c, m2);
        add_product(acc, ce, m2);
      } else {
        const bool a_sin = (a.kind == TrigKind::Sin);
        const SplitMoment m1 = term_moment(p, sum, TrigKind::Sin, T);
        add_product(acc, c, m1);
        add_product(acc, ce, m1);
        if (diff != 0.0) {
          const double sgn = ((a_sin ? diff : -diff) > 0.0) ? 1.0 : -1.0;
          SplitMoment m2 = term_moment(p, std::abs(diff), TrigKind::Sin, T);
          m2.hi *= sgn;
          m2.lo *= sgn;
          add_product(acc, c, m2);
          add_product(acc, ce, m2);
        }
      }
    }
  }
  return acc.value();
}

double l2_norm_sq(const TrigPoly& f, double T) {
  const double v = inner_product_0T(f, f, T);
  return v > 0.0 ? v : 0.0;
}

double evaluate(const TrigPoly& f, double t) {
  double sum = 0.0;
  for (const auto& term : f.terms()) {
    double v = term.coeff * ipow(t, term.power);
    if (term.freq > 0.0) {
      v *= (term.kind == TrigKind::Sin) ? std::sin(term.freq * t)
                                        : std::cos(term.freq * t);
    }
    sum += v;
  }
  return sum;
}

std::string TrigPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  char buf[64];
  auto fmt = [&](double x) {
    auto r = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, r.ptr);
  };
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) s += (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) s += "-";
    s += fmt(std::abs(t.coeff));
    if (t.power > 0) {
      s += "*t";
      if (t.power > 1) s += "^" + std::to_string(t.power);
    }
    if (t.freq > 0.0) {
      s += (t.kind == TrigKind::Sin) ? "*sin(" : "*cos(";
      s += fmt(t.freq);
      s += "*t)";
    }
  }
  return s;
}

}  // namespace wavegraph
