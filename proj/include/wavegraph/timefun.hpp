#pragma once

// Exact algebra of trigonometric polynomials in t: finite sums of terms
// c * t^p * {sin|cos}(a t). The class is closed under differentiation,
// products (via product-to-sum identities) and antiderivatives, so every
// definite integral over (0,T) that appears in the norm computations is
// evaluated in closed form.

#include <cstdint>
#include <string>
#include <vector>

namespace wavegraph {

enum class TrigKind : std::uint8_t { Cos = 0, Sin = 1 };

// One term c * t^power * {sin|cos}(freq * t). freq == 0 with Cos encodes the
// pure monomial c * t^power; freq == 0 with Sin is identically zero and is
// canonicalized away.
struct TrigTerm {
  double coeff = 0.0;
  int power = 0;
  double freq = 0.0;
  TrigKind kind = TrigKind::Cos;
};

// Frequencies closer than this (relative) are treated as equal when products
// or merges collide; this is what turns an exactly resonant forcing into
// secular t*sin / t*cos terms instead of a huge-coefficient beat pair.
inline constexpr double kFreqRelTol = 1e-12;

// Coefficient cleanup: terms with |c| below this fraction of the largest
// coefficient in the polynomial are cancellation residue and are dropped.
inline constexpr double kCoeffRelTol = 1e-14;

// Cap on t-powers of explicitly constructed terms.
inline constexpr int kPowerCap = 16;

// Products and antiderivatives of capped polynomials may transiently exceed
// kPowerCap; the integration recurrences stay well-conditioned up to here.
inline constexpr int kEnginePowerCap = 34;

class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly zero() { return TrigPoly{}; }
  static TrigPoly constant(double c);
  static TrigPoly monomial(double c, int power);
  // c * t^power * {sin|cos}(freq * t)
  static TrigPoly harmonic(double c, int power, double freq, TrigKind kind);
  static TrigPoly from_terms(std::vector<TrigTerm> terms);

  const std::vector<TrigTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  double max_abs_coeff() const;

  TrigPoly& operator+=(const TrigPoly& rhs);
  TrigPoly& operator-=(const TrigPoly& rhs);
  TrigPoly& operator*=(double s);

  friend TrigPoly operator+(TrigPoly lhs, const TrigPoly& rhs) { return lhs += rhs; }
  friend TrigPoly operator-(TrigPoly lhs, const TrigPoly& rhs) { return lhs -= rhs; }
  friend TrigPoly operator*(TrigPoly lhs, double s) { return lhs *= s; }
  friend TrigPoly operator*(double s, TrigPoly rhs) { return rhs *= s; }
  TrigPoly operator-() const;

  // Human-readable sum, e.g. "1.5*t^2*cos(3.1415*t)". Debug aid only; the
  // format carries no stability guarantee.
  std::string to_string() const;

 private:
  friend TrigPoly multiply(const TrigPoly&, const TrigPoly&);
  friend TrigPoly differentiate(const TrigPoly&);
  friend TrigPoly antiderivative(const TrigPoly&);

  static TrigPoly make_internal(std::vector<TrigTerm> terms);
  void canonicalize();

  // Canonical order (freq, kind, power); no duplicate keys; cleaned.
  std::vector<TrigTerm> terms_;
};

// Exact term-by-term product-rule derivative.
TrigPoly differentiate(const TrigPoly& f);

// F with F' = f and F(0) = 0, inside the class.
TrigPoly antiderivative(const TrigPoly& f);

// Exact product via product-to-sum identities.
TrigPoly multiply(const TrigPoly& f, const TrigPoly& g);

// Exact value of \int_0^T f(t) dt, T > 0.
double integrate_0T(const TrigPoly& f, double T);

// \int_0^T f g dt == integrate_0T(multiply(f, g), T).
double inner_product_0T(const TrigPoly& f, const TrigPoly& g, double T);

// \int_0^T f^2 dt, clamped at zero against rounding residue.
double l2_norm_sq(const TrigPoly& f, double T);

double evaluate(const TrigPoly& f, double t);

}  // namespace wavegraph
