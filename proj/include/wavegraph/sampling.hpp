#pragma once

// Seeded random inputs for the property suites. Draws go through mt19937_64
// with explicit bit-to-double conversion, never through std distribution
// objects, so a given seed produces the same sequence on every platform and
// the reports built from these samples are byte-reproducible.

#include <cstdint>
#include <random>

#include "wavegraph/eigenbasis.hpp"
#include "wavegraph/oracle.hpp"
#include "wavegraph/timefun.hpp"

namespace wavegraph {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_bits() { return gen_(); }

  // Uniform in [lo, hi) with 53-bit resolution.
  double uniform(double lo, double hi);

  // Uniform in (0, hi]; never returns zero.
  double positive(double hi);

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 gen_;
};

struct TrigPolyParams {
  int min_terms = 1;
  int max_terms = 4;
  int max_power = 4;
  double freq_hi = 50.0;  // frequencies drawn from (0, freq_hi]
  double coeff_lo = -1.0;
  double coeff_hi = 1.0;
  bool allow_monomials = true;  // admit freq = 0 cosine terms (pure powers of t)
};

TrigPoly random_trig_poly(SeededRng& rng, const TrigPolyParams& params);

struct FieldParams {
  int max_modes = 20;
  TrigPolyParams poly{1, 3, 3, 40.0, -1.0, 1.0, true};
};

// Drawn frequencies closer than this to a mode's natural frequency sqrt(mu)
// are snapped onto it; see random_source_field.
inline constexpr double kResonanceGuard = 0.5;

// Source field on ranks 1..n for a random n <= max_modes, each mode carrying
// an independent random temporal function.
SpaceTimeField random_source_field(SeededRng& rng, const BoxDomain& domain, double T,
                                   const FieldParams& params);

}  // namespace wavegraph
