#include "wavegraph/sampling.hpp"

#include <stdexcept>

namespace wavegraph {

double SeededRng::uniform(double lo, double hi) {
  // Top 53 bits of the generator word give an exact dyadic in [0, 1).
  const double u = static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double SeededRng::positive(double hi) {
  const double u = static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
  return hi * (1.0 - u);
}

int SeededRng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  // Modulo bias is ~span/2^64, irrelevant for the small ranges used here.
  return lo + static_cast<int>(next_bits() % span);
}

TrigPoly random_trig_poly(SeededRng& rng, const TrigPolyParams& params) {
  const int n = rng.uniform_int(params.min_terms, params.max_terms);
  std::vector<TrigTerm> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    TrigTerm term;
    term.coeff = rng.uniform(params.coeff_lo, params.coeff_hi);
    term.power = rng.uniform_int(0, params.max_power);
    const int shape = rng.uniform_int(0, params.allow_monomials ? 2 : 1);
    if (shape == 2) {
      term.freq = 0.0;
      term.kind = TrigKind::Cos;
    } else {
      term.freq = rng.positive(params.freq_hi);
      term.kind = shape == 0 ? TrigKind::Sin : TrigKind::Cos;
    }
    terms.push_back(term);
  }
  return TrigPoly::from_terms(std::move(terms));
}

SpaceTimeField random_source_field(SeededRng& rng, const BoxDomain& domain, double T,
                                   const FieldParams& params) {
  const int n = rng.uniform_int(1, params.max_modes);
  const auto pairs = enumerate_eigenpairs(domain, n);
  SpaceTimeField f(domain, T);
  for (const auto& pair : pairs) {
    TrigPoly g = random_trig_poly(rng, params.poly);
    // A forcing frequency b just off the mode frequency a = sqrt(mu) makes the
    // exact solution carry coefficients ~ p! (2b)^{p+1} / (a^2-b^2)^{p+1} that
    // cancel pointwise, so its norms drown in roundoff. Draws inside the guard
    // band snap to exact resonance, whose secular form stays O(1)-scaled.
    const double a = std::sqrt(pair.mu);
    bool snapped = false;
    std::vector<TrigTerm> terms = g.terms();
    for (auto& t : terms) {
      if (t.freq > 0.0 && std::abs(t.freq - a) < kResonanceGuard) {
        t.freq = a;
        snapped = true;
      }
    }
    if (snapped) g = TrigPoly::from_terms(std::move(terms));
    f.add_mode(pair, g);
  }
  return f;
}

}  // namespace wavegraph
