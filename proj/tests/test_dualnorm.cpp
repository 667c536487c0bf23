#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "support/testutil.hpp"
#include "wavegraph/dualnorm.hpp"
#include "wavegraph/eigenbasis.hpp"
#include "wavegraph/errors.hpp"
#include "wavegraph/oracle.hpp"
#include "wavegraph/sampling.hpp"
#include "wavegraph/timefun.hpp"

using namespace wavegraph;
using testutil::rel_diff;

namespace {

constexpr double kPi = std::numbers::pi;

TrigPoly terminal_poly(double T, int q) {
  // (T - t) t^q, the polynomial test profile vanishing at T.
  return TrigPoly::from_terms({{T, q, 0.0, TrigKind::Cos}, {-1.0, q + 1, 0.0, TrigKind::Cos}});
}

}  // namespace

TEST_SUITE("dualnorm") {

TEST_CASE("bilinear form basics") {
  const BoxDomain domain({1.0});
  const auto eigs = enumerate_eigenpairs(domain, 2);
  const SpaceTimeField zero(domain, 1.0);
  SpaceTimeField v(domain, 1.0);
  v.add_mode(eigs[0], TrigPoly::harmonic(1.0, 0, 2.0, TrigKind::Sin));
  CHECK(a_h1(zero, v) == 0.0);
  CHECK(a_h1(v, zero) == 0.0);

  SpaceTimeField w(domain, 1.0);
  w.add_mode(eigs[1], terminal_poly(1.0, 0));
  CHECK(a_h1(v, w) == 0.0);

  const SpaceTimeField other(BoxDomain({2.0}), 1.0);
  CHECK_THROWS_AS(a_h1(v, other), std::invalid_argument);
  const SpaceTimeField longer(domain, 2.0);
  CHECK_THROWS_AS(a_h1(v, longer), std::invalid_argument);
}

TEST_CASE("bilinear form reproduces the weak identity") {
  const BoxDomain domain({1.0});
  SeededRng rng(55);
  const FieldParams params;
  for (int trial = 0; trial < 10; ++trial) {
    const double T = (trial % 2 == 0) ? 1.0 : kPi;
    const SpaceTimeField f = random_source_field(rng, domain, T, params);
    if (f.empty()) continue;
    const SpaceTimeField u = solve_field(f);
    SpaceTimeField w(domain, T);
    double rhs = 0.0;
    for (const auto& m : f.modes()) {
      const TrigPoly psi = terminal_poly(T, m.pair.rank % 3);
      w.add_mode(m.pair, psi);
      rhs += inner_product_0T(m.coeff, psi, T);
    }
    const double lhs = a_h1(u, w);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("dual norm of zero and the Cauchy-Schwarz ceiling") {
  const TestSpaceMode mode{4.0, 1.0, 8};
  CHECK(dual_norm_mode(TrigPoly::zero(), mode) == 0.0);

  SeededRng rng(66);
  const TrigPolyParams params{1, 3, 3, 20.0, -1.0, 1.0, true};
  for (int i = 0; i < 25; ++i) {
    const double mu = std::exp(rng.uniform(0.0, std::log(1e4)));
    const TrigPoly g = random_trig_poly(rng, params);
    const TestSpaceMode m{mu, 1.0, 12};
    const double value = dual_norm_mode(g, m);
    const double ceiling = std::sqrt(l2_norm_sq(g, 1.0) / mu);
    CHECK(value <= ceiling * (1.0 + 1e-12));
  }
}

TEST_CASE("resonant datum dual norm is converged at K = 12") {
  const TrigPoly g = TrigPoly::harmonic(1.0, 0, kPi, TrigKind::Sin);
  const double v12 = dual_norm_mode(g, {kPi * kPi, 1.0, 12});
  const double v10 = dual_norm_mode(g, {kPi * kPi, 1.0, 10});
  CHECK(rel_diff(v12, 0.18265574642849759) < 1e-12);
  CHECK(rel_diff(v12, v10) < 1e-6);
}

TEST_CASE("subspace sup is nondecreasing in K") {
  const TrigPoly g = TrigPoly::harmonic(1.0, 0, 10.0, TrigKind::Sin) + TrigPoly::monomial(0.5, 2);
  for (double mu : {1.0, 40.0}) {
    double prev = 0.0;
    for (int K = 1; K <= 13; ++K) {
      const double value = dual_norm_mode(g, {mu, 1.0, K});
      CHECK(value >= prev - 1e-13);
      prev = value;
    }
  }
}

TEST_CASE("witness attains the reported value") {
  const struct {
    TrigPoly g;
    double mu;
  } cases[] = {
      {TrigPoly::harmonic(1.0, 0, kPi, TrigKind::Sin), kPi * kPi},
      {TrigPoly::monomial(1.0, 2), 5.0},
      {TrigPoly::harmonic(1.0, 1, 7.0, TrigKind::Cos), 30.0},
  };
  for (const auto& c : cases) {
    const TestSpaceMode mode{c.mu, 1.0, 12};
    const DualNormWitness wit = dual_norm_witness(c.g, mode);
    REQUIRE(wit.value > 0.0);
    const double wx_sq =
        l2_norm_sq(differentiate(wit.maximizer), 1.0) + c.mu * l2_norm_sq(wit.maximizer, 1.0);
    const double attained = inner_product_0T(c.g, wit.maximizer, 1.0) / std::sqrt(wx_sq);
    CHECK(rel_diff(attained, wit.value) < 1e-10);
    CHECK(rel_diff(dual_norm_mode(c.g, mode), wit.value) < 1e-15);
  }
}

TEST_CASE("stability ratio escapes every constant") {
  const BoxDomain domain({1.0});
  for (double C : {1.0, 2.0, 4.0, 8.0}) {
    bool exceeded = false;
    for (int j = 1; j <= 64 && !exceeded; ++j) {
      const RatioRecord rec = infsup_ratio(j, domain, 1.0, 12);
      CHECK(rel_diff(rec.ratio, rec.h11_norm_u / rec.dual_norm_f) < 1e-14);
      if (rec.ratio > C) exceeded = true;
    }
    CHECK(exceeded);
  }
}

TEST_CASE("invalid subspaces are rejected") {
  const TrigPoly g = TrigPoly::constant(1.0);
  CHECK_THROWS_AS(dual_norm_mode(g, {1.0, 1.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dual_norm_mode(g, {0.0, 1.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(dual_norm_mode(g, {1.0, 0.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(infsup_ratio(0, BoxDomain({1.0}), 1.0, 4), std::invalid_argument);
}

TEST_CASE("a collapsed test basis is reported as rank deficient") {
  // At this horizon the affine-composed Legendre coefficients fall below the
  // canonical cleanup threshold, so every basis function degenerates to a
  // multiple of (T - t) and the Gram loses rank.
  const TrigPoly g = TrigPoly::constant(1.0);
  CHECK_THROWS_AS(dual_norm_mode(g, {1.0, 1e20, 6}), RankDeficiencyError);
}

}  // TEST_SUITE
