#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "support/testutil.hpp"
#include "wavegraph/eigenbasis.hpp"

using namespace wavegraph;
using testutil::rel_diff;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

// Lattice points k >= 1 with sum (k_i pi / L_i)^2 <= R, counted directly.
int lattice_count(const std::vector<double>& L, double R) {
  const int d = static_cast<int>(L.size());
  std::vector<int> bound(L.size());
  for (int i = 0; i < d; ++i) {
    bound[static_cast<std::size_t>(i)] =
        static_cast<int>(std::floor(L[static_cast<std::size_t>(i)] * std::sqrt(R) / kPi)) + 1;
  }
  int count = 0;
  std::vector<int> k(L.size(), 1);
  while (true) {
    double mu = 0.0;
    for (int i = 0; i < d; ++i) {
      const double w = k[static_cast<std::size_t>(i)] * kPi / L[static_cast<std::size_t>(i)];
      mu += w * w;
    }
    if (mu <= R) ++count;
    int axis = 0;
    while (axis < d) {
      if (++k[static_cast<std::size_t>(axis)] <= bound[static_cast<std::size_t>(axis)]) break;
      k[static_cast<std::size_t>(axis)] = 1;
      ++axis;
    }
    if (axis == d) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("eigenbasis") {

TEST_CASE("unit interval spectrum") {
  const BoxDomain domain({1.0});
  const auto eigs = enumerate_eigenpairs(domain, 3);
  REQUIRE(eigs.size() == 3);
  CHECK(rel_diff(eigs[0].mu, kPi2) < 1e-15);
  CHECK(rel_diff(eigs[1].mu, 4.0 * kPi2) < 1e-15);
  CHECK(rel_diff(eigs[2].mu, 9.0 * kPi2) < 1e-15);
  for (int j = 0; j < 3; ++j) {
    CHECK(eigs[static_cast<std::size_t>(j)].rank == j + 1);
    CHECK(eigs[static_cast<std::size_t>(j)].multi_index == std::vector<int>{j + 1});
  }
}

TEST_CASE("unit square spectrum with lexicographic ties") {
  const BoxDomain domain({1.0, 1.0});
  const auto eigs = enumerate_eigenpairs(domain, 4);
  REQUIRE(eigs.size() == 4);
  CHECK(rel_diff(eigs[0].mu, 2.0 * kPi2) < 1e-15);
  CHECK(rel_diff(eigs[1].mu, 5.0 * kPi2) < 1e-15);
  CHECK(rel_diff(eigs[2].mu, 5.0 * kPi2) < 1e-15);
  CHECK(rel_diff(eigs[3].mu, 8.0 * kPi2) < 1e-15);
  CHECK(eigs[0].multi_index == std::vector<int>{1, 1});
  CHECK(eigs[1].multi_index == std::vector<int>{1, 2});
  CHECK(eigs[2].multi_index == std::vector<int>{2, 1});
  CHECK(eigs[3].multi_index == std::vector<int>{2, 2});
}

TEST_CASE("interval of length pi has integer-square spectrum") {
  const auto eigs = enumerate_eigenpairs(BoxDomain({kPi}), 2);
  REQUIRE(eigs.size() == 2);
  CHECK(rel_diff(eigs[0].mu, 1.0) < 1e-15);
  CHECK(rel_diff(eigs[1].mu, 4.0) < 1e-15);
}

TEST_CASE("eigenfunction values") {
  const BoxDomain d1({1.0});
  const auto e1 = enumerate_eigenpairs(d1, 1);
  CHECK(rel_diff(eigenfunction_value(e1[0], d1, {0.5}), std::sqrt(2.0)) < 1e-15);
  CHECK(eigenfunction_value(e1[0], d1, {0.0}) == 0.0);
  CHECK(std::abs(eigenfunction_value(e1[0], d1, {1.0})) < 1e-15);

  const BoxDomain d2({1.0, 1.0});
  const auto e2 = enumerate_eigenpairs(d2, 1);
  CHECK(rel_diff(eigenfunction_value(e2[0], d2, {0.5, 0.5}), 2.0) < 1e-15);

  const BoxDomain d3({1.0, 1.0, 1.0});
  const auto e3 = enumerate_eigenpairs(d3, 1);
  CHECK(rel_diff(e3[0].mu, 3.0 * kPi2) < 1e-15);
  CHECK(rel_diff(eigenfunction_value(e3[0], d3, {0.5, 0.5, 0.5}), 2.0 * std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("eigenfunctions are L2 normalized") {
  using boost::math::quadrature::gauss_kronrod;
  const BoxDomain d1({kPi});
  for (const auto& pair : enumerate_eigenpairs(d1, 4)) {
    auto f = [&](double x) {
      const double v = eigenfunction_value(pair, d1, {x});
      return v * v;
    };
    const double mass = gauss_kronrod<double, 61>::integrate(f, 0.0, kPi, 10, 1e-14);
    CHECK(std::abs(mass - 1.0) < 1e-12);
  }

  const BoxDomain d2({1.0, 0.7});
  for (const auto& pair : enumerate_eigenpairs(d2, 3)) {
    auto outer = [&](double x1) {
      auto inner = [&](double x2) {
        const double v = eigenfunction_value(pair, d2, {x1, x2});
        return v * v;
      };
      return gauss_kronrod<double, 61>::integrate(inner, 0.0, 0.7, 10, 1e-14);
    };
    const double mass = gauss_kronrod<double, 61>::integrate(outer, 0.0, 1.0, 10, 1e-13);
    CHECK(std::abs(mass - 1.0) < 1e-12);
  }
}

TEST_CASE("enumeration is sorted and complete") {
  const BoxDomain domain({1.0, 0.6});
  const auto eigs = enumerate_eigenpairs(domain, 240);
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    CHECK(eigs[i].rank == static_cast<int>(i) + 1);
    if (i > 0) CHECK(eigs[i].mu >= eigs[i - 1].mu);
  }
  // At any strict gap the enumerated prefix must be exactly the sublevel set.
  int checked = 0;
  for (std::size_t i = 0; i + 1 < eigs.size() && checked < 5; ++i) {
    if (!(eigs[i].mu < eigs[i + 1].mu)) continue;
    if (eigs[i].rank < 150) continue;
    const int count = lattice_count(domain.edge_lengths(), eigs[i].mu * (1.0 + 1e-12));
    CHECK(count == eigs[i].rank);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("weyl fit on the interval is exact") {
  const auto eigs = enumerate_eigenpairs(BoxDomain({1.0}), 50);
  const WeylFit fit = weyl_fit(eigs, 1, 1);
  CHECK(rel_diff(fit.c1_hat, kPi2) < 1e-13);
  CHECK(rel_diff(fit.c2_hat, kPi2) < 1e-13);
}

TEST_CASE("weyl fit on four square modes") {
  const auto eigs = enumerate_eigenpairs(BoxDomain({1.0, 1.0}), 4);
  const WeylFit fit = weyl_fit(eigs, 2, 1);
  // Ratios mu_j / j are 2 pi^2, 5 pi^2/2, 5 pi^2/3, 2 pi^2.
  CHECK(rel_diff(fit.c1_hat, 5.0 * kPi2 / 3.0) < 1e-13);
  CHECK(rel_diff(fit.c2_hat, 5.0 * kPi2 / 2.0) < 1e-13);
}

TEST_CASE("weyl fit on the square, deep rank range") {
  const auto eigs = enumerate_eigenpairs(BoxDomain({1.0, 1.0}), 10000);
  CHECK(rel_diff(eigs[99].mu, 145.0 * kPi2) < 1e-13);
  CHECK(rel_diff(eigs[9999].mu, 12872.0 * kPi2) < 1e-13);
  const WeylFit fit = weyl_fit(eigs, 2, 100);
  CHECK(rel_diff(fit.c1_hat, 12.696134049637102) < 1e-9);
  CHECK(rel_diff(fit.c2_hat, 14.310926381579568) < 1e-9);
  CHECK(rel_diff(fit.c2_hat / fit.c1_hat, 1.1271877191615365) < 1e-9);
}

TEST_CASE("weyl envelope contains deep ranks in every dimension") {
  for (int d = 1; d <= 3; ++d) {
    const BoxDomain domain(std::vector<double>(static_cast<std::size_t>(d), 1.0));
    const auto eigs = enumerate_eigenpairs(domain, 40000);
    const WeylFit fit = weyl_fit(eigs, d, 100);
    CHECK(fit.c1_hat > 0.0);
    for (int j = 100; j <= 10000; ++j) {
      const double growth = std::pow(static_cast<double>(j), 2.0 / d);
      const double mu = eigs[static_cast<std::size_t>(j - 1)].mu;
      CHECK(fit.c1_hat * growth <= mu * (1.0 + 1e-12));
      CHECK(mu <= fit.c2_hat * growth * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(BoxDomain({}), std::invalid_argument);
  CHECK_THROWS_AS(BoxDomain({1.0, 1.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(BoxDomain({1.0, -2.0}), std::invalid_argument);
  const BoxDomain domain({1.0});
  CHECK_THROWS_AS(enumerate_eigenpairs(domain, 0), std::invalid_argument);
  const auto eigs = enumerate_eigenpairs(domain, 2);
  CHECK_THROWS_AS(eigenfunction_value(eigs[0], domain, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(eigenfunction_value(eigs[0], domain, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_fit(eigs, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(weyl_fit(eigs, 1, 3), std::invalid_argument);
}

}  // TEST_SUITE
