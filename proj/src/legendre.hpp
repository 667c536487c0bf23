#pragma once

// Internal helpers: monomial coefficient tables for Legendre polynomials and
// their composition with the affine map onto (0,T). Shared by the trial and
// test basis builders; degrees stay small enough that the monomial form is
// exact to rounding.

#include <cstddef>
#include <utility>
#include <vector>

namespace wavegraph::detail {

// Ascending monomial coefficients of P_0..P_max_degree on [-1,1].
inline std::vector<std::vector<double>> legendre_monomials(int max_degree) {
  std::vector<std::vector<double>> P(static_cast<std::size_t>(max_degree) + 1);
  P[0] = {1.0};
  if (max_degree >= 1) P[1] = {0.0, 1.0};
  for (int i = 1; i < max_degree; ++i) {
    // (i+1) P_{i+1} = (2i+1) x P_i - i P_{i-1}
    std::vector<double> next(static_cast<std::size_t>(i) + 2, 0.0);
    const auto& cur = P[static_cast<std::size_t>(i)];
    const auto& prev = P[static_cast<std::size_t>(i) - 1];
    for (std::size_t m = 0; m < cur.size(); ++m) next[m + 1] += (2.0 * i + 1.0) * cur[m];
    for (std::size_t m = 0; m < prev.size(); ++m) next[m] -= double(i) * prev[m];
    for (auto& c : next) c /= (i + 1.0);
    P[static_cast<std::size_t>(i) + 1] = std::move(next);
  }
  return P;
}

// Coefficients in t of p(2t/T - 1) given ascending monomial coefficients of p.
inline std::vector<double> compose_affine(const std::vector<double>& p, double T) {
  std::vector<double> result{0.0};
  std::vector<double> pw{1.0};  // (2t/T - 1)^i
  const double a = 2.0 / T;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (result.size() < pw.size()) result.resize(pw.size(), 0.0);
    for (std::size_t m = 0; m < pw.size(); ++m) result[m] += p[i] * pw[m];
    std::vector<double> nxt(pw.size() + 1, 0.0);
    for (std::size_t m = 0; m < pw.size(); ++m) {
      nxt[m + 1] += a * pw[m];
      nxt[m] -= pw[m];
    }
    pw = std::move(nxt);
  }
  return result;
}

}  // namespace wavegraph::detail
