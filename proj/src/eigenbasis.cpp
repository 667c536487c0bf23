#include "wavegraph/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavegraph {

namespace {

constexpr double kPi = std::numbers::pi;

double box_mu(const std::vector<int>& k, const std::vector<double>& L) {
  double mu = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double w = k[i] * kPi / L[i];
    mu += w * w;
  }
  return mu;
}

// All multi-indices with k_i <= bound_i, as (mu, index) pairs.
void collect(const std::vector<double>& L, const std::vector<int>& bounds,
             std::vector<Eigenpair>& out) {
  const int d = static_cast<int>(L.size());
  std::vector<int> k(d, 1);
  while (true) {
    out.push_back(Eigenpair{k, box_mu(k, L), 0});
    int axis = d - 1;
    while (axis >= 0) {
      if (k[axis] < bounds[axis]) {
        ++k[axis];
        break;
      }
      k[axis] = 1;
      --axis;
    }
    if (axis < 0) break;
  }
}

bool eig_less(const Eigenpair& a, const Eigenpair& b) {
  if (a.mu != b.mu) return a.mu < b.mu;
  return a.multi_index < b.multi_index;
}

}  // namespace

BoxDomain::BoxDomain(std::vector<double> edge_lengths) : edges_(std::move(edge_lengths)) {
  if (edges_.empty() || edges_.size() > 3) {
    throw std::invalid_argument("BoxDomain: dimension must be 1, 2 or 3");
  }
  for (double L : edges_) {
    if (!(L > 0.0) || !std::isfinite(L)) {
      throw std::invalid_argument("BoxDomain: edge lengths must be positive");
    }
  }
}

std::vector<Eigenpair> enumerate_eigenpairs(const BoxDomain& domain, int count) {
  if (count < 1) throw std::invalid_argument("enumerate_eigenpairs: count must be >= 1");
  const auto& L = domain.edge_lengths();
  const int d = domain.dim();

  // Rectangular superset with at least `count` indices; its count-th smallest
  // eigenvalue caps the final sweep so no low mode of an anisotropic box is
  // missed.
  const int side = static_cast<int>(std::ceil(std::pow(double(count), 1.0 / d))) + 1;
  std::vector<Eigenpair> superset;
  collect(L, std::vector<int>(d, side), superset);
  std::nth_element(superset.begin(), superset.begin() + (count - 1), superset.end(),
                   eig_less);
  const double cap = superset[count - 1].mu;

  std::vector<int> bounds(d);
  for (int i = 0; i < d; ++i) {
    bounds[i] = std::max(1, static_cast<int>(std::ceil(L[i] * std::sqrt(cap) / kPi)));
  }
  std::vector<Eigenpair> all;
  collect(L, bounds, all);
  std::sort(all.begin(), all.end(), eig_less);
  all.resize(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) all[static_cast<std::size_t>(j)].rank = j + 1;
  return all;
}

double eigenfunction_value(const Eigenpair& pair, const BoxDomain& domain,
                           const std::vector<double>& x) {
  const auto& L = domain.edge_lengths();
  if (pair.multi_index.size() != L.size()) {
    throw std::invalid_argument("eigenfunction_value: index/domain dimension mismatch");
  }
  if (x.size() != L.size()) {
    throw std::invalid_argument("eigenfunction_value: point/domain dimension mismatch");
  }
  double v = 1.0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (x[i] < 0.0 || x[i] > L[i]) {
      throw std::invalid_argument("eigenfunction_value: point outside the box");
    }
    if (x[i] == 0.0 || x[i] == L[i]) return 0.0;  // exact Dirichlet trace
    v *= std::sqrt(2.0 / L[i]) * std::sin(pair.multi_index[i] * kPi * x[i] / L[i]);
  }
  return v;
}

WeylFit weyl_fit(const std::vector<Eigenpair>& eigs, int d, int j_min) {
  if (d < 1 || d > 3) throw std::invalid_argument("weyl_fit: d must be 1, 2 or 3");
  if (j_min < 1) throw std::invalid_argument("weyl_fit: j_min must be >= 1");
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const auto& e : eigs) {
    if (e.rank < j_min) continue;
    const double ratio = e.mu / std::pow(double(e.rank), 2.0 / d);
    if (!any) {
      lo = hi = ratio;
      any = true;
    } else {
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  if (!any) {
    throw std::invalid_argument("weyl_fit: no eigenvalues at or beyond j_min=" +
                                std::to_string(j_min));
  }
  return WeylFit{lo, hi, j_min};
}

}  // namespace wavegraph
