#pragma once

// Dirichlet Laplace eigenpairs on axis-aligned boxes. On a box the spectrum
// is explicit: mu = sum_i (k_i pi / L_i)^2 with the L2-normalized tensor sine
// eigenfunctions prod_i sqrt(2/L_i) sin(k_i pi x_i / L_i). Eigenvalues exceed
// the counting-function growth mu_j ~ j^{2/d}; weyl_fit pins the observed
// two-sided constants on a rank range.

#include <array>
#include <cstddef>
#include <vector>

namespace wavegraph {

class BoxDomain {
 public:
  explicit BoxDomain(std::vector<double> edge_lengths);

  int dim() const { return static_cast<int>(edges_.size()); }
  const std::vector<double>& edge_lengths() const { return edges_; }
  double edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  bool operator==(const BoxDomain& other) const { return edges_ == other.edges_; }

 private:
  std::vector<double> edges_;
};

struct Eigenpair {
  std::vector<int> multi_index;  // k_i >= 1
  double mu = 0.0;
  int rank = 0;  // 1-based, ascending in mu, ties lexicographic in multi_index
};

struct WeylFit {
  double c1_hat = 0.0;
  double c2_hat = 0.0;
  int j_min = 1;  // first rank used
};

// The count smallest eigenvalues (with multiplicity), sorted ascending,
// deterministic lexicographic tie-break, ranks 1..count.
std::vector<Eigenpair> enumerate_eigenpairs(const BoxDomain& domain, int count);

// Value of the normalized tensor sine eigenfunction at x (inside the closed box).
double eigenfunction_value(const Eigenpair& pair, const BoxDomain& domain,
                           const std::vector<double>& x);

// Two-sided envelope of mu_j / j^{2/d} over ranks j >= j_min.
WeylFit weyl_fit(const std::vector<Eigenpair>& eigs, int d, int j_min);

}  // namespace wavegraph
