#include "wavegraph/dualnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wavegraph/errors.hpp"
#include "legendre.hpp"

namespace wavegraph {

namespace {

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

// w_i = (T - t) P_i(2t/T - 1), i = 0..K-1; vanish at t = T by construction.
std::vector<TrigPoly> test_basis(double T, int K) {
  const auto legendre = detail::legendre_monomials(K - 1);
  std::vector<TrigPoly> basis;
  basis.reserve(static_cast<std::size_t>(K));
  for (int i = 0; i < K; ++i) {
    const auto in_t = detail::compose_affine(legendre[static_cast<std::size_t>(i)], T);
    std::vector<TrigTerm> terms;
    terms.reserve(2 * in_t.size());
    for (std::size_t m = 0; m < in_t.size(); ++m) {
      terms.push_back(TrigTerm{T * in_t[m], static_cast<int>(m), 0.0, TrigKind::Cos});
      terms.push_back(TrigTerm{-in_t[m], static_cast<int>(m) + 1, 0.0, TrigKind::Cos});
    }
    basis.push_back(TrigPoly::from_terms(std::move(terms)));
  }
  return basis;
}

}  // namespace

double a_h1(const SpaceTimeField& v, const SpaceTimeField& w) {
  if (!(v.domain() == w.domain()) || v.horizon() != w.horizon()) {
    throw std::invalid_argument("a_h1: fields live on different cylinders");
  }
  const double T = v.horizon();
  KahanSum acc;
  for (const auto& vm : v.modes()) {
    const FieldMode* wm = w.find_mode(vm.pair.rank);
    if (wm == nullptr) continue;
    const double cross = inner_product_0T(differentiate(vm.coeff), differentiate(wm->coeff), T);
    const double mass = inner_product_0T(vm.coeff, wm->coeff, T);
    acc.add(vm.pair.mu * mass - cross);
  }
  return acc.value();
}

DualNormWitness dual_norm_witness(const TrigPoly& g, const TestSpaceMode& mode) {
  if (mode.K < 1) throw std::invalid_argument("dual_norm: subspace dimension K must be >= 1");
  if (!(mode.mu > 0.0)) throw std::invalid_argument("dual_norm: mu must be positive");
  if (!(mode.T > 0.0)) throw std::invalid_argument("dual_norm: T must be positive");
  const int K = mode.K;
  const double T = mode.T;

  const auto basis = test_basis(T, K);
  std::vector<TrigPoly> dbasis;
  dbasis.reserve(basis.size());
  for (const auto& w : basis) dbasis.push_back(differentiate(w));

  // Exact X-Gram and load vector.
  std::vector<std::vector<double>> G(static_cast<std::size_t>(K),
                                     std::vector<double>(static_cast<std::size_t>(K), 0.0));
  std::vector<double> b(static_cast<std::size_t>(K), 0.0);
  double diag_max = 0.0;
  for (int i = 0; i < K; ++i) {
    for (int k = i; k < K; ++k) {
      const double entry =
          inner_product_0T(dbasis[static_cast<std::size_t>(i)], dbasis[static_cast<std::size_t>(k)], T) +
          mode.mu * inner_product_0T(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(k)], T);
      G[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = entry;
      G[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = entry;
    }
    diag_max = std::max(diag_max, G[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    b[static_cast<std::size_t>(i)] = inner_product_0T(g, basis[static_cast<std::size_t>(i)], T);
  }

  // Cholesky G = L L^T; a tiny pivot means the projected basis is dependent.
  std::vector<std::vector<double>> L(static_cast<std::size_t>(K),
                                     std::vector<double>(static_cast<std::size_t>(K), 0.0));
  for (int i = 0; i < K; ++i) {
    for (int k = 0; k <= i; ++k) {
      double s = G[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      for (int m = 0; m < k; ++m) {
        s -= L[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] *
             L[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
      }
      if (i == k) {
        if (!(s > 1e-14 * diag_max)) {
          throw RankDeficiencyError(
              "dual_norm: Gram pivot " + std::to_string(s) + " at basis function " +
                  std::to_string(i + 1) + " (numerically dependent test basis)",
              i + 1);
        }
        L[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = std::sqrt(s);
      } else {
        L[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            s / L[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
      }
    }
  }

  // Forward solve L y = b: value^2 = b^T G^{-1} b = ||y||^2.
  std::vector<double> y(static_cast<std::size_t>(K), 0.0);
  for (int i = 0; i < K; ++i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int m = 0; m < i; ++m) {
      s -= L[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] * y[static_cast<std::size_t>(m)];
    }
    y[static_cast<std::size_t>(i)] = s / L[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  double val_sq = 0.0;
  for (double yi : y) val_sq += yi * yi;

  // Back solve L^T z = y: z are the Riesz coefficients of the maximizer.
  std::vector<double> z(static_cast<std::size_t>(K), 0.0);
  for (int i = K - 1; i >= 0; --i) {
    double s = y[static_cast<std::size_t>(i)];
    for (int m = i + 1; m < K; ++m) {
      s -= L[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(m)];
    }
    z[static_cast<std::size_t>(i)] = s / L[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }

  DualNormWitness out;
  out.value = std::sqrt(std::max(0.0, val_sq));
  for (int i = 0; i < K; ++i) {
    out.maximizer += basis[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
  }
  return out;
}

double dual_norm_mode(const TrigPoly& g, const TestSpaceMode& mode) {
  return dual_norm_witness(g, mode).value;
}

RatioRecord infsup_ratio(int j, const BoxDomain& domain, double T, int K) {
  if (j < 1) throw std::invalid_argument("infsup_ratio: rank j must be >= 1");
  if (K < 1) throw std::invalid_argument("infsup_ratio: subspace dimension K must be >= 1");
  const auto pairs = enumerate_eigenpairs(domain, j);
  const Eigenpair& pair = pairs[static_cast<std::size_t>(j - 1)];
  const double a = std::sqrt(pair.mu);

  const TrigPoly f_t = TrigPoly::harmonic(1.0, 0, a, TrigKind::Sin);
  SpaceTimeField f(domain, T);
  f.add_mode(pair, f_t);
  const NormReport u_norms = norms(solve_field(f));
  const double dual = dual_norm_mode(f_t, TestSpaceMode{pair.mu, T, K});

  RatioRecord rec;
  rec.j = j;
  rec.mu = pair.mu;
  rec.h11_norm_u = u_norms.h11;
  rec.dual_norm_f = dual;
  rec.ratio = u_norms.h11 / dual;
  rec.K = K;
  return rec;
}

}  // namespace wavegraph
