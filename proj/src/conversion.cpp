#include "gsv/conversion.hpp"

#include <algorithm>
#include <cmath>

#include "gsv/kernels.hpp"
#include "gsv/linalg.hpp"
#include "gsv/tolerances.hpp"

namespace gsv {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// alpha_i = gamma_i for i < min(m,n), zero afterwards
std::vector<double> alphas_from_gamma(const std::vector<double>& gamma, int n) {
  std::vector<double> alpha(n, 0.0);
  for (size_t i = 0; i < gamma.size() && i < static_cast<size_t>(n); ++i)
    alpha[i] = clamp01(gamma[i]);
  return alpha;
}

// beta gets n-p leading zeros when p < n, then theta ascending
std::vector<double> betas_from_theta(const std::vector<double>& theta, int p, int n) {
  std::vector<double> beta(n, 0.0);
  const int shift = std::max(n - p, 0);
  for (int i = 0; i + shift < n && i < static_cast<int>(theta.size()); ++i)
    beta[shift + i] = clamp01(theta[i]);
  return beta;
}

}  // namespace

StackedSvdParts stacked_svd_parts(const MatrixPair& pair, RankTolerancePolicy policy) {
  const int m = pair.m(), p = pair.p(), n = pair.n();
  if (m + p < n)
    throw NotGmp("pair cannot have rank " + std::to_string(n) + ": only " +
                 std::to_string(m + p) + " rows");
  pair.a().require_finite("stacked_svd_parts(A)");
  pair.b().require_finite("stacked_svd_parts(B)");

  SvdResult full = svd(stack(pair));
  GmpCertificate cert =
      certificate_from_singular_values(full.singular_values, m, p, n, policy);
  if (!cert.is_gmp)
    throw NotGmp("pair is not a Grassmann matrix pair: numerical rank " +
                 std::to_string(cert.numerical_rank) + " < n = " + std::to_string(n) +
                 " at tolerance " + std::to_string(cert.rank_tolerance));

  StackedSvdParts parts{submatrix(full.left, 0, 0, m, n),
                        submatrix(full.left, m, 0, p, n),
                        std::move(full.singular_values),
                        std::move(full.right),
                        std::move(cert)};
  return parts;
}

GsvSpectrum gsv_from_parts(const StackedSvdParts& parts, int m, int p, int n, Mode mode) {
  GsvSpectrum spec;
  spec.mode = mode;

  std::vector<double> alpha, beta;
  if (mode == Mode::Independent) {
    spec.gamma = singular_values_only(parts.l1);
    spec.theta = singular_values_only(parts.l2);
    std::sort(spec.theta.begin(), spec.theta.end());
    alpha = alphas_from_gamma(spec.gamma, n);
    beta = betas_from_theta(spec.theta, p, n);
  } else if (m <= p) {
    // decompose only the smaller block; the partner follows from a^2+b^2=1
    spec.gamma = singular_values_only(parts.l1);
    alpha = alphas_from_gamma(spec.gamma, n);
    beta.resize(n);
    // beta_1..beta_{n-p} are structurally zero; sqrt(1 - alpha^2) would smear
    // the O(eps) error in alpha into O(sqrt(eps)) there
    for (int i = 0; i < n; ++i)
      beta[i] = i < n - p ? 0.0 : std::sqrt(1.0 - alpha[i] * alpha[i]);
    spec.theta.assign(beta.begin() + std::max(n - p, 0), beta.end());
  } else {
    spec.theta = singular_values_only(parts.l2);
    std::sort(spec.theta.begin(), spec.theta.end());
    beta = betas_from_theta(spec.theta, p, n);
    alpha.resize(n);
    // alpha_{m+1}..alpha_n are structurally zero (see above)
    for (int i = 0; i < n; ++i)
      alpha[i] = i >= m ? 0.0 : std::sqrt(1.0 - beta[i] * beta[i]);
    spec.gamma.assign(alpha.begin(), alpha.begin() + std::min(m, n));
  }

  spec.pairs.resize(n);
  spec.pair_sum_residuals.resize(n);
  for (int i = 0; i < n; ++i) {
    spec.pairs[i] = GsvPair{alpha[i], beta[i]};
    spec.pair_sum_residuals[i] =
        mode == Mode::Independent
            ? std::abs(alpha[i] * alpha[i] + beta[i] * beta[i] - 1.0)
            : 0.0;
  }
  return spec;
}

GsvSpectrum gsv(const MatrixPair& pair, Mode mode) {
  StackedSvdParts parts = stacked_svd_parts(pair);
  return gsv_from_parts(parts, pair.m(), pair.p(), pair.n(), mode);
}

std::pair<double, double> unitary_equivalence_residual(const MatrixPair& pair,
                                                       const StackedSvdParts& parts) {
  const int n = pair.n();
  DenseMatrix s = add_scaled(gram(pair.a()), gram(pair.b()));
  cholesky(s);  // positive-definiteness gate

  PencilEig eig = hermitian_definite_eig(s, DenseMatrix::identity(n, s.kind()));
  // S^{-1/2} = V diag(lambda^{-1/2}) V^H
  DenseMatrix vs(n, n, s.kind());
  for (int j = 0; j < n; ++j) {
    if (eig.values[j] <= 0.0)
      throw NotPositiveDefinite("unitary_equivalence_residual: Gram sum is singular");
    const double w = 1.0 / std::sqrt(eig.values[j]);
    for (int i = 0; i < n; ++i) vs(i, j) = eig.vectors(i, j) * w;
  }
  DenseMatrix s_inv_half = multiply(vs, eig.vectors, Op::None, Op::ConjTranspose);

  DenseMatrix lhs_a = multiply(pair.a(), s_inv_half);
  DenseMatrix lhs_b = multiply(pair.b(), s_inv_half);
  DenseMatrix rhs_a = multiply(parts.l1, parts.k, Op::None, Op::ConjTranspose);
  DenseMatrix rhs_b = multiply(parts.l2, parts.k, Op::None, Op::ConjTranspose);
  return {frobenius_distance(lhs_a, rhs_a), frobenius_distance(lhs_b, rhs_b)};
}

std::vector<GsvPair> sorted_pairs(std::vector<GsvPair> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const GsvPair& x, const GsvPair& y) {
    if (x.alpha != y.alpha) return x.alpha > y.alpha;
    return x.beta < y.beta;
  });
  return pairs;
}

}  // namespace gsv
