#include "gsv/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gsv/kernels.hpp"

namespace gsv {

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass.
void orthonormalize_columns(DenseMatrix& q) {
  const int n = q.rows();
  for (int j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex proj(0.0, 0.0);
        for (int i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (int i = 0; i < n; ++i) q(i, j) /= nrm;
  }
}

std::vector<double> target_alphas(const PairGenSpec& spec, Rng& rng) {
  const int m = spec.m, p = spec.p, n = spec.n;
  std::vector<double> alpha;
  if (!spec.cluster_spec.empty()) {
    int total = 0;
    for (const auto& [value, mult] : spec.cluster_spec) {
      if (value <= 0.0 || value > 1.0)
        throw InfeasibleSpec("cluster values must lie in (0, 1]");
      if (mult <= 0) throw InfeasibleSpec("cluster multiplicities must be positive");
      total += mult;
      alpha.insert(alpha.end(), mult, value);
    }
    if (total != n) throw InfeasibleSpec("cluster multiplicities must sum to n");
  } else {
    const int forced_ones = std::max(n - p, 0);   // beta_i = 0 slots
    const int forced_zeros = std::max(n - m, 0);  // alpha padding slots
    if (forced_ones + forced_zeros > n)
      throw InfeasibleSpec("infeasible shape: m + p < n");
    const double lo = std::max(1e-3, 1.0 / spec.stacked_condition_target);
    alpha.assign(n, 0.0);
    std::fill(alpha.begin(), alpha.begin() + forced_ones, 1.0);
    for (int i = forced_ones; i < n - forced_zeros; ++i)
      alpha[i] = rng.log_uniform(std::min(lo, 0.999), 0.999);
  }
  std::sort(alpha.begin(), alpha.end(), std::greater<double>());

  const int nonzero_alpha = static_cast<int>(std::count_if(
      alpha.begin(), alpha.end(), [](double a) { return a > 0.0; }));
  const int nonzero_beta = static_cast<int>(std::count_if(
      alpha.begin(), alpha.end(), [](double a) { return a < 1.0; }));
  if (nonzero_alpha > std::min(m, n))
    throw InfeasibleSpec("more nonzero alpha targets than min(m, n)");
  if (nonzero_beta > std::min(p, n))
    throw InfeasibleSpec("more nonzero beta targets than min(p, n)");
  return alpha;
}

}  // namespace

DenseMatrix random_unitary(int n, ScalarKind kind, Rng& rng) {
  DenseMatrix q(n, n, kind);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      q(i, j) = kind == ScalarKind::Real ? Complex(rng.gaussian(), 0.0)
                                         : Complex(rng.gaussian(), rng.gaussian());
  orthonormalize_columns(q);
  return q;
}

GeneratedPair generate_pair(const PairGenSpec& spec) {
  if (spec.m <= 0 || spec.p <= 0 || spec.n <= 0)
    throw InfeasibleSpec("shape components must be positive");
  if (spec.m + spec.p < spec.n) throw InfeasibleSpec("m + p < n: no GMP exists");
  if (spec.stacked_condition_target < 1.0)
    throw InfeasibleSpec("stacked_condition_target must be >= 1");
  const int m = spec.m, p = spec.p, n = spec.n;

  Rng rng(spec.seed);
  std::vector<double> alpha = target_alphas(spec, rng);
  std::vector<double> beta(n);
  for (int i = 0; i < n; ++i) beta[i] = std::sqrt(1.0 - alpha[i] * alpha[i]);

  DenseMatrix u = random_unitary(m, spec.scalar_kind, rng);
  DenseMatrix v = random_unitary(p, spec.scalar_kind, rng);
  DenseMatrix w = random_unitary(n, spec.scalar_kind, rng);

  // D_alpha is m x n diagonal; D_beta is p x n with its diagonal pushed to
  // the right when p < n so the nonzero betas land on indices n-p..n-1
  DenseMatrix d_alpha(m, n, spec.scalar_kind);
  for (int i = 0; i < std::min(m, n); ++i) d_alpha(i, i) = alpha[i];
  DenseMatrix d_beta(p, n, spec.scalar_kind);
  for (int j = 0; j < std::min(p, n); ++j) {
    const int col = p < n ? n - p + j : j;
    d_beta(j, col) = beta[col];
  }

  DenseMatrix q1 = multiply(multiply(u, d_alpha), w, Op::None, Op::ConjTranspose);
  DenseMatrix q2 = multiply(multiply(v, d_beta), w, Op::None, Op::ConjTranspose);

  DenseMatrix a = q1, b = q2;
  if (spec.stacked_condition_target > 1.0) {
    DenseMatrix z1 = random_unitary(n, spec.scalar_kind, rng);
    DenseMatrix z2 = random_unitary(n, spec.scalar_kind, rng);
    // C = Z1 diag(logspace(1 .. 1/target)) Z2^H; GSVs are invariant under any
    // nonsingular right factor, so the planted targets survive
    DenseMatrix d(n, n, spec.scalar_kind);
    for (int i = 0; i < n; ++i)
      d(i, i) = n == 1 ? 1.0
                       : std::pow(spec.stacked_condition_target,
                                  -static_cast<double>(i) / (n - 1));
    DenseMatrix c = multiply(multiply(z1, d), z2, Op::None, Op::ConjTranspose);
    a = multiply(q1, c);
    b = multiply(q2, c);
  }

  std::vector<GsvPair> planted(n);
  for (int i = 0; i < n; ++i) planted[i] = GsvPair{alpha[i], beta[i]};
  return GeneratedPair{MatrixPair(std::move(a), std::move(b)), std::move(planted)};
}

}  // namespace gsv
