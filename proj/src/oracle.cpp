#include "gsv/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "gsv/kernels.hpp"
#include "gsv/linalg.hpp"

namespace gsv {

OracleResult oracle_gsv(const MatrixPair& pair) {
  pair.a().require_finite("oracle_gsv(A)");
  pair.b().require_finite("oracle_gsv(B)");
  const int n = pair.n();
  DenseMatrix g_a = gram(pair.a());
  DenseMatrix g_s = add_scaled(g_a, gram(pair.b()));
  PencilEig eig = hermitian_definite_eig(g_a, g_s);

  OracleResult result;
  result.eigenvalues_c2 = eig.values;
  result.pairs.resize(n);
  result.residuals.resize(n);
  for (int j = 0; j < n; ++j) {
    const double c2 = std::min(1.0, std::max(0.0, eig.values[j]));
    result.pairs[j] = GsvPair{std::sqrt(c2), std::sqrt(1.0 - c2)};

    DenseMatrix v(n, 1, eig.vectors.kind());
    for (int i = 0; i < n; ++i) v(i, 0) = eig.vectors(i, j);
    DenseMatrix r = add_scaled(multiply(g_a, v), multiply(g_s, v), -eig.values[j]);
    result.residuals[j] = frobenius_norm(r);
  }
  return result;
}

double det_residual(const MatrixPair& pair, double alpha, double beta) {
  if (alpha == 0.0 && beta == 0.0)
    throw InvalidInput("det_residual: (alpha, beta) must not be (0, 0)");
  DenseMatrix g_a = gram(pair.a());
  DenseMatrix g_b = gram(pair.b());
  DenseMatrix pencil(g_a.rows(), g_a.cols(), g_a.kind());
  const double b2 = beta * beta, a2 = alpha * alpha;
  for (size_t k = 0; k < pencil.size(); ++k)
    pencil.data()[k] = b2 * g_a.data()[k] - a2 * g_b.data()[k];
  pencil.enforce_kind();
  return singular_values_only(pencil).back();
}

std::vector<GsvPair> brute_force_gsv_diagonal(const std::vector<double>& d_a,
                                              const std::vector<double>& d_b) {
  if (d_a.size() != d_b.size())
    throw ShapeMismatch("brute_force_gsv_diagonal: lengths differ");
  std::vector<GsvPair> pairs(d_a.size());
  for (size_t i = 0; i < d_a.size(); ++i) {
    const double h = std::hypot(d_a[i], d_b[i]);
    if (h == 0.0) throw NotGmp("brute_force_gsv_diagonal: both diagonals zero at index " +
                               std::to_string(i));
    pairs[i] = GsvPair{std::abs(d_a[i]) / h, std::abs(d_b[i]) / h};
  }
  return sorted_pairs(std::move(pairs));
}

}  // namespace gsv
