#include "gsv/pair.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

#include "gsv/linalg.hpp"

namespace gsv {

DenseMatrix stack(const MatrixPair& pair) {
  const int m = pair.m(), p = pair.p(), n = pair.n();
  DenseMatrix s(m + p, n, pair.kind());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = pair.a()(i, j);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < n; ++j) s(m + i, j) = pair.b()(i, j);
  return s;
}

double GmpCertificate::stacked_condition() const {
  if (!is_gmp || stacked_singular_values.empty() || stacked_singular_values.back() <= 0.0)
    return std::numeric_limits<double>::infinity();
  return stacked_singular_values.front() / stacked_singular_values.back();
}

GmpCertificate certificate_from_singular_values(const std::vector<double>& sv, int m, int p,
                                                int n, RankTolerancePolicy policy) {
  GmpCertificate cert;
  cert.stacked_singular_values = sv;
  const double sigma_max = sv.empty() ? 0.0 : sv.front();
  if (policy.absolute) {
    cert.rank_tolerance = *policy.absolute;
  } else {
    const double eps = std::numeric_limits<double>::epsilon();
    cert.rank_tolerance = std::max<double>(m + p, n) * eps * sigma_max;
    // floor at sqrt(DBL_MIN): below this scale A^H A + B^H B underflows and
    // the GMP machinery is meaningless
    cert.rank_tolerance = std::max(cert.rank_tolerance, std::sqrt(DBL_MIN));
  }
  cert.numerical_rank = 0;
  for (double s : sv)
    if (s > cert.rank_tolerance) ++cert.numerical_rank;
  cert.is_gmp = (cert.numerical_rank == n);
  return cert;
}

GmpCertificate validate_gmp(const MatrixPair& pair, RankTolerancePolicy policy) {
  const int m = pair.m(), p = pair.p(), n = pair.n();
  if (m + p < n)
    throw NotGmp("pair cannot have rank " + std::to_string(n) + ": only " +
                 std::to_string(m + p) + " rows");
  pair.a().require_finite("validate_gmp(A)");
  pair.b().require_finite("validate_gmp(B)");
  return certificate_from_singular_values(singular_values_only(stack(pair)), m, p, n, policy);
}

}  // namespace gsv
