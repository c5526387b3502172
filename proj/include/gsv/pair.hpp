#pragma once

#include <optional>
#include <vector>

#include "gsv/matrix.hpp"

namespace gsv {

/// A pair {A, B} sharing the column count n. A is m x n, B is p x n.
class MatrixPair {
public:
  MatrixPair(DenseMatrix a, DenseMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.cols() != b_.cols()) throw ShapeMismatch("matrix pair: column counts differ");
    if (a_.kind() != b_.kind()) throw InvalidInput("matrix pair: scalar kinds differ");
  }

  const DenseMatrix& a() const { return a_; }
  const DenseMatrix& b() const { return b_; }
  int m() const { return a_.rows(); }
  int p() const { return b_.rows(); }
  int n() const { return a_.cols(); }
  ScalarKind kind() const { return a_.kind(); }

private:
  DenseMatrix a_;
  DenseMatrix b_;
};

/// Vertical concatenation [A; B], (m+p) x n.
DenseMatrix stack(const MatrixPair& pair);

struct RankTolerancePolicy {
  // absolute cutoff on stacked singular values; when unset the default
  // max(m+p, n) * eps * sigma_max (floored at sqrt(DBL_MIN)) applies
  std::optional<double> absolute;
};

struct GmpCertificate {
  std::vector<double> stacked_singular_values;  // non-increasing
  int numerical_rank = 0;
  double rank_tolerance = 0.0;
  bool is_gmp = false;

  /// sigma_1 / sigma_n of the stacked matrix; +inf when rank deficient.
  double stacked_condition() const;
};

GmpCertificate validate_gmp(const MatrixPair& pair, RankTolerancePolicy policy = {});

/// Builds the certificate from precomputed stacked singular values, so a
/// caller that already ran the stacked SVD does not pay for a second one.
GmpCertificate certificate_from_singular_values(const std::vector<double>& sv, int m, int p,
                                                int n, RankTolerancePolicy policy = {});

}  // namespace gsv
