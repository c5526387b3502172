#pragma once

#include <vector>

#include "gsv/conversion.hpp"
#include "gsv/pair.hpp"

namespace gsv {

/// Reference GSVs computed straight from the defining pencil, independent of
/// the stacked-SVD route. Validates the conversion engine in tests and the
/// benchmark harness.
struct OracleResult {
  std::vector<GsvPair> pairs;          // alpha non-increasing
  std::vector<double> eigenvalues_c2;  // pencil eigenvalues in [0,1], non-increasing
  std::vector<double> residuals;       // ||G_A v - c^2 (G_A + G_B) v|| per pair
};

/// Solves G_A v = c^2 (G_A + G_B) v; the definite right-hand side exists
/// exactly when the pair has full stacked column rank. alpha = sqrt(c^2),
/// beta = sqrt(1 - c^2) after clamping c^2 to [0, 1].
OracleResult oracle_gsv(const MatrixPair& pair);

/// sigma_min(beta^2 A^H A - alpha^2 B^H B); near zero iff (alpha, beta) is in
/// the GSV spectrum. sigma_min stands in for the determinant, which is
/// useless in floating point at scale.
double det_residual(const MatrixPair& pair, double alpha, double beta);

/// Closed form for diagonal A, B: pair i is (|da_i|, |db_i|) normalized to
/// unit sum of squares. Sorted alpha non-increasing.
std::vector<GsvPair> brute_force_gsv_diagonal(const std::vector<double>& d_a,
                                              const std::vector<double>& d_b);

}  // namespace gsv
