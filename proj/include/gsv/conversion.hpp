#pragma once

#include <utility>
#include <vector>

#include "gsv/pair.hpp"

namespace gsv {

enum class Mode { Independent, Complementary };

struct GsvPair {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Blocks of the stacked SVD [A; B] = L Y K^H: l1 and l2 are the top m
/// and bottom p rows of the first n columns of L, so [l1; l2] has
/// orthonormal columns and the two Gram matrices sum to the identity.
struct StackedSvdParts {
  DenseMatrix l1;                           // m x n
  DenseMatrix l2;                           // p x n
  std::vector<double> stacked_singular_values;  // length n
  DenseMatrix k;                              // n x n right factor (columns)
  GmpCertificate certificate;
};

/// Runs the stacked SVD once, validates the full-column-rank condition from
/// its singular values and extracts the blocks. Throws NotGmp when the pair
/// is (numerically) rank deficient.
StackedSvdParts stacked_svd_parts(const MatrixPair& pair,
                                  RankTolerancePolicy policy = {});

struct GsvSpectrum {
  std::vector<GsvPair> pairs;       // alpha non-increasing, beta non-decreasing
  std::vector<double> gamma;        // singular values of L1, non-increasing
  std::vector<double> theta;        // singular values of L2, non-decreasing
  Mode mode = Mode::Complementary;
  std::vector<double> pair_sum_residuals;  // |alpha^2 + beta^2 - 1| per index
};

/// alpha_i from the singular values of L1 (zero padded past m), beta_i from
/// the singular values of L2 (zeros in the first n-p slots). In complementary
/// mode only the smaller block is decomposed and the partner follows from
/// alpha^2 + beta^2 = 1.
GsvSpectrum gsv_from_parts(const StackedSvdParts& parts, int m, int p, int n,
                           Mode mode = Mode::Complementary);

GsvSpectrum gsv(const MatrixPair& pair, Mode mode = Mode::Complementary);

/// Frobenius norms of A (A^H A + B^H B)^{-1/2} - L1^H K^H and the analogous
/// B expression. Diagnostic only; forming the Gram sum squares the condition
/// number, which the conversion route exists to avoid.
std::pair<double, double> unitary_equivalence_residual(const MatrixPair& pair,
                                                       const StackedSvdParts& parts);

/// Sorts pairs by alpha descending (beta ascending tie-break); used when two
/// spectra are compared as multisets.
std::vector<GsvPair> sorted_pairs(std::vector<GsvPair> pairs);

}  // namespace gsv
