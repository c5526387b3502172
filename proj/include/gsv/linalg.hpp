#pragma once

#include <vector>

#include "gsv/matrix.hpp"

namespace gsv {

/// Full SVD: M = left * diag_rect(singular_values) * right^H with square
/// unitary factors. `right` holds the right singular vectors as columns.
struct SvdResult {
  DenseMatrix left;
  std::vector<double> singular_values;  // non-increasing, >= 0
  DenseMatrix right;
};

SvdResult svd(const DenseMatrix& m);

std::vector<double> singular_values_only(const DenseMatrix& m);

/// Eigenpairs of the definite pencil G v = lambda S v (G Hermitian PSD,
/// S Hermitian positive definite). Column i of `vectors` pairs with
/// values[i]; values are sorted non-increasing.
struct PencilEig {
  std::vector<double> values;
  DenseMatrix vectors;
};

PencilEig hermitian_definite_eig(const DenseMatrix& g, const DenseMatrix& s);

/// Lower Cholesky factor with positive real diagonal; L L^H = S.
DenseMatrix cholesky(const DenseMatrix& s);

}  // namespace gsv
