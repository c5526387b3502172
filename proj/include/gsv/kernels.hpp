#pragma once

#include "gsv/matrix.hpp"

namespace gsv {

enum class Op { None, ConjTranspose };

// Dense level-3 style kernels. Each has a serial reference version and an
// OpenMP version; the unsuffixed entry point dispatches on problem size.
// tests/test_kernels.cpp checks the two against each other and
// tools/kernel_bench.cpp times them.

DenseMatrix multiply_serial(const DenseMatrix& a, const DenseMatrix& b,
                            Op op_a = Op::None, Op op_b = Op::None);
DenseMatrix multiply_parallel(const DenseMatrix& a, const DenseMatrix& b,
                              Op op_a = Op::None, Op op_b = Op::None);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b,
                     Op op_a = Op::None, Op op_b = Op::None);

/// A^H A (Hermitian by construction).
DenseMatrix gram(const DenseMatrix& a);

DenseMatrix conj_transpose(const DenseMatrix& a);

/// a + scale * b
DenseMatrix add_scaled(const DenseMatrix& a, const DenseMatrix& b, Complex scale = 1.0);

double frobenius_norm_serial(const DenseMatrix& a);
double frobenius_norm_parallel(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

/// ||a - b||_F, shapes must match.
double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix submatrix(const DenseMatrix& a, int row0, int col0, int rows, int cols);

}  // namespace gsv
