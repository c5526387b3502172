#include "gsv/kernels.hpp"

#include <cmath>

namespace gsv {

namespace {

int op_rows(const DenseMatrix& m, Op op) { return op == Op::None ? m.rows() : m.cols(); }
int op_cols(const DenseMatrix& m, Op op) { return op == Op::None ? m.cols() : m.rows(); }

inline Complex fetch(const DenseMatrix& m, Op op, int i, int j) {
  return op == Op::None ? m(i, j) : std::conj(m(j, i));
}

ScalarKind combine_kind(const DenseMatrix& a, const DenseMatrix& b) {
  return (a.is_real() && b.is_real()) ? ScalarKind::Real : ScalarKind::Complex;
}

void check_multiply_shapes(const DenseMatrix& a, const DenseMatrix& b, Op op_a, Op op_b) {
  if (op_cols(a, op_a) != op_rows(b, op_b))
    throw ShapeMismatch("multiply: inner dimensions differ");
}

inline Complex dot_row_col(const DenseMatrix& a, const DenseMatrix& b, Op op_a, Op op_b,
                           int i, int j, int inner) {
  Complex acc(0.0, 0.0);
  for (int k = 0; k < inner; ++k) acc += fetch(a, op_a, i, k) * fetch(b, op_b, k, j);
  return acc;
}

// Below ~this many flops the OpenMP fork/join overhead dominates.
constexpr long kParallelFlopThreshold = 1L << 16;

}  // namespace

DenseMatrix multiply_serial(const DenseMatrix& a, const DenseMatrix& b, Op op_a, Op op_b) {
  check_multiply_shapes(a, b, op_a, op_b);
  const int rows = op_rows(a, op_a), cols = op_cols(b, op_b), inner = op_cols(a, op_a);
  DenseMatrix c(rows, cols, combine_kind(a, b));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) c(i, j) = dot_row_col(a, b, op_a, op_b, i, j, inner);
  c.enforce_kind();
  return c;
}

DenseMatrix multiply_parallel(const DenseMatrix& a, const DenseMatrix& b, Op op_a, Op op_b) {
  check_multiply_shapes(a, b, op_a, op_b);
  const int rows = op_rows(a, op_a), cols = op_cols(b, op_b), inner = op_cols(a, op_a);
  DenseMatrix c(rows, cols, combine_kind(a, b));
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) c(i, j) = dot_row_col(a, b, op_a, op_b, i, j, inner);
  c.enforce_kind();
  return c;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, Op op_a, Op op_b) {
  const long flops = 2L * op_rows(a, op_a) * op_cols(b, op_b) * op_cols(a, op_a);
  return flops >= kParallelFlopThreshold ? multiply_parallel(a, b, op_a, op_b)
                                         : multiply_serial(a, b, op_a, op_b);
}

DenseMatrix gram(const DenseMatrix& a) {
  DenseMatrix g = multiply(a, a, Op::ConjTranspose, Op::None);
  // symmetrize to kill rounding asymmetry
  for (int i = 0; i < g.rows(); ++i) {
    g(i, i) = Complex(g(i, i).real(), 0.0);
    for (int j = i + 1; j < g.cols(); ++j) {
      Complex avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
      g(i, j) = avg;
      g(j, i) = std::conj(avg);
    }
  }
  g.enforce_kind();
  return g;
}

DenseMatrix conj_transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows(), a.kind());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

DenseMatrix add_scaled(const DenseMatrix& a, const DenseMatrix& b, Complex scale) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("add_scaled: shapes differ");
  ScalarKind kind = combine_kind(a, b);
  if (kind == ScalarKind::Real && scale.imag() != 0.0) kind = ScalarKind::Complex;
  DenseMatrix c(a.rows(), a.cols(), kind);
  for (size_t k = 0; k < a.size(); ++k) c.data()[k] = a.data()[k] + scale * b.data()[k];
  c.enforce_kind();
  return c;
}

double frobenius_norm_serial(const DenseMatrix& a) {
  double acc = 0.0;
  for (size_t k = 0; k < a.size(); ++k) acc += std::norm(a.data()[k]);
  return std::sqrt(acc);
}

double frobenius_norm_parallel(const DenseMatrix& a) {
  double acc = 0.0;
  const long n = static_cast<long>(a.size());
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (long k = 0; k < n; ++k) acc += std::norm(a.data()[k]);
  return std::sqrt(acc);
}

double frobenius_norm(const DenseMatrix& a) {
  return static_cast<long>(a.size()) >= kParallelFlopThreshold ? frobenius_norm_parallel(a)
                                                               : frobenius_norm_serial(a);
}

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("frobenius_distance: shapes differ");
  double acc = 0.0;
  for (size_t k = 0; k < a.size(); ++k) acc += std::norm(a.data()[k] - b.data()[k]);
  return std::sqrt(acc);
}

DenseMatrix submatrix(const DenseMatrix& a, int row0, int col0, int rows, int cols) {
  if (row0 < 0 || col0 < 0 || row0 + rows > a.rows() || col0 + cols > a.cols())
    throw ShapeMismatch("submatrix: block out of range");
  DenseMatrix s(rows, cols, a.kind());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) s(i, j) = a(row0 + i, col0 + j);
  return s;
}

}  // namespace gsv
