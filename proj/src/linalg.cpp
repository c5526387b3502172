#include "gsv/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "gsv/errors.hpp"
#include "gsv/kernels.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace gsv {

namespace {

std::vector<double> to_real_array(const DenseMatrix& m) {
  std::vector<double> a(m.size());
  for (size_t k = 0; k < m.size(); ++k) a[k] = m.data()[k].real();
  return a;
}

DenseMatrix from_real_array(const std::vector<double>& a, int rows, int cols) {
  DenseMatrix m(rows, cols, ScalarKind::Real);
  for (size_t k = 0; k < m.size(); ++k) m.data()[k] = a[k];
  return m;
}

void check_hermitian(const DenseMatrix& s, const char* what) {
  if (s.rows() != s.cols()) throw ShapeMismatch(std::string(what) + ": matrix not square");
  double nrm = frobenius_norm(s);
  double dev = 0.0;
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      dev = std::max(dev, std::abs(s(i, j) - std::conj(s(j, i))));
  if (dev > 1e-10 * std::max(nrm, 1.0))
    throw InvalidInput(std::string(what) + ": matrix not Hermitian");
}

void lapack_check(int info, const char* routine) {
  if (info < 0) throw InvalidInput(std::string(routine) + ": illegal argument");
  if (info > 0) throw Error(std::string(routine) + ": did not converge");
}

}  // namespace

SvdResult svd(const DenseMatrix& m) {
  m.require_finite("svd");
  const int rows = m.rows(), cols = m.cols(), k = std::min(rows, cols);
  std::vector<double> sv(k);
  std::vector<double> superb(std::max(k - 1, 1));
  DenseMatrix left(rows, rows, m.kind());
  DenseMatrix right(cols, cols, m.kind());
  if (m.is_real()) {
    std::vector<double> a = to_real_array(m);
    std::vector<double> u(static_cast<size_t>(rows) * rows);
    std::vector<double> vt(static_cast<size_t>(cols) * cols);
    int info = LAPACKE_dgesvd(LAPACK_ROW_MAJOR, 'A', 'A', rows, cols, a.data(), cols,
                              sv.data(), u.data(), rows, vt.data(), cols, superb.data());
    lapack_check(info, "dgesvd");
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j) left(i, j) = u[static_cast<size_t>(i) * rows + j];
    for (int i = 0; i < cols; ++i)
      for (int j = 0; j < cols; ++j) right(i, j) = vt[static_cast<size_t>(j) * cols + i];
  } else {
    std::vector<Complex> a(m.data(), m.data() + m.size());
    std::vector<Complex> u(static_cast<size_t>(rows) * rows);
    std::vector<Complex> vt(static_cast<size_t>(cols) * cols);
    int info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'A', 'A', rows, cols, a.data(), cols,
                              sv.data(), u.data(), rows, vt.data(), cols, superb.data());
    lapack_check(info, "zgesvd");
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j) left(i, j) = u[static_cast<size_t>(i) * rows + j];
    for (int i = 0; i < cols; ++i)
      for (int j = 0; j < cols; ++j)
        right(i, j) = std::conj(vt[static_cast<size_t>(j) * cols + i]);
  }
  return SvdResult{std::move(left), std::move(sv), std::move(right)};
}

std::vector<double> singular_values_only(const DenseMatrix& m) {
  m.require_finite("singular_values_only");
  const int rows = m.rows(), cols = m.cols(), k = std::min(rows, cols);
  std::vector<double> sv(k);
  std::vector<double> superb(std::max(k - 1, 1));
  if (m.is_real()) {
    std::vector<double> a = to_real_array(m);
    int info = LAPACKE_dgesvd(LAPACK_ROW_MAJOR, 'N', 'N', rows, cols, a.data(), cols,
                              sv.data(), nullptr, rows, nullptr, cols, superb.data());
    lapack_check(info, "dgesvd");
  } else {
    std::vector<Complex> a(m.data(), m.data() + m.size());
    int info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'N', 'N', rows, cols, a.data(), cols,
                              sv.data(), nullptr, rows, nullptr, cols, superb.data());
    lapack_check(info, "zgesvd");
  }
  return sv;
}

PencilEig hermitian_definite_eig(const DenseMatrix& g, const DenseMatrix& s) {
  g.require_finite("hermitian_definite_eig");
  s.require_finite("hermitian_definite_eig");
  check_hermitian(g, "hermitian_definite_eig(G)");
  check_hermitian(s, "hermitian_definite_eig(S)");
  if (g.rows() != s.rows()) throw ShapeMismatch("hermitian_definite_eig: order mismatch");
  const int n = g.rows();
  const bool real = g.is_real() && s.is_real();
  std::vector<double> w(n);
  DenseMatrix vectors(n, n, real ? ScalarKind::Real : ScalarKind::Complex);
  int info;
  if (real) {
    std::vector<double> a = to_real_array(g);
    std::vector<double> b = to_real_array(s);
    info = LAPACKE_dsygv(LAPACK_ROW_MAJOR, 1, 'V', 'L', n, a.data(), n, b.data(), n, w.data());
    if (info > n) throw NotPositiveDefinite("hermitian_definite_eig: S is not positive definite");
    lapack_check(info, "dsygv");
    // eigenvectors come back in a's columns, ascending order; reverse
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) vectors(i, j) = a[static_cast<size_t>(i) * n + (n - 1 - j)];
  } else {
    std::vector<Complex> a(n * static_cast<size_t>(n)), b(n * static_cast<size_t>(n));
    for (size_t k = 0; k < a.size(); ++k) {
      a[k] = g.data()[k];
      b[k] = s.data()[k];
    }
    info = LAPACKE_zhegv(LAPACK_ROW_MAJOR, 1, 'V', 'L', n, a.data(), n, b.data(), n, w.data());
    if (info > n) throw NotPositiveDefinite("hermitian_definite_eig: S is not positive definite");
    lapack_check(info, "zhegv");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) vectors(i, j) = a[static_cast<size_t>(i) * n + (n - 1 - j)];
  }
  std::reverse(w.begin(), w.end());
  return PencilEig{std::move(w), std::move(vectors)};
}

DenseMatrix cholesky(const DenseMatrix& s) {
  s.require_finite("cholesky");
  check_hermitian(s, "cholesky");
  const int n = s.rows();
  DenseMatrix l(n, n, s.kind());
  if (s.is_real()) {
    std::vector<double> a = to_real_array(s);
    int info = LAPACKE_dpotrf(LAPACK_ROW_MAJOR, 'L', n, a.data(), n);
    if (info > 0) throw NotPositiveDefinite("cholesky: matrix is not positive definite");
    lapack_check(info, "dpotrf");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) l(i, j) = a[static_cast<size_t>(i) * n + j];
  } else {
    std::vector<Complex> a(s.data(), s.data() + s.size());
    int info = LAPACKE_zpotrf(LAPACK_ROW_MAJOR, 'L', n, a.data(), n);
    if (info > 0) throw NotPositiveDefinite("cholesky: matrix is not positive definite");
    lapack_check(info, "zpotrf");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) l(i, j) = a[static_cast<size_t>(i) * n + j];
  }
  return l;
}

}  // namespace gsv
