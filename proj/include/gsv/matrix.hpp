#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "gsv/errors.hpp"

namespace gsv {

using Complex = std::complex<double>;

enum class ScalarKind { Real, Complex };

/// Dense row-major matrix over double or complex<double>. Storage is always
/// complex; a Real-kind matrix keeps every imaginary component exactly zero.
class DenseMatrix {
public:
  DenseMatrix(int rows, int cols, ScalarKind kind = ScalarKind::Real)
      : rows_(rows), cols_(cols), kind_(kind) {
    if (rows <= 0 || cols <= 0)
      throw InvalidInput("matrix dimensions must be positive");
    data_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
  }

  static DenseMatrix identity(int n, ScalarKind kind = ScalarKind::Real) {
    DenseMatrix m(n, n, kind);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ScalarKind kind() const { return kind_; }
  bool is_real() const { return kind_ == ScalarKind::Real; }

  Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  bool all_finite() const {
    for (const Complex& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  void require_finite(const char* what) const {
    if (!all_finite()) throw InvalidInput(std::string(what) + ": non-finite entries");
  }

  /// Drops stray imaginary parts when the matrix is tagged Real.
  void enforce_kind() {
    if (kind_ == ScalarKind::Real)
      for (Complex& z : data_) z = Complex(z.real(), 0.0);
  }

private:
  int rows_;
  int cols_;
  ScalarKind kind_;
  std::vector<Complex> data_;
};

}  // namespace gsv
