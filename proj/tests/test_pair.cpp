#include <doctest.h>

#include "gsv/generate.hpp"
#include "gsv/pair.hpp"
#include "test_util.hpp"

using namespace gsv;
using namespace gsv::test;

TEST_CASE("stack concatenates rows") {
  MatrixPair pair(from_rows({{1, 0}}), from_rows({{0, 1}}));
  DenseMatrix s = stack(pair);
  CHECK(frobenius_distance(s, DenseMatrix::identity(2)) == 0.0);

  MatrixPair pair2(DenseMatrix::identity(2), DenseMatrix(1, 2));
  DenseMatrix s2 = stack(pair2);
  REQUIRE(s2.rows() == 3);
  CHECK(s2(0, 0) == Complex(1.0));
  CHECK(s2(2, 0) == Complex(0.0));
  CHECK(s2(2, 1) == Complex(0.0));
}

TEST_CASE("stack top block equals A entrywise") {
  Rng rng(31);
  DenseMatrix a = random_matrix(2, 3, ScalarKind::Complex, rng);
  DenseMatrix b = random_matrix(2, 3, ScalarKind::Complex, rng);
  MatrixPair pair(a, b);
  DenseMatrix s = stack(pair);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(s(i, j) == a(i, j));
      CHECK(s(2 + i, j) == b(i, j));
    }
}

TEST_CASE("pair construction rejects mismatches") {
  CHECK_THROWS_AS(MatrixPair(DenseMatrix(2, 3), DenseMatrix(2, 2)), ShapeMismatch);
  CHECK_THROWS_AS(MatrixPair(DenseMatrix(2, 2, ScalarKind::Real),
                             DenseMatrix(2, 2, ScalarKind::Complex)),
                  InvalidInput);
}

TEST_CASE("validate_gmp on orthogonal rows") {
  GmpCertificate c = validate_gmp(MatrixPair(from_rows({{1, 0}}), from_rows({{0, 1}})));
  CHECK(c.is_gmp);
  CHECK(c.numerical_rank == 2);
}

TEST_CASE("validate_gmp detects rank deficiency") {
  GmpCertificate c = validate_gmp(MatrixPair(from_rows({{1, 0}}), from_rows({{2, 0}})));
  CHECK_FALSE(c.is_gmp);
  CHECK(c.numerical_rank == 1);
}

TEST_CASE("validate_gmp throws when rank n is impossible") {
  CHECK_THROWS_AS(validate_gmp(MatrixPair(DenseMatrix(1, 3), DenseMatrix(1, 3))), NotGmp);
}

TEST_CASE("validate_gmp rejects non-finite entries") {
  DenseMatrix a = DenseMatrix::identity(2);
  a(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate_gmp(MatrixPair(a, DenseMatrix::identity(2))), InvalidInput);
}

TEST_CASE("underflow-scale pair is flagged not-GMP") {
  DenseMatrix a = DenseMatrix::identity(3);
  for (int i = 0; i < 3; ++i) a(i, i) = 1e-300;
  GmpCertificate c = validate_gmp(MatrixPair(a, DenseMatrix(3, 3)));
  CHECK_FALSE(c.is_gmp);
  // the raw singular values are still ~1e-300, only the tolerance floor trips
  CHECK(c.stacked_singular_values.front() == doctest::Approx(1e-300));
}

TEST_CASE("explicit tolerance policy overrides the default") {
  DenseMatrix a = DenseMatrix::identity(2);
  a(1, 1) = 1e-9;
  MatrixPair pair(a, DenseMatrix(1, 2));
  CHECK(validate_gmp(pair).is_gmp);
  CHECK_FALSE(validate_gmp(pair, {.absolute = 1e-6}).is_gmp);
}

TEST_CASE("is_gmp invariant under right-unitary factors") {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarKind kind = trial % 2 ? ScalarKind::Complex : ScalarKind::Real;
    DenseMatrix a = random_matrix(3, 3, kind, rng);
    DenseMatrix b = random_matrix(2, 3, kind, rng);
    DenseMatrix w = random_unitary(3, kind, rng);
    MatrixPair pair(a, b);
    MatrixPair rotated(multiply(a, w), multiply(b, w));
    CHECK(validate_gmp(pair).is_gmp == validate_gmp(rotated).is_gmp);
  }
}

TEST_CASE("A = identity makes any pair a GMP") {
  Rng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    DenseMatrix b = random_matrix(2, 4, ScalarKind::Real, rng);
    CHECK(validate_gmp(MatrixPair(DenseMatrix::identity(4), b)).is_gmp);
  }
}

TEST_CASE("certificate exposes the stacked condition number") {
  GmpCertificate c = validate_gmp(MatrixPair(diag({2.0, 1.0}), DenseMatrix(1, 2)));
  CHECK(c.stacked_condition() == doctest::Approx(2.0).epsilon(1e-12));
}
