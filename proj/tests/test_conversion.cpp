#include <doctest.h>

#include <cmath>

#include "gsv/conversion.hpp"
#include "gsv/linalg.hpp"
#include "gsv/generate.hpp"
#include "gsv/oracle.hpp"
#include "test_util.hpp"

using namespace gsv;
using namespace gsv::test;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double gram_sum_residual(const StackedSvdParts& parts) {
  DenseMatrix sum = add_scaled(gram(parts.l1), gram(parts.l2));
  return frobenius_distance(sum, DenseMatrix::identity(sum.rows(), sum.kind()));
}

MatrixPair random_gmp(int m, int p, int n, ScalarKind kind, Rng& rng) {
  return MatrixPair(random_matrix(m, n, kind, rng), random_matrix(p, n, kind, rng));
}

}  // namespace

TEST_CASE("stacked parts of the I2/I2 pair") {
  MatrixPair pair(DenseMatrix::identity(2), DenseMatrix::identity(2));
  StackedSvdParts parts = stacked_svd_parts(pair);
  DenseMatrix g1 = gram(parts.l1);
  DenseMatrix half = DenseMatrix::identity(2);
  half(0, 0) = half(1, 1) = 0.5;
  CHECK(frobenius_distance(g1, half) < 1e-14);
  CHECK(gram_sum_residual(parts) < 1e-14);
}

TEST_CASE("stacked parts when the stacked matrix is the identity") {
  MatrixPair pair(from_rows({{1, 0}}), from_rows({{0, 1}}));
  StackedSvdParts parts = stacked_svd_parts(pair);
  DenseMatrix g1 = gram(parts.l1);
  // one unit column, one zero column, up to the SVD's ordering convention
  std::vector<double> eig = singular_values_only(g1);
  CHECK(eig.front() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(eig.back() == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("CS structure: block Grams sum to the identity") {
  Rng rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const ScalarKind kind = trial % 2 ? ScalarKind::Complex : ScalarKind::Real;
    MatrixPair pair = random_gmp(3, 2, 2, kind, rng);
    StackedSvdParts parts = stacked_svd_parts(pair);
    CHECK(gram_sum_residual(parts) < 1e-13);
    CHECK(unitarity_residual(stack(MatrixPair(parts.l1, parts.l2))) < 1e-13);
  }
}

TEST_CASE("stacked_svd_parts rejects invalid pairs") {
  CHECK_THROWS_AS(stacked_svd_parts(MatrixPair(from_rows({{1, 0}}), from_rows({{2, 0}}))),
                  NotGmp);
  CHECK_THROWS_AS(stacked_svd_parts(MatrixPair(DenseMatrix(1, 3), DenseMatrix(1, 3))),
                  NotGmp);
}

TEST_CASE("B = 0 forces beta = 0") {
  // m=2, p=1, n=2
  MatrixPair pair(DenseMatrix::identity(2), DenseMatrix(1, 2));
  GsvSpectrum spec = gsv::gsv(pair, Mode::Independent);
  CHECK(spec.pairs[0].alpha == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spec.pairs[0].beta == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(spec.pairs[1].alpha == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spec.pairs[1].beta == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("orthogonal single rows: padding and index shift") {
  // m=1, p=1, n=2: gamma=(1) padded, theta=(1) shifted
  MatrixPair pair(from_rows({{1, 0}}), from_rows({{0, 1}}));
  GsvSpectrum spec = gsv::gsv(pair, Mode::Independent);
  CHECK(spec.pairs[0].alpha == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spec.pairs[0].beta == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(spec.pairs[1].alpha == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(spec.pairs[1].beta == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("diagonal pencil example") {
  MatrixPair pair(diag({2.0, 1.0}), DenseMatrix::identity(2));
  for (Mode mode : {Mode::Independent, Mode::Complementary}) {
    GsvSpectrum spec = gsv::gsv(pair, mode);
    CHECK(spec.pairs[0].alpha == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-13));
    CHECK(spec.pairs[0].beta == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-13));
    CHECK(spec.pairs[1].alpha == doctest::Approx(kInvSqrt2).epsilon(1e-13));
    CHECK(spec.pairs[1].beta == doctest::Approx(kInvSqrt2).epsilon(1e-13));
  }
}

TEST_CASE("symmetric pair gives equal weights") {
  GsvSpectrum spec = gsv::gsv(MatrixPair(DenseMatrix::identity(2), DenseMatrix::identity(2)));
  for (const GsvPair& pr : spec.pairs) {
    CHECK(pr.alpha == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(pr.beta == doctest::Approx(kInvSqrt2).epsilon(1e-14));
  }
}

TEST_CASE("spectrum ordering and clamping") {
  Rng rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const ScalarKind kind = trial % 2 ? ScalarKind::Complex : ScalarKind::Real;
    const int m = 2 + trial % 3, p = 2 + (trial / 2) % 3, n = 2 + trial % 2;
    MatrixPair pair = random_gmp(m, p, n, kind, rng);
    for (Mode mode : {Mode::Independent, Mode::Complementary}) {
      GsvSpectrum spec = gsv::gsv(pair, mode);
      for (size_t i = 0; i + 1 < spec.pairs.size(); ++i) {
        CHECK(spec.pairs[i].alpha >= spec.pairs[i + 1].alpha);
        CHECK(spec.pairs[i].beta <= spec.pairs[i + 1].beta);
      }
      for (const GsvPair& pr : spec.pairs) {
        CHECK(pr.alpha >= 0.0);
        CHECK(pr.alpha <= 1.0);
        CHECK(pr.beta >= 0.0);
        CHECK(pr.beta <= 1.0);
      }
    }
  }
}

TEST_CASE("pair-sum identity in independent mode") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixPair pair = random_gmp(4, 3, 3, trial % 2 ? ScalarKind::Complex : ScalarKind::Real,
                                 rng);
    GsvSpectrum spec = gsv::gsv(pair, Mode::Independent);
    for (double r : spec.pair_sum_residuals) CHECK(r <= 1e-12);
  }
}

TEST_CASE("padding counts for tall-n shapes") {
  PairGenSpec spec;
  spec.m = 2;
  spec.p = 4;
  spec.n = 3;
  spec.seed = 7;
  GeneratedPair gen = generate_pair(spec);
  GsvSpectrum s = gsv::gsv(gen.pair);
  CHECK(s.pairs[2].alpha <= 1e-12);   // exactly n - m = 1 trailing zero
  CHECK(s.pairs[1].alpha > 1e-12);

  spec.m = 4;
  spec.p = 2;
  GeneratedPair gen2 = generate_pair(spec);
  GsvSpectrum s2 = gsv::gsv(gen2.pair);
  CHECK(s2.pairs[0].beta <= 1e-12);   // exactly n - p = 1 leading zero
  CHECK(s2.pairs[1].beta > 1e-12);
}

TEST_CASE("modes agree on well-conditioned pairs") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixPair pair = random_gmp(3 + trial % 2, 4, 3,
                                 trial % 2 ? ScalarKind::Complex : ScalarKind::Real, rng);
    GsvSpectrum a = gsv::gsv(pair, Mode::Independent);
    GsvSpectrum b = gsv::gsv(pair, Mode::Complementary);
    for (size_t i = 0; i < a.pairs.size(); ++i) {
      CHECK(std::abs(a.pairs[i].alpha - b.pairs[i].alpha) <= 1e-10);
      CHECK(std::abs(a.pairs[i].beta - b.pairs[i].beta) <= 1e-10);
    }
  }
}

TEST_CASE("right- and block-unitary invariance") {
  Rng rng(45);
  for (int trial = 0; trial < 8; ++trial) {
    const ScalarKind kind = trial % 2 ? ScalarKind::Complex : ScalarKind::Real;
    const int m = 3, p = 4, n = 3;
    MatrixPair pair = random_gmp(m, p, n, kind, rng);
    std::vector<GsvPair> base = sorted_pairs(gsv::gsv(pair).pairs);

    DenseMatrix w = random_unitary(n, kind, rng);
    std::vector<GsvPair> right = sorted_pairs(
        gsv::gsv(MatrixPair(multiply(pair.a(), w), multiply(pair.b(), w))).pairs);

    DenseMatrix u = random_unitary(m, kind, rng);
    DenseMatrix v = random_unitary(p, kind, rng);
    std::vector<GsvPair> block = sorted_pairs(
        gsv::gsv(MatrixPair(multiply(u, pair.a()), multiply(v, pair.b()))).pairs);

    for (size_t i = 0; i < base.size(); ++i) {
      CHECK(std::abs(base[i].alpha - right[i].alpha) <= 1e-12);
      CHECK(std::abs(base[i].beta - right[i].beta) <= 1e-12);
      CHECK(std::abs(base[i].alpha - block[i].alpha) <= 1e-12);
      CHECK(std::abs(base[i].beta - block[i].beta) <= 1e-12);
    }
  }
}

TEST_CASE("unitary equivalence residual") {
  // A = I, B = 0 (2x2): S = I, A S^{-1/2} has orthonormal columns
  MatrixPair trivial(DenseMatrix::identity(2), DenseMatrix(2, 2));
  StackedSvdParts parts = stacked_svd_parts(trivial);
  auto [r1, r2] = unitary_equivalence_residual(trivial, parts);
  CHECK(r1 <= 1e-13);
  CHECK(r2 <= 1e-13);

  MatrixPair sym(DenseMatrix::identity(2), DenseMatrix::identity(2));
  StackedSvdParts parts2 = stacked_svd_parts(sym);
  auto [s1, s2] = unitary_equivalence_residual(sym, parts2);
  CHECK(s1 <= 1e-13);
  CHECK(s2 <= 1e-13);

  Rng rng(46);
  for (int trial = 0; trial < 6; ++trial) {
    const ScalarKind kind = trial % 2 ? ScalarKind::Complex : ScalarKind::Real;
    MatrixPair pair = random_gmp(4, 3, 3, kind, rng);
    StackedSvdParts p3 = stacked_svd_parts(pair);
    if (p3.certificate.stacked_condition() > 1e3) continue;
    auto [t1, t2] = unitary_equivalence_residual(pair, p3);
    const double scale = frobenius_norm(pair.a()) + frobenius_norm(pair.b());
    CHECK(t1 <= 1e-10 * scale);
    CHECK(t2 <= 1e-10 * scale);
  }
}

TEST_CASE("conversion matches oracle on random complex GMPs") {
  Rng rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    MatrixPair pair = random_gmp(3, 4, 3, ScalarKind::Complex, rng);
    StackedSvdParts parts = stacked_svd_parts(pair);
    if (parts.certificate.stacked_condition() > 1e4) continue;
    std::vector<GsvPair> conv =
        sorted_pairs(gsv_from_parts(parts, 3, 4, 3, Mode::Complementary).pairs);
    std::vector<GsvPair> orc = sorted_pairs(oracle_gsv(pair).pairs);
    for (size_t i = 0; i < conv.size(); ++i) {
      CHECK(std::abs(conv[i].alpha - orc[i].alpha) <= 1e-10);
      CHECK(std::abs(conv[i].beta - orc[i].beta) <= 1e-10);
    }
  }
}
