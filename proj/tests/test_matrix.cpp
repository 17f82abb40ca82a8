#include <doctest.h>

#include <cmath>

#include "nisvp/matrix.hpp"
#include "oracles.hpp"

using namespace nisvp;

TEST_CASE("frobenius_norm basics") {
  CHECK(frobenius_norm(DenseMatrix(2, 2)) == 0.0);
  CHECK(frobenius_norm(DenseMatrix::identity(2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(frobenius_norm(DenseMatrix::from_rows({{3, 4}, {0, 0}})) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("relative_change basics") {
  const DenseMatrix eye = DenseMatrix::identity(2);
  CHECK(relative_change(eye, eye) == 0.0);
  CHECK(relative_change(eye, 2.0 * eye) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(relative_change(DenseMatrix(2, 2), eye), ZeroDenominator);
  CHECK_THROWS_AS(relative_change(DenseMatrix(2, 3), DenseMatrix(3, 2)), ShapeMismatch);
}

TEST_CASE("random_nonnegative determinism and range") {
  const RngSeed seed{123};
  const DenseMatrix a = random_nonnegative(2, 2, 0.0, 10.0, seed);
  const DenseMatrix b = random_nonnegative(2, 2, 0.0, 10.0, seed);
  CHECK(a == b);

  for (std::uint64_t s : {1ULL, 7ULL, 99ULL}) {
    const DenseMatrix r = random_nonnegative(3, 2, 0.0, 10.0, RngSeed{s});
    for (double v : r.data()) {
      CHECK(v >= 0.0);
      CHECK(v < 10.0);
    }
  }

  CHECK_THROWS_AS(random_nonnegative(2, 2, 5.0, 5.0, seed), BadRange);
  CHECK_THROWS_AS(random_nonnegative(2, 2, -1.0, 2.0, seed), BadRange);
}

TEST_CASE("random_nonnegative empirical mean") {
  Rng rng(RngSeed{2024});
  double sum = 0.0;
  const int samples = 1000000;
  for (int i = 0; i < samples; ++i) sum += rng.uniform(0.0, 10.0);
  CHECK(sum / samples == doctest::Approx(5.0).epsilon(0.004));
}

TEST_CASE("matmul, transpose, trace") {
  const DenseMatrix a = DenseMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(matmul(DenseMatrix::identity(2), a) == a);
  CHECK(trace(a) == 5.0);
  CHECK(transpose(transpose(a)) == a);
  CHECK_THROWS_AS(matmul(DenseMatrix(2, 3), DenseMatrix(2, 3)), ShapeMismatch);
  CHECK_THROWS_AS(trace(DenseMatrix(2, 3)), ShapeMismatch);
}

TEST_CASE("norm squared equals trace of gram difference") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const std::size_t n = 5 + 9 * s;  // up to 50
    const DenseMatrix a = testing::random_matrix(n, n, -5.0, 5.0, 100 + s);
    const DenseMatrix b = testing::random_matrix(n, n, -5.0, 5.0, 200 + s);
    const DenseMatrix d = a - b;
    const double lhs = frobenius_norm(d);
    const double rhs = std::sqrt(trace(matmul(transpose(d), d)));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("frobenius norm is transpose invariant") {
  const DenseMatrix a = testing::random_matrix(7, 4, -3.0, 3.0, 42);
  CHECK(frobenius_norm(a) == doctest::Approx(frobenius_norm(transpose(a))).epsilon(1e-15));
}
