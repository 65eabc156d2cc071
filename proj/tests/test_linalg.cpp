#include <doctest.h>

#include "oracle.hpp"
#include "property_suites.hpp"

#include "lck/gaussian.hpp"
#include "lck/linalg.hpp"

using namespace lck;

namespace {

Matrix random_matrix(props::Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform(0, 2) == 0 ? Rational(0) : rng.rational();
  // Duplicate a row now and then so rank deficiency is common.
  if (rows > 1 && rng.uniform(0, 1)) m.row(rows - 1) = m.row(0) * rng.rational();
  return m;
}

}  // namespace

TEST_CASE("kernel, rank and solve agree with Gauss-Jordan on random matrices") {
  props::Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const Matrix m = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 5));
    const Matrix k = kernel(m);
    REQUIRE(k.rows() == m.cols());
    CHECK(is_zero(Matrix(m * k)));
    CHECK(rank(k) == k.cols());
    CHECK(rank(m) == oracle::rank(m));
    CHECK(rank(m) + k.cols() == m.cols());
    CHECK(oracle::same_span(k, oracle::kernel(m)));
    const Vector x = Vector::Zero(m.cols()) + Vector(rng.vector(static_cast<int>(m.cols())));
    const Vector b = m * x;
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(Vector(m * *sol) == b);
  }
}

TEST_CASE("determinant and inverse") {
  props::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform(1, 4);
    const Matrix m = random_matrix(rng, n, n);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (determinant(m) != 0));
    if (inv) CHECK(Matrix(m * *inv) == Matrix(Matrix::Identity(n, n)));
  }
  Matrix m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(determinant(m) == -2);
  const auto minors = leading_principal_minors(m);
  CHECK(minors == std::vector<Rational>{1, -2});
}

TEST_CASE("inconsistent systems have no solution") {
  Matrix a(2, 1);
  a << 1, 1;
  Vector b(2);
  b << 1, 2;
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("elimination over Q(i)") {
  const GaussianRational i = GaussianRational::imag_unit();
  CMatrix m(2, 2);
  m << GaussianRational(1), i, i, GaussianRational(-1);
  CHECK(rank(m) == 1);
  const CMatrix k = kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero(CMatrix(m * k)));
  CHECK(determinant(m) == GaussianRational(0));
  const auto ech = row_echelon(m);
  CHECK(ech.rref(0, 0) == GaussianRational(1));
  CHECK(ech.rref(0, 1) == i);
}

TEST_CASE("column_basis keeps pivot columns") {
  Matrix m(2, 3);
  m << 1, 2, 0, 2, 4, 1;
  const Matrix b = column_basis(m);
  CHECK(b.cols() == 2);
  CHECK(b.col(0) == m.col(0));
  CHECK(b.col(1) == m.col(2));
}
