#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace lck {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator. Expression templates are off so the type behaves as a plain
/// value inside Eigen kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;
using Index = Eigen::Index;

/// "p/q" with the "/1" dropped for integers ("3", "-1/2").
std::string to_string(const Rational& q);

/// Parses "p", "p/q", "-p/q" (optional leading '+', no spaces). Throws
/// Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact square root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

inline Vector unit_vector(Index n, Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

std::string to_string(const Vector& v, const std::vector<std::string>& names);

}  // namespace lck
