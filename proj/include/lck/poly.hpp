#pragma once

#include "lck/rational.hpp"

#include <vector>

namespace lck {

/// Dense univariate polynomial over Q, coefficients lowest degree first,
/// no trailing zeros (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

/// Product of the distinct irreducible factors: p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// det(x I - m) by Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const Matrix& m);

/// p(m) evaluated by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& m);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
/// Number of distinct real roots that are strictly negative.
int count_negative_roots(const Polynomial& p);

/// Diagonalizable over C: the squarefree part of the characteristic
/// polynomial annihilates m.
bool is_semisimple(const Matrix& m);

/// Every eigenvalue of m lies on the imaginary axis (0 included).
bool has_imaginary_spectrum(const Matrix& m);

}  // namespace lck
