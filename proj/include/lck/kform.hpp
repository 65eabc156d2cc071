#pragma once

#include "lck/lie_algebra.hpp"
#include "lck/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace lck {

/// Strictly increasing index tuple (i1 < ... < ik) naming e^{i1} ^ ... ^ e^{ik}.
using Multi = std::vector<int>;

/// Alternating k-linear form on an n-dimensional algebra, stored sparsely in
/// the dual-basis monomials. Coefficients are never zero in storage, so map
/// equality is form equality. Forms know only the parent dimension; anything
/// that needs brackets takes the algebra explicitly.
class KForm {
 public:
  KForm() = default;
  KForm(int parent_dim, int degree);

  static KForm scalar(int parent_dim, const Rational& value);
  /// The dual basis form e^i.
  static KForm dual(int parent_dim, int i);
  /// c * e^{idx[0]} ^ ... in any index order; the sorting sign is absorbed.
  static KForm monomial(int parent_dim, Multi idx, const Rational& c);
  /// The 1-form x -> row . x.
  static KForm linear(const Vector& row);
  /// The 2-form with (e_i, e_j) -> m(i, j); m must be antisymmetric.
  static KForm from_bilinear(const Matrix& m);

  int parent_dim() const { return n_; }
  int degree() const { return k_; }
  const std::map<Multi, Rational>& coeffs() const { return c_; }
  Rational coeff(const Multi& sorted) const;
  bool is_zero() const { return c_.empty(); }

  /// Adds c to the coefficient of an increasing tuple.
  void add_term(const Multi& sorted, const Rational& c);

  /// 1-form as its row of values on the basis.
  Vector as_linear() const;
  /// 2-form as the antisymmetric matrix of values on basis pairs.
  Matrix as_bilinear() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const Rational& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= Rational(-1); }
  friend KForm operator*(const Rational& s, KForm a) { return a *= s; }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_;
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::map<Multi, Rational> c_;
};

/// All increasing k-tuples of {0..n-1} in lexicographic order.
std::vector<Multi> form_basis(int n, int k);
Vector to_coords(const KForm& f, const std::vector<Multi>& basis);
KForm from_coords(int n, int k, const std::vector<Multi>& basis, const Vector& coords);

KForm wedge(const KForm& a, const KForm& b);
Rational eval(const KForm& f, std::span<const Vector> args);
KForm interior(const Vector& v, const KForm& f);
/// Chevalley-Eilenberg differential with trivial coefficients:
/// (df)(x_0..x_k) = sum_{a<b} (-1)^{a+b} f([x_a, x_b], x_0, ^a, ^b, ...).
KForm ce_differential(const LieAlgebra& g, const KForm& f);
/// (L_v f)(x_1..x_k) = -sum_r f(x_1, .., [v, x_r], .., x_k).
KForm lie_derivative(const LieAlgebra& g, const Vector& v, const KForm& f);
/// d_theta f = -theta ^ f + d f. Throws Error(ThetaNotClosed) unless d theta = 0.
KForm twisted_differential(const LieAlgebra& g, const KForm& theta, const KForm& f);

/// Canonical rendering, e.g. "-1/2 t^x + 1 y^z"; "0" for the zero form.
std::string to_string(const KForm& f, const std::vector<std::string>& dual_names);
/// Inverse of to_string. Coefficients may be omitted ("t^x - y^z").
KForm parse_form(const std::string& text, const std::vector<std::string>& dual_names, int degree_hint = -1);
/// Vector expression over basis names, e.g. "T - 1 X" or "1/2 X + Y".
Vector parse_vector(const std::string& text, const std::vector<std::string>& basis_names);

}  // namespace lck
