#pragma once

// Exact dense linear algebra over a field (Q or Q(i)), written against Eigen
// storage. Elimination is fraction-free (Bareiss) so intermediate entries are
// minors of the input rather than growing quotients.

#include "lck/rational.hpp"

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace lck {

template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> rref;        // reduced row echelon form, zero rows at the bottom
  std::vector<Index> pivots;   // pivot column of each nonzero row

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

inline Integer lcm_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

// Scale every row of a rational matrix to primitive integers. Row scaling does
// not change the row space, the rank or the kernel.
template <typename Scalar>
void clear_denominators(MatrixX<Scalar>& m) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    for (Index i = 0; i < m.rows(); ++i) {
      Integer l = 1;
      Integer g = 0;
      for (Index j = 0; j < m.cols(); ++j) {
        if (m(i, j) == 0) continue;
        l = lcm_int(l, boost::multiprecision::denominator(m(i, j)));
      }
      for (Index j = 0; j < m.cols(); ++j) {
        m(i, j) *= Rational(l);
        if (m(i, j) != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(m(i, j)));
      }
      if (g > 1)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) /= Rational(g);
    }
  }
}

// In-place fraction-free forward elimination. Returns pivot columns; rows past
// the last pivot are zero.
template <typename Scalar>
std::vector<Index> bareiss_forward(MatrixX<Scalar>& m, int* swap_sign = nullptr) {
  std::vector<Index> pivots;
  Scalar prev = Scalar(1);
  Index r = 0;
  int sign = 1;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      sign = -sign;
    }
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = Scalar(0);
    }
    prev = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  if (swap_sign) *swap_sign = sign;
  return pivots;
}

}  // namespace detail

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.rref = a;
  detail::clear_denominators(out.rref);
  out.pivots = detail::bareiss_forward(out.rref);
  auto& m = out.rref;
  for (Index r = out.rank() - 1; r >= 0; --r) {
    const Index c = out.pivots[r];
    const Scalar piv = m(r, c);
    for (Index j = c; j < m.cols(); ++j) m(r, j) /= piv;
    for (Index i = 0; i < r; ++i) {
      if (m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
  }
  for (Index i = out.rank(); i < m.rows(); ++i) m.row(i).setZero();
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  MatrixX<typename Derived::Scalar> m = a;
  detail::clear_denominators(m);
  return static_cast<Index>(detail::bareiss_forward(m).size());
}

/// Basis of the null space as matrix columns, one per free variable (free
/// variable set to 1, others to 0). Canonical for a given input.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_echelon(a);
  const Index n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index c : ech.pivots) is_pivot[c] = true;
  MatrixX<Scalar> k = MatrixX<Scalar>::Zero(n, n - ech.rank());
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = Scalar(1);
    for (Index r = 0; r < ech.rank(); ++r) k(ech.pivots[r], col) = -ech.rref(r, f);
    ++col;
  }
  return k;
}

/// Some solution of a x = b (free variables zero), or nullopt if inconsistent.
template <typename DA, typename DB>
std::optional<VectorX<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a,
                                                   const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = row_echelon(aug);
  if (ech.rank() > 0 && ech.pivots.back() == a.cols()) return std::nullopt;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (Index r = 0; r < ech.rank(); ++r) x(ech.pivots[r]) = ech.rref(r, a.cols());
  return x;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar(1);
  MatrixX<Scalar> m = a;
  int sign = 1;
  const auto piv = detail::bareiss_forward(m, &sign);
  if (static_cast<Index>(piv.size()) < a.rows()) return Scalar(0);
  Scalar d = m(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? Scalar(-d) : d;
}

/// Determinants of the leading k x k blocks, k = 1..n (Sylvester's criterion).
template <typename Derived>
std::vector<typename Derived::Scalar> leading_principal_minors(const Eigen::MatrixBase<Derived>& a) {
  std::vector<typename Derived::Scalar> out;
  for (Index k = 1; k <= a.rows(); ++k) out.push_back(determinant(a.topLeftCorner(k, k)));
  return out;
}

template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  const auto ech = row_echelon(aug);
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  return MatrixX<Scalar>(ech.rref.rightCols(n));
}

/// Independent columns of a spanning its column space (pivot columns).
template <typename Derived>
MatrixX<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = a;
  const auto piv = detail::bareiss_forward(m);
  MatrixX<Scalar> out(a.rows(), static_cast<Index>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k) out.col(static_cast<Index>(k)) = a.col(piv[k]);
  return out;
}

}  // namespace lck
