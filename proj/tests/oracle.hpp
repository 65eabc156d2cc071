#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is written from the defining formulas (permutation sums,
// shuffle sums, textbook Gauss-Jordan) and shares no code with src/.

#include "lck/kform.hpp"
#include "lck/lie_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using lck::Index;
using lck::KForm;
using lck::LieAlgebra;
using lck::Matrix;
using lck::Multi;
using lck::Rational;
using lck::Vector;

inline Vector bracket(const LieAlgebra& g, const Vector& a, const Vector& b) {
  Vector r = Vector::Zero(g.dim());
  for (const auto& [key, c] : g.structure()) {
    const Rational f = a(key.first) * b(key.second) - a(key.second) * b(key.first);
    if (f != 0) r += f * c;
  }
  return r;
}

inline int sign_of(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

/// f(args) = sum_I c_I det[args_s(I_r)], the determinant by its permutation sum.
inline Rational eval(const KForm& f, const std::vector<Vector>& args) {
  const int k = f.degree();
  Rational total = 0;
  for (const auto& [idx, c] : f.coeffs()) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    Rational det = 0;
    do {
      Rational term = sign_of(p);
      for (int r = 0; r < k; ++r) term *= args[static_cast<std::size_t>(p[static_cast<std::size_t>(r)])](idx[static_cast<std::size_t>(r)]);
      det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    total += c * det;
  }
  return total;
}

inline void tuples_rec(int n, int k, int start, Multi& cur, std::vector<Multi>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    tuples_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Multi> tuples(int n, int k) {
  std::vector<Multi> out;
  Multi cur;
  tuples_rec(n, k, 0, cur, out);
  return out;
}

/// The k-form whose value on (e_J1, ..., e_Jk) is value(e_J) for increasing J.
inline KForm from_values(int n, int k, const std::function<Rational(const std::vector<Vector>&)>& value) {
  KForm f(n, k);
  for (const auto& j : tuples(n, k)) {
    std::vector<Vector> args;
    for (int i : j) args.push_back(lck::unit_vector(n, i));
    f.add_term(j, value(args));
  }
  return f;
}

inline KForm d(const LieAlgebra& g, const KForm& f) {
  const int k = f.degree();
  return from_values(g.dim(), k + 1, [&](const std::vector<Vector>& x) {
    Rational s = 0;
    for (int a = 0; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        std::vector<Vector> args{bracket(g, x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(b)])};
        for (int r = 0; r <= k; ++r)
          if (r != a && r != b) args.push_back(x[static_cast<std::size_t>(r)]);
        s += ((a + b) % 2 ? -1 : 1) * eval(f, args);
      }
    return s;
  });
}

inline KForm lie(const LieAlgebra& g, const Vector& v, const KForm& f) {
  return from_values(g.dim(), f.degree(), [&](const std::vector<Vector>& x) {
    Rational s = 0;
    for (std::size_t r = 0; r < x.size(); ++r) {
      auto args = x;
      args[r] = bracket(g, v, x[r]);
      s -= eval(f, args);
    }
    return s;
  });
}

/// (a ^ b)(x) = sum over (p, q)-shuffles of sign * a(x_S) b(x_rest).
inline KForm wedge(const KForm& a, const KForm& b) {
  const int p = a.degree(), q = b.degree();
  return from_values(a.parent_dim(), p + q, [&](const std::vector<Vector>& x) {
    Rational s = 0;
    for (const auto& sel : tuples(p + q, p)) {
      std::vector<int> perm(sel.begin(), sel.end());
      std::vector<Vector> xa, xb;
      for (int i : sel) xa.push_back(x[static_cast<std::size_t>(i)]);
      for (int i = 0; i < p + q; ++i)
        if (std::find(sel.begin(), sel.end(), i) == sel.end()) {
          perm.push_back(i);
          xb.push_back(x[static_cast<std::size_t>(i)]);
        }
      s += sign_of(perm) * eval(a, xa) * eval(b, xb);
    }
    return s;
  });
}

/// Textbook Gauss-Jordan; returns the kernel as columns.
inline Matrix kernel(Matrix m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.row(p).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, c);
    m.row(r) *= inv;
    for (Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Index> free;
  for (Index c = 0; c < cols; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free.push_back(c);
  Matrix k = Matrix::Zero(cols, static_cast<Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], static_cast<Index>(f)) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) k(pivot_col[i], static_cast<Index>(f)) = -m(static_cast<Index>(i), free[f]);
  }
  return k;
}

inline Index rank(const Matrix& m) { return m.cols() - kernel(m).cols(); }

/// Rad of the bilinear form B(u, v) = u^T B v: {u | B(u, .) = 0}.
inline Matrix radical(const Matrix& b) { return kernel(Matrix(b.transpose())); }

/// True when the columns of a and b span the same space.
inline bool same_span(const Matrix& a, const Matrix& b) {
  Matrix ab(a.rows(), a.cols() + b.cols());
  ab << a, b;
  const Index r = rank(ab);
  return r == rank(a) && r == rank(b);
}

}  // namespace oracle
