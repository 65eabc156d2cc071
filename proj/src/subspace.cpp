#include "lck/lie_algebra.hpp"

#include "lck/error.hpp"
#include "lck/linalg.hpp"

namespace lck {

Subspace::Subspace(Index ambient_dim, Matrix generators) : n_(ambient_dim), generators_(std::move(generators)) {
  if (generators_.rows() != n_) throw Error(ErrorKind::DimensionMismatch, "subspace generator length");
  if (generators_.cols() == 0) {
    basis_ = Matrix(n_, 0);
    return;
  }
  const auto ech = row_echelon(Matrix(generators_.transpose()));
  pivots_ = ech.pivots;
  basis_ = ech.rref.topRows(ech.rank()).transpose();
}

Subspace Subspace::span(Index n, const std::vector<Vector>& vs) {
  Matrix m(n, static_cast<Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Index>(k)) = vs[k];
  return Subspace(n, std::move(m));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector length vs subspace");
  // The echelon basis has an identity block on the pivot rows, so the
  // coordinates are read off there and then verified.
  Vector c(dim());
  for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<std::size_t>(k)]);
  if (basis_ * c != v) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (Index k = 0; k < other.dim(); ++k)
    if (!contains(Vector(other.basis_.col(k)))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  Matrix m(n_, dim() + other.dim());
  m << basis_, other.basis_;
  return Subspace(n_, std::move(m));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  // a x = b y  <=>  [a | -b] (x; y) = 0
  Matrix m(n_, dim() + other.dim());
  m << basis_, -other.basis_;
  const Matrix k = kernel(m);
  Matrix gens = basis_ * k.topRows(dim());
  return Subspace(n_, std::move(gens));
}

}  // namespace lck
