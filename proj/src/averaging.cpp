#include "lck/error.hpp"
#include "lck/lck.hpp"
#include "lck/linalg.hpp"
#include "lck/poly.hpp"

namespace lck {

Matrix lie_derivative_matrix(const LieAlgebra& g, const Vector& v, int k) {
  const int n = g.dim();
  const auto basis = form_basis(n, k);
  const Index m = static_cast<Index>(basis.size());
  Matrix a(m, m);
  for (Index c = 0; c < m; ++c) {
    const KForm e = KForm::monomial(n, basis[static_cast<std::size_t>(c)], 1);
    a.col(c) = to_coords(lie_derivative(g, v, e), basis);
  }
  return a;
}

KForm average_form(const LieAlgebra& g, const Vector& v, const KForm& f) {
  const int n = g.dim();
  if (v.size() != n || f.parent_dim() != n) throw Error(ErrorKind::DimensionMismatch, "average_form");
  const Matrix ad = g.ad(v);
  if (!is_semisimple(ad)) throw Error(ErrorKind::NotTorusLike, "ad v has a nilpotent part");
  if (!has_imaginary_spectrum(ad)) throw Error(ErrorKind::NotTorusLike, "ad v has eigenvalues off the imaginary axis");

  const int k = f.degree();
  const Matrix a = lie_derivative_matrix(g, v, k);
  const Matrix ker = kernel(a);
  const Matrix im = column_basis(a);
  const Index m = a.rows();
  if (ker.cols() + im.cols() != m) throw Error(ErrorKind::NotTorusLike, "ker L_v + im L_v is not direct");
  Matrix b(m, m);
  for (Index c = 0; c < ker.cols(); ++c) b.col(c) = ker.col(c);
  for (Index c = 0; c < im.cols(); ++c) b.col(ker.cols() + c) = im.col(c);
  const auto basis = form_basis(n, k);
  const auto x = solve(b, to_coords(f, basis));
  if (!x) throw Error(ErrorKind::NotTorusLike, "ker L_v and im L_v intersect");
  return from_coords(n, k, basis, Vector(ker * x->head(ker.cols())));
}

}  // namespace lck
