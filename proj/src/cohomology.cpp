#include "lck/cohomology.hpp"

#include "lck/error.hpp"
#include "lck/linalg.hpp"

namespace lck {

Matrix coboundary_matrix(const LieAlgebra& g, int p, const KForm* theta) {
  const int n = g.dim();
  const auto src = form_basis(n, p);
  const auto dst = form_basis(n, p + 1);
  Matrix m = Matrix::Zero(static_cast<Index>(dst.size()), static_cast<Index>(src.size()));
  if (src.empty() || dst.empty()) return m;
  if (theta && !ce_differential(g, *theta).is_zero()) throw Error(ErrorKind::ThetaNotClosed, "d theta != 0");
  for (std::size_t j = 0; j < src.size(); ++j) {
    const KForm e = KForm::monomial(n, src[j], Rational(1));
    KForm img = ce_differential(g, e);
    if (theta) img -= wedge(*theta, e);
    m.col(static_cast<Index>(j)) = to_coords(img, dst);
  }
  return m;
}

CochainComplexSlice complex_slice(const LieAlgebra& g, int p, const KForm* theta) {
  CochainComplexSlice s;
  s.degree = p;
  s.basis_labels = form_basis(g.dim(), p);
  const auto dim_p = static_cast<Index>(s.basis_labels.size());
  s.matrix_in = p >= 1 ? coboundary_matrix(g, p - 1, theta) : Matrix(dim_p, 0);
  s.matrix_out = coboundary_matrix(g, p, theta);
  if (s.matrix_out.cols() != dim_p) s.matrix_out.resize(0, dim_p);
  return s;
}

namespace {

int slice_cohomology(const CochainComplexSlice& s) {
  const Index dim_p = static_cast<Index>(s.basis_labels.size());
  const Index r_out = s.matrix_out.rows() == 0 ? 0 : rank(s.matrix_out);
  const Index r_in = s.matrix_in.cols() == 0 || s.matrix_in.rows() == 0 ? 0 : rank(s.matrix_in);
  return static_cast<int>(dim_p - r_out - r_in);
}

}  // namespace

int betti(const LieAlgebra& g, int p) {
  if (p < 0 || p > g.dim()) return 0;
  return slice_cohomology(complex_slice(g, p));
}

int twisted_betti(const LieAlgebra& g, const KForm& theta, int p) {
  if (theta.degree() != 1 || theta.parent_dim() != g.dim())
    throw Error(ErrorKind::Precondition, "twisting form must be a 1-form on the algebra");
  if (!ce_differential(g, theta).is_zero()) throw Error(ErrorKind::ThetaNotClosed, "d theta != 0");
  if (p < 0 || p > g.dim()) return 0;
  return slice_cohomology(complex_slice(g, p, &theta));
}

PotentialSolution solve_potential(const LieAlgebra& g, const KForm& theta, const KForm& omega) {
  const int n = g.dim();
  if (theta.degree() != 1 || omega.degree() != 2 || theta.parent_dim() != n || omega.parent_dim() != n)
    throw Error(ErrorKind::Precondition, "solve_potential needs a 1-form theta and a 2-form omega on g");
  if (!twisted_differential(g, theta, omega).is_zero())
    throw Error(ErrorKind::Precondition, "omega is not d_theta-closed");
  const Matrix d1 = coboundary_matrix(g, 1, &theta);
  const auto basis2 = form_basis(n, 2);
  const auto x = solve(d1, to_coords(omega, basis2));
  if (!x) throw Error(ErrorKind::NoSolution, "omega is not d_theta-exact (twisted class nonzero)");

  PotentialSolution out;
  out.psi = KForm::linear(*x);
  const Matrix ker = kernel(d1);
  out.freedom = static_cast<int>(ker.cols());

  const Vector th = theta.as_linear();
  const Subspace t = center(g);
  for (Index k = 0; k < t.dim(); ++k) {
    const Vector tk = t.basis_vector(k);
    const Rational th_t = th.dot(tk);
    if (th_t == 0) continue;
    // theta itself spans a direction of ker d_theta (d_theta theta = d theta = 0).
    out.shift = out.psi.as_linear().dot(tk) / th_t;
    out.psi -= out.shift * theta;
    out.normalized = true;
    break;
  }
  return out;
}

}  // namespace lck
