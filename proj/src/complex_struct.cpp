#include "lck/complex_struct.hpp"

#include "lck/error.hpp"
#include "lck/linalg.hpp"

namespace lck {

namespace {

const GaussianRational kI = GaussianRational::imag_unit();

void check_square(const LieAlgebra& g, const Endomorphism& j) {
  if (j.rows() != g.dim() || j.cols() != g.dim())
    throw Error(ErrorKind::DimensionMismatch, "endomorphism must be dim x dim");
}

}  // namespace

std::string to_string(Branch b) { return b == Branch::Plus ? "+" : "-"; }

ComplexStructureVerdict is_complex_structure(const LieAlgebra& g, const Endomorphism& j, const Subspace* isotropy) {
  check_square(g, j);
  ComplexStructureVerdict v;
  v.residual = j * j + Matrix::Identity(g.dim(), g.dim());
  v.ok = is_zero(v.residual);
  if (!v.ok) v.detail = "J^2 != -I";
  if (isotropy) {
    for (Index k = 0; k < isotropy->dim(); ++k) {
      const Matrix ad = g.ad(isotropy->basis_vector(k));
      if (!is_zero(Matrix(ad * j - j * ad))) {
        v.invariant = false;
        v.detail += (v.detail.empty() ? "" : "; ") + std::string("ad(h) does not commute with J");
        break;
      }
    }
  }
  return v;
}

Vector nijenhuis(const LieAlgebra& g, const Endomorphism& j, const Vector& a, const Vector& b) {
  check_square(g, j);
  const Vector ja = j * a;
  const Vector jb = j * b;
  return g.bracket(ja, jb) - g.bracket(a, b) - j * g.bracket(ja, b) - j * g.bracket(a, jb);
}

std::optional<std::pair<int, int>> nijenhuis_witness(const LieAlgebra& g, const Endomorphism& j) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b)
      if (!is_zero(nijenhuis(g, j, g.basis_vector(a), g.basis_vector(b)))) return std::make_pair(a, b);
  return std::nullopt;
}

Endomorphism j_delta(const Rational& c, const Rational& d, Branch branch) {
  if (c == 0) throw Error(ErrorKind::DegenerateParameter, "c = 0 in delta = c + i d");
  enum { T, X, Y, Z };
  Endomorphism j = Matrix::Zero(4, 4);
  // J T = -(d/c) T + ((c^2 + d^2)/c) X,  J X = -(1/c) T + (d/c) X
  j(T, T) = -d / c;
  j(X, T) = (c * c + d * d) / c;
  j(T, X) = Rational(-1) / c;
  j(X, X) = d / c;
  const Rational s = branch == Branch::Plus ? 1 : -1;
  j(Z, Y) = s;
  j(Y, Z) = -s;
  return j;
}

CMatrix ComplexSubalgebra::echelon_basis() const {
  if (generators.cols() == 0) return CMatrix(ambient_dim, 0);
  const auto ech = row_echelon(CMatrix(generators.transpose()));
  return ech.rref.topRows(ech.rank()).transpose();
}

Index ComplexSubalgebra::dim() const { return generators.cols() == 0 ? 0 : lck::rank(generators); }

ComplexSubalgebra ComplexSubalgebra::conjugate() const { return {ambient_dim, lck::conjugate(generators)}; }

bool ComplexSubalgebra::contains(const CVector& v) const {
  CMatrix aug(ambient_dim, generators.cols() + 1);
  aug << generators, v;
  return lck::rank(aug) == dim();
}

CVector complex_bracket(const LieAlgebra& g, const CVector& a, const CVector& b) {
  CVector r = CVector::Zero(g.dim());
  for (const auto& [key, c] : g.structure()) {
    const auto [i, j] = key;
    const GaussianRational f = a(i) * b(j) - a(j) * b(i);
    if (f == GaussianRational(0)) continue;
    for (Index m = 0; m < c.size(); ++m)
      if (c(m) != 0) r(m) += f * GaussianRational(c(m));
  }
  return r;
}

bool is_bracket_closed(const LieAlgebra& g, const ComplexSubalgebra& h, std::pair<Index, Index>* witness) {
  const CMatrix b = h.echelon_basis();
  for (Index p = 0; p < b.cols(); ++p)
    for (Index q = p + 1; q < b.cols(); ++q)
      if (!h.contains(complex_bracket(g, b.col(p), b.col(q)))) {
        if (witness) *witness = {p, q};
        return false;
      }
  return true;
}

ComplexSubalgebra subalgebra_from_J(const LieAlgebra& g, const Endomorphism& j) {
  check_square(g, j);
  if (!is_complex_structure(g, j).ok) throw Error(ErrorKind::Precondition, "J^2 != -I");
  const Index n = g.dim();
  CMatrix shifted = complexify(j);
  for (Index i = 0; i < n; ++i) shifted(i, i) += kI;
  ComplexSubalgebra h{static_cast<int>(n), kernel(shifted)};
  h.generators = h.echelon_basis();
  if (2 * h.dim() != n)
    throw Error(ErrorKind::Precondition, "eigenspace has dimension " + std::to_string(h.dim()));
  CMatrix both(n, n);
  both << h.generators, lck::conjugate(h.generators);
  if (lck::rank(both) != n) throw Error(ErrorKind::NotIntegrable, "eigenspace meets its conjugate");
  std::pair<Index, Index> w;
  if (!is_bracket_closed(g, h, &w)) {
    const CMatrix b = h.generators;
    const CVector br = complex_bracket(g, b.col(w.first), b.col(w.second));
    std::string msg = "bracket of eigenvectors " + std::to_string(w.first) + ", " + std::to_string(w.second) +
                      " leaves the eigenspace: [";
    for (Index i = 0; i < br.size(); ++i) msg += (i ? ", " : "") + to_string(br(i));
    throw Error(ErrorKind::NotIntegrable, msg + "]");
  }
  return h;
}

Endomorphism J_from_subalgebra(const LieAlgebra& g, const ComplexSubalgebra& h) {
  const Index n = g.dim();
  if (h.ambient_dim != n) throw Error(ErrorKind::DimensionMismatch, "subalgebra ambient dimension");
  const CMatrix b = h.echelon_basis();
  if (2 * b.cols() != n) throw Error(ErrorKind::NotTransverse, "h is not half-dimensional");
  CMatrix both(n, n);
  both << b, lck::conjugate(b);
  const auto inv = inverse(both);
  if (!inv) throw Error(ErrorKind::NotTransverse, "h meets its conjugate");
  if (!is_bracket_closed(g, h)) throw Error(ErrorKind::NotClosed, "h is not closed under the bracket");
  CMatrix diag = CMatrix::Zero(n, n);
  for (Index k = 0; k < n / 2; ++k) {
    diag(k, k) = -kI;
    diag(k + n / 2, k + n / 2) = kI;
  }
  const CMatrix jc = both * diag * (*inv);
  Endomorphism j(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      if (!jc(r, c).is_real()) throw Error(ErrorKind::Precondition, "induced endomorphism is not real");
      j(r, c) = jc(r, c).re;
    }
  return j;
}

U2ComplexBasis u2_complex_basis() {
  const GaussianRational half(Rational(1, 2));
  U2ComplexBasis b;
  b.T = CVector::Zero(4);
  b.U = CVector::Zero(4);
  b.V = CVector::Zero(4);
  b.W = CVector::Zero(4);
  b.T(0) = 1;
  b.U(1) = kI;
  b.V(2) = -kI * half;
  b.V(3) = half;
  b.W(2) = -kI * half;
  b.W(3) = -half;
  return b;
}

bool is_automorphism(const LieAlgebra& g, const Matrix& r) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b)
      if (g.bracket(r.col(a), r.col(b)) != r * g.bracket_basis(a, b)) return false;
  return true;
}

namespace {

// Intersection of the span of the columns of a with the coordinate subspace
// given by `coords` (other coordinates forced to zero).
CMatrix intersect_coordinate(const CMatrix& a, const std::vector<Index>& zero_coords) {
  CMatrix rows(static_cast<Index>(zero_coords.size()), a.cols());
  for (std::size_t k = 0; k < zero_coords.size(); ++k) rows.row(static_cast<Index>(k)) = a.row(zero_coords[k]);
  const CMatrix ker = kernel(rows);
  return a * ker;
}

// Rotates u onto X and reads off delta and the branch.
U2NormalForm reduce_along(const LieAlgebra& u2, const Endomorphism& j, const Vector& u) {
  U2NormalForm out;
  Matrix r3 = Matrix::Identity(3, 3);
  const Vector e1 = unit_vector(3, 0);
  if (u == -e1) {
    r3(0, 0) = -1;
    r3(1, 1) = -1;
  } else if (u != e1) {
    // Householder reflection swapping e1 and u, composed with the reflection
    // fixing e1 and flipping e2: a rational rotation taking e1 to u.
    const Vector w = e1 - u;
    const Matrix house = Matrix::Identity(3, 3) - (Rational(2) / w.squaredNorm()) * (w * w.transpose());
    Matrix flip = Matrix::Identity(3, 3);
    flip(1, 1) = -1;
    r3 = house * flip;
  }
  Matrix r = Matrix::Identity(4, 4);
  r.bottomRightCorner(3, 3) = r3;
  if (!is_automorphism(u2, r)) {
    out.detail = "constructed rotation is not an automorphism";
    return out;
  }
  out.automorphism = r;
  const Endomorphism jn = (*inverse(r)) * j * r;

  const CMatrix hn = subalgebra_from_J(u2, jn).generators;
  const CMatrix tx = intersect_coordinate(hn, {2, 3});
  const CMatrix yz = intersect_coordinate(hn, {0, 1});
  if (tx.cols() != 1 || yz.cols() != 1 || tx(0, 0) == GaussianRational(0)) {
    out.detail = "subalgebra is not of the form <T + delta U, V or W>";
    return out;
  }
  // alpha T + beta X = alpha (T + delta U) with U = iX, so delta = -i beta / alpha.
  const GaussianRational delta = -kI * tx(1, 0) / tx(0, 0);
  const CVector rv = yz.col(0);
  const auto basis = u2_complex_basis();
  auto parallel = [](const CVector& a, const CVector& b) {
    return a(2) * b(3) - a(3) * b(2) == GaussianRational(0);
  };
  if (parallel(rv, basis.V)) {
    out.branch = Branch::Plus;
  } else if (parallel(rv, basis.W)) {
    out.branch = Branch::Minus;
  } else {
    out.detail = "second generator is neither V nor W";
    return out;
  }
  out.c = delta.re;
  out.d = delta.im;
  if (out.c == 0 || j_delta(out.c, out.d, out.branch) != jn) {
    out.detail = "normal form does not reproduce the rotated J";
    return out;
  }
  out.status = U2NormalForm::Status::Reduced;
  return out;
}

}  // namespace

U2NormalForm reduce_u2_normal_form(const LieAlgebra& u2, const Endomorphism& j) {
  if (u2.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "u(2) has dimension 4");
  U2NormalForm out;
  const ComplexSubalgebra h = subalgebra_from_J(u2, j);

  // c = projection of h to b = <X, Y, Z>_C; Q spans c ∩ conj(c).
  const CMatrix c = h.generators.bottomRows(3);
  CMatrix stacked(3, 4);
  stacked << c, -lck::conjugate(c);
  const CMatrix ker = kernel(stacked);
  if (ker.cols() != 1) {
    out.detail = "c ∩ conj(c) has dimension " + std::to_string(ker.cols());
    return out;
  }
  const CVector q0 = c * ker.col(0).head(2);
  CVector qv = q0 - lck::conjugate(q0);
  if (is_zero(qv)) qv = kI * (q0 + lck::conjugate(q0));
  // Q = i q with q real
  Vector q(3);
  for (Index i = 0; i < 3; ++i) {
    const GaussianRational r = -kI * qv(i);
    if (!r.is_real()) {
      out.detail = "Q + conj(Q) != 0";
      return out;
    }
    q(i) = r.re;
  }
  Rational norm;
  if (!rational_sqrt(q.squaredNorm(), norm)) {
    out.status = U2NormalForm::Status::RequiresIrrationalRescale;
    out.detail = "|Q|^2 = " + to_string(q.squaredNorm()) + " is not a rational square";
    return out;
  }
  // q and -q span the same line; the sign that gives c > 0 is the normal form.
  U2NormalForm fallback = out;
  for (const int sign : {1, -1}) {
    U2NormalForm cand = reduce_along(u2, j, Vector(sign * q / norm));
    if (cand.status == U2NormalForm::Status::Reduced && cand.c > 0) return cand;
    if (fallback.status != U2NormalForm::Status::Reduced) fallback = cand;
  }
  return fallback;
}

}  // namespace lck
