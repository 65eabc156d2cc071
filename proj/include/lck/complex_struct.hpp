#pragma once

#include "lck/gaussian.hpp"
#include "lck/lie_algebra.hpp"

#include <optional>
#include <string>
#include <utility>

namespace lck {

/// Linear map g -> g; column j is the image of e_j.
using Endomorphism = Matrix;

enum class Branch { Plus, Minus };  // J Y = +Z or J Y = -Z

std::string to_string(Branch b);

struct ComplexStructureVerdict {
  bool ok = false;
  Matrix residual;            // J^2 + I
  bool invariant = true;      // [ad Y, J] = 0 for Y in the supplied subalgebra
  std::string detail;
};

/// J^2 = -I exactly; when `isotropy` is given, also ad(Y) J = J ad(Y) on it.
ComplexStructureVerdict is_complex_structure(const LieAlgebra& g, const Endomorphism& j,
                                             const Subspace* isotropy = nullptr);

/// N(a,b) = [Ja,Jb] - [a,b] - J[Ja,b] - J[a,Jb].
Vector nijenhuis(const LieAlgebra& g, const Endomorphism& j, const Vector& a, const Vector& b);

/// First basis pair (lexicographic) with N(e_i, e_j) != 0, if any.
std::optional<std::pair<int, int>> nijenhuis_witness(const LieAlgebra& g, const Endomorphism& j);

/// The family on u(2) in the basis (T, X, Y, Z):
/// J(T - dX) = cX, J(cX) = -(T - dX), JY = +-Z, JZ = -+Y.
/// Throws Error(DegenerateParameter) when c = 0.
Endomorphism j_delta(const Rational& c, const Rational& d, Branch branch);

/// Complex subalgebra of g_C given by generators (columns, coordinates in the
/// real basis of g).
struct ComplexSubalgebra {
  int ambient_dim = 0;
  CMatrix generators;

  /// Reduced echelon basis (columns); equal spans give equal matrices.
  CMatrix echelon_basis() const;
  Index dim() const;
  ComplexSubalgebra conjugate() const;
  bool contains(const CVector& v) const;

  friend bool operator==(const ComplexSubalgebra& a, const ComplexSubalgebra& b) {
    return a.ambient_dim == b.ambient_dim && a.echelon_basis() == b.echelon_basis();
  }
};

/// Complex-bilinear extension of the bracket.
CVector complex_bracket(const LieAlgebra& g, const CVector& a, const CVector& b);
bool is_bracket_closed(const LieAlgebra& g, const ComplexSubalgebra& h,
                       std::pair<Index, Index>* witness = nullptr);

/// The (-i)-eigenspace of J in g_C, certified half-dimensional, bracket
/// closed and transverse to its conjugate. Throws Error(NotIntegrable) with
/// a witness pair, or Error(Precondition) when J^2 != -I.
ComplexSubalgebra subalgebra_from_J(const LieAlgebra& g, const Endomorphism& j);

/// Inverse correspondence: the real J acting as -i on h and +i on conj(h).
/// Throws Error(NotTransverse) or Error(NotClosed).
Endomorphism J_from_subalgebra(const LieAlgebra& g, const ComplexSubalgebra& h);

/// T, U = iX, V = (Z - iY)/2, W = -(Z + iY)/2 in the (T, X, Y, Z) coordinates.
struct U2ComplexBasis {
  CVector T, U, V, W;
};
U2ComplexBasis u2_complex_basis();

struct U2NormalForm {
  enum class Status { Reduced, RequiresIrrationalRescale, Unmatched };
  Status status = Status::Unmatched;
  Branch branch = Branch::Plus;
  Rational c = 0, d = 0;
  Matrix automorphism;  // R with R^{-1} J R = j_delta(c, d, branch)
  std::string detail;
};

/// Reduces an integrable J on u(2) (basis T, X, Y, Z) to one of the two
/// normal forms by a rational automorphism fixing T. When the rotation needs
/// an irrational norm the status says so and nothing is decided.
U2NormalForm reduce_u2_normal_form(const LieAlgebra& u2, const Endomorphism& j);

/// [R a, R b] = R [a, b] on all basis pairs.
bool is_automorphism(const LieAlgebra& g, const Matrix& r);

}  // namespace lck
