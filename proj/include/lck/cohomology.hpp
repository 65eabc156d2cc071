#pragma once

#include "lck/kform.hpp"
#include "lck/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace lck {

/// Matrix of f -> d f (or d_theta f) from degree p to p + 1 in the
/// lexicographic monomial bases.
Matrix coboundary_matrix(const LieAlgebra& g, int p, const KForm* theta = nullptr);

/// The cochain complex around degree p: incoming and outgoing coboundaries.
struct CochainComplexSlice {
  int degree = 0;
  Matrix matrix_in;   // degree-1 -> degree
  Matrix matrix_out;  // degree -> degree+1
  std::vector<Multi> basis_labels;
};

CochainComplexSlice complex_slice(const LieAlgebra& g, int p, const KForm* theta = nullptr);

int betti(const LieAlgebra& g, int p);
/// Throws Error(ThetaNotClosed) when d theta != 0.
int twisted_betti(const LieAlgebra& g, const KForm& theta, int p);

struct PotentialSolution {
  KForm psi;
  /// psi(t) = 0 was imposed for a central t with theta(t) != 0.
  bool normalized = false;
  /// The raw solution's value psi_raw(t) / theta(t) (the shift c); zero when
  /// not normalized.
  Rational shift = 0;
  /// Dimension of the solution space's direction (ker d_theta on 1-forms).
  int freedom = 0;
};

/// Solves d_theta psi = omega for a 1-form psi. The solution is unique up to
/// ker d_theta on 1-forms (the line through theta when H^1_theta = 0); among
/// those, the one with psi(t) = 0 for the first central t with theta(t) != 0
/// is returned. Throws Error(NoSolution) if omega is not d_theta-exact and
/// Error(ThetaNotClosed) / Error(Precondition) on bad inputs.
PotentialSolution solve_potential(const LieAlgebra& g, const KForm& theta, const KForm& omega);

}  // namespace lck
