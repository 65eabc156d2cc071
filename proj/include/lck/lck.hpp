#pragma once

#include "lck/check.hpp"
#include "lck/complex_struct.hpp"
#include "lck/kform.hpp"
#include "lck/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lck {

/// g = m + h with h a subalgebra and [h, m] in m. Invariant tensors on G/H
/// are modelled as forms on g vanishing on h; metrics live on m.
struct CosetPresentation {
  LieAlgebra g;
  Subspace h;
  Subspace m;

  /// h = 0, m = g.
  static CosetPresentation plain(const LieAlgebra& g);
  /// Throws Error(NotDecomposable) unless g = m (+) h, h is a subalgebra and
  /// [h, m] lies in m.
  static CosetPresentation make(const LieAlgebra& g, const Subspace& h, const Subspace& m);

  bool is_plain() const { return h.dim() == 0; }
  /// dim m x dim g matrix sending v to its m-coordinates along h.
  const Matrix& m_projection() const { return proj_; }

 private:
  CosetPresentation(LieAlgebra g, Subspace h, Subspace m);
  Matrix proj_;
};

/// Omega(m_a, m_b) on the echelon basis of m.
Matrix form_on_m(const CosetPresentation& p, const KForm& omega);

/// The unique theta vanishing on h with d Omega = theta ^ Omega. Throws
/// DegenerateForm (Omega singular on m), NotLck, LeeNotClosed.
KForm lee_form(const CosetPresentation& p, const KForm& omega);
KForm lee_form(const LieAlgebra& g, const KForm& omega);

/// h(U, V) = Omega(JU, V) on the basis of m.
struct MetricMatrix {
  Matrix entries;
  Matrix basis;  // columns: basis of m in g
};

/// Throws Precondition (J does not preserve m or J^2 != -I there),
/// NotSymmetric (Omega not J-invariant) or NotPositiveDefinite (first failing
/// leading minor in the message).
MetricMatrix metric_from(const CosetPresentation& p, const KForm& omega, const Endomorphism& j);

struct LeeField {
  Vector xi;          // h(xi, .) = theta, xi in m
  Rational theta_xi;  // theta(xi) = h(xi, xi); the unit rescale is its square root
};

LeeField lee_field(const CosetPresentation& p, const MetricMatrix& h, const KForm& theta);

/// phi = h(eta, .) / h(eta, eta) as a 1-form on g vanishing on h.
KForm reeb_form(const CosetPresentation& p, const MetricMatrix& h, const Vector& eta);

struct VaismanVerdict {
  bool vaisman = true;
  Matrix residual;  // h([xi, U], V) + h(U, [xi, V]) on the basis of m
  Index i = -1, j = -1;  // first nonzero entry with i <= j
};

VaismanVerdict vaisman_check(const CosetPresentation& p, const MetricMatrix& h, const Vector& xi);

struct LckCertificate {
  KForm omega;
  KForm theta;
  Endomorphism J;
  MetricMatrix metric;
  LeeField lee;
  Vector reeb_field;  // eta = J xi
  KForm reeb_form;
  VaismanVerdict vaisman;
  std::vector<Check> checks;
};

/// lee_form -> metric_from -> lee_field -> vaisman_check. Errors from the
/// first failing stage propagate.
LckCertificate certify(const CosetPresentation& p, const KForm& omega, const Endomorphism& j);

/// The normalization of an l.c.K. potential on a reductive algebra:
/// psi_c(sigma) = 1, psi_c(t) = 0, theta(t) = 1, theta(sigma) = 0 and
/// i_sigma d psi_c = 0.
struct Lemma1Data {
  KForm psi;    // raw solution of d_theta psi = Omega
  KForm psi_c;  // psi - c theta
  Rational c;
  Vector t;            // central, theta(t) = 1
  Vector sigma_prime;  // psi_c = 1, theta = 0
  Vector sigma;        // sigma' - tau
  Subspace p;          // <t, sigma>
  Subspace q;          // ker theta cap ker psi_c
  Subspace rad;        // Rad d psi_c
};

/// Throws NotReductive, Precondition (theta zero, not closed, not vanishing
/// on [g,g], or d_theta Omega != 0) and DegeneratePotential.
Lemma1Data lemma1_normalize(const LieAlgebra& g, const KForm& omega, const KForm& theta);

/// The five defining equalities and Rad d psi_c = <t, sigma>.
std::vector<Check> lemma1_checks(const LieAlgebra& g, const KForm& theta, const Lemma1Data& n);

/// Consequences of the normalization checked against a certificate: J xi is a
/// positive multiple of sigma, L_sigma Omega = 0, 1 <= dim center <= 2, and,
/// when L_{Jt} Omega = 0, the descriptions of <t, sigma> and of Omega through
/// the Reeb form. [sigma, Jt] = 0 and L_sigma J = 0 are informational.
std::vector<Check> corollary_checks(const LieAlgebra& g, const Lemma1Data& n, const LckCertificate& cert);

/// <xi> + [g, g], the subalgebra used to reduce a two-dimensional center to
/// a one-dimensional one.
Subspace reduced_subalgebra(const LieAlgebra& g, const Vector& xi);
/// Dimension of the center of a subalgebra.
int center_dim(const LieAlgebra& g, const Subspace& sub);

/// Matrix of L_v on k-forms in the lexicographic monomial basis.
Matrix lie_derivative_matrix(const LieAlgebra& g, const Vector& v, int k);

/// Zero-weight projection of f along im L_v onto ker L_v: the average of f
/// over the torus closure of exp(R v). Throws NotTorusLike unless ad v is
/// semisimple with imaginary spectrum and ker + im is the whole space.
KForm average_form(const LieAlgebra& g, const Vector& v, const KForm& f);

enum class Admits { Yes, No, Inconclusive };
std::string to_string(Admits a);

struct Classification {
  Admits admits = Admits::Inconclusive;
  int center_dim = 0;
  RankEstimate rank;
  std::vector<std::string> reasons;
};

/// A reductive algebra admits an l.c.K. structure iff its center is
/// one-dimensional and [g, g] has rank one. Throws NotReductive.
Classification classify_reductive(const LieAlgebra& g, const RankOptions& opts = {});

struct HomogeneousReport {
  std::vector<Check> checks;
  Subspace q;  // {X in s + h | d phi(X, s + h) = 0}
};

/// Vanishing on h and ad(h)-invariance of Omega, theta and J, the l.c.K.
/// certificate on m, and the subalgebra q with dim q - dim h = 1.
HomogeneousReport homogeneous_checks(const CosetPresentation& p, const KForm& omega, const KForm& theta,
                                     const Endomorphism& j);

}  // namespace lck
