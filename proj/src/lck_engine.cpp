#include "lck/lck.hpp"

#include "lck/cohomology.hpp"
#include "lck/error.hpp"
#include "lck/linalg.hpp"

namespace lck {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "hypothesis not met";
  }
  return "?";
}

CosetPresentation::CosetPresentation(LieAlgebra g_, Subspace h_, Subspace m_)
    : g(std::move(g_)), h(std::move(h_)), m(std::move(m_)) {
  const Index n = g.dim();
  Matrix b(n, n);
  b << m.basis(), h.basis();
  proj_ = inverse(b)->topRows(m.dim());
}

CosetPresentation CosetPresentation::plain(const LieAlgebra& g) {
  return CosetPresentation(g, Subspace::zero(g.dim()), Subspace::whole(g.dim()));
}

CosetPresentation CosetPresentation::make(const LieAlgebra& g, const Subspace& h, const Subspace& m) {
  const Index n = g.dim();
  if (h.ambient_dim() != n || m.ambient_dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "presentation subspaces must live in g");
  if (h.dim() + m.dim() != n || (h + m).dim() != n)
    throw Error(ErrorKind::NotDecomposable, "g is not the direct sum of m and h");
  if (!is_subalgebra(g, h)) throw Error(ErrorKind::NotDecomposable, "h is not a subalgebra");
  for (Index a = 0; a < h.dim(); ++a)
    for (Index b = 0; b < m.dim(); ++b)
      if (!m.contains(g.bracket(h.basis_vector(a), m.basis_vector(b))))
        throw Error(ErrorKind::NotDecomposable, "[h, m] is not contained in m: [" +
                                                    to_string(h.basis_vector(a), g.basis_names()) + ", " +
                                                    to_string(m.basis_vector(b), g.basis_names()) + "]");
  return CosetPresentation(g, h, m);
}

Matrix form_on_m(const CosetPresentation& p, const KForm& omega) {
  const Matrix& mb = p.m.basis();
  return mb.transpose() * omega.as_bilinear() * mb;
}

KForm lee_form(const CosetPresentation& p, const KForm& omega) {
  const LieAlgebra& g = p.g;
  const int n = g.dim();
  if (omega.degree() != 2 || omega.parent_dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "Omega must be a 2-form on g");
  if (determinant(form_on_m(p, omega)) == 0)
    throw Error(ErrorKind::DegenerateForm, "Omega is degenerate on m");

  const auto basis3 = form_basis(n, 3);
  const Index r3 = static_cast<Index>(basis3.size());
  const Index hd = p.h.dim();
  Matrix a = Matrix::Zero(r3 + hd, n);
  for (int i = 0; i < n; ++i) a.col(i).head(r3) = to_coords(wedge(KForm::dual(n, i), omega), basis3);
  for (Index k = 0; k < hd; ++k) a.row(r3 + k) = p.h.basis_vector(k).transpose();
  Vector b = Vector::Zero(r3 + hd);
  b.head(r3) = to_coords(ce_differential(g, omega), basis3);
  const auto x = solve(a, b);
  if (!x) throw Error(ErrorKind::NotLck, "d Omega is not of the form theta ^ Omega");
  KForm theta = KForm::linear(*x);
  if (!ce_differential(g, theta).is_zero())
    throw Error(ErrorKind::LeeNotClosed, "d theta = " + to_string(ce_differential(g, theta), g.dual_names()));
  return theta;
}

KForm lee_form(const LieAlgebra& g, const KForm& omega) { return lee_form(CosetPresentation::plain(g), omega); }

MetricMatrix metric_from(const CosetPresentation& p, const KForm& omega, const Endomorphism& j) {
  const int n = p.g.dim();
  if (j.rows() != n || j.cols() != n) throw Error(ErrorKind::DimensionMismatch, "J must be dim x dim");
  const Matrix& mb = p.m.basis();
  const Matrix jm = j * mb;
  for (Index k = 0; k < jm.cols(); ++k)
    if (!p.m.contains(Vector(jm.col(k)))) throw Error(ErrorKind::Precondition, "J does not preserve m");
  const Matrix jr = p.m_projection() * jm;
  if (jr * jr != -Matrix::Identity(jr.rows(), jr.cols()))
    throw Error(ErrorKind::Precondition, "J^2 != -I on m");

  MetricMatrix out;
  out.basis = mb;
  out.entries = jm.transpose() * omega.as_bilinear() * mb;
  if (out.entries != out.entries.transpose()) {
    for (Index a = 0; a < out.entries.rows(); ++a)
      for (Index b = a + 1; b < out.entries.cols(); ++b)
        if (out.entries(a, b) != out.entries(b, a))
          throw Error(ErrorKind::NotSymmetric, "Omega(J u, v) != Omega(J v, u) at (" + std::to_string(a) + ", " +
                                                   std::to_string(b) + ")");
  }
  const auto minors = leading_principal_minors(out.entries);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k] <= 0)
      throw Error(ErrorKind::NotPositiveDefinite,
                  "leading minor " + std::to_string(k + 1) + " = " + to_string(minors[k]));
  return out;
}

LeeField lee_field(const CosetPresentation& p, const MetricMatrix& h, const KForm& theta) {
  const Vector rhs = h.basis.transpose() * theta.as_linear();
  const auto x = solve(h.entries, rhs);
  if (!x) throw Error(ErrorKind::Precondition, "metric is singular");
  LeeField out;
  out.xi = p.m.basis() * (*x);
  out.theta_xi = theta.as_linear().dot(out.xi);
  return out;
}

KForm reeb_form(const CosetPresentation& p, const MetricMatrix& h, const Vector& eta) {
  const Vector e = p.m_projection() * eta;
  const Rational norm = e.dot(h.entries * e);
  if (norm == 0) return KForm(p.g.dim(), 1);
  const Vector row = (p.m_projection().transpose() * (h.entries * e)) / norm;
  return KForm::linear(row);
}

VaismanVerdict vaisman_check(const CosetPresentation& p, const MetricMatrix& h, const Vector& xi) {
  const Matrix a = p.m_projection() * p.g.ad(xi) * h.basis;
  VaismanVerdict out;
  out.residual = a.transpose() * h.entries + h.entries * a;
  for (Index i = 0; i < out.residual.rows() && out.vaisman; ++i)
    for (Index j = i; j < out.residual.cols(); ++j)
      if (out.residual(i, j) != 0) {
        out.vaisman = false;
        out.i = i;
        out.j = j;
        break;
      }
  return out;
}

namespace {

// The (-i)-eigenspace of J together with h_C must be a complex subalgebra.
std::optional<std::pair<Index, Index>> integrability_witness(const CosetPresentation& p, const Endomorphism& j) {
  const Index n = p.g.dim();
  CMatrix shifted = complexify(j);
  for (Index i = 0; i < n; ++i) shifted(i, i) += GaussianRational::imag_unit();
  const CMatrix e = kernel(shifted);
  CMatrix gens(n, e.cols() + p.h.dim());
  gens << e, complexify(p.h.basis());
  ComplexSubalgebra sub{static_cast<int>(n), gens};
  std::pair<Index, Index> w;
  if (!is_bracket_closed(p.g, sub, &w)) return w;
  return std::nullopt;
}

}  // namespace

LckCertificate certify(const CosetPresentation& p, const KForm& omega, const Endomorphism& j) {
  const LieAlgebra& g = p.g;
  const auto& dn = g.dual_names();
  LckCertificate c;
  c.omega = omega;
  c.J = j;
  c.theta = lee_form(p, omega);

  Check eq = make_check("lck.equation", "dΩ = θ∧Ω", ce_differential(g, omega) == wedge(c.theta, omega));
  eq.witnesses = {{"theta", to_string(c.theta, dn)}};
  c.checks.push_back(eq);
  c.checks.push_back(make_check("lck.lee_closed", "dθ = 0", ce_differential(g, c.theta).is_zero()));

  c.metric = metric_from(p, omega, j);
  c.checks.push_back(make_check("complex.j_squared", "J² = −1 on m", true));
  const auto nw = integrability_witness(p, j);
  Check integ = make_check("complex.integrable", "the (−i)-eigenspace of J plus h_C is a complex subalgebra", !nw);
  if (nw) integ.witnesses = {{"pair", std::to_string(nw->first) + "," + std::to_string(nw->second)}};
  c.checks.push_back(integ);
  c.checks.push_back(make_check("lck.j_invariant", "Ω(JX, JY) = Ω(X, Y)", true));
  Check spd = make_check("lck.metric_spd", "h(X, Y) = Ω(JX, Y) is positive definite", true);
  const auto minors = leading_principal_minors(c.metric.entries);
  std::string ms;
  for (const auto& mnr : minors) ms += (ms.empty() ? "" : ", ") + to_string(mnr);
  spd.witnesses = {{"leading_minors", ms}};
  c.checks.push_back(spd);

  c.lee = lee_field(p, c.metric, c.theta);
  const Vector hxi = c.metric.entries * (p.m_projection() * c.lee.xi);
  Check lf = make_check("lck.lee_field", "h(ξ, ·) = θ", hxi == c.metric.basis.transpose() * c.theta.as_linear());
  lf.witnesses = {{"xi", to_string(c.lee.xi, g.basis_names())}, {"theta(xi)", to_string(c.lee.theta_xi)}};
  c.checks.push_back(lf);

  c.reeb_field = j * c.lee.xi;
  c.reeb_form = reeb_form(p, c.metric, c.reeb_field);
  Check rb = make_check("lck.reeb", "η = Jξ, φ(η) = 1", c.lee.xi.isZero() || c.reeb_form.as_linear().dot(c.reeb_field) == 1);
  rb.witnesses = {{"eta", to_string(c.reeb_field, g.basis_names())}, {"phi", to_string(c.reeb_form, dn)}};
  c.checks.push_back(rb);

  c.vaisman = vaisman_check(p, c.metric, c.lee.xi);
  Check vs = make_check("vaisman.killing", "h([ξ, X], Y) + h(X, [ξ, Y]) = 0", c.vaisman.vaisman);
  vs.informational = true;
  if (!c.vaisman.vaisman) {
    const auto& names = g.basis_names();
    vs.witnesses = {{"X", to_string(Vector(c.metric.basis.col(c.vaisman.i)), names)},
                    {"Y", to_string(Vector(c.metric.basis.col(c.vaisman.j)), names)},
                    {"residual", to_string(c.vaisman.residual(c.vaisman.i, c.vaisman.j))}};
  }
  c.checks.push_back(vs);
  return c;
}

Lemma1Data lemma1_normalize(const LieAlgebra& g, const KForm& omega, const KForm& theta) {
  const int n = g.dim();
  const ReductiveSplit split = reductive_split(g);
  if (theta.degree() != 1 || theta.parent_dim() != n || theta.is_zero())
    throw Error(ErrorKind::Precondition, "theta must be a nonzero 1-form");
  if (!ce_differential(g, theta).is_zero()) throw Error(ErrorKind::Precondition, "theta is not closed");
  const Vector th = theta.as_linear();
  if (!is_zero(Matrix(th.transpose() * split.s.basis())))
    throw Error(ErrorKind::Precondition, "theta does not vanish on [g, g]");
  if (!twisted_differential(g, theta, omega).is_zero())
    throw Error(ErrorKind::Precondition, "d_theta Omega != 0");

  Lemma1Data out;
  const PotentialSolution sol = solve_potential(g, theta, omega);
  out.psi_c = sol.psi;
  out.c = sol.shift;
  out.psi = sol.psi + sol.shift * theta;
  for (Index k = 0; k < split.t.dim(); ++k) {
    const Vector tk = split.t.basis_vector(k);
    if (th.dot(tk) != 0) {
      out.t = tk / th.dot(tk);
      break;
    }
  }

  const Vector pc = out.psi_c.as_linear();
  Matrix rows(2, n);
  rows.row(0) = th.transpose();
  rows.row(1) = pc.transpose();
  Vector rhs(2);
  rhs << 0, 1;
  const auto sp = solve(rows, rhs);
  if (!sp) throw Error(ErrorKind::DegeneratePotential, "psi_c is proportional to theta");
  out.sigma_prime = *sp;
  out.q = Subspace(n, kernel(rows));

  const Matrix d = ce_differential(g, out.psi_c).as_bilinear();
  const Matrix& qb = out.q.basis();
  const Matrix dq = qb.transpose() * d * qb;
  if (determinant(dq) == 0) throw Error(ErrorKind::DegeneratePotential, "d psi_c is degenerate on ker theta ∩ ker psi_c");
  // d psi_c(sigma' - tau, X) = 0 for X in q, tau = Q y.
  const auto y = solve(Matrix(qb.transpose() * d.transpose() * qb), Vector(qb.transpose() * d.transpose() * out.sigma_prime));
  if (!y) throw Error(ErrorKind::DegeneratePotential, "no correction tau");
  out.sigma = out.sigma_prime - qb * (*y);
  out.p = Subspace::span(n, {out.t, out.sigma});
  out.rad = Subspace(n, kernel(d));
  return out;
}

std::vector<Check> lemma1_checks(const LieAlgebra& g, const KForm& theta, const Lemma1Data& nd) {
  const Vector th = theta.as_linear();
  const Vector pc = nd.psi_c.as_linear();
  const auto& names = g.basis_names();
  std::vector<Check> out;
  out.push_back(make_check("lemma1.psi_sigma", "ψ_c(σ) = 1", pc.dot(nd.sigma) == 1));
  out.push_back(make_check("lemma1.psi_t", "ψ_c(t) = 0", pc.dot(nd.t) == 0));
  out.push_back(make_check("lemma1.theta_t", "θ(t) = 1", th.dot(nd.t) == 1));
  out.push_back(make_check("lemma1.theta_sigma", "θ(σ) = 0", th.dot(nd.sigma) == 0));
  out.push_back(make_check("lemma1.radical_sigma", "dψ_c(σ, Y) = 0 for all Y",
                           interior(nd.sigma, ce_differential(g, nd.psi_c)).is_zero()));
  Check rad = make_check("lemma1.radical", "Rad dψ_c = <t, σ>", nd.rad == nd.p);
  rad.witnesses = {{"t", to_string(nd.t, names)},
                   {"sigma", to_string(nd.sigma, names)},
                   {"psi_c", to_string(nd.psi_c, g.dual_names())},
                   {"c", to_string(nd.c)}};
  out.push_back(rad);
  return out;
}

namespace {

// lambda with a = lambda b, if any.
std::optional<Rational> proportionality(const Vector& a, const Vector& b) {
  Index k = 0;
  while (k < b.size() && b(k) == 0) ++k;
  if (k == b.size()) return std::nullopt;
  const Rational lambda = a(k) / b(k);
  if (a != lambda * b) return std::nullopt;
  return lambda;
}

}  // namespace

Subspace reduced_subalgebra(const LieAlgebra& g, const Vector& xi) {
  return derived_ideal(g) + Subspace::span(g.dim(), {xi});
}

int center_dim(const LieAlgebra& g, const Subspace& sub) {
  return static_cast<int>(centralizer(g, sub).intersect(sub).dim());
}

std::vector<Check> corollary_checks(const LieAlgebra& g, const Lemma1Data& nd, const LckCertificate& cert) {
  const int n = g.dim();
  const auto& names = g.basis_names();
  const auto& dn = g.dual_names();
  const Matrix& j = cert.J;
  std::vector<Check> out;

  const Vector jxi = j * cert.lee.xi;
  const auto lambda = proportionality(jxi, nd.sigma);
  Check c1 = make_check("consequence.reeb_sigma", "Jξ = λσ with λ > 0", lambda && *lambda > 0);
  c1.witnesses = {{"J xi", to_string(jxi, names)}, {"sigma", to_string(nd.sigma, names)}};
  if (lambda) c1.witnesses.push_back({"lambda", to_string(*lambda)});
  out.push_back(c1);

  const KForm ls = lie_derivative(g, nd.sigma, cert.omega);
  Check c2 = make_check("consequence.lie_sigma_omega", "L_σ Ω = 0", ls.is_zero());
  if (!ls.is_zero()) c2.witnesses = {{"L_sigma Omega", to_string(ls, dn)}};
  out.push_back(c2);

  const Subspace t = center(g);
  Check c3 = make_check("consequence.center_dim", "1 ≤ dim 𝔱 ≤ 2 and 𝔱 ⊂ <t, σ>",
                        t.dim() >= 1 && t.dim() <= 2 && nd.p.contains(t));
  c3.witnesses = {{"dim t", std::to_string(t.dim())}};
  out.push_back(c3);

  const Vector jt = j * nd.t;
  const Vector br = g.bracket(nd.sigma, jt);
  Check c4 = make_check("consequence.sigma_jt", "[σ, Jt] = 0", is_zero(br));
  c4.informational = true;
  if (!is_zero(br)) c4.witnesses = {{"[sigma, Jt]", to_string(br, names)}};
  out.push_back(c4);

  const Matrix ads = g.ad(nd.sigma);
  const Matrix lsj = ads * j - j * ads;
  Check l6 = make_check("consequence.lie_sigma_j", "L_σ J = 0", is_zero(lsj));
  l6.informational = true;
  out.push_back(l6);

  const KForm ljt = lie_derivative(g, jt, cert.omega);
  const bool hyp = ljt.is_zero();
  Check h = make_check("consequence.jt_invariant", "L_{Jt} Ω = 0", hyp);
  h.informational = true;
  if (!hyp) h.witnesses = {{"L_Jt Omega", to_string(ljt, dn)}};
  out.push_back(h);

  auto gated = [&](Check c) {
    if (!hyp) {
      c.verdict = Verdict::NotApplicable;
      c.witnesses.clear();
    }
    return c;
  };

  const Subspace tjt = Subspace::span(n, {nd.t, jt});
  const Subspace xs = Subspace::span(n, {cert.lee.xi, nd.sigma});
  out.push_back(gated(make_check("consequence.generators", "<t, σ> = <t, Jt> = <ξ, σ>", nd.p == tjt && nd.p == xs)));

  const KForm& phi = cert.reeb_form;
  const KForm dphi = ce_differential(g, phi);
  const bool pot = cert.omega == -wedge(cert.theta, phi) + dphi;
  const bool on_k = interior(cert.lee.xi, dphi).is_zero() && interior(cert.reeb_field, dphi).is_zero();
  Check l3 = make_check("consequence.reeb_potential", "Ω = −θ∧φ + dφ with dφ ∈ ∧²𝔨*", pot && on_k);
  l3.witnesses = {{"phi", to_string(phi, dn)}};
  out.push_back(gated(l3));

  Check l4 = make_check("consequence.reduction", "<ξ> + 𝔰 is a subalgebra with one-dimensional center", true);
  if (hyp && t.dim() == 2) {
    const Subspace gp = reduced_subalgebra(g, cert.lee.xi);
    const int cd = center_dim(g, gp);
    l4.verdict = is_subalgebra(g, gp) && cd == 1 ? Verdict::Pass : Verdict::Fail;
    l4.witnesses = {{"dim g'", std::to_string(gp.dim())}, {"dim center g'", std::to_string(cd)}};
  } else {
    l4.verdict = Verdict::NotApplicable;
  }
  out.push_back(l4);
  return out;
}

}  // namespace lck
