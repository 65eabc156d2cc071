#include "lck/error.hpp"
#include "lck/lck.hpp"
#include "lck/linalg.hpp"

namespace lck {

HomogeneousReport homogeneous_checks(const CosetPresentation& p, const KForm& omega, const KForm& theta,
                                     const Endomorphism& j) {
  const LieAlgebra& g = p.g;
  const int n = g.dim();
  const auto& names = g.basis_names();
  const auto& dn = g.dual_names();
  HomogeneousReport out;

  bool vanish = true, inv = true, jinv = true;
  std::string bad;
  for (Index k = 0; k < p.h.dim(); ++k) {
    const Vector y = p.h.basis_vector(k);
    if (!interior(y, omega).is_zero() || theta.as_linear().dot(y) != 0) vanish = false;
    if (!lie_derivative(g, y, omega).is_zero() || !lie_derivative(g, y, theta).is_zero()) {
      inv = false;
      bad = to_string(y, names);
    }
    const Matrix ad = g.ad(y);
    if (!is_zero(Matrix(p.m_projection() * (ad * j - j * ad) * p.m.basis()))) jinv = false;
  }
  out.checks.push_back(make_check("homogeneous.vanish_on_h", "ι_Y Ω = 0 and θ(Y) = 0 for Y ∈ 𝔥", vanish));
  Check ic = make_check("homogeneous.invariant_forms", "L_Y Ω = 0 and L_Y θ = 0 for Y ∈ 𝔥", inv);
  if (!inv) ic.witnesses = {{"Y", bad}};
  out.checks.push_back(ic);
  out.checks.push_back(make_check("homogeneous.invariant_j", "[ad Y, J] = 0 on 𝔪 for Y ∈ 𝔥", jinv));

  LckCertificate cert;
  try {
    cert = certify(p, omega, j);
  } catch (const Error& e) {
    Check f = make_check("lck.certificate", "l.c.K. certificate on 𝔪", false);
    f.witnesses = {{"error", e.what()}};
    out.checks.push_back(f);
    return out;
  }
  Check same = make_check("homogeneous.lee_form", "the Lee form of Ω is the given θ", cert.theta == theta);
  same.witnesses = {{"lee form", to_string(cert.theta, dn)}};
  out.checks.push_back(same);
  for (const auto& c : cert.checks) out.checks.push_back(c);

  // q = {X in s + h | d phi(X, s + h) = 0}
  const Subspace sh = derived_ideal(g) + p.h;
  const Matrix& sb = sh.basis();
  const Matrix d = ce_differential(g, cert.reeb_form).as_bilinear();
  out.q = Subspace(n, sb * kernel(Matrix(sb.transpose() * d * sb)));
  const bool sub = is_subalgebra(g, out.q) && out.q.contains(p.h);
  Check qc = make_check("homogeneous.q_subalgebra", "𝔮 = {X ∈ 𝔰 + 𝔥 | dφ(X, 𝔰 + 𝔥) = 0} is a subalgebra containing 𝔥", sub);
  std::string qs;
  for (Index k = 0; k < out.q.dim(); ++k) qs += (k ? "; " : "") + to_string(out.q.basis_vector(k), names);
  qc.witnesses = {{"q", qs}};
  out.checks.push_back(qc);
  Check qd = make_check("homogeneous.q_dim", "dim 𝔮 − dim 𝔥 = 1", out.q.dim() - p.h.dim() == 1);
  qd.witnesses = {{"dim q", std::to_string(out.q.dim())}, {"dim h", std::to_string(p.h.dim())}};
  out.checks.push_back(qd);
  return out;
}

}  // namespace lck
