#pragma once

// Fixed-seed randomized identity checks shared by the unit tests and the
// acceptance binary. Each suite returns how many cases ran and the first
// counterexample, if any.

#include "oracle.hpp"

#include "lck/catalog.hpp"
#include "lck/cohomology.hpp"
#include "lck/kform.hpp"
#include "lck/lck.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace props {

using lck::KForm;
using lck::LieAlgebra;
using lck::Rational;
using lck::Vector;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  Rational rational() { return Rational(uniform(-6, 6), uniform(1, 4)); }

  Vector vector(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(0, 3) == 0 ? Rational(0) : rational();
    return v;
  }

  KForm form(int n, int k, int terms = 3) {
    KForm f(n, k);
    const auto basis = lck::form_basis(n, k);
    for (int t = 0; t < terms; ++t)
      f.add_term(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], rational());
    return f;
  }

  /// A random element of ker d on 1-forms.
  KForm closed_one_form(const LieAlgebra& g) {
    const lck::Matrix k = oracle::kernel(lck::coboundary_matrix(g, 1));
    Vector row = Vector::Zero(g.dim());
    for (lck::Index c = 0; c < k.cols(); ++c) row += rational() * k.col(c);
    return KForm::linear(row);
  }

 private:
  std::mt19937_64 eng_;
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

inline std::vector<LieAlgebra> catalog_algebras() {
  std::vector<LieAlgebra> out;
  for (const auto& n : lck::builtin_names()) out.push_back(lck::builtin(n).algebra);
  return out;
}

namespace detail {

// Runs `cases` trials, cycling over the algebras; a trial returns an empty
// string on success and a description otherwise.
inline SuiteResult run(const std::string& name, int cases, const std::vector<LieAlgebra>& algebras,
                       const std::function<std::string(const LieAlgebra&, int)>& trial) {
  SuiteResult r{name, 0, 0, {}};
  for (int i = 0; i < cases; ++i) {
    const auto& g = algebras[static_cast<std::size_t>(i) % algebras.size()];
    std::string fail;
    try {
      fail = trial(g, i);
    } catch (const std::exception& e) {
      fail = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!fail.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + fail;
    }
  }
  return r;
}

inline std::string show(const LieAlgebra& g, const KForm& f) { return lck::to_string(f, g.dual_names()); }

inline int max_degree(const LieAlgebra& g) { return std::min(g.dim(), 3); }

}  // namespace detail

inline SuiteResult d_squared(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  return detail::run("d o d = 0", cases, catalog_algebras(), [&](const LieAlgebra& g, int) {
    const KForm f = rng.form(g.dim(), rng.uniform(0, g.dim() - 2));
    const KForm dd = lck::ce_differential(g, lck::ce_differential(g, f));
    return dd.is_zero() ? "" : "d d(" + detail::show(g, f) + ") = " + detail::show(g, dd);
  });
}

inline SuiteResult twisted_d_squared(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  return detail::run("d_theta o d_theta = 0", cases, catalog_algebras(), [&](const LieAlgebra& g, int) {
    const KForm theta = rng.closed_one_form(g);
    const KForm f = rng.form(g.dim(), rng.uniform(0, g.dim() - 2));
    const KForm dd = lck::twisted_differential(g, theta, lck::twisted_differential(g, theta, f));
    return dd.is_zero() ? "" : "theta = " + detail::show(g, theta) + ", f = " + detail::show(g, f);
  });
}

inline SuiteResult cartan(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  return detail::run("L_v = i_v d + d i_v", cases, catalog_algebras(), [&](const LieAlgebra& g, int) {
    const Vector v = rng.vector(g.dim());
    const KForm f = rng.form(g.dim(), rng.uniform(1, g.dim() - 1));
    const KForm lhs = lck::lie_derivative(g, v, f);
    const KForm rhs = lck::interior(v, lck::ce_differential(g, f)) + lck::ce_differential(g, lck::interior(v, f));
    return lhs == rhs ? "" : "f = " + detail::show(g, f);
  });
}

inline SuiteResult leibniz(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  return detail::run("d(a ^ b) = da ^ b + (-1)^p a ^ db", cases, catalog_algebras(), [&](const LieAlgebra& g, int) {
    const int p = rng.uniform(0, 2);
    const int q = rng.uniform(0, std::max(0, g.dim() - p - 1));
    const KForm a = rng.form(g.dim(), p), b = rng.form(g.dim(), q);
    const KForm lhs = lck::ce_differential(g, lck::wedge(a, b));
    const Rational s = p % 2 ? -1 : 1;
    const KForm rhs = lck::wedge(lck::ce_differential(g, a), b) + s * lck::wedge(a, lck::ce_differential(g, b));
    return lhs == rhs ? "" : "a = " + detail::show(g, a) + ", b = " + detail::show(g, b);
  });
}

inline SuiteResult wedge_commutativity(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  return detail::run("a ^ b = (-1)^{pq} b ^ a", cases, catalog_algebras(), [&](const LieAlgebra& g, int) {
    const int p = rng.uniform(0, 3);
    const int q = rng.uniform(0, 3);
    const KForm a = rng.form(g.dim(), std::min(p, g.dim())), b = rng.form(g.dim(), std::min(q, g.dim()));
    const Rational s = (a.degree() * b.degree()) % 2 ? -1 : 1;
    return lck::wedge(a, b) == s * lck::wedge(b, a) ? "" : "a = " + detail::show(g, a) + ", b = " + detail::show(g, b);
  });
}

/// check_jacobi on every catalog algebra, then 1000 random pairs (and a third
/// vector) per algebra for bilinearity, antisymmetry and the Jacobi identity.
inline SuiteResult jacobi(std::uint64_t seed, int pairs_per_algebra = 1000) {
  Rng rng(seed);
  const auto algebras = catalog_algebras();
  const int cases = pairs_per_algebra * static_cast<int>(algebras.size());
  return detail::run("Jacobi, antisymmetry, bilinearity", cases, algebras, [&](const LieAlgebra& g, int i) -> std::string {
    if (i < static_cast<int>(algebras.size()) && !lck::check_jacobi(g).ok) return "check_jacobi failed";
    const int n = g.dim();
    const Vector x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const Rational a = rng.rational(), b = rng.rational();
    if (g.bracket(x, y) != Vector(-g.bracket(y, x))) return "antisymmetry";
    if (g.bracket(Vector(a * x + b * y), z) != Vector(a * g.bracket(x, z) + b * g.bracket(y, z))) return "bilinearity";
    const Vector jac = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
    if (!lck::is_zero(jac)) return "Jacobi";
    if (g.bracket(x, y) != oracle::bracket(g, x, y)) return "bracket disagrees with structure constants";
    return "";
  });
}

/// Generators with ad v semisimple and imaginary spectrum.
struct TorusGenerator {
  LieAlgebra g;
  Vector v;
};

inline std::vector<TorusGenerator> torus_generators() {
  const LieAlgebra u2 = lck::u2_algebra();
  const LieAlgebra rsl2 = lck::r_sl2_algebra();
  const LieAlgebra ru2 = lck::builtin("r_u2_mod_u1").algebra;
  auto vec = [](const LieAlgebra& g, const std::string& expr) { return lck::parse_vector(expr, g.basis_names()); };
  return {
      {u2, vec(u2, "X")},
      {u2, vec(u2, "X + 2 Y")},
      {u2, vec(u2, "3 T + Z")},
      {u2, vec(u2, "1/2 X - Y + 2 Z")},
      {rsl2, vec(rsl2, "Z")},
      {rsl2, vec(rsl2, "W + 2 Z")},
      {ru2, vec(ru2, "W")},
  };
}

inline SuiteResult averaging_idempotence(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  const auto gens = torus_generators();
  SuiteResult r{"averaging idempotent, L_v-invariant", 0, 0, {}};
  for (int i = 0; i < cases; ++i) {
    const auto& [g, v] = gens[static_cast<std::size_t>(i) % gens.size()];
    std::string fail;
    try {
      const KForm f = rng.form(g.dim(), rng.uniform(1, 2), rng.uniform(1, 4));
      const KForm avg = lck::average_form(g, v, f);
      if (lck::average_form(g, v, avg) != avg)
        fail = "not idempotent";
      else if (!lck::lie_derivative(g, v, avg).is_zero())
        fail = "average not invariant";
      else if (lck::lie_derivative(g, v, f).is_zero() && avg != f)
        fail = "invariant form moved";
      if (!fail.empty()) fail += " on f = " + detail::show(g, f);
    } catch (const std::exception& e) {
      fail = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!fail.empty() && r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + fail;
  }
  return r;
}

/// The library's d, wedge, L_v and evaluation against the brute-force oracle.
inline SuiteResult oracle_agreement(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  return detail::run("library agrees with brute-force oracle", cases, catalog_algebras(), [&](const LieAlgebra& g, int) -> std::string {
    const int n = g.dim();
    const int k = rng.uniform(0, detail::max_degree(g) - 1);
    const KForm f = rng.form(n, k);
    if (lck::ce_differential(g, f) != oracle::d(g, f)) return "d of " + detail::show(g, f);
    const Vector v = rng.vector(n);
    if (lck::lie_derivative(g, v, f) != oracle::lie(g, v, f)) return "L_v of " + detail::show(g, f);
    const KForm b = rng.form(n, rng.uniform(0, detail::max_degree(g) - k));
    if (lck::wedge(f, b) != oracle::wedge(f, b)) return "wedge of " + detail::show(g, f) + ", " + detail::show(g, b);
    std::vector<Vector> args;
    for (int r = 0; r < k; ++r) args.push_back(rng.vector(n));
    if (lck::eval(f, args) != oracle::eval(f, args)) return "eval of " + detail::show(g, f);
    return "";
  });
}

/// Evaluation on basis tuples recovers coefficients; text rendering parses back.
inline SuiteResult eval_roundtrip(std::uint64_t seed, int cases = 500) {
  Rng rng(seed);
  return detail::run("coefficients and text round trip", cases, catalog_algebras(), [&](const LieAlgebra& g, int) -> std::string {
    const int n = g.dim();
    const KForm f = rng.form(n, rng.uniform(1, detail::max_degree(g)), rng.uniform(1, 5));
    for (const auto& [idx, c] : f.coeffs()) {
      std::vector<Vector> args;
      for (int i : idx) args.push_back(lck::unit_vector(n, i));
      if (lck::eval(f, args) != c) return "coefficient of " + detail::show(g, f);
    }
    if (lck::parse_form(detail::show(g, f), g.dual_names(), f.degree()) != f) return "parse of " + detail::show(g, f);
    return "";
  });
}

inline std::vector<SuiteResult> all_suites(std::uint64_t seed) {
  return {d_squared(seed),        twisted_d_squared(seed + 1),    cartan(seed + 2),
          leibniz(seed + 3),      wedge_commutativity(seed + 4), jacobi(seed + 5),
          averaging_idempotence(seed + 6), oracle_agreement(seed + 7), eval_roundtrip(seed + 8)};
}

}  // namespace props
