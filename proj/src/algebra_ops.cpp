#include "lck/error.hpp"
#include "lck/lie_algebra.hpp"
#include "lck/linalg.hpp"
#include "lck/poly.hpp"

#include <random>

namespace lck {

JacobiVerdict check_jacobi(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vector ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
        Vector r = g.bracket(g.bracket(ei, ej), ek) + g.bracket(g.bracket(ej, ek), ei) +
                   g.bracket(g.bracket(ek, ei), ej);
        if (!is_zero(r)) return {false, i, j, k, r};
      }
  return {};
}

namespace {

// Rows: the stacked matrices of the maps x -> [x, v_k].
Matrix stacked_right_ad(const LieAlgebra& g, const Matrix& vs) {
  const int n = g.dim();
  Matrix m(n * vs.cols(), n);
  for (Index k = 0; k < vs.cols(); ++k) m.middleRows(k * n, n) = -g.ad(vs.col(k));
  return m;
}

}  // namespace

Subspace center(const LieAlgebra& g) {
  return Subspace(g.dim(), kernel(stacked_right_ad(g, Matrix::Identity(g.dim(), g.dim()))));
}

Subspace derived_ideal(const LieAlgebra& g) {
  std::vector<Vector> gens;
  for (const auto& [key, v] : g.structure()) gens.push_back(v);
  return Subspace::span(g.dim(), gens);
}

Subspace centralizer(const LieAlgebra& g, const Vector& v) {
  if (v.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "centralizer argument");
  return Subspace(g.dim(), kernel(g.ad(v)));
}

Subspace centralizer(const LieAlgebra& g, const Subspace& sub) {
  return Subspace(g.dim(), kernel(stacked_right_ad(g, sub.basis())));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  for (Index a = 0; a < s.dim(); ++a)
    for (Index b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket(s.basis_vector(a), s.basis_vector(b)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (Index a = 0; a < s.dim(); ++a)
    for (int i = 0; i < g.dim(); ++i)
      if (!s.contains(g.bracket(g.basis_vector(i), s.basis_vector(a)))) return false;
  return true;
}

Matrix restricted_ad(const LieAlgebra& g, const Vector& v, const Subspace& s) {
  Matrix m(s.dim(), s.dim());
  for (Index k = 0; k < s.dim(); ++k) {
    const auto c = s.coordinates(g.bracket(v, s.basis_vector(k)));
    if (!c) throw Error(ErrorKind::Precondition, "subspace is not ad-invariant");
    m.col(k) = *c;
  }
  return m;
}

Matrix killing_form(const LieAlgebra& g, const Subspace& s) {
  std::vector<Matrix> ads;
  for (Index k = 0; k < s.dim(); ++k) ads.push_back(restricted_ad(g, s.basis_vector(k), s));
  Matrix b(s.dim(), s.dim());
  for (Index i = 0; i < s.dim(); ++i)
    for (Index j = i; j < s.dim(); ++j) b(i, j) = b(j, i) = (ads[i] * ads[j]).trace();
  return b;
}

ReductiveSplit reductive_split(const LieAlgebra& g) {
  Subspace t = center(g);
  Subspace s = derived_ideal(g);
  if (t.dim() + s.dim() != g.dim() || (t + s).dim() != g.dim())
    throw Error(ErrorKind::NotReductive, "center (dim " + std::to_string(t.dim()) + ") + derived ideal (dim " +
                                             std::to_string(s.dim()) + ") is not a direct sum equal to g");
  if (determinant(killing_form(g, s)) == 0)
    throw Error(ErrorKind::NotReductive, "Killing form of the derived ideal is degenerate");
  return {std::move(t), std::move(s)};
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

RankEstimate rank_estimate(const LieAlgebra& g, const Subspace& s, const RankOptions& opts) {
  if (s.dim() == 0) return {0, true, Vector::Zero(g.dim()), "zero algebra"};
  if (determinant(killing_form(g, s)) == 0)
    throw Error(ErrorKind::NotSemisimple, "Killing form of the subalgebra is degenerate");

  std::vector<Vector> samples;
  for (Index a = 0; a < s.dim(); ++a) samples.push_back(s.basis_vector(a));
  for (Index a = 0; a < s.dim(); ++a)
    for (Index b = a + 1; b < s.dim(); ++b) samples.push_back(s.basis_vector(a) + s.basis_vector(b));
  std::mt19937_64 rng(opts.seed);
  for (int r = 0; r < opts.random_samples; ++r) {
    Vector v = Vector::Zero(g.dim());
    for (Index a = 0; a < s.dim(); ++a) v += random_rational(rng) * s.basis_vector(a);
    samples.push_back(v);
  }

  RankEstimate best;
  best.upper_bound = static_cast<int>(s.dim()) + 1;
  for (const auto& v : samples) {
    const int k = static_cast<int>(s.dim() - rank(restricted_ad(g, v, s)));
    if (k < best.upper_bound) {
      best.upper_bound = k;
      best.witness = v;
    }
  }

  if (best.upper_bound == 1) {
    best.certified = true;
    best.note = "exact: a nonzero semisimple algebra has rank >= 1";
    return best;
  }
  // Lower bound: the witness centralizer is a toral subalgebra.
  const Matrix ad_w = restricted_ad(g, best.witness, s);
  const Matrix ker = kernel(ad_w);
  std::vector<Vector> cent;
  for (Index k = 0; k < ker.cols(); ++k) cent.push_back(s.basis() * ker.col(k));
  bool toral = true;
  for (std::size_t a = 0; a < cent.size() && toral; ++a) {
    for (std::size_t b = a + 1; b < cent.size() && toral; ++b)
      if (!is_zero(g.bracket(cent[a], cent[b]))) toral = false;
    if (toral && !is_semisimple(restricted_ad(g, cent[a], s))) toral = false;
  }
  best.certified = toral;
  best.note = toral ? "exact: witness centralizer is toral"
                    : "heuristic upper bound, exact on certified-regular samples";
  return best;
}

}  // namespace lck
