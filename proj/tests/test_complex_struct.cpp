#include <doctest.h>

#include "property_suites.hpp"

#include "lck/catalog.hpp"
#include "lck/complex_struct.hpp"
#include "lck/error.hpp"
#include "lck/linalg.hpp"

using namespace lck;

namespace {

const GaussianRational I = GaussianRational::imag_unit();

// 1 (+) Cayley transform of a rational skew matrix: a rational rotation of
// (X, Y, Z), hence an automorphism of u(2) fixing T.
Matrix rotation(const Rational& a, const Rational& b, const Rational& c) {
  Matrix s(3, 3);
  s << 0, -a, b, a, 0, -c, -b, c, 0;
  const Matrix id = Matrix::Identity(3, 3);
  const Matrix r = (id - s) * *inverse(Matrix(id + s));
  Matrix out = Matrix::Identity(4, 4);
  out.bottomRightCorner(3, 3) = r;
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::Precondition;
}

}  // namespace

TEST_CASE("J_delta is an integrable complex structure") {
  const LieAlgebra g = u2_algebra();
  for (int c : {1, 2, -3})
    for (int d : {0, 1, -2})
      for (Branch b : {Branch::Plus, Branch::Minus}) {
        const Endomorphism j = j_delta(Rational(c), Rational(d), b);
        CHECK(is_complex_structure(g, j).ok);
        CHECK_FALSE(nijenhuis_witness(g, j).has_value());
      }
  const Endomorphism j = j_delta(Rational(2), Rational(1), Branch::Plus);
  const Vector tdx = (Vector(4) << 1, -1, 0, 0).finished();
  CHECK(Vector(j * tdx) == Vector(2 * unit_vector(4, 1)));
  CHECK(Vector(j * unit_vector(4, 2)) == unit_vector(4, 3));
  CHECK(kind_of([] { j_delta(Rational(0), Rational(1), Branch::Plus); }) == ErrorKind::DegenerateParameter);
}

TEST_CASE("subalgebra of J_delta") {
  const LieAlgebra g = u2_algebra();
  const auto b = u2_complex_basis();
  const Endomorphism j = j_delta(Rational(3), Rational(-2), Branch::Minus);
  const auto h = subalgebra_from_J(g, j);
  CHECK(h.dim() == 2);
  CMatrix gens(4, 2);
  gens.col(0) = b.T + GaussianRational(Rational(3), Rational(-2)) * b.U;
  gens.col(1) = b.W;
  CHECK(h == ComplexSubalgebra{4, gens});
  CHECK(J_from_subalgebra(g, h) == j);
  CHECK(J_from_subalgebra(g, h.conjugate()) == Matrix(-j));
  CHECK(is_bracket_closed(g, h));
}

TEST_CASE("randomly conjugated complex structures: Nijenhuis agrees with subalgebra closure") {
  const LieAlgebra g = u2_algebra();
  props::Rng rng(31);
  int non_integrable = 0, trials = 0;
  while (trials < 200) {
    Matrix p(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) p(r, c) = rng.rational();
    const auto pinv = inverse(p);
    if (!pinv) continue;
    ++trials;
    const Endomorphism j = p * j_delta(Rational(1), Rational(0), Branch::Plus) * *pinv;
    REQUIRE(is_complex_structure(g, j).ok);
    const auto w = nijenhuis_witness(g, j);
    if (w) {
      ++non_integrable;
      CHECK_FALSE(is_zero(nijenhuis(g, j, unit_vector(4, w->first), unit_vector(4, w->second))));
      CHECK(kind_of([&] { subalgebra_from_J(g, j); }) == ErrorKind::NotIntegrable);
    } else {
      CHECK(J_from_subalgebra(g, subalgebra_from_J(g, j)) == j);
    }
  }
  CHECK(non_integrable > 100);
}

TEST_CASE("not a complex structure") {
  const LieAlgebra g = u2_algebra();
  const Matrix id = Matrix::Identity(4, 4);
  CHECK_FALSE(is_complex_structure(g, id).ok);
  CHECK(kind_of([&] { subalgebra_from_J(g, id); }) == ErrorKind::Precondition);
}

TEST_CASE("inverse map rejects bad subalgebras") {
  const LieAlgebra g = u2_algebra();
  auto col = [](std::initializer_list<GaussianRational> v) {
    CVector out(4);
    int i = 0;
    for (const auto& z : v) out(i++) = z;
    return out;
  };
  const GaussianRational o(0), one(1);
  CMatrix real_line(4, 2);  // contains the real vector T
  real_line.col(0) = col({one, o, o, o});
  real_line.col(1) = col({o, one, I, o});
  CHECK(kind_of([&] { J_from_subalgebra(g, ComplexSubalgebra{4, real_line}); }) == ErrorKind::NotTransverse);
  CMatrix open(4, 2);  // [T + iX, Y + 2iZ] = 2Y + iZ leaves the span
  open.col(0) = col({one, I, o, o});
  open.col(1) = col({o, o, one, GaussianRational(Rational(0), Rational(2))});
  CHECK(kind_of([&] { J_from_subalgebra(g, ComplexSubalgebra{4, open}); }) == ErrorKind::NotClosed);
}

TEST_CASE("normal form reduction of rotated J_delta") {
  const LieAlgebra g = u2_algebra();
  props::Rng rng(41);
  int reduced = 0;
  for (int t = 0; t < 60; ++t) {
    const Rational c = Rational(rng.uniform(1, 5), rng.uniform(1, 3));
    const Rational d = rng.uniform(-3, 3);
    const Branch b = rng.uniform(0, 1) ? Branch::Plus : Branch::Minus;
    const Matrix r = rotation(rng.rational(), rng.rational(), rng.rational());
    REQUIRE(is_automorphism(g, r));
    const Endomorphism j = r * j_delta(c, d, b) * *inverse(r);
    const auto nf = reduce_u2_normal_form(g, j);
    INFO("c = " << to_string(c) << ", d = " << to_string(d) << ": " << nf.detail);
    if (nf.status == U2NormalForm::Status::RequiresIrrationalRescale) continue;
    REQUIRE(nf.status == U2NormalForm::Status::Reduced);
    ++reduced;
    CHECK(nf.c == c);
    CHECK(nf.d == d);
    CHECK(nf.branch == b);
    CHECK(is_automorphism(g, nf.automorphism));
    CHECK(Matrix(*inverse(nf.automorphism) * j * nf.automorphism) == j_delta(nf.c, nf.d, nf.branch));
  }
  CHECK(reduced == 60);
}

TEST_CASE("a negative c reduces to the positive representative") {
  const LieAlgebra g = u2_algebra();
  const auto nf = reduce_u2_normal_form(g, j_delta(Rational(-2), Rational(1), Branch::Plus));
  REQUIRE(nf.status == U2NormalForm::Status::Reduced);
  CHECK(nf.c > 0);
  CHECK(Matrix(*inverse(nf.automorphism) * j_delta(Rational(-2), Rational(1), Branch::Plus) * nf.automorphism) ==
        j_delta(nf.c, nf.d, nf.branch));
}

TEST_CASE("isotropy invariance") {
  const LieAlgebra g = u2_algebra();
  const Endomorphism j = j_delta(Rational(1), Rational(0), Branch::Plus);
  const Subspace center_line = Subspace::span(4, {unit_vector(4, 0)});
  CHECK(is_complex_structure(g, j, &center_line).invariant);
  const Subspace y_line = Subspace::span(4, {unit_vector(4, 2)});
  CHECK_FALSE(is_complex_structure(g, j, &y_line).invariant);
}
