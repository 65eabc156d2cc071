#include <doctest.h>

#include "oracle.hpp"

#include "lck/catalog.hpp"
#include "lck/error.hpp"
#include "lck/kform.hpp"

using namespace lck;

namespace {
KForm F(const LieAlgebra& g, const std::string& s) { return parse_form(s, g.dual_names()); }
}  // namespace

TEST_CASE("monomials absorb the sorting sign") {
  CHECK(KForm::monomial(4, {1, 0}, 1) == KForm::monomial(4, {0, 1}, -1));
  CHECK(KForm::monomial(4, {2, 2}, 1).is_zero());
  CHECK(KForm::monomial(4, {2, 0, 1}, 3).coeff({0, 1, 2}) == 3);
}

TEST_CASE("wedge, interior and evaluation on small cases") {
  const LieAlgebra g = u2_algebra();
  CHECK(wedge(F(g, "t"), F(g, "x")) == F(g, "t^x"));
  CHECK(wedge(F(g, "x"), F(g, "t")) == F(g, "-t^x"));
  CHECK(wedge(F(g, "t"), F(g, "t")).is_zero());
  CHECK(wedge(F(g, "t^x"), F(g, "y^z")) == F(g, "t^x^y^z"));
  CHECK(interior(unit_vector(4, 1), F(g, "t^x")) == F(g, "-t"));
  const std::vector<Vector> args{unit_vector(4, 0), unit_vector(4, 1)};
  CHECK(eval(F(g, "t^x"), args) == 1);
  CHECK(eval(F(g, "t^x"), std::vector<Vector>{unit_vector(4, 1), unit_vector(4, 0)}) == -1);
  CHECK(eval(KForm::scalar(4, 5), std::vector<Vector>{}) == 5);
}

TEST_CASE("bilinear and linear conversions") {
  const LieAlgebra g = u2_algebra();
  const KForm w = F(g, "t^x - 1/2 y^z");
  const Matrix m = w.as_bilinear();
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == -1);
  CHECK(m(2, 3) == Rational(-1, 2));
  CHECK(KForm::from_bilinear(m) == w);
  CHECK(KForm::linear(F(g, "2 t - z").as_linear()) == F(g, "2 t - z"));
}

TEST_CASE("text round trip and parse errors") {
  const LieAlgebra g = u2_algebra();
  const KForm f = F(g, "-1/2 t^x + y^z");
  CHECK(to_string(f, g.dual_names()) == "-1/2 t^x + 1 y^z");
  CHECK(F(g, to_string(f, g.dual_names())) == f);
  CHECK(to_string(KForm(4, 2), g.dual_names()) == "0");
  for (const char* bad : {"t^q", "t^x + y", "2 2 t", "t^^x"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_form(bad, g.dual_names()), Error);
  }
  CHECK(parse_vector("T - 1/2 X", g.basis_names()) == Vector((Vector(4) << 1, Rational(-1, 2), 0, 0).finished()));
}

TEST_CASE("Chevalley-Eilenberg differential on u(2)") {
  const LieAlgebra g = u2_algebra();
  CHECK(ce_differential(g, F(g, "z")) == F(g, "-x^y"));
  CHECK(ce_differential(g, F(g, "x")) == F(g, "-y^z"));
  CHECK(ce_differential(g, F(g, "y")) == F(g, "-z^x"));
  CHECK(ce_differential(g, F(g, "t")).is_zero());
  CHECK(ce_differential(g, F(g, "x^y^z")).is_zero());
  // The brute-force oracle reproduces the same equations.
  CHECK(oracle::d(g, F(g, "z")) == F(g, "-x^y"));
  CHECK(oracle::wedge(F(g, "x"), F(g, "t")) == F(g, "-t^x"));
}

TEST_CASE("twisted differential requires a closed theta") {
  const LieAlgebra g = u2_algebra();
  CHECK(twisted_differential(g, F(g, "t"), F(g, "x")) == F(g, "-t^x - y^z"));
  try {
    twisted_differential(g, F(g, "x"), F(g, "y"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ThetaNotClosed);
  }
}

TEST_CASE("Lie derivative") {
  const LieAlgebra g = u2_algebra();
  const Vector x = unit_vector(4, 1);
  CHECK(lie_derivative(g, x, F(g, "y")) == F(g, "z"));
  CHECK(lie_derivative(g, x, F(g, "z")) == F(g, "-y"));
  CHECK(lie_derivative(g, x, F(g, "y^z")).is_zero());
  CHECK(lie_derivative(g, unit_vector(4, 0), F(g, "x^y")).is_zero());
}
