#include <doctest.h>

#include "lck/catalog.hpp"
#include "lck/cohomology.hpp"
#include "lck/error.hpp"

using namespace lck;

namespace {
KForm F(const LieAlgebra& g, const std::string& s) { return parse_form(s, g.dual_names()); }

std::vector<int> bettis(const LieAlgebra& g) {
  std::vector<int> out;
  for (int p = 0; p <= g.dim(); ++p) out.push_back(betti(g, p));
  return out;
}
}  // namespace

TEST_CASE("Betti numbers") {
  CHECK(bettis(u2_algebra()) == std::vector<int>{1, 1, 0, 1, 1});
  CHECK(bettis(builtin("heisenberg3").algebra) == std::vector<int>{1, 2, 2, 1});
  CHECK(bettis(builtin("abelian4").algebra) == std::vector<int>{1, 4, 6, 4, 1});
  CHECK(bettis(su2_algebra()) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("twisted cohomology vanishes for central theta on reductive algebras") {
  const LieAlgebra u2 = u2_algebra(), rsl2 = r_sl2_algebra();
  for (int p = 0; p <= 4; ++p) {
    CHECK(twisted_betti(u2, F(u2, "t"), p) == 0);
    CHECK(twisted_betti(rsl2, F(rsl2, "w"), p) == 0);
  }
  // On the abelian algebra twisting by any nonzero theta kills everything too.
  const LieAlgebra ab = builtin("abelian4").algebra;
  CHECK(twisted_betti(ab, F(ab, "a"), 2) == 0);
  CHECK_THROWS_AS(twisted_betti(u2, F(u2, "x"), 1), Error);
}

TEST_CASE("coboundary matrices compose to zero") {
  const LieAlgebra g = u2_algebra();
  const KForm theta = F(g, "t");
  for (int p = 0; p + 2 <= 4; ++p) {
    CHECK(is_zero(Matrix(coboundary_matrix(g, p + 1) * coboundary_matrix(g, p))));
    CHECK(is_zero(Matrix(coboundary_matrix(g, p + 1, &theta) * coboundary_matrix(g, p, &theta))));
  }
  const auto slice = complex_slice(g, 2);
  CHECK(slice.matrix_in.rows() == 6);
  CHECK(slice.matrix_out.cols() == 6);
  CHECK(slice.basis_labels.size() == 6);
}

TEST_CASE("potentials solve d_theta psi = Omega") {
  const LieAlgebra g = u2_algebra();
  const auto s = u2_structure(Rational(2), Rational(1), Branch::Plus);
  const auto sol = solve_potential(g, s.theta, s.omega);
  CHECK(twisted_differential(g, s.theta, sol.psi) == s.omega);
  CHECK(sol.normalized);
  CHECK(eval(sol.psi, std::vector<Vector>{unit_vector(4, 0)}) == 0);
  CHECK(sol.freedom == 1);
}

TEST_CASE("forms that are not d_theta-closed are rejected") {
  const LieAlgebra g = u2_algebra();
  try {
    solve_potential(g, F(g, "t"), F(g, "t^x"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("closed but non-exact forms have no potential") {
  // aff(1): [A, B] = B. With theta = -a every 1-form is d_theta-closed, so
  // a^b spans H^2_theta.
  const LieAlgebra aff({"A", "B"}, {{{0, 1}, unit_vector(2, 1)}});
  const KForm theta = F(aff, "-a");
  CHECK(twisted_betti(aff, theta, 2) == 1);
  try {
    solve_potential(aff, theta, F(aff, "a^b"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSolution);
  }
}
