#include "lck/catalog.hpp"

#include "lck/error.hpp"

#include <functional>
#include <map>

namespace lck {

namespace {

using Table = std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, Rational>>>>;

LieAlgebra from_table(const std::vector<std::string>& names, const Table& rows) {
  const int n = static_cast<int>(names.size());
  auto idx = [&](const std::string& s) {
    for (int i = 0; i < n; ++i)
      if (names[static_cast<std::size_t>(i)] == s) return i;
    throw Error(ErrorKind::SchemaError, "unknown basis name " + s);
  };
  std::map<LieAlgebra::Key, Vector> st;
  for (const auto& [l, r, res] : rows) {
    int i = idx(l), j = idx(r);
    Rational sign = 1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    Vector v = Vector::Zero(n);
    for (const auto& [name, c] : res) v(idx(name)) += sign * c;
    st[{i, j}] = v;
  }
  return LieAlgebra(names, std::move(st));
}

KForm mono(int n, std::initializer_list<int> idx, const Rational& c) { return KForm::monomial(n, Multi(idx), c); }

CatalogEntry make_u2() {
  CatalogEntry e{"u2", u2_algebra(), {}, {}};
  e.structures.push_back(u2_structure(1, 0, Branch::Plus));
  e.structures.push_back(u2_structure(1, 0, Branch::Minus));
  e.structures.push_back(u2_structure(2, 1, Branch::Plus));
  e.structures.push_back(u2_structure(Rational(1, 2), -2, Branch::Minus));
  e.structures.push_back(u2_structure(3, 2, Branch::Plus));
  return e;
}

CatalogEntry make_r_sl2() {
  CatalogEntry e{"r_sl2", r_sl2_algebra(), {}, {}};
  StructureEntry s;
  s.label = "Omega = z^w + x^y";
  s.J = r_sl2_j();
  s.omega = mono(4, {3, 0}, 1) + mono(4, {1, 2}, 1);
  s.theta = KForm::dual(4, 0);
  s.expect = {true, true};
  e.structures.push_back(s);
  e.structures.push_back(r_sl2_psi_structure(Rational(25, 9), Rational(20, 9)));
  return e;
}

CatalogEntry make_abelian4() {
  CatalogEntry e{"abelian4", LieAlgebra::abelian({"A", "B", "C", "D"}), {}, {}};
  StructureEntry s;
  s.label = "flat Kahler";
  s.J = Matrix::Zero(4, 4);
  s.J(1, 0) = 1;
  s.J(0, 1) = -1;
  s.J(3, 2) = 1;
  s.J(2, 3) = -1;
  s.omega = mono(4, {1, 0}, 1) + mono(4, {3, 2}, 1);
  s.theta = KForm(4, 1);
  s.expect = {true, true};
  e.structures.push_back(s);
  return e;
}

CatalogEntry make_r_u2_mod_u1() {
  // T, X, Y, Z span u(2); W = diag(0, i)/2 acts on su(2) as -ad(X)/2.
  const std::vector<std::string> names{"T", "X", "Y", "Z", "W"};
  const Table rows{{"X", "Y", {{"Z", 1}}},
                   {"Y", "Z", {{"X", 1}}},
                   {"Z", "X", {{"Y", 1}}},
                   {"W", "Y", {{"Z", Rational(-1, 2)}}},
                   {"W", "Z", {{"Y", Rational(1, 2)}}}};
  CatalogEntry e{"r_u2_mod_u1", from_table(names, rows), {}, {}};
  PresentationEntry pr;
  pr.label = "h = <W>, m = <T, X, Y, Z>";
  pr.h = Subspace::span(5, {unit_vector(5, 4)});
  pr.m = Subspace::span(5, {unit_vector(5, 0), unit_vector(5, 1), unit_vector(5, 2), unit_vector(5, 3)});
  e.presentations.push_back(pr);

  StructureEntry s;
  s.label = "delta = 1, + branch on m";
  s.J = Matrix::Zero(5, 5);
  s.J.topLeftCorner(4, 4) = j_delta(1, 0, Branch::Plus);
  s.omega = mono(5, {0, 1}, -1) + mono(5, {2, 3}, -1);
  s.theta = KForm::dual(5, 0);
  s.expect = {true, true};
  s.presentation = 0;
  e.structures.push_back(s);
  return e;
}

}  // namespace

LieAlgebra u2_algebra() {
  return from_table({"T", "X", "Y", "Z"},
                    {{"X", "Y", {{"Z", 1}}}, {"Y", "Z", {{"X", 1}}}, {"Z", "X", {{"Y", 1}}}});
}

LieAlgebra r_sl2_algebra() {
  return from_table({"W", "X", "Y", "Z"},
                    {{"X", "Y", {{"Z", -1}}}, {"Z", "X", {{"Y", 1}}}, {"Z", "Y", {{"X", -1}}}});
}

LieAlgebra su2_algebra(const std::string& sfx) {
  const std::string x = "X" + sfx, y = "Y" + sfx, z = "Z" + sfx;
  return from_table({x, y, z}, {{x, y, {{z, 1}}}, {y, z, {{x, 1}}}, {z, x, {{y, 1}}}});
}

Endomorphism r_sl2_j() {
  Endomorphism j = Matrix::Zero(4, 4);
  j(3, 0) = 1;   // J W = Z
  j(2, 1) = -1;  // J X = -Y
  j(1, 2) = 1;   // J Y = X
  j(0, 3) = -1;  // J Z = -W
  return j;
}

StructureEntry u2_structure(const Rational& c, const Rational& d, Branch branch) {
  const LieAlgebra g = u2_algebra();
  const Rational s = branch == Branch::Plus ? 1 : -1;
  StructureEntry e;
  e.label = "delta = " + to_string(c) + (d < 0 ? " - " : " + ") + to_string(d < 0 ? Rational(-d) : d) + " i, " +
            to_string(branch) + " branch";
  e.J = j_delta(c, d, branch);
  e.theta = s * KForm::dual(4, 0);
  const KForm phi = (s / c) * KForm::dual(4, 1);
  e.omega = -wedge(e.theta, phi) + ce_differential(g, phi);
  e.expect = {true, true};
  return e;
}

StructureEntry r_sl2_psi_structure(const Rational& b, const Rational& c) {
  const LieAlgebra g = r_sl2_algebra();
  StructureEntry e;
  e.label = "Omega_psi, psi = " + to_string(c) + " y + " + to_string(b) + " z";
  e.J = r_sl2_j();
  e.theta = KForm::dual(4, 0);
  const KForm psi = c * KForm::dual(4, 2) + b * KForm::dual(4, 3);
  e.omega = -wedge(e.theta, psi) + ce_differential(g, psi);
  e.expect = {true, false};
  return e;
}

CosetPresentation CatalogEntry::presentation_for(const StructureEntry& s) const {
  if (s.presentation < 0) return CosetPresentation::plain(algebra);
  if (static_cast<std::size_t>(s.presentation) >= presentations.size())
    throw Error(ErrorKind::SchemaError, "structure refers to missing presentation " + std::to_string(s.presentation));
  const auto& p = presentations[static_cast<std::size_t>(s.presentation)];
  return CosetPresentation::make(algebra, p.h, p.m);
}

std::vector<std::string> builtin_names() {
  return {"u2", "r_sl2", "r2_su2", "r_su2su2", "abelian4", "heisenberg3", "r_u2_mod_u1"};
}

CatalogEntry builtin(const std::string& name) {
  if (name == "u2") return make_u2();
  if (name == "r_sl2") return make_r_sl2();
  if (name == "r2_su2") return {name, direct_sum(LieAlgebra::abelian({"S", "T"}), su2_algebra()), {}, {}};
  if (name == "r_su2su2")
    return {name, direct_sum(LieAlgebra::abelian({"T"}), direct_sum(su2_algebra("1"), su2_algebra("2"))), {}, {}};
  if (name == "abelian4") return make_abelian4();
  if (name == "heisenberg3") return {name, from_table({"X", "Y", "Z"}, {{"X", "Y", {{"Z", 1}}}}), {}, {}};
  if (name == "r_u2_mod_u1") return make_r_u2_mod_u1();
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorKind::UnknownName, "no builtin algebra '" + name + "' (known: " + known + ")");
}

}  // namespace lck
