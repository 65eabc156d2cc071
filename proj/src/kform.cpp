#include "lck/kform.hpp"

#include "lck/error.hpp"
#include "lck/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lck {

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(Multi& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

// f(e_{idx[0]}, ..., e_{idx[k-1]}) for an arbitrary index list.
Rational value_on_basis(const KForm& f, Multi idx) {
  const int s = sort_with_sign(idx);
  if (s == 0) return 0;
  Rational c = f.coeff(idx);
  return s > 0 ? c : Rational(-c);
}

void check_same_parent(const KForm& a, const KForm& b) {
  if (a.parent_dim() != b.parent_dim())
    throw Error(ErrorKind::DimensionMismatch, "forms live on algebras of different dimension");
}

void check_algebra(const LieAlgebra& g, const KForm& f) {
  if (f.parent_dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "form does not live on this algebra");
}

}  // namespace

KForm::KForm(int parent_dim, int degree) : n_(parent_dim), k_(degree) {
  if (degree < 0) throw Error(ErrorKind::DimensionMismatch, "negative form degree");
}

KForm KForm::scalar(int parent_dim, const Rational& value) {
  KForm f(parent_dim, 0);
  f.add_term({}, value);
  return f;
}

KForm KForm::dual(int parent_dim, int i) { return monomial(parent_dim, {i}, Rational(1)); }

KForm KForm::monomial(int parent_dim, Multi idx, const Rational& c) {
  KForm f(parent_dim, static_cast<int>(idx.size()));
  for (int i : idx)
    if (i < 0 || i >= parent_dim) throw Error(ErrorKind::DimensionMismatch, "form index out of range");
  const int s = sort_with_sign(idx);
  if (s != 0) f.add_term(idx, s > 0 ? c : Rational(-c));
  return f;
}

KForm KForm::linear(const Vector& row) {
  KForm f(static_cast<int>(row.size()), 1);
  for (Index i = 0; i < row.size(); ++i) f.add_term({static_cast<int>(i)}, row(i));
  return f;
}

KForm KForm::from_bilinear(const Matrix& m) {
  KForm f(static_cast<int>(m.rows()), 2);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j) f.add_term({static_cast<int>(i), static_cast<int>(j)}, m(i, j));
  return f;
}

Rational KForm::coeff(const Multi& sorted) const {
  const auto it = c_.find(sorted);
  return it == c_.end() ? Rational(0) : it->second;
}

void KForm::add_term(const Multi& sorted, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(sorted, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Vector KForm::as_linear() const {
  if (k_ != 1) throw Error(ErrorKind::ArityMismatch, "not a 1-form");
  Vector v = Vector::Zero(n_);
  for (const auto& [idx, c] : c_) v(idx[0]) = c;
  return v;
}

Matrix KForm::as_bilinear() const {
  if (k_ != 2) throw Error(ErrorKind::ArityMismatch, "not a 2-form");
  Matrix m = Matrix::Zero(n_, n_);
  for (const auto& [idx, c] : c_) {
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return m;
}

KForm& KForm::operator+=(const KForm& o) {
  check_same_parent(*this, o);
  if (o.k_ != k_) throw Error(ErrorKind::ArityMismatch, "adding forms of different degree");
  for (const auto& [idx, c] : o.c_) add_term(idx, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  check_same_parent(*this, o);
  if (o.k_ != k_) throw Error(ErrorKind::ArityMismatch, "subtracting forms of different degree");
  for (const auto& [idx, c] : o.c_) add_term(idx, -c);
  return *this;
}

KForm& KForm::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [idx, c] : c_) c *= s;
  return *this;
}

std::vector<Multi> form_basis(int n, int k) {
  std::vector<Multi> out;
  if (k < 0 || k > n) return out;
  Multi cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Vector to_coords(const KForm& f, const std::vector<Multi>& basis) {
  Vector v(static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) v(static_cast<Index>(i)) = f.coeff(basis[i]);
  return v;
}

KForm from_coords(int n, int k, const std::vector<Multi>& basis, const Vector& coords) {
  KForm f(n, k);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords(static_cast<Index>(i)));
  return f;
}

KForm wedge(const KForm& a, const KForm& b) {
  check_same_parent(a, b);
  KForm out(a.parent_dim(), a.degree() + b.degree());
  if (out.degree() > a.parent_dim()) return out;
  for (const auto& [ia, ca] : a.coeffs())
    for (const auto& [ib, cb] : b.coeffs()) {
      Multi idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      const int s = sort_with_sign(idx);
      if (s == 0) continue;
      const Rational c = ca * cb;
      out.add_term(idx, s > 0 ? c : Rational(-c));
    }
  return out;
}

Rational eval(const KForm& f, std::span<const Vector> args) {
  if (static_cast<int>(args.size()) != f.degree())
    throw Error(ErrorKind::ArityMismatch, "form of degree " + std::to_string(f.degree()) + " given " +
                                              std::to_string(args.size()) + " arguments");
  for (const auto& a : args)
    if (a.size() != f.parent_dim()) throw Error(ErrorKind::DimensionMismatch, "argument length");
  Rational total = 0;
  const Index k = f.degree();
  for (const auto& [idx, c] : f.coeffs()) {
    Matrix m(k, k);
    for (Index r = 0; r < k; ++r)
      for (Index s = 0; s < k; ++s) m(r, s) = args[static_cast<std::size_t>(s)](idx[static_cast<std::size_t>(r)]);
    total += c * determinant(m);
  }
  return total;
}

KForm interior(const Vector& v, const KForm& f) {
  if (f.degree() == 0) throw Error(ErrorKind::ArityMismatch, "interior product into a 0-form");
  if (v.size() != f.parent_dim()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  const int n = f.parent_dim();
  KForm out(n, f.degree() - 1);
  for (const auto& idx : form_basis(n, f.degree() - 1)) {
    Rational val = 0;
    for (int m = 0; m < n; ++m) {
      if (v(m) == 0) continue;
      Multi full{m};
      full.insert(full.end(), idx.begin(), idx.end());
      val += v(m) * value_on_basis(f, full);
    }
    out.add_term(idx, val);
  }
  return out;
}

KForm ce_differential(const LieAlgebra& g, const KForm& f) {
  check_algebra(g, f);
  const int n = g.dim();
  const int k = f.degree();
  KForm out(n, k + 1);
  if (k + 1 > n || f.is_zero()) return out;
  for (const auto& idx : form_basis(n, k + 1)) {
    Rational val = 0;
    for (int a = 0; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        const Vector br = g.bracket_basis(idx[a], idx[b]);
        if (is_zero(br)) continue;
        Multi rest;
        for (int r = 0; r <= k; ++r)
          if (r != a && r != b) rest.push_back(idx[r]);
        Rational inner = 0;
        for (int m = 0; m < n; ++m) {
          if (br(m) == 0) continue;
          Multi full{m};
          full.insert(full.end(), rest.begin(), rest.end());
          inner += br(m) * value_on_basis(f, full);
        }
        val += ((a + b) % 2 == 0) ? inner : Rational(-inner);
      }
    out.add_term(idx, val);
  }
  return out;
}

KForm lie_derivative(const LieAlgebra& g, const Vector& v, const KForm& f) {
  check_algebra(g, f);
  if (v.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  const int n = g.dim();
  KForm out(n, f.degree());
  if (f.is_zero()) return out;
  const Matrix adv = g.ad(v);
  for (const auto& idx : form_basis(n, f.degree())) {
    Rational val = 0;
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (int m = 0; m < n; ++m) {
        const Rational& a = adv(m, idx[r]);
        if (a == 0) continue;
        Multi moved = idx;
        moved[r] = m;
        val -= a * value_on_basis(f, moved);
      }
    out.add_term(idx, val);
  }
  return out;
}

KForm twisted_differential(const LieAlgebra& g, const KForm& theta, const KForm& f) {
  if (theta.degree() != 1) throw Error(ErrorKind::ArityMismatch, "twisting form must have degree 1");
  check_algebra(g, theta);
  if (!ce_differential(g, theta).is_zero()) throw Error(ErrorKind::ThetaNotClosed, "d theta != 0");
  return ce_differential(g, f) - wedge(theta, f);
}

std::string to_string(const KForm& f, const std::vector<std::string>& dual_names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : f.coeffs()) {
    if (out.empty()) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c)));
    }
    if (idx.empty()) continue;
    out += ' ';
    for (std::size_t r = 0; r < idx.size(); ++r) {
      if (r) out += '^';
      out += dual_names[static_cast<std::size_t>(idx[r])];
    }
  }
  return out;
}

namespace {

bool looks_numeric(const std::string& tok) {
  return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) ||
                          ((tok[0] == '-' || tok[0] == '+') && tok.size() > 1 &&
                           std::isdigit(static_cast<unsigned char>(tok[1]))));
}

struct Term {
  Rational coeff;
  std::string atom;  // empty for a bare number
};

// Splits "a X + 1/2 Y - Z" into signed terms; signs may stand alone or prefix
// the coefficient.
std::vector<Term> parse_terms(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  std::vector<Term> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < toks.size()) {
    Rational sign = 1;
    if (toks[i] == "+" || toks[i] == "-") {
      if (toks[i] == "-") sign = -1;
      ++i;
    } else if (!first) {
      throw Error(ErrorKind::ParseError, "expected '+' or '-' before \"" + toks[i] + "\"");
    }
    if (i >= toks.size()) throw Error(ErrorKind::ParseError, "dangling sign in \"" + text + "\"");
    Term t{sign, ""};
    std::string tok = toks[i];
    if (looks_numeric(tok)) {
      t.coeff *= parse_rational(tok);
      ++i;
      if (i < toks.size() && toks[i] != "+" && toks[i] != "-") t.atom = toks[i++];
    } else {
      if (tok[0] == '-') {
        t.coeff = -t.coeff;
        tok = tok.substr(1);
      }
      t.atom = tok;
      ++i;
    }
    terms.push_back(t);
    first = false;
  }
  if (terms.empty()) throw Error(ErrorKind::ParseError, "empty expression");
  return terms;
}

int find_name(const std::vector<std::string>& names, const std::string& s) {
  const auto it = std::find(names.begin(), names.end(), s);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

KForm parse_form(const std::string& text, const std::vector<std::string>& dual_names, int degree_hint) {
  const int n = static_cast<int>(dual_names.size());
  std::vector<std::pair<Multi, Rational>> parsed;
  int degree = -1;
  for (const auto& t : parse_terms(text)) {
    Multi idx;
    if (!t.atom.empty()) {
      std::size_t pos = 0;
      while (pos <= t.atom.size()) {
        const auto next = t.atom.find('^', pos);
        const std::string name = t.atom.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        const int i = find_name(dual_names, name);
        if (i < 0) throw Error(ErrorKind::UnknownName, "no dual form named \"" + name + "\"");
        idx.push_back(i);
        if (next == std::string::npos) break;
        pos = next + 1;
      }
    }
    const bool zero_scalar = idx.empty() && t.coeff == 0;
    if (!zero_scalar) {
      if (degree >= 0 && degree != static_cast<int>(idx.size()))
        throw Error(ErrorKind::ParseError, "mixed degrees in \"" + text + "\"");
      degree = static_cast<int>(idx.size());
    }
    parsed.emplace_back(std::move(idx), t.coeff);
  }
  if (degree < 0) degree = std::max(degree_hint, 0);
  KForm f(n, degree);
  for (auto& [idx, c] : parsed) {
    if (idx.empty() && c == 0) continue;
    f += KForm::monomial(n, idx, c);
  }
  return f;
}

Vector parse_vector(const std::string& text, const std::vector<std::string>& basis_names) {
  Vector v = Vector::Zero(static_cast<Index>(basis_names.size()));
  for (const auto& t : parse_terms(text)) {
    if (t.atom.empty()) {
      if (t.coeff == 0) continue;
      throw Error(ErrorKind::ParseError, "bare number in vector expression \"" + text + "\"");
    }
    const int i = find_name(basis_names, t.atom);
    if (i < 0) throw Error(ErrorKind::UnknownName, "no basis vector named \"" + t.atom + "\"");
    v(i) += t.coeff;
  }
  return v;
}

}  // namespace lck
