#include "lck/poly.hpp"

#include <stdexcept>

namespace lck {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> m = c_;
  const Rational l = c_.back();
  for (auto& x : m) x /= l;
  return Polynomial(std::move(m));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[k] / b.lead();
    q[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  const Index n = m.rows();
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk = Matrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (Index i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const Matrix am = m * mk;
    c[n - k] = -am.trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  Matrix acc = Matrix::Zero(m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (m * acc).eval();
    for (Index i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    seq.push_back(Polynomial() - r);
  }
  seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<Rational>& values) {
  int changes = 0;
  int last = 0;
  for (const auto& v : values) {
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_at_minus_infinity(const Polynomial& p) {
  const int s = p.lead() > 0 ? 1 : -1;
  return (p.degree() % 2 == 0) ? s : -s;
}

}  // namespace

int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0) return 0;
  const Polynomial sf = squarefree_part(p);
  const auto seq = sturm_sequence(sf);
  std::vector<Rational> at_lo, at_hi;
  for (const auto& q : seq) {
    at_lo.push_back(q(lo));
    at_hi.push_back(q(hi));
  }
  return sign_changes(at_lo) - sign_changes(at_hi);
}

int count_negative_roots(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  const Polynomial sf = squarefree_part(p);
  const auto seq = sturm_sequence(sf);
  std::vector<Rational> at_minus_inf, at_zero;
  for (const auto& q : seq) {
    at_minus_inf.push_back(Rational(sign_at_minus_infinity(q)));
    at_zero.push_back(q(Rational(0)));
  }
  // Sturm counts roots in (-inf, 0]; drop a root at 0 itself.
  int n = sign_changes(at_minus_inf) - sign_changes(at_zero);
  if (sf(Rational(0)) == 0) --n;
  return n;
}

bool is_semisimple(const Matrix& m) {
  const Polynomial sf = squarefree_part(characteristic_polynomial(m));
  return is_zero(evaluate(sf, m));
}

bool has_imaginary_spectrum(const Matrix& m) {
  // Roots are +-i*sqrt(a) and 0 only if p(x) = x^k q(x^2) with every root of q
  // real and non-positive.
  const Polynomial p = characteristic_polynomial(m);
  const auto& c = p.coeffs();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  std::vector<Rational> rest(c.begin() + static_cast<long>(k), c.end());
  std::vector<Rational> q;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (i % 2 == 1) {
      if (rest[i] != 0) return false;
    } else {
      q.push_back(rest[i]);
    }
  }
  const Polynomial qp(std::move(q));
  if (qp.degree() <= 0) return true;
  // q has no root at 0 (the x^k factor was removed and x^2 | the rest only through q).
  return count_negative_roots(qp) == squarefree_part(qp).degree();
}

}  // namespace lck
