#include "lck/rational.hpp"

#include "lck/error.hpp"
#include "lck/gaussian.hpp"

#include <cctype>

namespace lck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotReductive: return "NotReductive";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::ThetaNotClosed: return "ThetaNotClosed";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotIntegrable: return "NotIntegrable";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::NotLck: return "NotLck";
    case ErrorKind::LeeNotClosed: return "LeeNotClosed";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DegeneratePotential: return "DegeneratePotential";
    case ErrorKind::NotTorusLike: return "NotTorusLike";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::ParseError, "malformed rational \"" + std::string(text) + "\"");
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(n, d);
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const Integer n = boost::multiprecision::numerator(q);
  const Integer d = boost::multiprecision::denominator(q);
  const Integer sn = boost::multiprecision::sqrt(n);
  const Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  root = Rational(sn, sd);
  return true;
}

std::string to_string(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (out.empty())
      out = to_string(v(i));
    else
      out += v(i) < 0 ? " - " + to_string(Rational(-v(i))) : " + " + to_string(v(i));
    out += " " + names[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  if (z.re == 0) return to_string(z.im) + "i";
  return "(" + to_string(z.re) + (z.im > 0 ? "+" : "") + to_string(z.im) + "i)";
}

}  // namespace lck
