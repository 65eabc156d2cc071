#include "lck/lie_algebra.hpp"

#include "lck/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lck {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::map<Key, Vector> structure)
    : names_(std::move(basis_names)) {
  const int n = dim();
  if (n == 0) throw Error(ErrorKind::SchemaError, "empty basis");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw Error(ErrorKind::SchemaError, "empty basis name");
    if (!seen.insert(name).second) throw Error(ErrorKind::SchemaError, "duplicate basis name " + name);
  }
  for (auto& [key, v] : structure) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
      throw Error(ErrorKind::SchemaError, "structure key must satisfy 0 <= i < j < dim");
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "structure vector length");
    if (!is_zero(v)) structure_.emplace(key, std::move(v));
  }
  std::set<std::string> dual_seen;
  for (const auto& name : names_) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (seen.count(lower) && lower != name) lower = name + "*";
    if (!dual_seen.insert(lower).second) lower = name + "*";
    dual_names_.push_back(lower);
  }
}

int LieAlgebra::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Vector LieAlgebra::basis_vector(const std::string& name) const {
  const int i = index_of(name);
  if (i < 0) throw Error(ErrorKind::UnknownName, "no basis vector named " + name);
  return basis_vector(i);
}

Vector LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return Vector::Zero(dim());
  if (i < j) {
    const auto it = structure_.find({i, j});
    return it == structure_.end() ? Vector(Vector::Zero(dim())) : it->second;
  }
  const auto it = structure_.find({j, i});
  return it == structure_.end() ? Vector(Vector::Zero(dim())) : Vector(-it->second);
}

Vector LieAlgebra::bracket(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim())
    throw Error(ErrorKind::DimensionMismatch, "bracket arguments must have length " + std::to_string(dim()));
  Vector r = Vector::Zero(dim());
  for (const auto& [key, c] : structure_) {
    const auto [i, j] = key;
    const Rational f = a(i) * b(j) - a(j) * b(i);
    if (f != 0) r += f * c;
  }
  return r;
}

Matrix LieAlgebra::ad(const Vector& v) const {
  Matrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = bracket(v, basis_vector(j));
  return m;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names = a.basis_names();
  names.insert(names.end(), b.basis_names().begin(), b.basis_names().end());
  const int n = a.dim() + b.dim();
  std::map<LieAlgebra::Key, Vector> s;
  for (const auto& [key, v] : a.structure()) {
    Vector w = Vector::Zero(n);
    w.head(a.dim()) = v;
    s.emplace(key, w);
  }
  for (const auto& [key, v] : b.structure()) {
    Vector w = Vector::Zero(n);
    w.tail(b.dim()) = v;
    s.emplace(LieAlgebra::Key{key.first + a.dim(), key.second + a.dim()}, w);
  }
  return LieAlgebra(std::move(names), std::move(s));
}

}  // namespace lck
