#pragma once

#include "lck/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lck {

/// Finite-dimensional real Lie algebra given by structure constants on a named
/// basis. Only [e_i, e_j] with i < j is stored; the rest follows from
/// antisymmetry. Immutable after construction.
class LieAlgebra {
 public:
  using Key = std::pair<int, int>;

  LieAlgebra(std::vector<std::string> basis_names, std::map<Key, Vector> structure);

  static LieAlgebra abelian(std::vector<std::string> names) { return LieAlgebra(std::move(names), {}); }

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::map<Key, Vector>& structure() const { return structure_; }

  /// Index of a basis vector by name, or -1.
  int index_of(const std::string& name) const;
  Vector basis_vector(int i) const { return unit_vector(dim(), i); }
  Vector basis_vector(const std::string& name) const;

  /// [e_i, e_j] for any i, j.
  Vector bracket_basis(int i, int j) const;
  Vector bracket(const Vector& a, const Vector& b) const;
  /// Matrix of ad(v): column j is [v, e_j].
  Matrix ad(const Vector& v) const;

  /// Form names: the dual of basis vector "T" is "t".
  const std::vector<std::string>& dual_names() const { return dual_names_; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.structure_ == b.structure_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> dual_names_;
  std::map<Key, Vector> structure_;
};

/// Direct sum with basis names concatenated (names must stay distinct).
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Linear subspace of the algebra (or of any Q^n) with a cached reduced
/// row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  /// Generators are the columns of `generators`.
  Subspace(Index ambient_dim, Matrix generators);
  static Subspace zero(Index n) { return Subspace(n, Matrix(n, 0)); }
  static Subspace whole(Index n) { return Subspace(n, Matrix::Identity(n, n)); }
  static Subspace span(Index n, const std::vector<Vector>& vs);

  Index ambient_dim() const { return n_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& generators() const { return generators_; }
  /// Echelon basis as columns (rows of the RREF, transposed).
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(Index k) const { return basis_.col(k); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; nullopt when v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Index n_ = 0;
  Matrix generators_;
  Matrix basis_;
  std::vector<Index> pivots_;
};

struct JacobiVerdict {
  bool ok = true;
  int i = -1, j = -1, k = -1;
  Vector residual;
};

JacobiVerdict check_jacobi(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
Subspace derived_ideal(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Vector& v);
/// {x : [x, s] = 0 for all s in sub}
Subspace centralizer(const LieAlgebra& g, const Subspace& sub);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// Matrix of ad(v) restricted to an ad(v)-invariant subspace, in the
/// subspace's echelon basis.
Matrix restricted_ad(const LieAlgebra& g, const Vector& v, const Subspace& s);

/// Killing form of the subalgebra s (trace of ad_s x ad_s y), in s's basis.
Matrix killing_form(const LieAlgebra& g, const Subspace& s);

struct ReductiveSplit {
  Subspace t;  // center
  Subspace s;  // derived ideal, semisimple
};

/// Throws Error(NotReductive) unless center + [g,g] = g directly and the
/// Killing form of [g,g] is nondegenerate.
ReductiveSplit reductive_split(const LieAlgebra& g);

struct RankOptions {
  int random_samples = 16;
  std::uint64_t seed = 1;
};

struct RankEstimate {
  int upper_bound = 0;     // min dim ker(ad v | s) over the samples
  bool certified = false;  // equality with the rank has an exact witness
  Vector witness;          // sample attaining the bound
  std::string note;
};

/// Rank of the semisimple ideal s by the regular-element heuristic. The bound
/// is exact whenever it is 1 or the witness centralizer is a toral
/// subalgebra (abelian, ad-semisimple); that is what `certified` reports.
/// Throws Error(NotSemisimple) when s has a degenerate Killing form.
RankEstimate rank_estimate(const LieAlgebra& g, const Subspace& s, const RankOptions& opts = {});

}  // namespace lck
