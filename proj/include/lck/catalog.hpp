#pragma once

#include "lck/complex_struct.hpp"
#include "lck/kform.hpp"
#include "lck/lck.hpp"
#include "lck/lie_algebra.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lck {

struct ExpectedVerdict {
  std::optional<bool> lck;
  std::optional<bool> vaisman;
};

struct StructureEntry {
  std::string label;
  Endomorphism J;
  KForm omega;
  KForm theta;
  ExpectedVerdict expect;
  int presentation = -1;  // index into CatalogEntry::presentations, -1 for the plain algebra
};

struct PresentationEntry {
  std::string label;
  Subspace h;
  Subspace m;
};

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  std::vector<PresentationEntry> presentations;
  std::vector<StructureEntry> structures;

  /// The presentation a structure lives on (plain when its index is -1).
  CosetPresentation presentation_for(const StructureEntry& s) const;
};

std::vector<std::string> builtin_names();
/// Throws Error(UnknownName).
CatalogEntry builtin(const std::string& name);

/// u(2) in the basis T, X, Y, Z with [X,Y] = Z, [Y,Z] = X, [Z,X] = Y.
LieAlgebra u2_algebra();
/// R + sl(2,R) in the basis W, X, Y, Z with [X,Y] = -Z, [Z,X] = Y, [Z,Y] = -X.
LieAlgebra r_sl2_algebra();
/// su(2) with basis names X<suffix>, Y<suffix>, Z<suffix>.
LieAlgebra su2_algebra(const std::string& suffix = "");

/// J_delta with Omega = -theta ^ phi + d phi for phi = x/c and theta = t on
/// the + branch; theta = -t, phi = -x/c on the - branch.
StructureEntry u2_structure(const Rational& c, const Rational& d, Branch branch);
/// Omega_psi = -w ^ psi + d psi on R + sl(2,R) with psi = c y + b z, theta = w.
StructureEntry r_sl2_psi_structure(const Rational& b, const Rational& c);
/// The complex structure J Y = X, J X = -Y, J W = Z, J Z = -W on R + sl(2,R).
Endomorphism r_sl2_j();

/// JSON catalog document. Throws ParseError, SchemaError, JacobiViolation
/// with the offending field in the message.
CatalogEntry load_catalog(std::istream& in);
CatalogEntry load_catalog_file(const std::string& path);
void save_catalog(const CatalogEntry& entry, std::ostream& out);

}  // namespace lck
