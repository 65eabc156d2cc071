#include "lck/catalog.hpp"

#include "lck/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace lck {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::SchemaError, field + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& field) {
  if (!obj.is_object() || !obj.contains(key)) schema(field, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

Rational rational_field(const Json& v, const std::string& field) {
  if (!v.is_string()) schema(field, "rationals must be strings \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, field + ": " + e.what());
  }
}

int name_index(const std::vector<std::string>& names, const std::vector<std::string>& duals, const Json& v,
               const std::string& field) {
  if (!v.is_string()) schema(field, "expected a basis name");
  const auto s = v.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s || duals[i] == s) return static_cast<int>(i);
  schema(field, "unknown basis name \"" + s + "\"");
}

Vector vector_field(const LieAlgebra& g, const Json& v, const std::string& field) {
  if (!v.is_object()) schema(field, "expected an object {name: \"p/q\"}");
  Vector out = Vector::Zero(g.dim());
  for (const auto& [k, c] : v.items())
    out(name_index(g.basis_names(), g.basis_names(), Json(k), field + "." + k)) += rational_field(c, field + "." + k);
  return out;
}

KForm form_field(const LieAlgebra& g, const Json& v, int degree, const std::string& field) {
  if (!v.is_array()) schema(field, "expected an array of terms");
  KForm f(g.dim(), degree);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string tf = field + "[" + std::to_string(k) + "]";
    const Json& idx = require(v[k], "indices", tf);
    if (!idx.is_array() || static_cast<int>(idx.size()) != degree)
      schema(tf + ".indices", "expected " + std::to_string(degree) + " names");
    Multi m;
    for (std::size_t a = 0; a < idx.size(); ++a)
      m.push_back(name_index(g.basis_names(), g.dual_names(), idx[a], tf + ".indices"));
    f += KForm::monomial(g.dim(), m, rational_field(require(v[k], "coeff", tf), tf + ".coeff"));
  }
  return f;
}

Json form_json(const LieAlgebra& g, const KForm& f) {
  Json arr = Json::array();
  for (const auto& [m, c] : f.coeffs()) {
    Json idx = Json::array();
    for (int i : m) idx.push_back(g.dual_names()[static_cast<std::size_t>(i)]);
    arr.push_back(Json{{"indices", idx}, {"coeff", to_string(c)}});
  }
  return arr;
}

Json vector_json(const LieAlgebra& g, const Vector& v) {
  Json o = Json::object();
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) o[g.basis_names()[static_cast<std::size_t>(i)]] = to_string(v(i));
  return o;
}

Subspace subspace_field(const LieAlgebra& g, const Json& v, const std::string& field) {
  if (!v.is_array()) schema(field, "expected an array of vectors");
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < v.size(); ++k) vs.push_back(vector_field(g, v[k], field + "[" + std::to_string(k) + "]"));
  return Subspace::span(g.dim(), vs);
}

LieAlgebra algebra_field(const Json& doc) {
  const Json& basis = require(doc, "basis", "basis");
  if (!basis.is_array() || basis.empty()) schema("basis", "expected a nonempty array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) schema("basis[" + std::to_string(i) + "]", "expected a string");
    names.push_back(basis[i].get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  std::map<LieAlgebra::Key, Vector> st;
  std::map<LieAlgebra::Key, std::string> seen;
  if (doc.contains("brackets")) {
    const Json& br = doc.at("brackets");
    if (!br.is_array()) schema("brackets", "expected an array");
    for (std::size_t k = 0; k < br.size(); ++k) {
      const std::string bf = "brackets[" + std::to_string(k) + "]";
      int i = name_index(names, names, require(br[k], "lhs", bf), bf + ".lhs");
      int j = name_index(names, names, require(br[k], "rhs", bf), bf + ".rhs");
      Vector v = Vector::Zero(n);
      const Json& res = require(br[k], "result", bf);
      if (!res.is_object()) schema(bf + ".result", "expected an object {name: \"p/q\"}");
      for (const auto& [key, c] : res.items())
        v(name_index(names, names, Json(key), bf + ".result." + key)) += rational_field(c, bf + ".result." + key);
      if (i == j) {
        if (!is_zero(v)) schema(bf, "[e, e] must vanish");
        continue;
      }
      if (i > j) {
        std::swap(i, j);
        v = -v;
      }
      auto it = st.find({i, j});
      if (it != st.end()) {
        if (it->second != v)
          schema(bf, "inconsistent duplicate of " + seen[{i, j}] + " for the pair (" + names[static_cast<std::size_t>(i)] +
                         ", " + names[static_cast<std::size_t>(j)] + ")");
        continue;
      }
      st[{i, j}] = v;
      seen[{i, j}] = bf;
    }
  }
  LieAlgebra g(names, std::move(st));
  const JacobiVerdict jv = check_jacobi(g);
  if (!jv.ok)
    throw Error(ErrorKind::JacobiViolation, "Jacobi identity fails at (" + names[static_cast<std::size_t>(jv.i)] + ", " +
                                                names[static_cast<std::size_t>(jv.j)] + ", " +
                                                names[static_cast<std::size_t>(jv.k)] +
                                                "), cyclic sum " + to_string(jv.residual, names));
  return g;
}

}  // namespace

CatalogEntry load_catalog(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) schema("document", "expected an object");
  CatalogEntry out{doc.value("name", std::string("file")), algebra_field(doc), {}, {}};
  const LieAlgebra& g = out.algebra;
  const int n = g.dim();

  if (doc.contains("presentations")) {
    const Json& ps = doc.at("presentations");
    if (!ps.is_array()) schema("presentations", "expected an array");
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const std::string pf = "presentations[" + std::to_string(k) + "]";
      PresentationEntry p;
      p.label = ps[k].value("label", std::string());
      p.h = subspace_field(g, require(ps[k], "h", pf), pf + ".h");
      p.m = subspace_field(g, require(ps[k], "m", pf), pf + ".m");
      CosetPresentation::make(g, p.h, p.m);
      out.presentations.push_back(p);
    }
  }

  if (doc.contains("structures")) {
    const Json& ss = doc.at("structures");
    if (!ss.is_array()) schema("structures", "expected an array");
    for (std::size_t k = 0; k < ss.size(); ++k) {
      const std::string sf = "structures[" + std::to_string(k) + "]";
      const Json& sj = ss[k];
      StructureEntry s;
      s.label = sj.value("label", std::string());
      const Json& jm = require(sj, "J", sf);
      if (!jm.is_array() || static_cast<int>(jm.size()) != n) schema(sf + ".J", "expected " + std::to_string(n) + " rows");
      s.J = Matrix(n, n);
      for (int r = 0; r < n; ++r) {
        const Json& row = jm[static_cast<std::size_t>(r)];
        const std::string rf = sf + ".J[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n) schema(rf, "expected " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c)
          s.J(r, c) = rational_field(row[static_cast<std::size_t>(c)], rf + "[" + std::to_string(c) + "]");
      }
      s.omega = form_field(g, require(sj, "omega", sf), 2, sf + ".omega");
      s.theta = sj.contains("theta") ? form_field(g, sj.at("theta"), 1, sf + ".theta") : KForm(n, 1);
      s.presentation = sj.value("presentation", -1);
      if (s.presentation >= static_cast<int>(out.presentations.size()))
        schema(sf + ".presentation", "no such presentation");
      if (sj.contains("expect")) {
        const Json& ex = sj.at("expect");
        if (ex.contains("lck")) s.expect.lck = ex.at("lck").get<bool>();
        if (ex.contains("vaisman")) s.expect.vaisman = ex.at("vaisman").get<bool>();
      }
      out.structures.push_back(s);
    }
  }
  return out;
}

CatalogEntry load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return load_catalog(in);
}

void save_catalog(const CatalogEntry& e, std::ostream& out) {
  const LieAlgebra& g = e.algebra;
  const auto& names = g.basis_names();
  Json doc;
  doc["name"] = e.name;
  doc["basis"] = names;
  Json br = Json::array();
  for (const auto& [key, v] : g.structure())
    br.push_back(Json{{"lhs", names[static_cast<std::size_t>(key.first)]},
                      {"rhs", names[static_cast<std::size_t>(key.second)]},
                      {"result", vector_json(g, v)}});
  doc["brackets"] = br;
  if (!e.presentations.empty()) {
    Json ps = Json::array();
    for (const auto& p : e.presentations) {
      Json h = Json::array(), m = Json::array();
      for (Index k = 0; k < p.h.dim(); ++k) h.push_back(vector_json(g, p.h.basis_vector(k)));
      for (Index k = 0; k < p.m.dim(); ++k) m.push_back(vector_json(g, p.m.basis_vector(k)));
      ps.push_back(Json{{"label", p.label}, {"h", h}, {"m", m}});
    }
    doc["presentations"] = ps;
  }
  Json ss = Json::array();
  for (const auto& s : e.structures) {
    Json sj;
    sj["label"] = s.label;
    Json jm = Json::array();
    for (Index r = 0; r < s.J.rows(); ++r) {
      Json row = Json::array();
      for (Index c = 0; c < s.J.cols(); ++c) row.push_back(to_string(s.J(r, c)));
      jm.push_back(row);
    }
    sj["J"] = jm;
    sj["omega"] = form_json(g, s.omega);
    sj["theta"] = form_json(g, s.theta);
    if (s.presentation >= 0) sj["presentation"] = s.presentation;
    Json ex = Json::object();
    if (s.expect.lck) ex["lck"] = *s.expect.lck;
    if (s.expect.vaisman) ex["vaisman"] = *s.expect.vaisman;
    if (!ex.empty()) sj["expect"] = ex;
    ss.push_back(sj);
  }
  doc["structures"] = ss;
  out << doc.dump(2) << '\n';
}

}  // namespace lck
