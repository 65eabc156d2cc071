#include "lck/cli.hpp"

#include "lck/catalog.hpp"
#include "lck/cohomology.hpp"
#include "lck/complex_struct.hpp"
#include "lck/error.hpp"
#include "lck/lck.hpp"
#include "lck/linalg.hpp"
#include "lck/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace lck {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string builtin;
  std::string file;
  std::string json;
  std::string theta;
  std::vector<std::string> expect;
  std::string form;
  std::string generator;
  std::string delta;
  std::string branch = "+";
  int structure = -1;
  int max_degree = -1;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct Expectations {
  std::optional<bool> lck, vaisman;
};

Expectations parse_expect(const std::vector<std::string>& items) {
  Expectations e;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--expect takes key=true|false, got '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (val != "true" && val != "false") throw UsageError("--expect value must be true or false");
    if (key == "vaisman")
      e.vaisman = val == "true";
    else if (key == "lck")
      e.lck = val == "true";
    else
      throw UsageError("--expect key must be lck or vaisman");
  }
  return e;
}

std::string digest_of(const CatalogEntry& e) {
  std::ostringstream s;
  save_catalog(e, s);
  return fnv1a_hex(s.str());
}

std::string cvec_string(const CVector& v, const std::vector<std::string>& names) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == GaussianRational(0)) continue;
    out += (out.empty() ? "" : " + ") + to_string(v(i)) + " " + names[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

std::string matrix_string(const Matrix& m) {
  std::string out = "[";
  for (Index r = 0; r < m.rows(); ++r) {
    out += r ? "; " : "";
    for (Index c = 0; c < m.cols(); ++c) out += (c ? " " : "") + to_string(m(r, c));
  }
  return out + "]";
}

Check error_check(const std::string& name, const std::string& statement, const Error& e) {
  Check c = make_check(name, statement, false);
  c.witnesses = {{"error", e.what()}};
  return c;
}

class Runner {
 public:
  Runner(std::string command, const Options& o) : cmd_(std::move(command)), o_(o) {}

  std::vector<Report> on_entry(const CatalogEntry& e, const std::string& source) const {
    if (cmd_ == "validate") return {validate(e, source)};
    if (cmd_ == "cohomology") return {cohomology(e, source)};
    if (cmd_ == "classify") return {classify(e, source)};
    if (cmd_ == "average" && o_.structure < 0) return {average(e, source, nullptr)};
    if (cmd_ == "complex" && !o_.delta.empty()) return {complex_delta(e, source)};

    std::vector<const StructureEntry*> picks;
    if (o_.structure >= 0) {
      if (static_cast<std::size_t>(o_.structure) >= e.structures.size())
        throw UsageError(e.name + " has " + std::to_string(e.structures.size()) + " structures; index " +
                         std::to_string(o_.structure) + " is out of range");
      picks.push_back(&e.structures[static_cast<std::size_t>(o_.structure)]);
    } else {
      for (const auto& s : e.structures) picks.push_back(&s);
    }
    std::vector<Report> out;
    if (picks.empty()) {
      Report r = base(e, source, "");
      r.lines.push_back("no structures");
      out.push_back(r);
    }
    for (const StructureEntry* s : picks) {
      if (cmd_ == "check") out.push_back(check(e, source, *s));
      if (cmd_ == "lemma1") out.push_back(lemma1(e, source, *s));
      if (cmd_ == "average") out.push_back(average(e, source, s));
      if (cmd_ == "complex") out.push_back(complex(e, source, *s));
      if (cmd_ == "homogeneous") out.push_back(homogeneous(e, source, *s));
    }
    return out;
  }

 private:
  Report base(const CatalogEntry& e, const std::string& source, const std::string& structure) const {
    Report r;
    r.command = cmd_;
    r.source = source;
    r.structure = structure;
    r.digest = digest_of(e);
    return r;
  }

  Report validate(const CatalogEntry& e, const std::string& source) const {
    Report r = base(e, source, "");
    const LieAlgebra& g = e.algebra;
    const JacobiVerdict jv = check_jacobi(g);
    Check j = make_check("algebra.jacobi", "Σ cyclic [[e_i, e_j], e_k] = 0", jv.ok);
    if (!jv.ok) {
      const auto& n = g.basis_names();
      j.witnesses = {{"triple", n[static_cast<std::size_t>(jv.i)] + "," + n[static_cast<std::size_t>(jv.j)] + "," +
                                    n[static_cast<std::size_t>(jv.k)]},
                     {"residual", to_string(jv.residual, n)}};
    }
    r.checks.push_back(j);
    for (std::size_t k = 0; k < e.presentations.size(); ++k) {
      try {
        CosetPresentation::make(g, e.presentations[k].h, e.presentations[k].m);
        r.checks.push_back(make_check("presentation[" + std::to_string(k) + "]", "𝔤 = 𝔪 ⊕ 𝔥, [𝔥, 𝔪] ⊂ 𝔪", true));
      } catch (const Error& err) {
        r.checks.push_back(error_check("presentation[" + std::to_string(k) + "]", "𝔤 = 𝔪 ⊕ 𝔥, [𝔥, 𝔪] ⊂ 𝔪", err));
      }
    }
    std::ostringstream a, b;
    save_catalog(e, a);
    std::istringstream in(a.str());
    save_catalog(load_catalog(in), b);
    r.checks.push_back(make_check("catalog.roundtrip", "save(load(save(entry))) = save(entry)", a.str() == b.str()));
    r.lines.push_back("dim = " + std::to_string(g.dim()) + ", structures = " + std::to_string(e.structures.size()) +
                      ", presentations = " + std::to_string(e.presentations.size()));
    return r;
  }

  Report cohomology(const CatalogEntry& e, const std::string& source) const {
    Report r = base(e, source, "");
    const LieAlgebra& g = e.algebra;
    const int top = o_.max_degree < 0 ? g.dim() : std::min(o_.max_degree, g.dim());
    std::ostringstream head, plain, twisted;
    head << std::setw(10) << "p";
    plain << std::setw(10) << "b_p";
    for (int p = 0; p <= top; ++p) {
      head << std::setw(5) << p;
      plain << std::setw(5) << betti(g, p);
    }
    r.lines.push_back(head.str());
    r.lines.push_back(plain.str());
    if (!o_.theta.empty()) {
      const KForm theta = parse_form(o_.theta, g.dual_names(), 1);
      const bool closed = ce_differential(g, theta).is_zero();
      r.checks.push_back(make_check("cohomology.theta_closed", "dθ = 0", closed));
      if (closed) {
        twisted << std::setw(10) << "b_p(θ)";
        bool vanish = true;
        std::string values;
        for (int p = 0; p <= top; ++p) {
          const int b = twisted_betti(g, theta, p);
          vanish = vanish && b == 0;
          twisted << std::setw(5) << b;
          values += (p ? "," : "") + std::to_string(b);
        }
        r.lines.push_back(twisted.str());
        Check v = make_check("cohomology.twisted_vanishing", "H^p_θ(𝔤) = 0 for p ≤ " + std::to_string(top), vanish);
        v.informational = true;
        v.witnesses = {{"theta", to_string(theta, g.dual_names())}, {"twisted_betti", values}};
        r.checks.push_back(v);
      }
    }
    return r;
  }

  Report classify(const CatalogEntry& e, const std::string& source) const {
    Report r = base(e, source, "");
    RankOptions ro;
    ro.seed = o_.seed;
    Check c = make_check("classify.verdict", "admits l.c.K. ⇔ dim 𝔱 = 1 and rank 𝔰 = 1", true);
    c.informational = true;
    try {
      const Classification cl = classify_reductive(e.algebra, ro);
      r.lines.push_back("admits = " + to_string(cl.admits));
      r.lines.push_back("dim center = " + std::to_string(cl.center_dim));
      if (cl.rank.upper_bound > 0) {
        r.lines.push_back("rank bound = " + std::to_string(cl.rank.upper_bound) +
                          (cl.rank.certified ? " (certified)" : " (heuristic upper bound)"));
        r.lines.push_back("witness = " + to_string(cl.rank.witness, e.algebra.basis_names()));
      }
      std::string reasons;
      for (const auto& s : cl.reasons) reasons += (reasons.empty() ? "" : "; ") + s;
      c.witnesses = {{"admits", to_string(cl.admits)}, {"reasons", reasons}};
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotReductive) throw;
      r.lines.push_back("admits = not reductive");
      c.witnesses = {{"admits", "not reductive"}, {"reasons", err.what()}};
    }
    r.checks.push_back(c);
    return r;
  }

  void add_expectations(Report& r, const StructureEntry& s, std::optional<bool> lck, std::optional<bool> vaisman) const {
    const Expectations cli = parse_expect(o_.expect);
    const auto want_lck = cli.lck ? cli.lck : s.expect.lck;
    const auto want_vai = cli.vaisman ? cli.vaisman : s.expect.vaisman;
    auto add = [&](const std::string& key, std::optional<bool> want, std::optional<bool> got) {
      if (!want) return;
      Check c = make_check("expect." + key, key + " = " + (*want ? "true" : "false"), got && *got == *want);
      c.witnesses = {{"computed", got ? (*got ? "true" : "false") : "undetermined"}};
      r.checks.push_back(c);
    };
    add("lck", want_lck, lck);
    add("vaisman", want_vai, vaisman);
  }

  Report check(const CatalogEntry& e, const std::string& source, const StructureEntry& s) const {
    Report r = base(e, source, s.label);
    const auto& g = e.algebra;
    std::optional<bool> lck, vaisman;
    try {
      const LckCertificate c = certify(e.presentation_for(s), s.omega, s.J);
      lck = true;
      vaisman = c.vaisman.vaisman;
      r.lines.push_back("theta = " + to_string(c.theta, g.dual_names()));
      r.lines.push_back("xi = " + to_string(c.lee.xi, g.basis_names()) + ", theta(xi) = " + to_string(c.lee.theta_xi));
      r.lines.push_back("eta = " + to_string(c.reeb_field, g.basis_names()));
      r.lines.push_back("phi = " + to_string(c.reeb_form, g.dual_names()));
      r.lines.push_back("h = " + matrix_string(c.metric.entries));
      r.lines.push_back(std::string("lck = true, vaisman = ") + (*vaisman ? "true" : "false"));
      r.checks = c.checks;
      if (!s.theta.is_zero() || !c.theta.is_zero())
        r.checks.push_back(make_check("lck.catalog_theta", "the computed Lee form equals the recorded θ", c.theta == s.theta));
    } catch (const Error& err) {
      lck = false;
      r.lines.push_back(std::string("lck = false (") + err.what() + ")");
      Check c = error_check("lck.certificate", "dΩ = θ∧Ω with dθ = 0 and h = Ω(J·, ·) positive definite", err);
      const Expectations cli = parse_expect(o_.expect);
      const auto want = cli.lck ? cli.lck : s.expect.lck;
      c.informational = want && !*want;
      r.checks.push_back(c);
    }
    add_expectations(r, s, lck, vaisman);
    return r;
  }

  Report lemma1(const CatalogEntry& e, const std::string& source, const StructureEntry& s) const {
    Report r = base(e, source, s.label);
    const auto& g = e.algebra;
    if (s.presentation >= 0) {
      Check c = make_check("lemma1.normalize", "normalization on the plain algebra", true);
      c.verdict = Verdict::NotApplicable;
      r.checks.push_back(c);
      r.lines.push_back("structure lives on a coset presentation; see `homogeneous`");
      return r;
    }
    try {
      const LckCertificate cert = certify(CosetPresentation::plain(g), s.omega, s.J);
      if (cert.theta.is_zero()) {
        Check c = make_check("lemma1.normalize", "θ ≠ 0 (the normalization needs θ(t) = 1)", true);
        c.verdict = Verdict::NotApplicable;
        r.checks.push_back(c);
        r.lines.push_back("theta = 0: the structure is Kahler");
        return r;
      }
      const Lemma1Data nd = lemma1_normalize(g, s.omega, cert.theta);
      r.lines.push_back("psi = " + to_string(nd.psi, g.dual_names()) + ", c = " + to_string(nd.c));
      r.lines.push_back("psi_c = " + to_string(nd.psi_c, g.dual_names()));
      r.lines.push_back("t = " + to_string(nd.t, g.basis_names()));
      r.lines.push_back("sigma' = " + to_string(nd.sigma_prime, g.basis_names()) +
                        ", sigma = " + to_string(nd.sigma, g.basis_names()));
      std::string q;
      for (Index k = 0; k < nd.q.dim(); ++k) q += (k ? "; " : "") + to_string(nd.q.basis_vector(k), g.basis_names());
      r.lines.push_back("q = <" + q + ">");
      for (auto& c : lemma1_checks(g, cert.theta, nd)) r.checks.push_back(c);
      for (auto& c : corollary_checks(g, nd, cert)) r.checks.push_back(c);
    } catch (const Error& err) {
      r.checks.push_back(error_check("lemma1.normalize", "ψ_c(σ) = 1, ψ_c(t) = 0, θ(t) = 1, θ(σ) = 0, ι_σ dψ_c = 0", err));
    }
    return r;
  }

  Report average(const CatalogEntry& e, const std::string& source, const StructureEntry* s) const {
    Report r = base(e, source, s ? s->label : "");
    const auto& g = e.algebra;
    if (o_.generator.empty()) throw UsageError("average needs --generator");
    const Vector v = parse_vector(o_.generator, g.basis_names());
    KForm f;
    if (!o_.form.empty())
      f = parse_form(o_.form, g.dual_names());
    else if (s)
      f = s->omega;
    else
      throw UsageError("average needs --form or --structure");
    try {
      const KForm avg = average_form(g, v, f);
      r.lines.push_back("f = " + to_string(f, g.dual_names()));
      r.lines.push_back("average = " + to_string(avg, g.dual_names()));
      r.checks.push_back(make_check("average.invariant", "L_v f̄ = 0", lie_derivative(g, v, avg).is_zero()));
      r.checks.push_back(make_check("average.idempotent", "avg(avg(f)) = avg(f)", average_form(g, v, avg) == avg));
      if (s && o_.form.empty() && !s->theta.is_zero()) {
        const bool closed = twisted_differential(g, s->theta, avg).is_zero();
        r.checks.push_back(make_check("average.twisted_closed", "d_θ Ω̄ = 0", closed));
      }
    } catch (const Error& err) {
      r.checks.push_back(error_check("average.torus", "L_v is semisimple with ker L_v ⊕ im L_v = ∧^k 𝔤*", err));
    }
    return r;
  }

  void complex_checks(Report& r, const LieAlgebra& g, const Endomorphism& j) const {
    const auto& names = g.basis_names();
    const auto v = is_complex_structure(g, j);
    r.checks.push_back(make_check("complex.j_squared", "J² = −1", v.ok));
    if (!v.ok) return;
    const auto nw = nijenhuis_witness(g, j);
    Check n = make_check("complex.nijenhuis", "N_J(e_i, e_j) = 0 for all basis pairs", !nw);
    if (nw) n.witnesses = {{"pair", names[static_cast<std::size_t>(nw->first)] + "," + names[static_cast<std::size_t>(nw->second)]}};
    r.checks.push_back(n);
    try {
      const ComplexSubalgebra h = subalgebra_from_J(g, j);
      const CMatrix b = h.echelon_basis();
      for (Index k = 0; k < b.cols(); ++k) r.lines.push_back("h: " + cvec_string(b.col(k), names));
      r.checks.push_back(make_check("complex.subalgebra", "𝔥 = ker(J + i) is a subalgebra with 𝔤_ℂ = 𝔥 ⊕ 𝔥̄", true));
      r.checks.push_back(make_check("complex.roundtrip", "J(𝔥) = J", J_from_subalgebra(g, h) == j));
      r.checks.push_back(make_check("complex.conjugate", "J(𝔥̄) = −J", J_from_subalgebra(g, h.conjugate()) == -j));
    } catch (const Error& err) {
      r.checks.push_back(error_check("complex.subalgebra", "𝔥 = ker(J + i) is a subalgebra with 𝔤_ℂ = 𝔥 ⊕ 𝔥̄", err));
      return;
    }
    if (g == u2_algebra()) {
      const U2NormalForm nf = reduce_u2_normal_form(g, j);
      Check c = make_check("complex.normal_form", "J is conjugate to J_δ by an automorphism of 𝔲(2)",
                           nf.status == U2NormalForm::Status::Reduced);
      c.informational = nf.status == U2NormalForm::Status::RequiresIrrationalRescale;
      if (nf.status == U2NormalForm::Status::Reduced)
        c.witnesses = {{"c", to_string(nf.c)}, {"d", to_string(nf.d)}, {"branch", to_string(nf.branch)}};
      else
        c.witnesses = {{"detail", nf.detail}};
      r.checks.push_back(c);
    }
  }

  Report complex(const CatalogEntry& e, const std::string& source, const StructureEntry& s) const {
    Report r = base(e, source, s.label);
    if (s.presentation >= 0) {
      const CosetPresentation p = e.presentation_for(s);
      const Subspace h = p.h;
      const Matrix jm = p.m_projection() * s.J * p.m.basis();
      r.checks.push_back(make_check("complex.j_squared", "J² = −1 on 𝔪", jm * jm == -Matrix::Identity(jm.rows(), jm.cols())));
      r.checks.push_back(make_check("complex.invariant", "[ad Y, J] = 0 for Y ∈ 𝔥",
                                    is_complex_structure(e.algebra, s.J, &h).invariant));
      return r;
    }
    complex_checks(r, e.algebra, s.J);
    return r;
  }

  Report complex_delta(const CatalogEntry& e, const std::string& source) const {
    if (!(e.algebra == u2_algebra())) throw UsageError("--delta applies to the u2 algebra only");
    const auto comma = o_.delta.find(',');
    if (comma == std::string::npos) throw UsageError("--delta takes c,d");
    if (o_.branch != "+" && o_.branch != "-") throw UsageError("--branch takes + or -");
    Rational c, d;
    try {
      c = parse_rational(o_.delta.substr(0, comma));
      d = parse_rational(o_.delta.substr(comma + 1));
    } catch (const Error& err) {
      throw UsageError(err.what());
    }
    if (c == 0) throw UsageError("--delta needs c != 0 (J_delta degenerates)");
    const Branch b = o_.branch == "+" ? Branch::Plus : Branch::Minus;
    Report r = base(e, source, "J_delta, delta = " + to_string(c) + " + " + to_string(d) + " i, " + o_.branch);
    const Endomorphism j = j_delta(c, d, b);
    r.lines.push_back("J = " + matrix_string(j));
    complex_checks(r, e.algebra, j);
    return r;
  }

  Report homogeneous(const CatalogEntry& e, const std::string& source, const StructureEntry& s) const {
    Report r = base(e, source, s.label);
    try {
      const CosetPresentation p = e.presentation_for(s);
      const HomogeneousReport hr = homogeneous_checks(p, s.omega, s.theta, s.J);
      r.lines.push_back("dim h = " + std::to_string(p.h.dim()) + ", dim q = " + std::to_string(hr.q.dim()));
      r.checks = hr.checks;
      if (!p.h.dim()) r.lines.push_back("h = 0: plain-algebra checks");
      r.lines.push_back("finite isotropy components are not modelled; invariance is infinitesimal");
    } catch (const Error& err) {
      r.checks.push_back(error_check("homogeneous.presentation", "𝔤 = 𝔪 ⊕ 𝔥, [𝔥, 𝔪] ⊂ 𝔪", err));
    }
    return r;
  }

  std::string cmd_;
  const Options& o_;
};

int execute(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::function<CatalogEntry()>>> inputs;
  if (o.builtin.empty() == o.file.empty()) throw UsageError("give exactly one of --builtin NAME|all or --file PATH");
  if (!o.builtin.empty()) {
    const std::vector<std::string> names = o.builtin == "all" ? builtin_names() : std::vector<std::string>{o.builtin};
    for (const auto& n : names) inputs.push_back({"builtin:" + n, [n] { return builtin(n); }});
  } else {
    const std::string path = o.file;
    inputs.push_back({path, [path] { return load_catalog_file(path); }});
  }
  parse_expect(o.expect);
  if (o.jobs < 1) throw UsageError("--jobs must be positive");

  std::vector<CatalogEntry> entries;
  for (auto& [src, loader] : inputs) {
    try {
      entries.push_back(loader());
    } catch (const Error& e) {
      if (cmd != "validate") throw;
      Report r;
      r.command = cmd;
      r.source = src;
      r.checks.push_back(error_check("catalog.load", "the document parses, matches the schema and satisfies Jacobi", e));
      r.finalize();
      out << r.text();
      if (!o.json.empty()) std::ofstream(o.json) << reports_json({r}, 1);
      return 1;
    }
  }

  const Runner runner(cmd, o);
  std::vector<std::vector<Report>> results(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = runner.on_entry(entries[i], inputs[i].first);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (o.jobs == 1 || entries.size() < 2) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    const std::size_t jobs = static_cast<std::size_t>(o.jobs);
    for (std::size_t w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < entries.size(); i += jobs) work(i);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Report> all;
  int code = 0;
  for (auto& rs : results)
    for (auto& r : rs) {
      r.finalize();
      code = std::max(code, r.exit_code);
      out << r.text();
      all.push_back(std::move(r));
    }
  if (!o.json.empty()) {
    std::ofstream js(o.json);
    if (!js) {
      err << "lck: cannot write " << o.json << "\n";
      return 2;
    }
    js << reports_json(all, code);
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of l.c.K. and Vaisman structures on Lie algebras", "lck"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "Jacobi identity, presentations and serialization round trip"},
      {"cohomology", "Betti numbers and twisted Betti numbers"},
      {"check", "full l.c.K. certificate and Vaisman verdict"},
      {"lemma1", "normalization of the potential and its consequences"},
      {"average", "zero-weight projection of a form over a generator"},
      {"classify", "reductive classifier: dim center = 1 and rank [g,g] = 1"},
      {"complex", "J^2, Nijenhuis tensor and the complex subalgebra correspondence"},
      {"homogeneous", "coset presentation checks"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--builtin", o.builtin, "builtin algebra name or 'all'");
    sub->add_option("--file", o.file, "JSON catalog file");
    sub->add_option("--json", o.json, "write the machine report here");
    sub->add_option("--jobs", o.jobs, "parallel workers over catalog entries");
    if (name == "check" || name == "lemma1" || name == "average" || name == "complex" || name == "homogeneous")
      sub->add_option("--structure", o.structure, "structure index (default: all)");
    if (name == "check") sub->add_option("--expect", o.expect, "lck=true|false, vaisman=true|false")->delimiter(',');
    if (name == "cohomology") {
      sub->add_option("--theta", o.theta, "closed 1-form, e.g. 't' or '2 w'");
      sub->add_option("--max-degree", o.max_degree, "highest degree");
    }
    if (name == "classify") sub->add_option("--seed", o.seed, "seed for the rank sampler");
    if (name == "average") {
      sub->add_option("--generator", o.generator, "vector, e.g. 'X' or 'T - 2 X'");
      sub->add_option("--form", o.form, "form, e.g. 't^y'");
    }
    if (name == "complex") {
      sub->add_option("--delta", o.delta, "c,d for J_delta on u2");
      sub->add_option("--branch", o.branch, "+ or -");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lck: " << e.what() << "\n";
    return 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return execute(cmd, o, out, err);
  } catch (const UsageError& e) {
    err << "lck: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::UnknownName:
      case ErrorKind::ParseError:
      case ErrorKind::SchemaError:
      case ErrorKind::JacobiViolation:
      case ErrorKind::DimensionMismatch:
        err << "lck: " << e.what() << "\n";
        return 2;
      default:
        err << "lck: internal error: " << e.what() << "\n";
        return 3;
    }
  } catch (const std::exception& e) {
    err << "lck: internal error: " << e.what() << "\n";
    return 3;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"lck"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lck
