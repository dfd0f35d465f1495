#include "hopfind/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfind/catalog.hpp"
#include "hopfind/duality.hpp"
#include "hopfind/error.hpp"
#include "hopfind/instance_io.hpp"

namespace hopfind {

std::string CommandReport::json() const {
  nlohmann::ordered_json j;
  j["task"] = task;
  j["status"] = status;
  nlohmann::ordered_json checksJson = nlohmann::ordered_json::array();
  for (const auto& c : checks.checks()) {
    nlohmann::ordered_json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["witness"] = c.witness;
    checksJson.push_back(std::move(entry));
  }
  j["checks"] = std::move(checksJson);
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  for (const auto& [name, value] : dimensions) dims[name] = value;
  j["dimensions"] = std::move(dims);
  if (millis) j["timing_ms"] = *millis;
  return j.dump(2) + "\n";
}

std::string CommandReport::text() const {
  std::ostringstream os;
  os << task << ": " << status << "\n";
  for (const auto& c : checks.checks()) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.passed) os << "\n      witness: " << c.witness;
    os << "\n";
  }
  for (const auto& [name, value] : dimensions) os << "  " << name << " = " << value << "\n";
  if (millis) os << "  time: " << *millis << " ms\n";
  return os.str();
}

namespace {

struct Options {
  std::string instance;
  std::string input;
  std::string format = "json";
  std::string output;
  bool timing = false;
  std::string embedding;
  std::string morphism;
  std::string coeff = "trivial";
  std::string kind;
  std::string which;
  bool list = false;
  std::string exportName;
};

InstanceFile loadFile(const Options& o) {
  if (o.instance.empty() == o.input.empty()) throw InputError("give exactly one of --instance and --input");
  return o.instance.empty() ? loadInstance(o.input) : catalogInstance(o.instance);
}

const InstanceFile::Embedding& chooseEmbedding(const InstanceFile& f, const Options& o) {
  if (!o.embedding.empty()) return f.embeddingNamed(o.embedding);
  if (f.embeddings.empty()) throw InputError("the instance declares no embedding");
  return f.embeddings.front();
}

const InstanceFile::Morphism& chooseMorphism(const InstanceFile& f, const Options& o) {
  for (const auto& m : f.morphisms) {
    if (o.morphism.empty() || m.name == o.morphism) return m;
  }
  throw InputError(o.morphism.empty() ? "the instance declares no morphism" : "unknown morphism \"" + o.morphism + "\"");
}

/// trivial (C = k), adjoint (C = B), translation (C = B^×), or a
/// module algebra of the file over a Hopf algebra with the same structure as h.
ModuleAlgebra coefficientFor(const InstanceFile& f, HopfPtr h, const std::string& coeff) {
  if (coeff == "trivial") return trivialAction(h, makeAlgebra(groundAlgebra(h->field())));
  if (coeff == "adjoint") return adjointAction(h);
  if (coeff == "translation") return translationAction(h);
  for (const auto& m : f.moduleAlgebras) {
    if (m.name != coeff) continue;
    HopfPtr declared = f.hopfNamed(m.hopf);
    if (!sameStructureConstants(declared->alg(), h->alg())) {
      throw InputError("module algebra \"" + coeff + "\" is over " + m.hopf + ", not the required Hopf algebra");
    }
    return makeModuleAlgebra(h, f.algebraNamed(m.algebra), m.action);
  }
  throw InputError("unknown coefficient algebra \"" + coeff + "\" (trivial, adjoint, translation or a file entry)");
}

FrobeniusPtr frobeniusPtr(const InstanceFile& f, const InstanceFile::Embedding& e, EmbeddingPtr built) {
  auto sys = std::make_shared<const FrobeniusSystem>(frobeniusFor(f, e, built));
  requirePassed(sys->verified, "Frobenius system of " + e.name);
  return sys;
}

NormalQuotientPtr quotientFor(EmbeddingPtr e) {
  return std::make_shared<const NormalHopfQuotient>(normalHopfQuotient(std::move(e)));
}

AugmentedMorphism augmentedQuotient(const NormalHopfQuotient& q) {
  const HopfAlgebra& b = q.big();
  return AugmentedMorphism{AugmentedAlgebra{b.algebra, b.counit},
                           AugmentedAlgebra{q.quotient->algebra, q.quotient->counit}, q.proj};
}

void addDim(CommandReport& r, const std::string& name, std::size_t d) { r.dimensions.emplace_back(name, d); }

void addHypothesis(Report& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const HypothesisError& e) {
    r.fail(name + "." + e.check(), e.witness());
  } catch (const VerificationError& e) {
    r.fail(name + "." + e.check(), e.witness());
  }
}

void runVerify(const InstanceFile& f, CommandReport& rep) {
  Report& r = rep.checks;
  for (const auto& a : f.algebras) {
    r.merge("algebra " + a.name, verifyAlgebra(*a.algebra));
    addDim(rep, "dim " + a.name, a.algebra->dim());
  }
  for (const auto& h : f.hopf) {
    Report alg = verifyAlgebra(h.hopf->alg());
    r.merge("hopf " + h.name, alg);
    if (alg.ok()) r.merge("hopf " + h.name, verifyHopf(*h.hopf));
    if (h.group) {
      addHypothesis(r, "hopf " + h.name, [&] {
        FiniteGroup g = groupOf(h);
        r.add("hopf " + h.name + ".group table gives the algebra",
              sameStructureConstants(groupAlgebra(g, f.field).alg(), h.hopf->alg()),
              "the group table and the structure constants disagree");
      });
    }
    addDim(rep, "dim " + h.name, h.hopf->dim());
  }
  for (const auto& e : f.embeddings) {
    const std::string name = "embedding " + e.name;
    addHypothesis(r, name, [&] {
      EmbeddingPtr built = buildEmbedding(f, e);
      r.merge(name, built->verified);
      addDim(rep, "index " + e.name, built->index());
      addHypothesis(r, "frobenius " + e.name, [&] {
        FrobeniusSystem sys = frobeniusFor(f, e, built);
        r.merge("frobenius " + e.name, sys.verified);
      });
    });
  }
  for (const auto& q : f.quotients) {
    const std::string name = "quotient " + q.name;
    addHypothesis(r, name, [&] {
      NormalQuotientPtr built = quotientFor(buildEmbedding(f, f.embeddingNamed(q.embedding)));
      r.merge(name, built->verified);
      addDim(rep, "dim " + q.name, built->quotient->dim());
    });
  }
  for (const auto& m : f.moduleAlgebras) {
    ModuleAlgebra ma{f.hopfNamed(m.hopf), f.algebraNamed(m.algebra), m.action};
    r.merge("module algebra " + m.name, verifyModuleAlgebra(ma));
  }
  for (const auto& m : f.morphisms) {
    HopfPtr s = f.hopfNamed(m.source);
    HopfPtr t = f.hopfNamed(m.target);
    r.merge("morphism " + m.name,
            verifyAugmentedMorphism({{s->algebra, s->counit}, {t->algebra, t->counit}, m.map}));
  }
}

void runInduce(const InstanceFile& f, const Options& o, CommandReport& rep) {
  Report& r = rep.checks;
  if (o.kind == "puig-general") {
    const auto& m = chooseMorphism(f, o);
    HopfPtr s = f.hopfNamed(m.source);
    HopfPtr t = f.hopfNamed(m.target);
    AugmentedMorphism phi{{s->algebra, s->counit}, {t->algebra, t->counit}, m.map};
    EmbeddingPtr k = buildEmbedding(f, f.embeddingNamed(m.kernel));
    SmashProduct coeff = smashProduct(coefficientFor(f, s, o.coeff));
    GeneralInduction g = generalInduction(phi, hopfSubalgebra(*k), coeff.interior);
    r.merge("direct", g.direct.induced.verified);
    r.merge("factored", g.factored.induced.verified);
    r.merge("comparison", g.comparison.report);
    addDim(rep, "dim C#B", coeff.alg().dim());
    addDim(rep, "dim φ(B)", g.image->dim());
    addDim(rep, "dim induced", g.direct.induced.algebra->dim());
    return;
  }
  const auto& decl = chooseEmbedding(f, o);
  EmbeddingPtr e = buildEmbedding(f, decl);
  if (o.kind == "puig") {
    SmashProduct coeff = smashProduct(coefficientFor(f, e->sub, o.coeff));
    TensorInduction t = puigInducedAlgebra(frobeniusPtr(f, decl, e), coeff.interior);
    r.merge("induced", t.induced.verified);
    PsiIsomorphism psi = psiIsomorphism(t);
    r.merge("Ψ", psi.iso.report);
    addDim(rep, "dim C#B", coeff.alg().dim());
    addDim(rep, "dim induced", t.induced.algebra->dim());
  } else if (o.kind == "puig-surj") {
    NormalQuotientPtr q = quotientFor(e);
    SmashProduct coeff = smashProduct(coefficientFor(f, e->ambient, o.coeff));
    SurjectiveInduction s = surjectivePuigInduction(augmentedQuotient(*q), hopfSubalgebra(*e), coeff.interior);
    r.merge("induced", s.induced.verified);
    addDim(rep, "dim C#B", coeff.alg().dim());
    addDim(rep, "dim B̄", q->quotient->dim());
    addDim(rep, "dim induced", s.induced.algebra->dim());
  } else if (o.kind == "turull") {
    TurullInduction t = turullInduction(e, coefficientFor(f, e->sub, o.coeff));
    r.merge("module algebra", verifyModuleAlgebra(t.induced));
    addDim(rep, "dim F", t.f.algebra->dim());
    addDim(rep, "dim C", t.coefficient.algebra->dim());
    addDim(rep, "dim carrier", t.induced.algebra->dim());
  } else if (o.kind == "turull-surj") {
    SurjectiveTurull t = surjectiveTurull(quotientFor(e), coefficientFor(f, e->ambient, o.coeff));
    r.merge("module algebra", t.verified);
    addDim(rep, "dim C", t.invariants.ambientDim());
    addDim(rep, "dim carrier", t.induced.algebra->dim());
  } else {
    throw InputError("unknown --kind \"" + o.kind + "\" (puig, puig-surj, puig-general, turull, turull-surj)");
  }
}

std::vector<std::size_t> subgroupIndices(const InstanceFile::Embedding& e, std::size_t ambientDim) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < e.incl.cols(); ++j) {
    Vector col = e.incl.column(j);
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < ambientDim; ++i) {
      if (col[i].isZero()) continue;
      if (hit || !col[i].isOne()) throw InputError("embedding " + e.name + " is not induced by a subgroup");
      hit = i;
    }
    if (!hit) throw InputError("embedding " + e.name + " maps a basis element to 0");
    out.push_back(*hit);
  }
  return out;
}

void runTheorem(const InstanceFile& f, const Options& o, CommandReport& rep) {
  Report& r = rep.checks;
  const auto& decl = chooseEmbedding(f, o);
  EmbeddingPtr e = buildEmbedding(f, decl);
  if (o.which == "inj" || o.which == "corollary-inj") {
    InjectiveTheorem thm = theoremInjective(frobeniusPtr(f, decl, e), coefficientFor(f, e->sub, o.coeff));
    r.merge("theorem", thm.report);
    if (o.which == "corollary-inj") r.merge("corollary", corollaryInjective(thm).composite.report);
    addDim(rep, "n", e->index());
    addDim(rep, "dim (F⊗C)#A", thm.source.alg().dim());
    addDim(rep, "dim Ind_{A_β}(C#B)", thm.twistedForm.end.algebra->dim());
    addDim(rep, "n²·dim B·dim C", e->index() * e->index() * e->sub->dim() * thm.coefficient.ma.algebra->dim());
  } else if (o.which == "surj") {
    NormalQuotientPtr q = quotientFor(e);
    SurjectiveTheorem thm = theoremSurjective(q, coefficientFor(f, e->ambient, o.coeff));
    r.merge("theorem", thm.report);
    addDim(rep, "dim C^K#B̄", thm.source.alg().dim());
    addDim(rep, "dim (k⊗_K C#B)^K", thm.target.induced.algebra->dim());
  } else if (o.which == "corollary-group") {
    const auto& ambient = f.hopfEntry(decl.ambient);
    FiniteGroup g = groupOf(ambient);
    std::vector<std::size_t> normal = subgroupIndices(decl, ambient.hopf->dim());
    ModuleAlgebra ma = coefficientFor(f, ambient.hopf, o.coeff);
    GroupSkewCorollary cor = corollaryGroupSkew(g, normal, ma.algebra, ma.action);
    r.merge("corollary", cor.report);
    addDim(rep, "dim C*G", cor.skew->dim());
    addDim(rep, "dim C^N*(G/N)", cor.quotientSkew->dim());
  } else {
    throw InputError("unknown --which \"" + o.which + "\" (inj, surj, corollary-inj, corollary-group)");
  }
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + o.output);
  file << text;
}

int runReport(const std::string& task, const Options& o, std::ostream& out,
              const std::function<void(CommandReport&)>& body) {
  if (o.format != "json" && o.format != "text") throw InputError("--format must be json or text");
  CommandReport rep;
  rep.task = task;
  auto start = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    body(rep);
    rep.status = rep.checks.ok() ? "pass" : "fail";
  } catch (const HypothesisError& e) {
    rep.status = "unsupported";
    rep.checks.fail(e.check(), e.witness());
  } catch (const VerificationError& e) {
    rep.status = "fail";
    rep.checks.fail(e.check(), e.witness());
  }
  if (!rep.checks.ok()) code = kExitMathFailure;
  if (o.timing) {
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  emit(o.format == "json" ? rep.json() : rep.text(), o, out);
  return code;
}

void commonOptions(CLI::App* app, Options& o) {
  app->add_option("--instance", o.instance, "Catalog instance name");
  app->add_option("--input", o.input, "Instance file (JSON, schema 1)");
  app->add_option("--format", o.format, "json or text")->capture_default_str();
  app->add_option("--output", o.output, "Write the report to this file");
  app->add_flag("--timing", o.timing, "Record wall-clock time in the report");
  app->add_option("--embedding", o.embedding, "Embedding name (default: the first in the file)");
  app->add_option("--coeff-alg", o.coeff, "trivial, adjoint, translation or a module algebra of the file")
      ->capture_default_str();
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of Hopf-algebraic induction of module and interior algebras", "hopfind"};
  app.require_subcommand(1, 1);
  CLI::App* verify = app.add_subcommand("verify", "Verify every object of an instance");
  commonOptions(verify, o);
  CLI::App* induce = app.add_subcommand("induce", "Run one induction");
  commonOptions(induce, o);
  induce->add_option("--kind", o.kind, "puig, puig-surj, puig-general, turull or turull-surj")->required();
  induce->add_option("--morphism", o.morphism, "Morphism name for puig-general");
  CLI::App* theorem = app.add_subcommand("theorem", "Verify a duality theorem on an instance");
  commonOptions(theorem, o);
  theorem->add_option("--which", o.which, "inj, surj, corollary-inj or corollary-group")->required();
  CLI::App* catalog = app.add_subcommand("catalog", "List or export the built-in instances");
  auto* listFlag = catalog->add_flag("--list", o.list, "List instance names");
  auto* exportOpt = catalog->add_option("--export", o.exportName, "Print the instance file of NAME");
  listFlag->excludes(exportOpt);
  catalog->add_option("--output", o.output, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "hopfind: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (catalog->parsed()) {
      if (o.list) {
        std::string names;
        for (const auto& n : catalogNames()) names += n + "\n";
        emit(names, o, out);
        return kExitPass;
      }
      if (o.exportName.empty()) throw InputError("catalog needs --list or --export NAME");
      emit(serializeInstance(catalogInstance(o.exportName)), o, out);
      return kExitPass;
    }
    const std::string source = o.instance.empty() ? o.input : o.instance;
    if (verify->parsed()) {
      InstanceFile f = loadFile(o);
      return runReport("verify " + source, o, out, [&](CommandReport& r) { runVerify(f, r); });
    }
    if (induce->parsed()) {
      InstanceFile f = loadFile(o);
      return runReport("induce " + o.kind + " " + source + " coeff=" + o.coeff, o, out,
                       [&](CommandReport& r) { runInduce(f, o, r); });
    }
    InstanceFile f = loadFile(o);
    return runReport("theorem " + o.which + " " + source + " coeff=" + o.coeff, o, out,
                     [&](CommandReport& r) { runTheorem(f, o, r); });
  } catch (const InputError& e) {
    err << "hopfind: input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ShapeError& e) {
    err << "hopfind: input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace hopfind
