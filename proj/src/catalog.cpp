#include "hopfind/catalog.hpp"

#include <algorithm>

#include "hopfind/error.hpp"
#include "hopfind/frobenius.hpp"

namespace hopfind {

namespace {

const Field kF7 = Field::prime(7);

InstanceFile::NamedHopf hopfEntry(const std::string& name, Field field) {
  auto share = [](HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); };
  auto group = [&](const FiniteGroup& g) {
    return InstanceFile::NamedHopf{name, share(groupAlgebra(g, field)), g.table()};
  };
  if (name == "k") return {name, share(trivialHopf(field)), std::nullopt};
  if (name == "kC2") return group(cyclicGroup(2));
  if (name == "kC3") return group(cyclicGroup(3));
  if (name == "kC4") return group(cyclicGroup(4));
  if (name == "kS3") return group(symmetricGroup3());
  if (name == "H4") return {name, share(taftAlgebra(2, Scalar(-1), field)), std::nullopt};
  if (name == "T3") return {name, share(taftAlgebra(3, primitiveRootOfUnity(3, field), field)), std::nullopt};
  if (name == "kC2*") return {name, share(dualHopf(groupAlgebra(cyclicGroup(2), field))), std::nullopt};
  if (name == "kC3*") return {name, share(dualHopf(groupAlgebra(cyclicGroup(3), field))), std::nullopt};
  throw InputError("unknown catalog Hopf algebra \"" + name + "\"");
}

struct EmbeddingSpec {
  std::string name;
  std::string sub;
  std::string ambient;
  Field field;
  /// Images of the B-basis as A-basis indices.
  std::vector<std::size_t> images;
  std::vector<Matrix> betaCandidates;
  bool normal;
};

Matrix diagonal(std::initializer_list<Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (const Scalar& s : entries) {
    m(i, i) = s;
    ++i;
  }
  return m;
}

std::vector<EmbeddingSpec> embeddingSpecs() {
  const Field q = Field::rationals();
  return {
      {"kC4/kC2", "kC2", "kC4", q, {0, 2}, {}, true},
      {"kS3/kC3", "kC3", "kS3", q, {0, 4, 5}, {}, true},
      {"kS3/kC2", "kC2", "kS3", q, {0, 1}, {}, false},
      {"H4/kC2", "kC2", "H4", q, {0, 1}, {diagonal({1, -1})}, false},
      {"T3/kC3", "kC3", "T3", kF7, {0, 1, 2},
       {diagonal({kF7.one(), kF7.fromInt(2), kF7.fromInt(4)}), diagonal({kF7.one(), kF7.fromInt(4), kF7.fromInt(2)})},
       false},
      {"kS3/kS3", "kS3", "kS3", q, {0, 1, 2, 3, 4, 5}, {}, true},
      {"H4/H4", "H4", "H4", q, {0, 1, 2, 3}, {}, true},
      {"kC2/kC2", "kC2", "kC2", q, {0, 1}, {}, true},
      {"kS3/k", "k", "kS3", q, {0}, {}, true},
      {"kC2/k", "k", "kC2", q, {0}, {}, true},
      {"H4/k", "k", "H4", q, {0}, {}, true},
  };
}

void addHopf(InstanceFile& file, const std::string& name) {
  for (const auto& h : file.hopf) {
    if (h.name == name) return;
  }
  file.hopf.push_back(hopfEntry(name, file.field));
}

void addEmbedding(InstanceFile& file, const EmbeddingSpec& spec) {
  addHopf(file, spec.sub);
  addHopf(file, spec.ambient);
  HopfPtr a = file.hopfNamed(spec.ambient);
  Matrix incl(a->dim(), spec.images.size());
  for (std::size_t j = 0; j < spec.images.size(); ++j) incl(spec.images[j], j) = file.field.one();
  InstanceFile::Embedding e{spec.name, spec.sub, spec.ambient, incl, std::nullopt, std::nullopt};
  EmbeddingPtr built = buildEmbedding(file, e);
  std::optional<FrobeniusSystem> sys;
  if (spec.betaCandidates.empty()) {
    sys = buildFrobeniusSystem(built);
  } else {
    for (const Matrix& beta : spec.betaCandidates) {
      try {
        sys = buildFrobeniusSystem(built, beta);
        break;
      } catch (const HypothesisError&) {
      }
    }
    if (!sys) throw VerificationError("catalog", "no Frobenius system for " + spec.name);
  }
  if (!(sys->beta == Matrix::identity(built->sub->dim()))) e.beta = sys->beta;
  e.phi = sys->phi;
  file.embeddings.push_back(std::move(e));
  if (spec.normal) file.quotients.push_back({spec.ambient + "//" + spec.sub, spec.name});
}

const std::vector<std::string>& hopfNames() {
  static const std::vector<std::string> names{"k", "kC2", "kC3", "kC4", "kS3", "H4", "T3", "kC2*", "kC3*"};
  return names;
}

}  // namespace

std::vector<std::string> catalogNames() {
  std::vector<std::string> names = hopfNames();
  for (const auto& s : embeddingSpecs()) names.push_back(s.name);
  names.push_back("kS3->kC4");
  return names;
}

InstanceFile catalogInstance(const std::string& name) {
  InstanceFile file;
  if (std::find(hopfNames().begin(), hopfNames().end(), name) != hopfNames().end()) {
    file.field = name == "T3" ? kF7 : Field::rationals();
    addHopf(file, name);
    return file;
  }
  for (const auto& spec : embeddingSpecs()) {
    if (spec.name != name) continue;
    file.field = spec.field;
    addEmbedding(file, spec);
    return file;
  }
  if (name == "kS3->kC4") {
    // The sign character S3 -> {1, g²} ⊂ C4 with kernel C3.
    file.field = Field::rationals();
    for (const auto& spec : embeddingSpecs()) {
      if (spec.name == "kS3/kC3") addEmbedding(file, spec);
    }
    addHopf(file, "kC4");
    Matrix sign(4, 6);
    for (std::size_t g : {0, 4, 5}) sign(0, g) = 1;
    for (std::size_t g : {1, 2, 3}) sign(2, g) = 1;
    file.morphisms.push_back({name, "kS3", "kC4", "kS3/kC3", sign});
    return file;
  }
  throw InputError("unknown catalog instance \"" + name + "\"; see `catalog --list`");
}

}  // namespace hopfind
