#ifndef HOPFIND_INSTANCE_IO_HPP
#define HOPFIND_INSTANCE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfind/frobenius.hpp"
#include "hopfind/groups.hpp"
#include "hopfind/hopf.hpp"
#include "hopfind/module_algebra.hpp"

namespace hopfind {

/// The objects of one instance file, stored unverified in file order.
/// Structure constants are loaded as given; the verifiers decide whether
/// they define algebras, Hopf algebras, embeddings and so on.
struct InstanceFile {
  struct NamedAlgebra {
    std::string name;
    AlgebraPtr algebra;
  };
  struct NamedHopf {
    std::string name;
    HopfPtr hopf;
    /// Multiplication table of the group when the basis is a group.
    std::optional<std::vector<std::vector<std::size_t>>> group;
  };
  struct Embedding {
    std::string name;
    std::string sub;
    std::string ambient;
    Matrix incl;                 // dim A x dim B
    std::optional<Matrix> beta;  // dim B x dim B
    std::optional<Matrix> phi;   // dim B x dim A
  };
  /// B̄ = B/BK⁺ for the embedding K ≤ B.
  struct QuotientDecl {
    std::string name;
    std::string embedding;
  };
  struct NamedModuleAlgebra {
    std::string name;
    std::string hopf;
    std::string algebra;
    std::vector<Matrix> action;
  };
  /// Augmented algebra morphism between the algebras of two Hopf entries,
  /// with K ≤ source given by an embedding.
  struct Morphism {
    std::string name;
    std::string source;
    std::string target;
    std::string kernel;
    Matrix map;  // dim target x dim source
  };

  Field field;
  std::vector<NamedAlgebra> algebras;
  std::vector<NamedHopf> hopf;
  std::vector<Embedding> embeddings;
  std::vector<QuotientDecl> quotients;
  std::vector<NamedModuleAlgebra> moduleAlgebras;
  std::vector<Morphism> morphisms;

  /// Lookups throw InputError for unknown names.
  HopfPtr hopfNamed(const std::string& name) const;
  const NamedHopf& hopfEntry(const std::string& name) const;
  /// An algebras entry, else the algebra of a hopf entry.
  AlgebraPtr algebraNamed(const std::string& name) const;
  const Embedding& embeddingNamed(const std::string& name) const;
};

/// Schema version 1. Throws InputError with the JSON path (and line and
/// column for syntax errors) on malformed input or unresolved names.
InstanceFile parseInstance(const std::string& text);
InstanceFile loadInstance(const std::string& path);

/// Canonical rendering: keys in fixed order, two-space indentation,
/// sparse entries sorted by index. parse(serialize(x)) serializes
/// byte-identically.
std::string serializeInstance(const InstanceFile& file);

/// Builds the verified embedding; throws HypothesisError as makeEmbedding.
EmbeddingPtr buildEmbedding(const InstanceFile& file, const InstanceFile::Embedding& e);
/// Uses the stored φ when present (dual bases recomputed from it),
/// otherwise buildFrobeniusSystem with the stored β as hint.
FrobeniusSystem frobeniusFor(const InstanceFile& file, const InstanceFile::Embedding& e, EmbeddingPtr built);
FiniteGroup groupOf(const InstanceFile::NamedHopf& h);

}  // namespace hopfind

#endif  // HOPFIND_INSTANCE_IO_HPP
