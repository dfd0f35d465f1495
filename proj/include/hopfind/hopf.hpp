#ifndef HOPFIND_HOPF_HPP
#define HOPFIND_HOPF_HPP

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfind/algebra.hpp"
#include "hopfind/groups.hpp"

namespace hopfind {

/// Finite-dimensional Hopf algebra. delta is dim^2 x dim on the
/// lexicographic basis of A⊗A, counit is 1 x dim, antipode dim x dim.
struct HopfAlgebra {
  AlgebraPtr algebra;
  Matrix delta;
  Matrix counit;
  Matrix antipode;

  const Algebra& alg() const { return *algebra; }
  std::size_t dim() const { return algebra->dim(); }
  const Field& field() const { return algebra->field(); }
  const FiniteDimSpace& space() const { return algebra->space(); }

  Vector comultiply(std::span<const Scalar> x) const { return delta.apply(x); }
  Scalar epsilon(std::span<const Scalar> x) const { return counit.apply(x)[0]; }
  Vector S(std::span<const Scalar> x) const { return antipode.apply(x); }
  /// Coefficients of Δ(e_k) on e_p⊗e_q, as (p, q, coefficient) triples.
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> sweedler(std::size_t k) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Coassociativity, counit law, Δ and ε multiplicative, antipode law.
Report verifyHopf(const HopfAlgebra& h);

/// The ground field with its trivial Hopf structure.
HopfAlgebra trivialHopf(Field field);
/// Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹ on the group elements.
HopfAlgebra groupAlgebra(const FiniteGroup& g, Field field = Field::rationals());
/// The linear dual H* with product dual to Δ, coproduct dual to the
/// product, basis "δ<label>" dual to the basis of H.
HopfAlgebra dualHopf(const HopfAlgebra& h);
/// Taft algebra T_n(q): generated by g, x with g^n = 1, x^n = 0, xg = q gx,
/// Δg = g⊗g, Δx = x⊗1 + g⊗x, S(x) = -g⁻¹x. Basis g^i x^j ordered by j,
/// then i. q must be a primitive n-th root of unity in the field.
HopfAlgebra taftAlgebra(std::size_t n, const Scalar& q, Field field);
/// Smallest primitive n-th root of unity in F_p; InputError if none exists.
Scalar primitiveRootOfUnity(std::size_t n, Field field);

/// Linear map compatible with all Hopf structure maps.
struct HopfMorphism {
  HopfPtr source;
  HopfPtr target;
  Matrix map;  // target.dim x source.dim
  Report verified;
};

Report verifyHopfMorphism(const HopfAlgebra& source, const HopfAlgebra& target, const Matrix& f);
HopfMorphism makeHopfMorphism(HopfPtr source, HopfPtr target, Matrix map);

/// B ≤ A with a certificate that A is free as a right B-module.
struct HopfSubalgebraEmbedding {
  HopfPtr sub;      // B
  HopfPtr ambient;  // A
  Matrix incl;      // dim A x dim B
  std::vector<std::size_t> freeBasisIndices;  // A-basis indices of e_1..e_n
  std::vector<Vector> freeBasis;
  Report verified;

  std::size_t index() const { return freeBasis.size(); }
  Vector includeVector(std::span<const Scalar> b) const { return incl.apply(b); }
};

using EmbeddingPtr = std::shared_ptr<const HopfSubalgebraEmbedding>;

/// Greedy scan over the A-basis keeping e_i whose right B-translates
/// extend the independent set. Throws HypothesisError("freeness", ...)
/// when no free basis results.
std::vector<std::size_t> computeFreeBasis(const HopfAlgebra& a, const HopfAlgebra& b, const Matrix& incl);

/// Verifies the inclusion and computes a free basis; throws
/// HypothesisError naming the failed condition.
HopfSubalgebraEmbedding makeEmbedding(HopfPtr sub, HopfPtr ambient, Matrix incl);

/// Embedding of a group algebra of a subgroup given by element indices.
HopfSubalgebraEmbedding subgroupEmbedding(HopfPtr sub, HopfPtr ambient, const std::vector<std::size_t>& images);

/// B̄ = B/BK⁺ for K ≤ B with BK⁺ = K⁺B.
struct NormalHopfQuotient {
  EmbeddingPtr kernel;  // K ↪ B
  HopfPtr quotient;     // B̄
  Matrix proj;          // dim B̄ x dim B
  Matrix section;       // dim B x dim B̄, basis vector q maps to B-basis element representatives[q]
  std::vector<std::size_t> representatives;
  Subspace ideal;       // BK⁺
  Report verified;

  const HopfAlgebra& big() const { return *kernel->ambient; }
};

using NormalQuotientPtr = std::shared_ptr<const NormalHopfQuotient>;

/// K⁺ = ε-kernel of K pushed into B.
std::vector<Vector> augmentationIdealImage(const HopfSubalgebraEmbedding& e);
/// Throws HypothesisError("normality", witness) when BK⁺ != K⁺B and
/// HypothesisError("hopf ideal", witness) if the quotient structure fails.
NormalHopfQuotient normalHopfQuotient(EmbeddingPtr kernel);

/// F = right B-linear functionals A -> k with the product
/// (f·f')(a) = Σ f(a_(2)) f'(a_(1)), unit ε and action (af)(a') = f(S(a)a').
struct CoinvariantDualAlgebra {
  EmbeddingPtr embedding;
  Subspace functionals;          // subspace of A^× (row vectors on the A-basis)
  AlgebraPtr algebra;            // basis f0, f1, ... in the order of functionals
  std::vector<Matrix> action;    // action[i]: operator of A-basis element i on F coordinates

  Vector functional(std::size_t i) const { return functionals.basisVector(i); }
};

CoinvariantDualAlgebra buildF(EmbeddingPtr embedding);

/// C₁ = A ⊗_B k = A/AB⁺ with its coalgebra structure and F ≅ (C₁^×)^op.
struct InducedCoalgebra {
  Quotient quotient;     // A -> C₁
  Matrix delta;          // dim C₁^2 x dim C₁
  Matrix counit;         // 1 x dim C₁
  AlgebraPtr dualOp;     // (C₁^×)^op, basis dual to the C₁ basis
  VerifiedIsomorphism iso;  // (C₁^×)^op -> F
  Report verified;
};

InducedCoalgebra inducedCoalgebraC1(const CoinvariantDualAlgebra& f);

}  // namespace hopfind

#endif  // HOPFIND_HOPF_HPP
