#ifndef HOPFIND_INTERIOR_HPP
#define HOPFIND_INTERIOR_HPP

#include <array>
#include <string>
#include <vector>

#include "hopfind/frobenius.hpp"
#include "hopfind/modules.hpp"

namespace hopfind {

/// C with a unital algebra morphism σ: B -> C.
struct InteriorAlgebra {
  AlgebraPtr base;     // B
  AlgebraPtr algebra;  // C
  Matrix sigma;        // dim C x dim B
  Report verified;

  Vector sigmaOf(std::span<const Scalar> b) const { return sigma.apply(b); }
};

/// Checks σ is an algebra morphism and that σ(b₁)cσ(b₂) is a bimodule.
Report verifyInterior(const InteriorAlgebra& c);
/// Throws HypothesisError if verifyInterior fails.
InteriorAlgebra makeInterior(AlgebraPtr base, AlgebraPtr algebra, Matrix sigma);
/// C = B, σ = id.
InteriorAlgebra regularInterior(AlgebraPtr b);
/// C = k, σ = α.
InteriorAlgebra groundInterior(AlgebraPtr b, const Matrix& augmentation);

/// An interior A-algebra produced by one of the inductions.
struct InducedInteriorAlgebra {
  AlgebraPtr over;        // A
  AlgebraPtr algebra;     // carrier
  Matrix structural;      // dim carrier x dim A
  Report verified;
};

/// Ind_M(C) = End_{C^op}(M ⊗_B C) with a ↦ left multiplication by a.
struct EndomorphismInduction {
  BalancedTensor tensor;            // M ⊗_B C
  RightModule rightC;               // (m⊗c)·c' = m⊗cc'
  std::vector<Matrix> leftA;        // left action of each A-basis element on the tensor
  EndomorphismAlgebra end;
  InducedInteriorAlgebra induced;
};

EndomorphismInduction linckelmannInduction(const Bimodule& m, const InteriorAlgebra& c);

/// A_β as an (A,B)-bimodule: left regular, a·b = aβ(b).
Bimodule twistedAmbient(const FrobeniusSystem& sys);

/// A_β ⊗_B C ⊗_B A with the product
/// (a₁⊗c₁⊗a₁')(a₂⊗c₂⊗a₂') = a₁⊗c₁(σ∘β⁻¹∘φ)(a₁'a₂)c₂⊗a₂'.
struct TensorInduction {
  FrobeniusPtr sys;
  InteriorAlgebra coeff;
  BalancedTensor inner;   // A_β ⊗_B C
  BalancedTensor outer;   // (A_β ⊗_B C) ⊗_B A
  /// Pure triple (a, c, a') representing each carrier basis element.
  std::vector<std::array<std::size_t, 3>> reps;
  /// (σ∘β⁻¹∘φ)(e_x e_y) for A-basis x, y, at x·dim A + y.
  std::vector<Vector> pairing;
  /// Column v is the class of the v-th basis triple of A⊗C⊗A.
  std::vector<SparseVector> projection;
  InducedInteriorAlgebra induced;

  std::size_t tripleIndex(std::size_t a, std::size_t c, std::size_t a2) const;
  /// Class of an element of A⊗C⊗A (lexicographic) in the carrier.
  Vector project(std::span<const Scalar> triple) const;
  /// Class of the product of two elements of A⊗C⊗A, computed without
  /// passing through the quotient.
  Vector projectedProduct(std::span<const Scalar> x, std::span<const Scalar> y) const;
};

TensorInduction puigInducedAlgebra(FrobeniusPtr sys, const InteriorAlgebra& c);

/// Ψ: A_β⊗_B C⊗_B A -> Ind_{A_β}(C), Ψ_{a⊗c⊗a'}(b⊗d) = a⊗c(σ∘β⁻¹∘φ)(a'b)d,
/// with Ψ⁻¹(f) = Σ f(r_i⊗1_C)⊗l_i.
struct PsiIsomorphism {
  EndomorphismInduction endForm;
  VerifiedIsomorphism iso;
};

PsiIsomorphism psiIsomorphism(const TensorInduction& t);

/// K ≤ B given by its inclusion.
struct Subalgebra {
  AlgebraPtr algebra;
  Matrix incl;  // dim B x dim K
};

Subalgebra hopfSubalgebra(const HopfSubalgebraEmbedding& e);
/// The ground field inside B.
Subalgebra groundSubalgebra(const Algebra& b);

/// φ: (B, α_B) -> (A, α_A).
struct AugmentedMorphism {
  AugmentedAlgebra source;
  AugmentedAlgebra target;
  Matrix map;  // dim A x dim B
};

/// Both augmentations, φ an algebra morphism, α_A∘φ = α_B.
Report verifyAugmentedMorphism(const AugmentedMorphism& phi);

/// Ker α_B ∩ K ⊆ Ker φ ⊆ (Ker α_B ∩ K)B, plus the left-sided variant
/// B(Ker α_B ∩ K) recorded for comparison.
struct SandwichCheck {
  Subspace kerPhi;
  Subspace augmentedK;     // Ker α_B ∩ K inside B
  Subspace rightIdeal;     // (Ker α_B ∩ K)B
  Subspace leftIdeal;      // B(Ker α_B ∩ K)
  bool lower = false;
  bool upper = false;      // Ker φ ⊆ (Ker α_B ∩ K)B
  bool upperLeft = false;  // Ker φ ⊆ B(Ker α_B ∩ K)
  std::string witness;     // first failing vector, if any
  std::vector<std::string> notes;
};

SandwichCheck checkSandwich(const AugmentedMorphism& phi, const Subalgebra& k);

/// ψ: A_φ ⊗_B C -> k_{α_B} ⊗_K C, ā⊗c ↦ 1⊗σ(b)c, and its inverse 1⊗c ↦ 1̄⊗c.
struct SurjectiveLemma {
  BalancedTensor lhs;
  BalancedTensor rhs;
  Matrix psi;
  Matrix psiInverse;
  SandwichCheck sandwich;
  Report verified;
};

SurjectiveLemma surjectiveInductionLemma(const AugmentedMorphism& phi, const Subalgebra& k, const InteriorAlgebra& c);

/// IndP_φ(C) = (k_{α_B} ⊗_K C)^K with (1⊗c)(1⊗d) = 1⊗cd and σ'(b̄) = 1⊗σ(b).
struct SurjectiveInduction {
  BalancedTensor tensor;   // k_{α_B} ⊗_K C
  Subspace invariants;     // in tensor coordinates
  SandwichCheck sandwich;
  InducedInteriorAlgebra induced;

  /// C-representative of a carrier element.
  Vector lift(std::span<const Scalar> coords) const;
};

SurjectiveInduction surjectivePuigInduction(const AugmentedMorphism& phi, const Subalgebra& k, const InteriorAlgebra& c);

/// IndP_φ(C) = Ind_{A_φ}(C) for any augmented φ, compared with
/// Ind_{M₁}(IndP_φ̄(C)) where φ̄: B -> φ(B) and M₁ = A as (A, φ(B))-bimodule.
struct GeneralInduction {
  EndomorphismInduction direct;
  AlgebraPtr image;           // φ(B)
  Matrix imageInclusion;      // dim A x dim φ(B)
  SurjectiveInduction corestricted;
  EndomorphismInduction factored;
  VerifiedIsomorphism comparison;  // factored -> direct
};

GeneralInduction generalInduction(const AugmentedMorphism& phi, const Subalgebra& k, const InteriorAlgebra& c);

/// A as an (A,B)-bimodule through an algebra morphism φ: B -> A on the right.
Bimodule bimoduleAlong(AlgebraPtr a, AlgebraPtr b, const Matrix& phi);

}  // namespace hopfind

#endif  // HOPFIND_INTERIOR_HPP
