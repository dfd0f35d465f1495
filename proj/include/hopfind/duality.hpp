#ifndef HOPFIND_DUALITY_HPP
#define HOPFIND_DUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfind/interior.hpp"
#include "hopfind/module_algebra.hpp"

namespace hopfind {

/// k ≤ A through the unit.
EmbeddingPtr groundEmbedding(HopfPtr a);

/// ρ^op(f#a)(x) = Σ f(S(x_(1))) x_(2) a as a dim A x dim A matrix; f is a
/// functional on the A-basis.
Matrix rhoOperator(const HopfAlgebra& a, std::span<const Scalar> f, std::size_t aIndex);

/// ρ^op: (A^×)^op # A -> End_k(A), an anti-isomorphism, together with the
/// factorization ρ' = ψ∘ρ^op for ρ'(f#a)(x) = f(S(x))a and
/// ψ(ζ)(x) = Σ S(x_(2))ζ(x_(1)).
struct RhoOp {
  CoinvariantDualAlgebra dual;  // (A^×)^op as F for B = k
  SmashProduct smash;
  EndomorphismAlgebra endK;
  VerifiedIsomorphism iso;
  Report factorization;
  /// The same identity with S⁻¹ in place of S inside ψ; diagnostic only.
  Report factorizationInverse;
};

RhoOp rhoOp(HopfPtr a);

/// Left B-linear maps A -> A under composition.
EndomorphismAlgebra leftLinearEndomorphisms(const HopfSubalgebraEmbedding& e);

/// ρ_F^op: F#A -> (End_B(A))^op, interior over A with a ↦ ε#a and a ↦ (x ↦ xa).
struct RhoF {
  CoinvariantDualAlgebra f;
  SmashProduct smash;
  EndomorphismAlgebra endB;
  AlgebraPtr endBOp;
  Matrix sourceStructural;
  Matrix targetStructural;
  Report containment;  // ρ^op(f#a)(bx) = b·ρ^op(f#a)(x)
  Report dimensions;
  VerifiedIsomorphism iso;
};

RhoF rhoF(EmbeddingPtr e);

/// f ↦ f*, f*(θ) = θ∘f, from (End_B(A))^op to End_{B^op}(A*), interior over A
/// with a ↦ (x ↦ xa) and a ↦ (θ ↦ aθ).
struct DualTranspose {
  EndomorphismAlgebra endB;
  AlgebraPtr endBOp;
  BDual dual;
  EndomorphismAlgebra endDual;
  Matrix sourceStructural;
  Matrix targetStructural;
  VerifiedIsomorphism iso;
};

DualTranspose dualTranspose(EmbeddingPtr e);

/// First invertible (A,B)-bimodule map from -> to, scanning the reduced
/// basis of all bimodule maps, then sums of two, then the sum of all.
std::optional<Matrix> findBimoduleIso(const Bimodule& from, const Bimodule& to);

/// IndT_B^A(C)#A ≅ Ind_{A_β}(C#B) as the composite of four steps:
/// ρ_F^op ⊗ id, transpose ⊗ id, Ψ(f*⊗c)(θ⊗c'#b') = f*(θ)⊗cc'#b', and
/// conjugation by an (A,B)-bimodule isomorphism A_β ≅ A*.
struct InjectiveTheorem {
  FrobeniusPtr sys;
  TurullInduction turull;
  SmashProduct source;       // (F⊗C)#A
  SmashProduct coefficient;  // C#B
  RhoF rho;
  DualTranspose transpose;
  EndomorphismInduction dualForm;     // End_{(C#B)^op}(A*⊗_B C#B)
  EndomorphismInduction twistedForm;  // End_{(C#B)^op}(A_β⊗_B C#B)
  Matrix bimoduleIso;                 // A_β -> A*
  Matrix sourceStructural;            // a ↦ (ε⊗1)#a
  VerifiedIsomorphism step1, step2, step3, step4, composite;
  Report dimensions;
  Report report;

  bool ok() const { return report.ok(); }
};

/// Throws HypothesisError("twist mismatch", ...) if only A_{β⁻¹} ≅ A*, and
/// HypothesisError("bimodule iso", ...) if neither twist works.
InjectiveTheorem theoremInjective(FrobeniusPtr sys, const ModuleAlgebra& ma);

/// (F⊗C)#A ≅ A_β⊗_B C#B⊗_B A through Ψ⁻¹ of the tensor form of C#B.
struct InjectiveCorollary {
  TensorInduction tensorForm;
  PsiIsomorphism psi;
  VerifiedIsomorphism composite;
};

InjectiveCorollary corollaryInjective(const InjectiveTheorem& thm);

/// C^K#B̄ ≅ (k_ε⊗_K C#B)^K with Φ(c#b̄) = 1⊗c#b for the section lift b.
struct SurjectiveTheorem {
  NormalQuotientPtr quotient;
  SurjectiveTurull turull;
  SmashProduct source;       // C^K#B̄
  SmashProduct coefficient;  // C#B
  SurjectiveInduction target;
  /// Σ x_(1)c#x_(2)b = c#xb for c ∈ C^K.
  Report actionsAgree;
  Report liftIndependence;
  VerifiedIsomorphism iso;
  Report report;

  bool ok() const { return report.ok(); }
};

SurjectiveTheorem theoremSurjective(NormalQuotientPtr q, const ModuleAlgebra& ma);

/// The theorem for kN ≤ kG with C a G-algebra, cross-checked against skew
/// group algebras built from the group and coset tables.
struct GroupSkewCorollary {
  SurjectiveTheorem theorem;
  AlgebraPtr skew;          // C*G
  AlgebraPtr quotientSkew;  // C^N*(G/N)
  /// c*ḡ ↦ 1⊗c*g with g the last element of its coset.
  Matrix generatorMap;
  Report report;

  bool ok() const { return report.ok(); }
};

/// normal lists the G-indices of N; automorphisms[g] is the action of g on C.
GroupSkewCorollary corollaryGroupSkew(const FiniteGroup& g, const std::vector<std::size_t>& normal, AlgebraPtr c,
                                      std::vector<Matrix> automorphisms);

/// N as a group in its own right, with elements in the order given.
FiniteGroup subgroupOf(const FiniteGroup& g, const std::vector<std::size_t>& elements);

}  // namespace hopfind

#endif  // HOPFIND_DUALITY_HPP
