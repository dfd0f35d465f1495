#ifndef HOPFIND_MODULE_ALGEBRA_HPP
#define HOPFIND_MODULE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "hopfind/groups.hpp"
#include "hopfind/hopf.hpp"
#include "hopfind/interior.hpp"

namespace hopfind {

/// A left B-module algebra: action[i] is the operator of the B-basis
/// element e_i on C.
struct ModuleAlgebra {
  HopfPtr hopf;       // B
  AlgebraPtr algebra; // C
  std::vector<Matrix> action;

  Matrix op(std::span<const Scalar> b) const;
};

/// "module", "b·(cc') = Σ(b_(1)·c)(b_(2)·c')" and "b·1 = ε(b)1", each over
/// all basis elements.
Report verifyModuleAlgebra(const ModuleAlgebra& ma);
/// Throws HypothesisError("module algebra", ...) when verification fails.
ModuleAlgebra makeModuleAlgebra(HopfPtr hopf, AlgebraPtr algebra, std::vector<Matrix> action);

/// b·c = ε(b)c.
ModuleAlgebra trivialAction(HopfPtr b, AlgebraPtr c);
/// C = B with b·c = Σ b_(1) c S(b_(2)).
ModuleAlgebra adjointAction(HopfPtr b);
/// C = H^× (the algebra of dualHopf) with (h⇀f)(x) = f(xh); for a group
/// algebra this is translation of functions on the group.
ModuleAlgebra translationAction(HopfPtr h);
/// Restriction of a module algebra along a Hopf subalgebra.
ModuleAlgebra restrictModuleAlgebra(const ModuleAlgebra& ma, const HopfSubalgebraEmbedding& e);

/// C#B on the basis c#b (C index major) with
/// (c#b)(c'#b') = Σ c(b_(1)·c') # b_(2)b', interior over B via b ↦ 1#b.
struct SmashProduct {
  ModuleAlgebra ma;
  InteriorAlgebra interior;

  const Algebra& alg() const { return *interior.algebra; }
  std::size_t index(std::size_t c, std::size_t b) const { return c * ma.hopf->dim() + b; }
};

SmashProduct smashProduct(const ModuleAlgebra& ma);

/// F as a left A-module algebra.
ModuleAlgebra moduleAlgebraOfF(const CoinvariantDualAlgebra& f);

/// IndT_B^A(C) = F ⊗ C with the componentwise product and A acting on F only.
struct TurullInduction {
  ModuleAlgebra coefficient;  // C over B
  CoinvariantDualAlgebra f;
  ModuleAlgebra fModule;
  ModuleAlgebra induced;
};

TurullInduction turullInduction(EmbeddingPtr e, const ModuleAlgebra& ma);

/// Turull's kG ⊗_{kH} C coded from the group tables: basis x⊗c over left
/// coset representatives x, (x⊗c)(y⊗d) = δ_{x,y} x⊗cd and
/// g·(x⊗c) = x'⊗(h·c) where gx = x'h.
struct GroupTurullComparison {
  ModuleAlgebra turull;
  VerifiedIsomorphism algebraIso;  // F⊗C -> kG⊗_{kH}C, f⊗c ↦ Σ_x f(x) x⊗c
  Report equivariance;             // the same map against both G-actions
};

/// subgroup lists the G-indices of the H-basis of ma.hopf, in order.
GroupTurullComparison compareWithGroupTurull(const TurullInduction& t, const FiniteGroup& g,
                                             const std::vector<std::size_t>& subgroup);

/// IndT_φ(C) = C^K as a B̄-module algebra for B̄ = B/BK⁺.
struct SurjectiveTurull {
  NormalQuotientPtr quotient;
  Subspace invariants;  // inside C
  ModuleAlgebra induced;
  Report verified;
};

SurjectiveTurull surjectiveTurull(NormalQuotientPtr q, const ModuleAlgebra& ma);

}  // namespace hopfind

#endif  // HOPFIND_MODULE_ALGEBRA_HPP
