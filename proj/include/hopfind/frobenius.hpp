#ifndef HOPFIND_FROBENIUS_HPP
#define HOPFIND_FROBENIUS_HPP

#include <optional>
#include <vector>

#include "hopfind/hopf.hpp"

namespace hopfind {

/// Left β-Frobenius data for B ≤ A: a (B,B)-bimodule map φ: A -> _βB and
/// dual bases with a = Σ r_i φ(l_i a) = Σ (β⁻¹∘φ)(a r_i) l_i.
struct FrobeniusSystem {
  EmbeddingPtr embedding;
  Matrix beta;         // dim B x dim B
  Matrix betaInverse;
  Matrix phi;          // dim B x dim A
  std::vector<Vector> r;  // A-vectors, the free basis
  std::vector<Vector> l;
  Report verified;

  std::size_t index() const { return r.size(); }
};

using FrobeniusPtr = std::shared_ptr<const FrobeniusSystem>;

/// Basis of all φ with φ(b a b') = β(b) φ(a) b'. Unknowns are flattened
/// A-index major (φ(e_a) component k at a·dim B + k); the basis is the
/// reduced echelon basis of the solution space.
std::vector<Matrix> solveFrobeniusForm(const HopfSubalgebraEmbedding& e, const Matrix& beta);

struct DualBases {
  std::vector<Vector> r;
  std::vector<Vector> l;
};

/// r_i := free basis e_i, l_i from φ(l_i e_j) = δ_ij·1_B. Throws
/// HypothesisError("φ degenerate", ...) if some system is unsolvable or the
/// two dual-basis identities fail.
DualBases computeDualBases(const HopfSubalgebraEmbedding& e, const Matrix& beta, const Matrix& phi);

/// Tries β = id, then betaHint; for each runs the candidate sequence
/// (solution basis vectors, then sums of two, then sums of three).
/// Throws HypothesisError("frobenius", ...) when nothing works.
FrobeniusSystem buildFrobeniusSystem(EmbeddingPtr e, const std::optional<Matrix>& betaHint = std::nullopt);

/// Checks: "beta automorphism", "bimodule property", "dual bases left",
/// "dual bases right", exhaustively over the bases of A and B.
Report verifyFrobenius(const FrobeniusSystem& sys);

}  // namespace hopfind

#endif  // HOPFIND_FROBENIUS_HPP
