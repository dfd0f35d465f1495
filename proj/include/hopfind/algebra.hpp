#ifndef HOPFIND_ALGEBRA_HPP
#define HOPFIND_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfind/linalg.hpp"
#include "hopfind/report.hpp"

namespace hopfind {

/// Sparse coefficient list of a basis product, sorted by basis index.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVector sparsify(std::span<const Scalar> v);

/// Finite-dimensional unital algebra given by structure constants.
/// Immutable after construction; axioms are checked by verifyAlgebra,
/// not by the constructor.
class Algebra {
 public:
  using ProductFn = std::function<Vector(std::size_t, std::size_t)>;

  /// products(i, j) returns the coefficient vector of e_i e_j.
  Algebra(Field field, FiniteDimSpace space, const ProductFn& products, Vector unit);
  Algebra(Field field, FiniteDimSpace space, std::vector<SparseVector> products, Vector unit);

  const Field& field() const { return field_; }
  const FiniteDimSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const Vector& unit() const { return unit_; }

  /// e_i e_j as a sparse list.
  const SparseVector& basisProduct(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Scalar coefficient(std::size_t i, std::size_t j, std::size_t k) const;
  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Accumulates coeff * e_i e_j into out.
  void addBasisProduct(const Scalar& coeff, std::size_t i, std::size_t j, std::span<Scalar> out) const;

  Matrix leftMultiplication(std::span<const Scalar> x) const;
  Matrix rightMultiplication(std::span<const Scalar> x) const;
  Vector basisVector(std::size_t i) const { return unitVector(dim(), i); }

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  Field field_;
  FiniteDimSpace space_;
  std::vector<SparseVector> products_;
  Vector unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

template <class... Args>
AlgebraPtr makeAlgebra(Args&&... args) {
  return std::make_shared<const Algebra>(std::forward<Args>(args)...);
}

/// The product A⊗A -> A as a dim x dim^2 matrix.
Matrix multiplicationMap(const Algebra& a);

/// Equal structure constants and unit, ignoring basis labels.
bool sameStructureConstants(const Algebra& a, const Algebra& b);

/// The ground field as a one-dimensional algebra with basis label "1".
Algebra groundAlgebra(Field field);

Report verifyAlgebra(const Algebra& a);
Algebra oppositeAlgebra(const Algebra& a);
Algebra tensorAlgebra(const Algebra& a, const Algebra& b);
/// M_n(k) with matrix units E[s,t] in row-major order.
Algebra fullMatrixAlgebra(Field field, std::size_t n);
/// M_n(R) with basis E[s,t]⊗r.
Algebra matrixAlgebra(std::size_t n, const Algebra& r);

/// Algebra with a unital multiplicative augmentation A -> k.
struct AugmentedAlgebra {
  AlgebraPtr algebra;
  Matrix augmentation;  // 1 x dim
};

Report verifyAugmentation(const AugmentedAlgebra& a);

enum class MorphismKind { Morphism, AntiMorphism };

struct MorphismOptions {
  MorphismKind kind = MorphismKind::Morphism;
  bool requireBijective = false;
};

/// Checks f(1) = 1 and f(xy) = f(x)f(y) (or f(y)f(x)) on basis pairs,
/// plus bijectivity via rank when requested.
Report verifyAlgebraMorphism(const Algebra& source, const Algebra& target, const Matrix& f,
                             MorphismOptions options = {});
Report verifyAntiMorphism(const Algebra& source, const Algebra& target, const Matrix& f,
                          bool requireBijective = false);

struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix map;
  Report verified;
};

AlgebraMorphism makeMorphism(AlgebraPtr source, AlgebraPtr target, Matrix map);

/// Structural maps X -> source and X -> target that an isomorphism must intertwine.
struct InteriorCompat {
  AlgebraPtr over;
  Matrix sourceStructural;
  Matrix targetStructural;
};

/// An algebra (anti-)isomorphism with both directions stored and checked.
struct VerifiedIsomorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix forward;
  Matrix backward;
  MorphismKind kind = MorphismKind::Morphism;
  std::optional<InteriorCompat> interior;
  Report report;

  bool ok() const { return report.ok(); }
};

/// Runs every isomorphism check. If backward is absent it is computed as
/// the inverse of forward (when one exists).
VerifiedIsomorphism verifyIsomorphism(AlgebraPtr source, AlgebraPtr target, Matrix forward,
                                      std::optional<Matrix> backward = std::nullopt,
                                      MorphismKind kind = MorphismKind::Morphism,
                                      std::optional<InteriorCompat> interior = std::nullopt);

/// Composite second∘first; the result is re-verified from scratch.
VerifiedIsomorphism composeIsomorphisms(const VerifiedIsomorphism& first, const VerifiedIsomorphism& second);

/// Concrete subalgebra of End_k(M): a basis of matrices closed under
/// composition, with the product (fg)(m) = f(g(m)).
struct EndomorphismAlgebra {
  AlgebraPtr algebra;
  std::size_t moduleDim = 0;
  std::vector<Matrix> basis;
  Subspace span;  // flattened (row-major) basis matrices

  /// Coordinates of an operator; throws VerificationError if it is not in the algebra.
  Vector coordinatesOf(const Matrix& op, const std::string& what) const;
  Matrix operatorOf(std::span<const Scalar> coords) const;
};

/// All linear maps on k^moduleDim commuting with every given operator.
EndomorphismAlgebra commutantAlgebra(Field field, std::size_t moduleDim, std::span<const Matrix> operators,
                                     const std::string& labelPrefix = "E");

}  // namespace hopfind

#endif  // HOPFIND_ALGEBRA_HPP
