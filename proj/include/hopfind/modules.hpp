#ifndef HOPFIND_MODULES_HPP
#define HOPFIND_MODULES_HPP

#include <string>
#include <vector>

#include "hopfind/algebra.hpp"
#include "hopfind/hopf.hpp"

namespace hopfind {

/// action[i] is the operator of the algebra basis element e_i.
struct LeftModule {
  AlgebraPtr algebra;
  FiniteDimSpace space;
  std::vector<Matrix> action;

  std::size_t dim() const { return space.dim(); }
  /// Operator of an arbitrary algebra element.
  Matrix op(std::span<const Scalar> a) const;
};

/// action[i] is the operator m -> m·e_i.
struct RightModule {
  AlgebraPtr algebra;
  FiniteDimSpace space;
  std::vector<Matrix> action;

  std::size_t dim() const { return space.dim(); }
  Matrix op(std::span<const Scalar> a) const;
};

struct Bimodule {
  LeftModule left;
  RightModule right;  // same space as left

  const FiniteDimSpace& space() const { return left.space; }
  std::size_t dim() const { return left.dim(); }
};

Report verifyLeftModule(const LeftModule& m);
Report verifyRightModule(const RightModule& m);
/// Both module structures plus (a·m)·b = a·(m·b).
Report verifyBimodule(const Bimodule& m);

LeftModule regularLeft(AlgebraPtr a);
RightModule regularRight(AlgebraPtr a);
Bimodule regularBimodule(AlgebraPtr a);

/// Restriction along an algebra morphism f: B -> A (matrix dim A x dim B).
LeftModule restrictLeft(const LeftModule& m, AlgebraPtr b, const Matrix& f);
RightModule restrictRight(const RightModule& m, AlgebraPtr b, const Matrix& f);

/// _βM: b·m = β(b)m. Throws HypothesisError unless β is an automorphism.
LeftModule twistLeft(const LeftModule& m, const Matrix& beta);
/// M_β: m·b = mβ(b).
RightModule twistRight(const RightModule& m, const Matrix& beta);

/// M ⊗_B N realised as the quotient of M⊗N by (m·b)⊗n - m⊗(b·n).
struct BalancedTensor {
  FiniteDimSpace product;  // M⊗N
  Quotient quotient;
  std::size_t leftDim = 0;
  std::size_t rightDim = 0;

  std::size_t dim() const { return quotient.space.dim(); }
  const FiniteDimSpace& space() const { return quotient.space; }
  /// Class of m⊗n.
  Vector element(std::span<const Scalar> m, std::span<const Scalar> n) const;
  /// Operator X on M⊗N pushed to the quotient as P X S; throws
  /// VerificationError unless X preserves the relations (P X = P X S P).
  Matrix transport(const Matrix& x, const std::string& what) const;
};

BalancedTensor tensorOverB(const RightModule& m, const LeftModule& n);

/// Left action on M⊗_B N coming from a left action on M.
LeftModule tensorLeftAction(const BalancedTensor& t, const LeftModule& onM);
/// Right action on M⊗_B N coming from a right action on N.
RightModule tensorRightAction(const BalancedTensor& t, const RightModule& onN);

struct TensorBimodule {
  BalancedTensor tensor;
  Bimodule bimodule;
};

/// (A,B)-bimodule M and (B,C)-bimodule N give the (A,C)-bimodule M⊗_B N;
/// the transported actions are checked to commute.
TensorBimodule tensorBimodule(const Bimodule& m, const Bimodule& n);

/// The canonical map B ⊗_B N -> N, b⊗n ↦ bn, checked to be well defined
/// and bijective (VerificationError otherwise).
Matrix unitTensorIso(const BalancedTensor& t, const LeftModule& n);

/// A* = Hom_B(A, B), left B-linear maps, as an (A,B)-bimodule with
/// (aθ)(x) = θ(xa) and (θ·b)(x) = θ(x)b.
struct BDual {
  Bimodule bimodule;
  /// Basis element i as a dim B x dim A matrix.
  std::vector<Matrix> maps;
  Subspace span;  // flattened maps
};

BDual homOverB(const HopfSubalgebraEmbedding& e);

/// {m : x·m = α(x)m for every basis x}, from the kernel of the stacked
/// operators ρ(x) - α(x)·id. alpha is 1 x dim K.
Subspace invariantsLeft(const LeftModule& m, const Matrix& alpha);
/// {m : m·x = α(x)m for every basis x}.
Subspace invariantsRight(const RightModule& m, const Matrix& alpha);

/// End_R(M) for a right R-module M: all k-linear maps commuting with the
/// right action, with composition product and unit id_M.
EndomorphismAlgebra endomorphismAlgebraOfRightModule(const RightModule& m, const std::string& labelPrefix = "E");

}  // namespace hopfind

#endif  // HOPFIND_MODULES_HPP
