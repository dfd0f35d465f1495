#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/error.hpp"
#include "hopfind/modules.hpp"

using namespace hopfind;

namespace {

HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

struct S3OverC3 {
  HopfPtr s3 = share(groupAlgebra(symmetricGroup3()));
  HopfPtr c3 = share(groupAlgebra(cyclicGroup(3)));
  HopfSubalgebraEmbedding e = subgroupEmbedding(c3, s3, {0, 4, 5});
};

LeftModule trivialLeft(AlgebraPtr a, const Matrix& alpha, std::size_t dim) {
  LeftModule m{a, FiniteDimSpace::numbered(dim, "v"), {}};
  for (std::size_t i = 0; i < a->dim(); ++i) m.action.push_back(alpha(0, i) * Matrix::identity(dim));
  return m;
}

}  // namespace

TEST_CASE("module axioms") {
  S3OverC3 x;
  CHECK(verifyLeftModule(regularLeft(x.s3->algebra)).ok());
  CHECK(verifyRightModule(regularRight(x.s3->algebra)).ok());
  CHECK(verifyBimodule(regularBimodule(x.s3->algebra)).ok());
  // Left multiplication used as a right action is not a right module for a non-commutative algebra.
  RightModule wrong{x.s3->algebra, x.s3->space(), regularLeft(x.s3->algebra).action};
  CHECK_FALSE(verifyRightModule(wrong).ok());
}

TEST_CASE("tensorOverB") {
  S3OverC3 x;
  SUBCASE("B = k is the plain tensor product") {
    HopfPtr k = share(trivialHopf(Field::rationals()));
    RightModule m{k->algebra, FiniteDimSpace::numbered(2, "m"), {Matrix::identity(2)}};
    LeftModule n{k->algebra, FiniteDimSpace::numbered(3, "n"), {Matrix::identity(3)}};
    CHECK(tensorOverB(m, n).dim() == 6);
  }
  SUBCASE("B ⊗_B N ≅ N") {
    LeftModule n = restrictLeft(regularLeft(x.s3->algebra), x.c3->algebra, x.e.incl);
    BalancedTensor t = tensorOverB(regularRight(x.c3->algebra), n);
    CHECK(t.dim() == 6);
    Matrix iso = unitTensorIso(t, n);
    CHECK(rank(iso) == 6);
  }
  SUBCASE("kS3 ⊗_kC3 k has dimension [S3:C3]") {
    RightModule a = restrictRight(regularRight(x.s3->algebra), x.c3->algebra, x.e.incl);
    BalancedTensor t = tensorOverB(a, trivialLeft(x.c3->algebra, x.c3->counit, 1));
    CHECK(t.dim() == 2);
    // Classes of g⊗1 depend only on the coset gC3.
    CHECK(t.element(unitVector(6, 1), Vector{1}) == t.element(unitVector(6, 2), Vector{1}));
    CHECK_FALSE(t.element(unitVector(6, 0), Vector{1}) == t.element(unitVector(6, 1), Vector{1}));
    LeftModule left = tensorLeftAction(t, regularLeft(x.s3->algebra));
    CHECK(verifyLeftModule(left).ok());
  }
  SUBCASE("regular bimodules compose") {
    TensorBimodule tb = tensorBimodule(regularBimodule(x.s3->algebra), regularBimodule(x.s3->algebra));
    CHECK(tb.tensor.dim() == 6);
    CHECK(verifyBimodule(tb.bimodule).ok());
  }
}

TEST_CASE("twists") {
  HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
  LeftModule m = regularLeft(c2->algebra);
  LeftModule same = twistLeft(m, Matrix::identity(2));
  CHECK(same.action == m.action);
  // β: g ↦ -g is an algebra automorphism of kC2 and an involution.
  Matrix beta = Matrix::identity(2);
  beta(1, 1) = -1;
  LeftModule twisted = twistLeft(m, beta);
  CHECK(twisted.action[1] == Scalar(-1) * m.action[1]);
  CHECK(twistLeft(twisted, beta).action == m.action);
  RightModule r = twistRight(regularRight(c2->algebra), beta);
  CHECK(verifyRightModule(r).ok());
  Matrix notAuto(2, 2);
  notAuto(0, 0) = 1;
  CHECK_THROWS_AS(twistLeft(m, notAuto), HypothesisError);
}

TEST_CASE("Hom_B(A, B)") {
  S3OverC3 x;
  BDual d = homOverB(x.e);
  CHECK(d.bimodule.dim() == 6);
  CHECK(verifyBimodule(d.bimodule).ok());
  for (const auto& theta : d.maps) {
    // Left B-linearity, checked directly on all basis pairs.
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < 6; ++i) {
        Vector bj = x.e.incl.column(j);
        Vector lhs = theta.apply(x.s3->alg().multiply(bj, unitVector(6, i)));
        Vector rhs = x.c3->alg().multiply(unitVector(3, j), theta.apply(unitVector(6, i)));
        CHECK(lhs == rhs);
      }
    }
  }
  SUBCASE("B = k gives the full dual") {
    HopfPtr k = share(trivialHopf(Field::rationals()));
    Matrix incl(6, 1);
    incl(0, 0) = 1;
    BDual full = homOverB(makeEmbedding(k, x.s3, incl));
    CHECK(full.bimodule.dim() == 6);
    CHECK(verifyBimodule(full.bimodule).ok());
  }
}

TEST_CASE("invariants") {
  HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
  Subspace inv = invariantsLeft(regularLeft(c2->algebra), c2->counit);
  REQUIRE(inv.dim() == 1);
  CHECK(inv.contains(Vector{1, 1}));
  LeftModule trivial = trivialLeft(c2->algebra, c2->counit, 3);
  CHECK(invariantsLeft(trivial, c2->counit).dim() == 3);
  HopfPtr k = share(trivialHopf(Field::rationals()));
  LeftModule overK{k->algebra, FiniteDimSpace::numbered(4, "v"), {Matrix::identity(4)}};
  CHECK(invariantsLeft(overK, k->counit).dim() == 4);
  CHECK(invariantsRight(regularRight(c2->algebra), c2->counit).dim() == 1);
}

TEST_CASE("endomorphism algebras of right modules") {
  SUBCASE("R = k, M = k^2") {
    AlgebraPtr k = makeAlgebra(groundAlgebra(Field::rationals()));
    RightModule m{k, FiniteDimSpace::numbered(2, "m"), {Matrix::identity(2)}};
    CHECK(endomorphismAlgebraOfRightModule(m).algebra->dim() == 4);
  }
  SUBCASE("regular kC2") {
    HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
    EndomorphismAlgebra e = endomorphismAlgebraOfRightModule(regularRight(c2->algebra));
    CHECK(e.algebra->dim() == 2);
    CHECK(verifyAlgebra(*e.algebra).ok());
  }
  SUBCASE("kS3 as a right kC3-module") {
    S3OverC3 x;
    RightModule m = restrictRight(regularRight(x.s3->algebra), x.c3->algebra, x.e.incl);
    EndomorphismAlgebra e = endomorphismAlgebraOfRightModule(m);
    CHECK(e.algebra->dim() == 36 / 3);
    CHECK(verifyAlgebra(*e.algebra).ok());
  }
}
