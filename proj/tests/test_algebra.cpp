#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/algebra.hpp"

using namespace hopfind;

namespace {

// Cyclic group algebra from an independent index formula e_i e_j = e_{(i+j) mod n}.
Algebra cyclic(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  return Algebra(Field::rationals(), FiniteDimSpace(labels),
                 [n](std::size_t i, std::size_t j) { return unitVector(n, (i + j) % n); }, unitVector(n, 0));
}

Matrix transposeOnMatrixUnits(std::size_t n) {
  Matrix t(n * n, n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t u = 0; u < n; ++u) t(u * n + s, s * n + u) = 1;
  }
  return t;
}

}  // namespace

TEST_CASE("verifyAlgebra") {
  CHECK(verifyAlgebra(groundAlgebra(Field::rationals())).ok());
  CHECK(verifyAlgebra(cyclic(2)).ok());

  // Unit e0, e1e1 = e2, e2e1 = e1, all other products of e1, e2 vanish.
  Algebra bad(Field::rationals(), FiniteDimSpace({"e0", "e1", "e2"}),
              [](std::size_t i, std::size_t j) {
                if (i == 0) return unitVector(3, j);
                if (j == 0) return unitVector(3, i);
                if (i == 1 && j == 1) return unitVector(3, 2);
                if (i == 2 && j == 1) return unitVector(3, 1);
                return zeroVector(3);
              },
              unitVector(3, 0));
  Report r = verifyAlgebra(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.firstFailure()->name == "associativity");
  CHECK(r.firstFailure()->witness.find("(e1, e1, e1)") != std::string::npos);
}

TEST_CASE("unit failures are reported") {
  Algebra a(Field::rationals(), FiniteDimSpace({"a", "b"}),
            [](std::size_t i, std::size_t j) { return unitVector(2, i == 0 && j == 0 ? 0 : 1); }, unitVector(2, 1));
  Report r = verifyAlgebra(a);
  CHECK_FALSE(r.checks()[1].passed);
}

TEST_CASE("oppositeAlgebra") {
  Algebra c3 = cyclic(3);
  CHECK(oppositeAlgebra(c3) == c3);
  Algebra m2 = fullMatrixAlgebra(Field::rationals(), 2);
  CHECK(oppositeAlgebra(oppositeAlgebra(m2)) == m2);
  Algebra op = oppositeAlgebra(m2);
  // In M2(k)^op, E01 * E10 = E10 E01 = E11.
  CHECK(op.multiply(op.basisVector(1), op.basisVector(2)) == unitVector(4, 3));
  CHECK(m2.multiply(m2.basisVector(1), m2.basisVector(2)) == unitVector(4, 0));
}

TEST_CASE("tensorAlgebra") {
  Algebra c2 = cyclic(2);
  Algebra k = groundAlgebra(Field::rationals());
  CHECK(sameStructureConstants(tensorAlgebra(c2, k), c2));
  Algebra c3 = cyclic(3);
  CHECK(tensorAlgebra(c2, c3).dim() == 6);
  // kC2 ⊗ kC2 is the Klein four group algebra: index (a,b) -> 2a+b, product is xor.
  Algebra klein = tensorAlgebra(c2, c2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(klein.multiply(klein.basisVector(i), klein.basisVector(j)) == unitVector(4, i ^ j));
  }
  CHECK(klein.space().label(1) == "g0⊗g1");
  CHECK(verifyAlgebra(klein).ok());
}

TEST_CASE("matrixAlgebra") {
  Algebra c2 = cyclic(2);
  CHECK(sameStructureConstants(matrixAlgebra(1, c2), c2));
  Algebra m2 = fullMatrixAlgebra(Field::rationals(), 2);
  CHECK(m2.multiply(m2.basisVector(1), m2.basisVector(2)) == m2.basisVector(0));
  Algebra m2c2 = matrixAlgebra(2, c2);
  CHECK(m2c2.dim() == 8);
  CHECK(verifyAlgebra(m2c2).ok());
  CHECK(verifyAlgebra(matrixAlgebra(3, fullMatrixAlgebra(Field::prime(5), 2))).ok());
}

TEST_CASE("morphism checks") {
  Algebra m2 = fullMatrixAlgebra(Field::rationals(), 2);
  CHECK(verifyAlgebraMorphism(m2, m2, Matrix::identity(4), {MorphismKind::Morphism, true}).ok());
  CHECK(verifyAntiMorphism(m2, m2, transposeOnMatrixUnits(2), true).ok());
  CHECK_FALSE(verifyAlgebraMorphism(m2, m2, transposeOnMatrixUnits(2)).ok());

  Algebra c2 = cyclic(2);
  Matrix zeroish(2, 2);
  zeroish(1, 1) = 1;
  Report r = verifyAlgebraMorphism(c2, c2, zeroish);
  CHECK(r.firstFailure()->name == "unital");

  // Augmentation of kC2 and the sign character are both morphisms to k.
  Algebra k = groundAlgebra(Field::rationals());
  Matrix eps = Matrix::fromRows(2, std::vector<Vector>{{1, 1}});
  Matrix sign = Matrix::fromRows(2, std::vector<Vector>{{1, -1}});
  CHECK(verifyAlgebraMorphism(c2, k, eps).ok());
  CHECK(verifyAlgebraMorphism(c2, k, sign).ok());
  CHECK_FALSE(verifyAlgebraMorphism(c2, k, eps, {MorphismKind::Morphism, true}).ok());
}

TEST_CASE("isomorphism verification and composition") {
  auto m2 = makeAlgebra(fullMatrixAlgebra(Field::rationals(), 2));
  auto op = makeAlgebra(oppositeAlgebra(*m2));
  VerifiedIsomorphism t = verifyIsomorphism(m2, op, transposeOnMatrixUnits(2));
  CHECK(t.ok());
  CHECK(t.backward == transposeOnMatrixUnits(2));
  VerifiedIsomorphism anti = verifyIsomorphism(m2, m2, transposeOnMatrixUnits(2), std::nullopt, MorphismKind::AntiMorphism);
  CHECK(anti.ok());
  VerifiedIsomorphism twice = composeIsomorphisms(anti, anti);
  CHECK(twice.ok());
  CHECK(twice.kind == MorphismKind::Morphism);
  CHECK(twice.forward == Matrix::identity(4));

  Matrix wrongBack = Matrix::identity(4);
  VerifiedIsomorphism broken = verifyIsomorphism(m2, op, transposeOnMatrixUnits(2), wrongBack);
  CHECK_FALSE(broken.ok());
  CHECK(broken.report.firstFailure()->name == "inverse");
}

TEST_CASE("commutant algebras") {
  SUBCASE("no operators gives the full matrix algebra") {
    EndomorphismAlgebra e = commutantAlgebra(Field::rationals(), 2, {});
    CHECK(e.algebra->dim() == 4);
    CHECK(verifyAlgebra(*e.algebra).ok());
  }
  SUBCASE("regular kC2 under right multiplication") {
    Algebra c2 = cyclic(2);
    std::vector<Matrix> ops{c2.rightMultiplication(c2.basisVector(1))};
    EndomorphismAlgebra e = commutantAlgebra(Field::rationals(), 2, ops);
    CHECK(e.algebra->dim() == 2);
    CHECK(verifyAlgebra(*e.algebra).ok());
    for (const auto& phi : e.basis) CHECK(phi * ops[0] == ops[0] * phi);
    // Left multiplication by g lies in the commutant.
    Matrix lg = c2.leftMultiplication(c2.basisVector(1));
    Vector coords = e.coordinatesOf(lg, "left g");
    CHECK(e.operatorOf(coords) == lg);
  }
}
