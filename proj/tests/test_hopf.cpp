#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/error.hpp"
#include "hopfind/hopf.hpp"

using namespace hopfind;

namespace {

HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

HopfPtr sweedler() { return share(taftAlgebra(2, -1, Field::rationals())); }

EmbeddingPtr embed(HopfSubalgebraEmbedding e) { return std::make_shared<const HopfSubalgebraEmbedding>(std::move(e)); }

// S3 elements whose index lies in C3 = {1, (123), (132)}.
const std::vector<std::size_t> kC3InS3{0, 4, 5};
const std::vector<std::size_t> kC2InS3{0, 1};

}  // namespace

TEST_CASE("verifyHopf on group algebras") {
  CHECK(verifyHopf(groupAlgebra(cyclicGroup(2))).ok());
  CHECK(verifyHopf(groupAlgebra(symmetricGroup3())).ok());
  CHECK(verifyHopf(groupAlgebra(cyclicGroup(4), Field::prime(5))).ok());
  HopfAlgebra c2 = groupAlgebra(cyclicGroup(2));
  CHECK(c2.antipode == Matrix::identity(2));
  HopfAlgebra trivial = groupAlgebra(cyclicGroup(1));
  CHECK(sameStructureConstants(trivial.alg(), groundAlgebra(Field::rationals())));
  CHECK(verifyHopf(trivialHopf(Field::rationals())).ok());
}

TEST_CASE("non-groups are rejected") {
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 0}, {0, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 1}, {1, 1}}), InputError);
}

TEST_CASE("S3 Cayley table") {
  FiniteGroup s3 = symmetricGroup3();
  // (12)(23): first (23), then (12): 1->1->2, 2->3->3, 3->2->1, i.e. (123).
  CHECK(s3.label(s3.mul(1, 3)) == "(123)");
  CHECK(s3.inverse(4) == 5);
  CHECK(s3.mul(4, 4) == 5);
}

TEST_CASE("Sweedler H4") {
  HopfPtr h = sweedler();
  REQUIRE(h->space().labels() == std::vector<std::string>{"1", "g", "x", "gx"});
  const Algebra& a = h->alg();
  // xg = -gx, x^2 = 0, g^2 = 1
  CHECK(a.multiply(a.basisVector(2), a.basisVector(1)) == scaled(-1, a.basisVector(3)));
  CHECK(isZero(a.multiply(a.basisVector(2), a.basisVector(2))));
  CHECK(a.multiply(a.basisVector(1), a.basisVector(1)) == a.basisVector(0));
  // Δx = x⊗1 + g⊗x, S(x) = -gx
  CHECK(h->comultiply(a.basisVector(2)) == add(tensorVectors(a.basisVector(2), a.unit()),
                                                tensorVectors(a.basisVector(1), a.basisVector(2))));
  CHECK(h->S(a.basisVector(2)) == scaled(-1, a.basisVector(3)));
  CHECK(verifyHopf(*h).ok());

  HopfAlgebra broken = *h;
  broken.antipode.setColumn(2, a.basisVector(3));
  Report r = verifyHopf(broken);
  REQUIRE_FALSE(r.ok());
  CHECK(r.firstFailure()->name == "antipode");
  CHECK(r.firstFailure()->witness.find("fails at x:") != std::string::npos);
}

TEST_CASE("Taft algebra T3 over F7") {
  Field f7 = Field::prime(7);
  Scalar q = primitiveRootOfUnity(3, f7);
  CHECK(q == f7.fromInt(2));
  HopfAlgebra t = taftAlgebra(3, q, f7);
  CHECK(t.dim() == 9);
  CHECK(verifyHopf(t).ok());
  CHECK_THROWS_AS(taftAlgebra(3, f7.fromInt(1), f7), InputError);
  CHECK_THROWS_AS(primitiveRootOfUnity(3, Field::prime(5)), InputError);
}

TEST_CASE("dual Hopf algebras") {
  HopfAlgebra c3 = groupAlgebra(cyclicGroup(3));
  HopfAlgebra dual = dualHopf(c3);
  CHECK(verifyHopf(dual).ok());
  // Functions on C3 multiply pointwise: δ_x δ_y = [x = y] δ_x.
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      Vector expect = x == y ? unitVector(3, x) : zeroVector(3);
      CHECK(dual.alg().multiply(dual.alg().basisVector(x), dual.alg().basisVector(y)) == expect);
    }
  }
  CHECK(verifyHopf(dualHopf(*sweedler())).ok());
  CHECK(sameStructureConstants(dualHopf(dual).alg(), c3.alg()));
}

TEST_CASE("Hopf morphisms") {
  HopfPtr s3 = share(groupAlgebra(symmetricGroup3()));
  HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
  Matrix sign(2, 6);
  for (std::size_t a = 0; a < 6; ++a) sign(a >= 1 && a <= 3 ? 1 : 0, a) = 1;
  CHECK(verifyHopfMorphism(*s3, *c2, sign).ok());
  Matrix bad(2, 6);
  for (std::size_t a = 0; a < 6; ++a) bad(a == 1 ? 1 : 0, a) = 1;
  CHECK_FALSE(verifyHopfMorphism(*s3, *c2, bad).ok());
}

TEST_CASE("free bases") {
  HopfPtr s3 = share(groupAlgebra(symmetricGroup3()));
  HopfPtr c3 = share(groupAlgebra(cyclicGroup(3)));
  SUBCASE("B = A") {
    auto e = makeEmbedding(s3, s3, Matrix::identity(6));
    CHECK(e.freeBasisIndices == std::vector<std::size_t>{0});
  }
  SUBCASE("B = k") {
    HopfPtr k = share(trivialHopf(Field::rationals()));
    Matrix incl(6, 1);
    incl(0, 0) = 1;
    auto e = makeEmbedding(k, s3, incl);
    CHECK(e.index() == 6);
  }
  SUBCASE("kS3 over kC3: coset representatives") {
    auto e = subgroupEmbedding(c3, s3, kC3InS3);
    REQUIRE(e.index() == 2);
    // Oracle: the chosen elements lie in distinct left cosets gC3.
    FiniteGroup g = symmetricGroup3();
    std::size_t a = e.freeBasisIndices[0], b = e.freeBasisIndices[1];
    bool sameCoset = false;
    for (std::size_t h : kC3InS3) sameCoset |= g.mul(a, h) == b;
    CHECK_FALSE(sameCoset);
  }
  SUBCASE("H4 over kC2") {
    HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
    Matrix incl(4, 2);
    incl(0, 0) = 1;
    incl(1, 1) = 1;
    auto e = makeEmbedding(c2, sweedler(), incl);
    CHECK(e.freeBasisIndices == std::vector<std::size_t>{0, 2});
  }
  SUBCASE("a non-subalgebra is rejected") {
    HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
    Matrix incl(6, 2);
    incl(0, 0) = 1;
    incl(4, 1) = 1;
    CHECK_THROWS_AS(makeEmbedding(c2, s3, incl), HypothesisError);
  }
}

TEST_CASE("normal quotients") {
  HopfPtr s3 = share(groupAlgebra(symmetricGroup3()));
  HopfPtr c3 = share(groupAlgebra(cyclicGroup(3)));
  SUBCASE("K = k") {
    HopfPtr k = share(trivialHopf(Field::rationals()));
    Matrix incl(6, 1);
    incl(0, 0) = 1;
    auto q = normalHopfQuotient(embed(makeEmbedding(k, s3, incl)));
    CHECK(q.quotient->dim() == 6);
    CHECK(q.proj == Matrix::identity(6));
  }
  SUBCASE("K = B") {
    auto q = normalHopfQuotient(embed(makeEmbedding(s3, s3, Matrix::identity(6))));
    CHECK(q.quotient->dim() == 1);
    CHECK(q.proj == s3->counit);
  }
  SUBCASE("S3 / C3 is C2") {
    auto q = normalHopfQuotient(embed(subgroupEmbedding(c3, s3, kC3InS3)));
    REQUIRE(q.quotient->dim() == 2);
    CHECK(q.verified.ok());
    CHECK(q.quotient->space().labels() == std::vector<std::string>{"1", "(12)"});
    // Group quotient oracle: cosets of C3 are {even, odd}; the map to kC2 is a Hopf isomorphism.
    HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
    CHECK(verifyHopfMorphism(*q.quotient, *c2, Matrix::identity(2)).ok());
    for (std::size_t a = 0; a < 6; ++a) {
      bool odd = a >= 1 && a <= 3;
      CHECK(q.proj.apply(unitVector(6, a)) == unitVector(2, odd ? 1 : 0));
    }
  }
  SUBCASE("C2 is not normal in S3") {
    HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
    CHECK_THROWS_AS(normalHopfQuotient(embed(subgroupEmbedding(c2, s3, kC2InS3))), HypothesisError);
  }
  SUBCASE("kC2 is not normal in H4") {
    HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
    Matrix incl(4, 2);
    incl(0, 0) = 1;
    incl(1, 1) = 1;
    try {
      normalHopfQuotient(embed(makeEmbedding(c2, sweedler(), incl)));
      FAIL("expected a normality failure");
    } catch (const HypothesisError& e) {
      CHECK(e.check() == "normality");
    }
  }
}

TEST_CASE("coinvariant dual algebra F") {
  HopfPtr s3 = share(groupAlgebra(symmetricGroup3()));
  HopfPtr c3 = share(groupAlgebra(cyclicGroup(3)));
  SUBCASE("B = A gives k·ε") {
    auto f = buildF(embed(makeEmbedding(s3, s3, Matrix::identity(6))));
    REQUIRE(f.algebra->dim() == 1);
    CHECK(f.functional(0) == Vector(6, 1));
  }
  SUBCASE("kS3 over kC3") {
    auto f = buildF(embed(subgroupEmbedding(c3, s3, kC3InS3)));
    REQUIRE(f.algebra->dim() == 2);
    CHECK(verifyAlgebra(*f.algebra).ok());
    // Group case: the product is pointwise.
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        Vector prod = f.functionals.combine(f.algebra->multiply(unitVector(2, x), unitVector(2, y)));
        for (std::size_t g = 0; g < 6; ++g) CHECK(prod[g] == f.functional(x)[g] * f.functional(y)[g]);
      }
    }
    auto c1 = inducedCoalgebraC1(f);
    CHECK(c1.quotient.space.dim() == 2);
    CHECK(c1.verified.ok());
  }
  SUBCASE("H4 over kC2 and the module algebra identity") {
    HopfPtr h = sweedler();
    HopfPtr c2 = share(groupAlgebra(cyclicGroup(2)));
    Matrix incl(4, 2);
    incl(0, 0) = 1;
    incl(1, 1) = 1;
    auto f = buildF(embed(makeEmbedding(c2, h, incl)));
    REQUIRE(f.algebra->dim() == 2);
    CHECK(verifyAlgebra(*f.algebra).ok());
    const Algebra& fa = *f.algebra;
    // a(f·f') = Σ (a_(1) f)(a_(2) f') on all basis triples.
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
          Vector lhs = f.action[a].apply(fa.multiply(unitVector(2, x), unitVector(2, y)));
          Vector rhs(2);
          for (const auto& [p, q, c] : h->sweedler(a)) {
            axpy(c, fa.multiply(f.action[p].apply(unitVector(2, x)), f.action[q].apply(unitVector(2, y))), rhs);
          }
          CHECK(lhs == rhs);
        }
      }
    }
    auto c1 = inducedCoalgebraC1(f);
    CHECK(c1.quotient.space.dim() == 2);
    CHECK(c1.verified.ok());
  }
  SUBCASE("Taft T3 over its group-likes") {
    Field f7 = Field::prime(7);
    HopfPtr t = share(taftAlgebra(3, primitiveRootOfUnity(3, f7), f7));
    HopfPtr c3p = share(groupAlgebra(cyclicGroup(3), f7));
    auto e = embed(subgroupEmbedding(c3p, t, {0, 1, 2}));
    auto f = buildF(e);
    CHECK(f.algebra->dim() * 3 == 9);
    CHECK(inducedCoalgebraC1(f).verified.ok());
  }
}
