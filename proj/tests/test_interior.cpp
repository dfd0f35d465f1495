#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hopfind/error.hpp"
#include "hopfind/interior.hpp"

using namespace hopfind;
using namespace fixtures;

namespace {

FrobeniusPtr frobenius(EmbeddingPtr e, std::optional<Matrix> hint = std::nullopt) {
  return std::make_shared<const FrobeniusSystem>(buildFrobeniusSystem(e, hint));
}

AugmentedAlgebra augmented(const HopfPtr& h) { return AugmentedAlgebra{h->algebra, h->counit}; }

NormalQuotientPtr s3ToC2() { return std::make_shared<const NormalHopfQuotient>(normalHopfQuotient(s3OverC3())); }

AugmentedMorphism quotientMorphism(const NormalHopfQuotient& q) {
  return AugmentedMorphism{augmented(q.kernel->ambient), augmented(q.quotient), q.proj};
}

// kS3 -> kC4 through the sign: even permutations to 1, odd ones to g^2.
AugmentedMorphism signIntoC4() {
  HopfPtr s3 = kS3();
  HopfPtr c4 = kC(4);
  Matrix phi(4, 6);
  for (std::size_t g : {0, 4, 5}) phi(0, g) = 1;
  for (std::size_t g : {1, 2, 3}) phi(2, g) = 1;
  return AugmentedMorphism{augmented(s3), augmented(c4), phi};
}

}  // namespace

TEST_CASE("interior algebras") {
  HopfPtr s3 = kS3();
  CHECK(regularInterior(s3->algebra).verified.ok());
  CHECK(groundInterior(s3->algebra, s3->counit).verified.ok());
  Matrix notUnital(1, 6);
  CHECK_THROWS_AS(groundInterior(s3->algebra, notUnital), HypothesisError);
}

TEST_CASE("linckelmannInduction") {
  SUBCASE("M = B = A gives C back") {
    HopfPtr c3 = kC(3);
    auto ind = linckelmannInduction(regularBimodule(c3->algebra), regularInterior(c3->algebra));
    CHECK(ind.end.algebra->dim() == 3);
    CHECK(ind.induced.verified.ok());
  }
  SUBCASE("S3/C3 with the regular interior algebra") {
    auto e = s3OverC3();
    auto ind = linckelmannInduction(bimoduleAlong(e->ambient->algebra, e->sub->algebra, e->incl),
                                    regularInterior(e->sub->algebra));
    CHECK(ind.end.algebra->dim() == 4 * 3);
  }
  SUBCASE("S3/C3 with C = k is M2(k)") {
    auto e = s3OverC3();
    auto ind = linckelmannInduction(bimoduleAlong(e->ambient->algebra, e->sub->algebra, e->incl),
                                    groundInterior(e->sub->algebra, e->sub->counit));
    CHECK(ind.end.algebra->dim() == 4);
    CHECK(ind.tensor.dim() == 2);
  }
}

TEST_CASE("tensor form, group case") {
  auto e = s3OverC3();
  FiniteGroup g = symmetricGroup3();
  TensorInduction t = puigInducedAlgebra(frobenius(e), regularInterior(e->sub->algebra));
  const Algebra& carrier = *t.induced.algebra;
  CHECK(carrier.dim() == 12);
  CHECK(t.induced.verified.ok());

  auto triple = [&](std::size_t x, std::size_t c, std::size_t y) { return unitVector(6 * 3 * 6, t.tripleIndex(x, c, y)); };
  auto subgroupIndex = [&](std::size_t s) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < kC3InS3.size(); ++i) {
      if (kC3InS3[i] == s) return i;
    }
    return std::nullopt;
  };
  SUBCASE("case split of the product") {
    std::size_t mismatches = 0;
    for (std::size_t x1 = 0; x1 < 6; ++x1) {
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t y1 = 0; y1 < 6; ++y1) {
          Vector left = t.project(triple(x1, c, y1));
          for (std::size_t x2 = 0; x2 < 6; ++x2) {
            auto h = subgroupIndex(g.mul(y1, x2));
            for (std::size_t d = 0; d < 3; ++d) {
              for (std::size_t y2 = 0; y2 < 6; ++y2) {
                Vector expected = zeroVector(carrier.dim());
                if (h) expected = t.project(triple(x1, (c + *h + d) % 3, y2));
                if (!(carrier.multiply(left, t.project(triple(x2, d, y2))) == expected)) ++mismatches;
              }
            }
          }
        }
      }
    }
    CHECK(mismatches == 0);
  }
  SUBCASE("unit is the sum over coset representatives") {
    Vector sum = zeroVector(6 * 3 * 6);
    for (std::size_t rep : e->freeBasisIndices) axpy(1, triple(rep, 0, g.inverse(rep)), sum);
    CHECK(t.project(sum) == carrier.unit());
  }
}

TEST_CASE("psiIsomorphism") {
  SUBCASE("B = A") {
    HopfPtr c3 = kC(3);
    auto t = puigInducedAlgebra(frobenius(selfEmbedding(c3)), regularInterior(c3->algebra));
    auto psi = psiIsomorphism(t);
    CHECK(psi.iso.ok());
    CHECK(t.induced.algebra->dim() == 3);
  }
  SUBCASE("S3/C3 with C = k") {
    auto e = s3OverC3();
    auto t = puigInducedAlgebra(frobenius(e), groundInterior(e->sub->algebra, e->sub->counit));
    auto psi = psiIsomorphism(t);
    CHECK(t.induced.algebra->dim() == 4);
    CHECK(psi.iso.ok());
  }
  SUBCASE("C2 ≤ C4 with the regular kC2") {
    auto e = c4OverC2();
    auto t = puigInducedAlgebra(frobenius(e), regularInterior(e->sub->algebra));
    auto psi = psiIsomorphism(t);
    CHECK(t.induced.algebra->dim() == 8);
    CHECK(psi.iso.ok());
  }
  SUBCASE("H4 over kC2 with the sign twist") {
    auto e = h4OverC2();
    auto t = puigInducedAlgebra(frobenius(e, signTwist()), regularInterior(e->sub->algebra));
    auto psi = psiIsomorphism(t);
    CHECK(t.induced.algebra->dim() == 8);
    CHECK(psi.iso.ok());
  }
  SUBCASE("a corrupted Ψ is caught") {
    auto e = s3OverC3();
    auto t = puigInducedAlgebra(frobenius(e), groundInterior(e->sub->algebra, e->sub->counit));
    auto psi = psiIsomorphism(t);
    Matrix bad = psi.iso.forward;
    bad(0, 0) += 1;
    auto iso = verifyIsomorphism(psi.iso.source, psi.iso.target, bad, psi.iso.backward, MorphismKind::Morphism,
                                 psi.iso.interior);
    CHECK_FALSE(iso.ok());
  }
}

TEST_CASE("sandwich conditions") {
  auto q = s3ToC2();
  AugmentedMorphism phi = quotientMorphism(*q);
  SandwichCheck s = checkSandwich(phi, hopfSubalgebra(*q->kernel));
  CHECK(s.lower);
  CHECK(s.upper);
  CHECK(s.upperLeft);
  CHECK(s.kerPhi.dim() == 4);
  SandwichCheck tooSmall = checkSandwich(phi, groundSubalgebra(*phi.source.algebra));
  CHECK_FALSE(tooSmall.upper);
  CHECK_FALSE(tooSmall.witness.empty());
}

TEST_CASE("surjectiveInductionLemma") {
  SUBCASE("only the upper inclusion is not enough") {
    // K = B = A and φ = id: Ker φ = 0 satisfies the upper inclusion, but the
    // two sides have dimensions 6 and 1. ψ⁻¹ also needs Ker α_B ∩ K ⊆ Ker φ.
    HopfPtr s3 = kS3();
    AugmentedMorphism id{augmented(s3), augmented(s3), Matrix::identity(6)};
    Subalgebra whole{s3->algebra, Matrix::identity(6)};
    auto lemma = surjectiveInductionLemma(id, whole, regularInterior(s3->algebra));
    CHECK(lemma.sandwich.upper);
    CHECK_FALSE(lemma.sandwich.lower);
    CHECK(lemma.lhs.dim() == 6);
    CHECK(lemma.rhs.dim() == 1);
    REQUIRE(lemma.verified.firstFailure());
    CHECK(lemma.verified.firstFailure()->name == "ψ⁻¹ well defined");
  }
  SUBCASE("K = k, φ = id") {
    HopfPtr s3 = kS3();
    AugmentedMorphism id{augmented(s3), augmented(s3), Matrix::identity(6)};
    auto lemma = surjectiveInductionLemma(id, groundSubalgebra(*s3->algebra), regularInterior(s3->algebra));
    CHECK(lemma.verified.ok());
    CHECK(lemma.rhs.dim() == 6);
  }
  SUBCASE("kS3 -> kC2 with K = kC3") {
    auto q = s3ToC2();
    auto lemma = surjectiveInductionLemma(quotientMorphism(*q), hopfSubalgebra(*q->kernel),
                                          regularInterior(q->kernel->ambient->algebra));
    CHECK(lemma.verified.ok());
    CHECK(lemma.lhs.dim() == 2);
    CHECK(lemma.rhs.dim() == 2);
  }
  SUBCASE("sandwich failure is a hypothesis error") {
    auto q = s3ToC2();
    CHECK_THROWS_AS(surjectiveInductionLemma(quotientMorphism(*q), groundSubalgebra(q->big().alg()),
                                             regularInterior(q->kernel->ambient->algebra)),
                    HypothesisError);
  }
}

TEST_CASE("surjectivePuigInduction") {
  SUBCASE("K = k and φ = id give C") {
    HopfPtr c3 = kC(3);
    AugmentedMorphism id{augmented(c3), augmented(c3), Matrix::identity(3)};
    auto ind = surjectivePuigInduction(id, groundSubalgebra(c3->alg()), regularInterior(c3->algebra));
    CHECK(ind.induced.algebra->dim() == 3);
  }
  SUBCASE("φ = α_B with K = B") {
    HopfPtr s3 = kS3();
    HopfPtr k = ground();
    AugmentedMorphism alpha{augmented(s3), augmented(k), s3->counit};
    Subalgebra whole{s3->algebra, Matrix::identity(6)};
    auto ind = surjectivePuigInduction(alpha, whole, regularInterior(s3->algebra));
    // (k ⊗_{kS3} kS3)^{S3} = k.
    CHECK(ind.induced.algebra->dim() == 1);
  }
  SUBCASE("normal subgroup quotient") {
    auto q = s3ToC2();
    auto ind = surjectivePuigInduction(quotientMorphism(*q), hopfSubalgebra(*q->kernel),
                                       regularInterior(q->kernel->ambient->algebra));
    // k ⊗_{kC3} kS3 has dimension 2 and C3 acts trivially on it from the right.
    CHECK(ind.induced.algebra->dim() == 2);
    CHECK(ind.induced.verified.ok());
    // Prop 3.2 b: agrees with Ind_{A_φ}(C).
    auto direct = linckelmannInduction(bimoduleAlong(q->quotient->algebra, q->big().algebra, q->proj),
                                       regularInterior(q->big().algebra));
    CHECK(direct.end.algebra->dim() == 2);
  }
}

TEST_CASE("generalInduction") {
  SUBCASE("injective Hopf embedding") {
    auto e = s3OverC3();
    AugmentedMorphism phi{augmented(e->sub), augmented(e->ambient), e->incl};
    auto g = generalInduction(phi, groundSubalgebra(e->sub->alg()), regularInterior(e->sub->algebra));
    CHECK(g.corestricted.induced.algebra->dim() == 3);
    CHECK(g.direct.end.algebra->dim() == 12);
    CHECK(g.comparison.ok());
  }
  SUBCASE("surjective quotient") {
    auto q = s3ToC2();
    auto g = generalInduction(quotientMorphism(*q), hopfSubalgebra(*q->kernel), regularInterior(q->big().algebra));
    CHECK(g.image->dim() == 2);
    CHECK(g.comparison.ok());
  }
  SUBCASE("kS3 -> kC4 through kC2") {
    AugmentedMorphism phi = signIntoC4();
    Subalgebra c3{kC(3)->algebra, subgroupEmbedding(kC(3), kS3(), kC3InS3).incl};
    for (const auto& c : {regularInterior(phi.source.algebra), groundInterior(phi.source.algebra, phi.source.augmentation)}) {
      auto g = generalInduction(phi, c3, c);
      CHECK(g.image->dim() == 2);
      CHECK(g.direct.end.algebra->dim() == g.factored.end.algebra->dim());
      CHECK(g.comparison.ok());
    }
  }
}
