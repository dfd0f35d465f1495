#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hopfind/duality.hpp"
#include "hopfind/error.hpp"
#include "hopfind/frobenius.hpp"

using namespace hopfind;
using namespace fixtures;

namespace {

AlgebraPtr groundK() { return makeAlgebra(groundAlgebra(Field::rationals())); }

FrobeniusPtr frobenius(EmbeddingPtr e, std::optional<Matrix> hint = std::nullopt) {
  return std::make_shared<const FrobeniusSystem>(buildFrobeniusSystem(e, hint));
}

NormalQuotientPtr quotientBy(EmbeddingPtr e) { return std::make_shared<const NormalHopfQuotient>(normalHopfQuotient(e)); }

bool failed(const Report& r, const std::string& name) {
  for (const auto& c : r.checks()) {
    if (c.name == name && !c.passed && !c.witness.empty()) return true;
  }
  return false;
}

std::vector<Matrix> identities(std::size_t count, std::size_t d) { return std::vector<Matrix>(count, Matrix::identity(d)); }

}  // namespace

TEST_CASE("rhoOp") {
  SUBCASE("group algebras: anti-isomorphism and factorization") {
    for (HopfPtr a : {ground(), kC(2), kS3()}) {
      RhoOp r = rhoOp(a);
      CHECK(r.smash.alg().dim() == a->dim() * a->dim());
      CHECK(r.iso.ok());
      CHECK(r.factorization.ok());
    }
  }
  SUBCASE("Sweedler: S² ≠ id breaks the factorization") {
    RhoOp r = rhoOp(sweedler());
    CHECK(r.iso.ok());
    CHECK(failed(r.factorization, "ρ' = ψ∘ρ^op"));
    CHECK(r.factorizationInverse.ok());
  }
}

TEST_CASE("rhoF") {
  SUBCASE("B = A") {
    RhoF r = rhoF(selfEmbedding(kS3()));
    CHECK(r.f.algebra->dim() == 1);
    CHECK(r.iso.ok());
  }
  SUBCASE("kS3 over kC3") {
    RhoF r = rhoF(s3OverC3());
    CHECK(r.smash.alg().dim() == 12);
    CHECK(r.endB.algebra->dim() == 12);
    CHECK(r.dimensions.ok());
    CHECK(r.iso.ok());
  }
  SUBCASE("Sweedler over kC2") {
    RhoF r = rhoF(h4OverC2());
    CHECK(r.smash.alg().dim() == 8);
    CHECK(r.dimensions.ok());
    CHECK(r.iso.ok());
  }
}

TEST_CASE("dualTranspose") {
  for (EmbeddingPtr e : {selfEmbedding(kC(3)), overGround(kC(2)), s3OverC3(), h4OverC2()}) {
    DualTranspose t = dualTranspose(e);
    CHECK(t.dual.maps.size() == e->ambient->dim());
    CHECK(t.iso.ok());
  }
}

TEST_CASE("findBimoduleIso") {
  auto e = s3OverC3();
  auto sys = frobenius(e);
  Bimodule dual = homOverB(*e).bimodule;
  auto u = findBimoduleIso(twistedAmbient(*sys), dual);
  REQUIRE(u.has_value());
  CHECK(rank(*u) == 6);
  // Dimensions 2 and 6: no iso.
  Bimodule small{regularLeft(kC(2)->algebra), regularRight(kC(2)->algebra)};
  CHECK_FALSE(findBimoduleIso(small, dual).has_value());
}

TEST_CASE("theoremInjective and its corollary") {
  SUBCASE("B = A, C = k") {
    HopfPtr s3 = kS3();
    auto e = selfEmbedding(s3);
    auto thm = theoremInjective(frobenius(e), trivialAction(s3, groundK()));
    CHECK(thm.ok());
    CHECK(thm.source.alg().dim() == 6);
    CHECK(corollaryInjective(thm).composite.ok());
  }
  SUBCASE("kS3 over kC3, C = k") {
    auto e = s3OverC3();
    auto thm = theoremInjective(frobenius(e), trivialAction(e->sub, groundK()));
    CHECK(thm.ok());
    CHECK(thm.source.alg().dim() == 12);
    auto cor = corollaryInjective(thm);
    CHECK(cor.tensorForm.induced.algebra->dim() == 12);
    CHECK(cor.composite.ok());
  }
  SUBCASE("kS3 over kC3 with kC3 adjoint") {
    auto e = s3OverC3();
    auto thm = theoremInjective(frobenius(e), adjointAction(e->sub));
    CHECK(thm.ok());
    CHECK(thm.source.alg().dim() == 36);
    CHECK(corollaryInjective(thm).composite.ok());
  }
  SUBCASE("Sweedler over kC2 with kC2 adjoint") {
    auto e = h4OverC2();
    auto thm = theoremInjective(frobenius(e, signTwist()), adjointAction(e->sub));
    CHECK(thm.ok());
    CHECK(thm.source.alg().dim() == 16);
    CHECK(corollaryInjective(thm).composite.ok());
  }
  SUBCASE("a non-trivial B-action makes Ψ ill defined on the balanced tensor") {
    // kC3 translating functions on C3: b_(1)·(cc') ≠ c(b_(1)·c').
    auto e = s3OverC3();
    CHECK_THROWS_AS(theoremInjective(frobenius(e), translationAction(e->sub)), VerificationError);
  }
  SUBCASE("Taft T3 over F7: only β, not β⁻¹, twists A into A*") {
    Field f7 = Field::prime(7);
    HopfPtr t = share(taftAlgebra(3, primitiveRootOfUnity(3, f7), f7));
    HopfPtr c3 = share(groupAlgebra(cyclicGroup(3), f7));
    Matrix incl(9, 3);
    for (std::size_t i = 0; i < 3; ++i) incl(i, i) = 1;
    auto e = embed(makeEmbedding(c3, t, incl));
    FrobeniusPtr sys;
    for (std::int64_t w : {2, 4}) {
      Matrix beta(3, 3);
      for (std::size_t i = 0; i < 3; ++i) beta(i, i) = i == 0 ? f7.one() : i == 1 ? f7.fromInt(w) : f7.fromInt(w * w);
      try {
        sys = frobenius(e, beta);
        break;
      } catch (const HypothesisError&) {
      }
    }
    REQUIRE(sys);
    CHECK_FALSE(sys->beta == sys->betaInverse);
    Bimodule dual = homOverB(*e).bimodule;
    CHECK(findBimoduleIso(twistedAmbient(*sys), dual).has_value());
    Bimodule inverseTwist{regularLeft(t->algebra),
                          twistRight(restrictRight(regularRight(t->algebra), c3->algebra, incl), sys->betaInverse)};
    CHECK_FALSE(findBimoduleIso(inverseTwist, dual).has_value());
    auto thm = theoremInjective(sys, trivialAction(c3, makeAlgebra(groundAlgebra(f7))));
    CHECK(thm.ok());
    CHECK(thm.source.alg().dim() == 27);
  }
}

TEST_CASE("theoremSurjective") {
  SUBCASE("K = k") {
    HopfPtr s3 = kS3();
    auto thm = theoremSurjective(quotientBy(overGround(s3)), adjointAction(s3));
    CHECK(thm.ok());
    CHECK(thm.source.alg().dim() == 36);
  }
  SUBCASE("K = B") {
    HopfPtr s3 = kS3();
    auto thm = theoremSurjective(quotientBy(selfEmbedding(s3)), adjointAction(s3));
    CHECK(thm.ok());
    CHECK(thm.source.alg().dim() == 3);
  }
  SUBCASE("kS3 -> kC2 with kernel kC3") {
    auto q = quotientBy(s3OverC3());
    HopfPtr s3 = q->kernel->ambient;
    auto trivial = theoremSurjective(q, trivialAction(s3, groundK()));
    CHECK(trivial.ok());
    CHECK(trivial.source.alg().dim() == 2);
    auto adjoint = theoremSurjective(q, adjointAction(s3));
    CHECK(adjoint.ok());
    CHECK(adjoint.source.alg().dim() == 8);
    auto translation = theoremSurjective(q, translationAction(s3));
    CHECK(translation.ok());
    CHECK(translation.source.alg().dim() == 4);
  }
  SUBCASE("kC2 is not normal in Sweedler") {
    CHECK_THROWS_AS(normalHopfQuotient(h4OverC2()), HypothesisError);
  }
}

TEST_CASE("corollaryGroupSkew") {
  SUBCASE("C2 ≤ C4 on k") {
    auto cor = corollaryGroupSkew(cyclicGroup(4), {0, 2}, groundK(), identities(4, 1));
    CHECK(cor.ok());
    CHECK(cor.quotientSkew->dim() == 2);
  }
  SUBCASE("C3 ≤ S3 on functions") {
    ModuleAlgebra ma = translationAction(kS3());
    auto cor = corollaryGroupSkew(symmetricGroup3(), kC3InS3, ma.algebra, ma.action);
    CHECK(cor.ok());
    CHECK(cor.skew->dim() == 36);
    CHECK(cor.quotientSkew->dim() == 4);
  }
  SUBCASE("N = 1") {
    ModuleAlgebra ma = translationAction(kC(3));
    auto cor = corollaryGroupSkew(cyclicGroup(3), {0}, ma.algebra, ma.action);
    CHECK(cor.ok());
    CHECK(cor.quotientSkew->dim() == 9);
  }
  SUBCASE("a subset that is not a subgroup") {
    CHECK_THROWS_AS(subgroupOf(symmetricGroup3(), {0, 1, 2}), InputError);
  }
}
