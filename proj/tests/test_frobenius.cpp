#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hopfind/error.hpp"
#include "hopfind/frobenius.hpp"

using namespace hopfind;
using namespace fixtures;

namespace {

// φ(g) = g for g ∈ H, 0 otherwise, written on the basis of kH.
Matrix cosetProjection(std::size_t orderG, const std::vector<std::size_t>& h) {
  Matrix phi(h.size(), orderG);
  for (std::size_t k = 0; k < h.size(); ++k) phi(k, h[k]) = 1;
  return phi;
}

bool inSpan(const std::vector<Matrix>& basis, const Matrix& m) {
  std::vector<Vector> flat;
  for (const auto& b : basis) flat.push_back(b.flat());
  return Subspace::span(m.flat().size(), flat).contains(m.flat());
}

void checkGroupPair(EmbeddingPtr e, const FiniteGroup& g, const std::vector<std::size_t>& h) {
  FrobeniusSystem sys = buildFrobeniusSystem(e);
  CHECK(sys.verified.ok());
  CHECK(sys.beta == Matrix::identity(h.size()));
  CHECK(sys.phi == cosetProjection(g.order(), h));
  REQUIRE(sys.index() == g.order() / h.size());
  for (std::size_t i = 0; i < sys.index(); ++i) {
    std::size_t gi = e->freeBasisIndices[i];
    CHECK(sys.r[i] == unitVector(g.order(), gi));
    CHECK(sys.l[i] == unitVector(g.order(), g.inverse(gi)));
  }
}

}  // namespace

TEST_CASE("solveFrobeniusForm") {
  SUBCASE("B = A contains the identity") {
    auto e = selfEmbedding(kS3());
    CHECK(inSpan(solveFrobeniusForm(*e, Matrix::identity(6)), Matrix::identity(6)));
  }
  SUBCASE("subgroups contain the coset projection") {
    CHECK(inSpan(solveFrobeniusForm(*s3OverC3(), Matrix::identity(3)), cosetProjection(6, kC3InS3)));
    CHECK(inSpan(solveFrobeniusForm(*s3OverC2(), Matrix::identity(2)), cosetProjection(6, kC2InS3)));
  }
  SUBCASE("B = k allows every functional") {
    CHECK(solveFrobeniusForm(*overGround(kS3()), Matrix::identity(1)).size() == 6);
  }
  SUBCASE("β must be an automorphism") {
    Matrix bad(2, 2);
    bad(0, 0) = 1;
    CHECK_THROWS_AS(solveFrobeniusForm(*h4OverC2(), bad), HypothesisError);
  }
}

TEST_CASE("computeDualBases") {
  SUBCASE("B = A") {
    auto e = selfEmbedding(kC(3));
    DualBases d = computeDualBases(*e, Matrix::identity(3), Matrix::identity(3));
    CHECK(d.r == std::vector<Vector>{Vector{1, 0, 0}});
    CHECK(d.l == std::vector<Vector>{Vector{1, 0, 0}});
  }
  SUBCASE("C2 ≤ C4 by direct 2x2 solves") {
    auto e = c4OverC2();
    DualBases d = computeDualBases(*e, Matrix::identity(2), cosetProjection(4, {0, 2}));
    REQUIRE(d.r.size() == 2);
    CHECK(d.r[0] == unitVector(4, 0));
    CHECK(d.r[1] == unitVector(4, 1));
    CHECK(d.l[0] == unitVector(4, 0));
    CHECK(d.l[1] == unitVector(4, 3));
  }
  SUBCASE("a degenerate φ is rejected") {
    Matrix phi(3, 6);
    phi(0, 0) = 1;  // kills every coset but C3 itself and is not B-linear on C3
    CHECK_THROWS_AS(computeDualBases(*s3OverC3(), Matrix::identity(3), phi), HypothesisError);
  }
}

TEST_CASE("group pairs succeed with β = id and the coset projection") {
  checkGroupPair(s3OverC3(), symmetricGroup3(), kC3InS3);
  checkGroupPair(s3OverC2(), symmetricGroup3(), kC2InS3);
  checkGroupPair(c4OverC2(), cyclicGroup(4), {0, 2});
  checkGroupPair(selfEmbedding(kS3()), symmetricGroup3(), {0, 1, 2, 3, 4, 5});
}

TEST_CASE("B = k") {
  FrobeniusSystem sys = buildFrobeniusSystem(overGround(kS3()));
  CHECK(sys.verified.ok());
  CHECK(sys.index() == 6);
}

TEST_CASE("Sweedler H4 over kC2 needs the sign twist") {
  auto e = h4OverC2();
  CHECK_THROWS_AS(buildFrobeniusSystem(e), HypothesisError);
  FrobeniusSystem sys = buildFrobeniusSystem(e, signTwist());
  CHECK(sys.verified.ok());
  CHECK(sys.beta == signTwist());
  // φ(1) = φ(g) = 0, φ(x) = 1, φ(gx) = -g.
  CHECK(sys.phi.column(0) == Vector{0, 0});
  CHECK(sys.phi.column(1) == Vector{0, 0});
  CHECK(sys.phi.column(2) == Vector{1, 0});
  CHECK(sys.phi.column(3) == Vector{0, -1});
  CHECK(sys.r == std::vector<Vector>{unitVector(4, 0), unitVector(4, 2)});
  CHECK(sys.l == std::vector<Vector>{unitVector(4, 2), unitVector(4, 0)});
}

TEST_CASE("Taft T3 over its group-like part") {
  Field f7 = Field::prime(7);
  HopfPtr t = share(taftAlgebra(3, primitiveRootOfUnity(3, f7), f7));
  HopfPtr c3 = share(groupAlgebra(cyclicGroup(3), f7));
  Matrix incl(9, 3);
  for (std::size_t i = 0; i < 3; ++i) incl(i, i) = 1;
  auto e = embed(makeEmbedding(c3, t, incl));
  // The solution spaces are small enough to search every diagonal β of order 3.
  std::optional<FrobeniusSystem> found;
  for (std::int64_t w : {1, 2, 4}) {
    Matrix beta(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      Scalar p = f7.one();
      for (std::size_t k = 0; k < i; ++k) p *= f7.fromInt(w);
      beta(i, i) = p;
    }
    try {
      found = buildFrobeniusSystem(e, beta);
      break;
    } catch (const HypothesisError&) {
    }
  }
  REQUIRE(found);
  CHECK(found->verified.ok());
}

TEST_CASE("verifyFrobenius mutations") {
  FrobeniusSystem sys = buildFrobeniusSystem(s3OverC3());
  SUBCASE("perturbed φ") {
    FrobeniusSystem bad = sys;
    bad.phi(0, 1) += 1;
    Report r = verifyFrobenius(bad);
    CHECK_FALSE(r.ok());
    REQUIRE(r.firstFailure());
    const std::string& w = r.firstFailure()->witness;
    bool named = w.find("a = ") != std::string::npos || w.find("(b, a, b')") != std::string::npos;
    CHECK(named);
  }
  SUBCASE("swapped dual bases for a non-normal subgroup") {
    // The greedy representatives {1, (13), (23)} are involutions, so swapping
    // would change nothing; {1, (123), (23)} are left coset representatives of
    // C2 whose inverses are not.
    FrobeniusSystem s = buildFrobeniusSystem(s3OverC2());
    FiniteGroup g = symmetricGroup3();
    s.r.clear();
    s.l.clear();
    for (std::size_t rep : {0, 4, 3}) {
      s.r.push_back(unitVector(6, rep));
      s.l.push_back(unitVector(6, g.inverse(rep)));
    }
    CHECK(verifyFrobenius(s).ok());
    std::swap(s.r, s.l);
    Report r = verifyFrobenius(s);
    CHECK_FALSE(r.ok());
    bool leftFailed = false;
    for (const auto& c : r.checks()) leftFailed |= c.name == "dual bases left" && !c.passed;
    CHECK(leftFailed);
  }
}
