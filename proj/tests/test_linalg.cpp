#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfind/error.hpp"
#include "hopfind/linalg.hpp"

using namespace hopfind;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<Scalar>> data) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (auto r : data) {
    rs.emplace_back(r);
    cols = r.size();
  }
  return Matrix::fromRows(cols, rs);
}

Matrix randomMatrix(std::mt19937& rng, std::size_t r, std::size_t c, const Field& f) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.fromInt(dist(rng) * (dist(rng) > 0 ? 1 : 0));
  }
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar third = Scalar::fraction(1, 3);
  CHECK(third + third + third == Scalar(1));
  CHECK((Scalar::fraction(2, 4)).toString() == "1/2");
  CHECK(Scalar::fraction(-3, -6) == Scalar::fraction(1, 2));
  Scalar big = Scalar(INT64_MAX);
  Scalar sq = big * big;
  CHECK(sq / big == big);
  CHECK(sq.toString() == mpq_class(mpq_class(INT64_MAX) * mpq_class(INT64_MAX)).get_str());
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  Scalar three = f7.fromInt(3);
  CHECK(three * three.inverse() == f7.one());
  CHECK(f7.fromInt(10) == f7.fromInt(3));
  CHECK(f7.parse("1/2") * f7.fromInt(2) == f7.one());
  CHECK(f7.fromInt(-1).toString() == "6");
  CHECK_THROWS_AS(Field::prime(8), InputError);
  CHECK_THROWS(Field::prime(7).fromInt(1) + Field::prime(5).fromInt(1));
}

TEST_CASE("solveLinear examples") {
  SUBCASE("identity") {
    auto x = solveLinear(Matrix::identity(3), Vector{1, 2, 3});
    REQUIRE(x);
    CHECK(*x == Vector{1, 2, 3});
  }
  SUBCASE("zero") {
    auto x = solveLinear(Matrix(2, 2), Vector{0, 0});
    REQUIRE(x);
    CHECK(*x == Vector{0, 0});
  }
  SUBCASE("back substitution") {
    auto x = solveLinear(rows({{1, 1}, {0, 1}}), Vector{3, 1});
    REQUIRE(x);
    CHECK(*x == Vector{2, 1});
  }
  SUBCASE("inconsistent") { CHECK_FALSE(solveLinear(rows({{1, 1}, {1, 1}}), Vector{1, 2})); }
  SUBCASE("shape error") { CHECK_THROWS_AS(solveLinear(Matrix::identity(2), Vector{1, 2, 3}), ShapeError); }
}

TEST_CASE("kernelBasis examples") {
  CHECK(kernelBasis(Matrix::identity(4)).empty());
  CHECK(kernelBasis(Matrix(1, 2)).size() == 2);
  Field f2 = Field::prime(2);
  Matrix m(1, 2);
  m(0, 0) = f2.one();
  m(0, 1) = f2.one();
  auto k = kernelBasis(m);
  REQUIRE(k.size() == 1);
  // Oracle: enumerate all four vectors of F_2^2.
  int nonzeroSolutions = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if ((a + b) % 2 == 0 && (a || b)) {
        ++nonzeroSolutions;
        CHECK(k[0] == Vector{f2.fromInt(a), f2.fromInt(b)});
      }
    }
  }
  CHECK(nonzeroSolutions == 1);
}

TEST_CASE("quotientSpace examples") {
  SUBCASE("one relation in k^3") {
    auto q = quotientSpace(FiniteDimSpace::numbered(3, "e"), std::vector<Vector>{{1, 0, 0}});
    CHECK(q.space.dim() == 2);
  }
  SUBCASE("relations spanning V") {
    auto q = quotientSpace(FiniteDimSpace::numbered(2, "e"), std::vector<Vector>{{1, 1}, {1, -1}});
    CHECK(q.space.dim() == 0);
  }
  SUBCASE("k^4 mod two differences") {
    std::vector<Vector> rel{{1, -1, 0, 0}, {0, 1, -1, 0}};
    auto q = quotientSpace(FiniteDimSpace::numbered(4, "e"), rel);
    CHECK(q.space.dim() == 2);
    CHECK(q.proj.matrix * q.section.matrix == Matrix::identity(2));
    for (const auto& r : rel) CHECK(isZero(q.proj(r)));
    CHECK(q.proj(Vector{1, 0, 0, 0}) == q.proj(Vector{0, 0, 1, 0}));
  }
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  CHECK(kronecker(rows({{1, 2}, {3, 4}}), Matrix(2, 2)).isZero());
  CHECK(kronecker(rows({{Scalar(3)}}), rows({{Scalar::fraction(1, 2)}})) == rows({{Scalar::fraction(3, 2)}}));
  // (f⊗g)(v⊗w) = f(v)⊗g(w)
  Matrix f = rows({{1, 2}, {0, 1}});
  Matrix g = rows({{0, 1, 1}, {2, 0, 1}});
  Vector v{1, -1};
  Vector w{2, 0, 3};
  CHECK(kronecker(f, g).apply(tensorVectors(v, w)) == tensorVectors(f.apply(v), g.apply(w)));
}

TEST_CASE("property: solutions satisfy the system and kernels have complementary dimension") {
  std::mt19937 rng(12345);
  for (const Field& field : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 5;
      std::size_t c = 1 + rng() % 5;
      Matrix m = randomMatrix(rng, r, c, field);
      Vector x0(c);
      for (auto& s : x0) s = field.fromInt(static_cast<int>(rng() % 7) - 3);
      Vector b = m.apply(x0);
      auto x = solveLinear(m, b);
      REQUIRE(x);
      CHECK(m.apply(*x) == b);
      auto k = kernelBasis(m);
      CHECK(rank(m) + k.size() == c);
      for (const auto& kv : k) CHECK(isZero(m.apply(kv)));
      CHECK(kernelBasis(m) == k);
      if (r == c) {
        if (auto inv = inverse(m)) CHECK(*inv * m == Matrix::identity(c));
        else CHECK(rank(m) < c);
      }
    }
  }
}

TEST_CASE("property: quotient projections kill relations and split") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::size_t k = rng() % 4;
    std::vector<Vector> rel;
    Matrix m = randomMatrix(rng, k, n, Field::rationals());
    for (std::size_t i = 0; i < k; ++i) rel.emplace_back(m.row(i).begin(), m.row(i).end());
    auto q = quotientSpace(FiniteDimSpace::numbered(n, "e"), rel);
    CHECK(q.space.dim() == n - rank(m));
    CHECK(q.proj.matrix * q.section.matrix == Matrix::identity(q.space.dim()));
    for (const auto& r : rel) CHECK(isZero(q.proj(r)));
  }
}

TEST_CASE("subspace coordinates") {
  std::vector<Vector> basis{{1, 1, 0}, {0, 1, 1}};
  Subspace s(3, basis);
  auto c = s.coordinates(Vector{2, 5, 3});
  REQUIRE(c);
  CHECK(*c == Vector{2, 3});
  CHECK_FALSE(s.contains(Vector{1, 0, 0}));
  CHECK_THROWS_AS(Subspace(3, std::vector<Vector>{{1, 1, 0}, {2, 2, 0}}), ShapeError);
}

TEST_CASE("labels must be unique") {
  CHECK_THROWS_AS(FiniteDimSpace({"a", "a"}), InputError);
  auto t = tensorSpace(FiniteDimSpace({"1", "g"}), FiniteDimSpace({"x", "y"}));
  CHECK(t.labels() == std::vector<std::string>{"1⊗x", "1⊗y", "g⊗x", "g⊗y"});
}
