// Small instances shared by the unit tests.
#ifndef HOPFIND_TEST_FIXTURES_HPP
#define HOPFIND_TEST_FIXTURES_HPP

#include <memory>
#include <vector>

#include "hopfind/hopf.hpp"

namespace fixtures {

using namespace hopfind;

inline HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }
inline EmbeddingPtr embed(HopfSubalgebraEmbedding e) {
  return std::make_shared<const HopfSubalgebraEmbedding>(std::move(e));
}

inline HopfPtr kS3() { return share(groupAlgebra(symmetricGroup3())); }
inline HopfPtr kC(std::size_t n) { return share(groupAlgebra(cyclicGroup(n))); }
inline HopfPtr sweedler() { return share(taftAlgebra(2, -1, Field::rationals())); }
inline HopfPtr ground() { return share(trivialHopf(Field::rationals())); }

// C3 = {1, (123), (132)} and C2 = {1, (12)} inside S3.
inline const std::vector<std::size_t> kC3InS3{0, 4, 5};
inline const std::vector<std::size_t> kC2InS3{0, 1};

inline EmbeddingPtr s3OverC3() { return embed(subgroupEmbedding(kC(3), kS3(), kC3InS3)); }
inline EmbeddingPtr s3OverC2() { return embed(subgroupEmbedding(kC(2), kS3(), kC2InS3)); }
inline EmbeddingPtr c4OverC2() { return embed(subgroupEmbedding(kC(2), kC(4), {0, 2})); }

inline EmbeddingPtr selfEmbedding(HopfPtr a) {
  const std::size_t d = a->dim();
  return embed(makeEmbedding(a, a, Matrix::identity(d)));
}

inline EmbeddingPtr overGround(HopfPtr a) {
  Matrix incl(a->dim(), 1);
  for (std::size_t i = 0; i < a->dim(); ++i) incl(i, 0) = a->alg().unit()[i];
  return embed(makeEmbedding(share(trivialHopf(a->field())), a, incl));
}

// kC2 = span{1, g} inside H4 = span{1, g, x, gx}.
inline EmbeddingPtr h4OverC2() {
  Matrix incl(4, 2);
  incl(0, 0) = 1;
  incl(1, 1) = 1;
  return embed(makeEmbedding(kC(2), sweedler(), incl));
}

// g ↦ -g on kC2.
inline Matrix signTwist() {
  Matrix beta = Matrix::identity(2);
  beta(1, 1) = -1;
  return beta;
}

}  // namespace fixtures

#endif  // HOPFIND_TEST_FIXTURES_HPP
