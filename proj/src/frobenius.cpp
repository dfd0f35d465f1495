#include "hopfind/frobenius.hpp"

#include "hopfind/error.hpp"
#include "hopfind/parallel.hpp"

namespace hopfind {

namespace {

const Algebra& algA(const HopfSubalgebraEmbedding& e) { return e.ambient->alg(); }
const Algebra& algB(const HopfSubalgebraEmbedding& e) { return e.sub->alg(); }

Report checkAutomorphism(const Algebra& b, const Matrix& beta) {
  if (beta.rows() != b.dim() || beta.cols() != b.dim()) throw ShapeError("β must be a square matrix on B");
  return verifyAlgebraMorphism(b, b, beta, {MorphismKind::Morphism, true});
}

Matrix invertBeta(const Matrix& beta) {
  auto inv = inverse(beta);
  if (!inv) throw HypothesisError("beta automorphism", "β is not invertible");
  return *inv;
}

// Both identities of the dual bases; the first failing A-basis label, if any.
std::optional<std::string> leftIdentityWitness(const HopfSubalgebraEmbedding& e, const Matrix& phi,
                                               const std::vector<Vector>& r, const std::vector<Vector>& l) {
  const Algebra& a = algA(e);
  auto bad = firstWitness(a.dim(), [&](std::size_t x) -> std::optional<std::string> {
    Vector ex = a.basisVector(x);
    Vector sum = zeroVector(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) {
      Vector p = e.includeVector(phi.apply(a.multiply(l[i], ex)));
      axpy(1, a.multiply(r[i], p), sum);
    }
    if (sum == ex) return std::nullopt;
    return "Σ r_i φ(l_i a) = " + formatElement(a.space(), sum) + " at a = " + a.space().label(x);
  });
  if (!bad) return std::nullopt;
  return bad->second;
}

std::optional<std::string> rightIdentityWitness(const HopfSubalgebraEmbedding& e, const Matrix& betaInverse,
                                                const Matrix& phi, const std::vector<Vector>& r,
                                                const std::vector<Vector>& l) {
  const Algebra& a = algA(e);
  auto bad = firstWitness(a.dim(), [&](std::size_t x) -> std::optional<std::string> {
    Vector ex = a.basisVector(x);
    Vector sum = zeroVector(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) {
      Vector p = e.includeVector(betaInverse.apply(phi.apply(a.multiply(ex, r[i]))));
      axpy(1, a.multiply(p, l[i]), sum);
    }
    if (sum == ex) return std::nullopt;
    return "Σ (β⁻¹∘φ)(a r_i) l_i = " + formatElement(a.space(), sum) + " at a = " + a.space().label(x);
  });
  if (!bad) return std::nullopt;
  return bad->second;
}

std::optional<DualBases> tryDualBases(const HopfSubalgebraEmbedding& e, const Matrix& betaInverse, const Matrix& phi,
                                      std::string* why) {
  const Algebra& a = algA(e);
  const Algebra& b = algB(e);
  const std::size_t n = e.index();
  // Row block j of the system: φ(x e_j) as a linear function of x.
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < n; ++j) blocks.push_back(phi * a.rightMultiplication(e.freeBasis[j]));
  Matrix system(n * b.dim(), a.dim());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < b.dim(); ++k) {
      for (std::size_t c = 0; c < a.dim(); ++c) system(j * b.dim() + k, c) = blocks[j](k, c);
    }
  }
  DualBases out;
  out.r = e.freeBasis;
  for (std::size_t i = 0; i < n; ++i) {
    Vector rhs = zeroVector(n * b.dim());
    for (std::size_t k = 0; k < b.dim(); ++k) rhs[i * b.dim() + k] = b.unit()[k];
    auto li = solveLinear(system, rhs);
    if (!li) {
      *why = "no l_" + std::to_string(i) + " with φ(l_" + std::to_string(i) + " e_j) = δ_ij";
      return std::nullopt;
    }
    out.l.push_back(std::move(*li));
  }
  if (auto w = leftIdentityWitness(e, phi, out.r, out.l)) {
    *why = *w;
    return std::nullopt;
  }
  if (auto w = rightIdentityWitness(e, betaInverse, phi, out.r, out.l)) {
    *why = *w;
    return std::nullopt;
  }
  return out;
}

// Candidate φ in the fixed order: basis vectors, sums of two, sums of three.
std::vector<Matrix> candidates(const std::vector<Matrix>& basis) {
  std::vector<Matrix> out(basis);
  const std::size_t m = basis.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) out.push_back(basis[i] + basis[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) out.push_back(basis[i] + basis[j] + basis[k]);
    }
  }
  return out;
}

}  // namespace

std::vector<Matrix> solveFrobeniusForm(const HopfSubalgebraEmbedding& e, const Matrix& beta) {
  const Algebra& a = algA(e);
  const Algebra& b = algB(e);
  if (const Check* f = checkAutomorphism(b, beta).firstFailure()) {
    throw HypothesisError("beta automorphism", f->name + ": " + f->witness);
  }
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t unknowns = da * db;
  auto var = [db](std::size_t x, std::size_t k) { return x * db + k; };

  std::vector<Vector> rows;
  auto addRows = [&](const Vector& arg, const Matrix& op, std::size_t x) {
    // φ(arg) - op·φ(e_x) = 0, one row per B-coordinate.
    for (std::size_t k = 0; k < db; ++k) {
      Vector row(unknowns);
      for (std::size_t y = 0; y < da; ++y) {
        if (!arg[y].isZero()) row[var(y, k)] += arg[y];
      }
      for (std::size_t m = 0; m < db; ++m) {
        if (!op(k, m).isZero()) row[var(x, m)] -= op(k, m);
      }
      if (!isZero(row)) rows.push_back(std::move(row));
    }
  };
  for (std::size_t j = 0; j < db; ++j) {
    Vector bj = e.incl.column(j);
    Matrix leftBeta = b.leftMultiplication(beta.column(j));
    Matrix right = b.rightMultiplication(b.basisVector(j));
    for (std::size_t x = 0; x < da; ++x) {
      addRows(a.multiply(bj, a.basisVector(x)), leftBeta, x);
      addRows(a.multiply(a.basisVector(x), bj), right, x);
    }
  }
  Matrix system = rows.empty() ? Matrix(0, unknowns) : Matrix::fromRows(unknowns, rows);
  std::vector<Vector> solutions = reducedBasis(kernelBasis(system), unknowns);
  std::vector<Matrix> out;
  for (const auto& s : solutions) {
    Matrix phi(db, da);
    for (std::size_t x = 0; x < da; ++x) {
      for (std::size_t k = 0; k < db; ++k) phi(k, x) = s[var(x, k)];
    }
    out.push_back(std::move(phi));
  }
  return out;
}

DualBases computeDualBases(const HopfSubalgebraEmbedding& e, const Matrix& beta, const Matrix& phi) {
  std::string why;
  auto d = tryDualBases(e, invertBeta(beta), phi, &why);
  if (!d) throw HypothesisError("φ degenerate", why);
  return *d;
}

FrobeniusSystem buildFrobeniusSystem(EmbeddingPtr e, const std::optional<Matrix>& betaHint) {
  const Algebra& b = algB(*e);
  std::vector<Matrix> betas{Matrix::identity(b.dim())};
  if (betaHint && !(*betaHint == betas.front())) betas.push_back(*betaHint);
  std::string lastWhy = "no candidate φ";
  for (const Matrix& beta : betas) {
    std::vector<Matrix> basis = solveFrobeniusForm(*e, beta);
    Matrix betaInverse = invertBeta(beta);
    for (const Matrix& phi : candidates(basis)) {
      std::string why;
      auto d = tryDualBases(*e, betaInverse, phi, &why);
      if (!d) {
        lastWhy = why;
        continue;
      }
      FrobeniusSystem sys{e, beta, betaInverse, phi, std::move(d->r), std::move(d->l), {}};
      sys.verified = verifyFrobenius(sys);
      requirePassed(sys.verified, "Frobenius system");
      return sys;
    }
  }
  throw HypothesisError("frobenius", "no Frobenius system found, supply β (last failure: " + lastWhy + ")");
}

Report verifyFrobenius(const FrobeniusSystem& sys) {
  const HopfSubalgebraEmbedding& e = *sys.embedding;
  const Algebra& a = algA(e);
  const Algebra& b = algB(e);
  Report report;
  Report autoReport = checkAutomorphism(b, sys.beta);
  report.add("beta automorphism", autoReport.ok(), autoReport.ok() ? "" : autoReport.firstFailure()->witness);
  bool inverseOk = sys.beta * sys.betaInverse == Matrix::identity(b.dim());
  report.add("beta inverse", inverseOk, "stored β⁻¹ is not the inverse of β");
  if (sys.phi.rows() != b.dim() || sys.phi.cols() != a.dim()) throw ShapeError("φ must be dim B x dim A");

  const std::size_t db = b.dim();
  auto bad = firstWitness(a.dim(), [&](std::size_t x) -> std::optional<std::string> {
    for (std::size_t i = 0; i < db; ++i) {
      Vector left = a.multiply(e.incl.column(i), a.basisVector(x));
      for (std::size_t j = 0; j < db; ++j) {
        Vector arg = a.multiply(left, e.incl.column(j));
        Vector lhs = sys.phi.apply(arg);
        Vector rhs = b.multiply(b.multiply(sys.beta.column(i), sys.phi.column(x)), b.basisVector(j));
        if (!(lhs == rhs)) {
          return "φ(b a b') != β(b)φ(a)b' at (b, a, b') = (" + b.space().label(i) + ", " + a.space().label(x) + ", " +
                 b.space().label(j) + ")";
        }
      }
    }
    return std::nullopt;
  });
  report.add("bimodule property", !bad, bad ? bad->second : "");
  if (sys.r.size() != sys.l.size()) throw ShapeError("dual bases of different lengths");
  auto leftBad = leftIdentityWitness(e, sys.phi, sys.r, sys.l);
  report.add("dual bases left", !leftBad, leftBad.value_or(""));
  auto rightBad = rightIdentityWitness(e, sys.betaInverse, sys.phi, sys.r, sys.l);
  report.add("dual bases right", !rightBad, rightBad.value_or(""));
  return report;
}

}  // namespace hopfind
