#include "hopfind/modules.hpp"

#include "hopfind/error.hpp"
#include "hopfind/parallel.hpp"

namespace hopfind {

namespace {

Matrix combineOps(const std::vector<Matrix>& ops, std::span<const Scalar> a, std::size_t dim) {
  if (a.size() != ops.size()) throw ShapeError("module operator: element has wrong length");
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!a[i].isZero()) out = out + a[i] * ops[i];
  }
  return out;
}

void checkShapes(const AlgebraPtr& a, const FiniteDimSpace& space, const std::vector<Matrix>& ops) {
  if (ops.size() != a->dim()) throw ShapeError("module needs one operator per algebra basis element");
  for (const auto& m : ops) {
    if (m.rows() != space.dim() || m.cols() != space.dim()) throw ShapeError("module operator has the wrong shape");
  }
}

Report verifyActions(const AlgebraPtr& alg, const FiniteDimSpace& space, const std::vector<Matrix>& ops, bool right) {
  checkShapes(alg, space, ops);
  const Algebra& a = *alg;
  Report report;
  Matrix unitOp = combineOps(ops, a.unit(), space.dim());
  report.add("unit acts as identity", unitOp == Matrix::identity(space.dim()), "ρ(1) != id");
  const std::size_t d = a.dim();
  auto bad = firstWitness(d, [&](std::size_t i) -> std::optional<std::string> {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix lhs(space.dim(), space.dim());
      for (const auto& [k, c] : a.basisProduct(i, j)) lhs = lhs + c * ops[k];
      Matrix rhs = right ? ops[j] * ops[i] : ops[i] * ops[j];
      if (!(lhs == rhs)) {
        return std::string(right ? "m·(ab) != (m·a)·b" : "(ab)·m != a·(b·m)") + " at (a, b) = (" +
               a.space().label(i) + ", " + a.space().label(j) + ")";
      }
    }
    return std::nullopt;
  });
  report.add("action multiplicative", !bad, bad ? bad->second : "");
  return report;
}

std::vector<Matrix> restrictOps(const std::vector<Matrix>& ops, const Matrix& f, std::size_t dim) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < f.cols(); ++j) out.push_back(combineOps(ops, f.column(j), dim));
  return out;
}

void requireAutomorphism(const Algebra& b, const Matrix& beta) {
  if (beta.rows() != b.dim() || beta.cols() != b.dim()) throw ShapeError("twist must be a square matrix on B");
  Report r = verifyAlgebraMorphism(b, b, beta, {MorphismKind::Morphism, true});
  if (const Check* f = r.firstFailure()) throw HypothesisError("twist is not an automorphism", f->name + ": " + f->witness);
}

}  // namespace

Matrix LeftModule::op(std::span<const Scalar> a) const { return combineOps(action, a, dim()); }
Matrix RightModule::op(std::span<const Scalar> a) const { return combineOps(action, a, dim()); }

Report verifyLeftModule(const LeftModule& m) { return verifyActions(m.algebra, m.space, m.action, false); }
Report verifyRightModule(const RightModule& m) { return verifyActions(m.algebra, m.space, m.action, true); }

Report verifyBimodule(const Bimodule& m) {
  Report report;
  report.merge("left", verifyLeftModule(m.left));
  report.merge("right", verifyRightModule(m.right));
  if (!(m.left.space == m.right.space)) throw ShapeError("bimodule sides live on different spaces");
  std::string witness;
  for (std::size_t i = 0; i < m.left.action.size() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < m.right.action.size() && witness.empty(); ++j) {
      if (!(m.left.action[i] * m.right.action[j] == m.right.action[j] * m.left.action[i])) {
        witness = "(a·m)·b != a·(m·b) at (a, b) = (" + m.left.algebra->space().label(i) + ", " +
                  m.right.algebra->space().label(j) + ")";
      }
    }
  }
  report.add("actions commute", witness.empty(), witness);
  return report;
}

LeftModule regularLeft(AlgebraPtr a) {
  LeftModule m{a, a->space(), {}};
  for (std::size_t i = 0; i < a->dim(); ++i) m.action.push_back(a->leftMultiplication(a->basisVector(i)));
  return m;
}

RightModule regularRight(AlgebraPtr a) {
  RightModule m{a, a->space(), {}};
  for (std::size_t i = 0; i < a->dim(); ++i) m.action.push_back(a->rightMultiplication(a->basisVector(i)));
  return m;
}

Bimodule regularBimodule(AlgebraPtr a) { return Bimodule{regularLeft(a), regularRight(a)}; }

LeftModule restrictLeft(const LeftModule& m, AlgebraPtr b, const Matrix& f) {
  if (f.rows() != m.algebra->dim() || f.cols() != b->dim()) throw ShapeError("restriction map has the wrong shape");
  return LeftModule{std::move(b), m.space, restrictOps(m.action, f, m.dim())};
}

RightModule restrictRight(const RightModule& m, AlgebraPtr b, const Matrix& f) {
  if (f.rows() != m.algebra->dim() || f.cols() != b->dim()) throw ShapeError("restriction map has the wrong shape");
  return RightModule{std::move(b), m.space, restrictOps(m.action, f, m.dim())};
}

LeftModule twistLeft(const LeftModule& m, const Matrix& beta) {
  requireAutomorphism(*m.algebra, beta);
  LeftModule out{m.algebra, m.space, restrictOps(m.action, beta, m.dim())};
  if (const Check* f = verifyLeftModule(out).firstFailure()) throw VerificationError("twisted module", f->witness);
  return out;
}

RightModule twistRight(const RightModule& m, const Matrix& beta) {
  requireAutomorphism(*m.algebra, beta);
  RightModule out{m.algebra, m.space, restrictOps(m.action, beta, m.dim())};
  if (const Check* f = verifyRightModule(out).firstFailure()) throw VerificationError("twisted module", f->witness);
  return out;
}

Vector BalancedTensor::element(std::span<const Scalar> m, std::span<const Scalar> n) const {
  return quotient.proj(tensorVectors(m, n));
}

Matrix BalancedTensor::transport(const Matrix& x, const std::string& what) const {
  const Matrix& p = quotient.proj.matrix;
  Matrix px = p * x;
  Matrix pushed = px * quotient.section.matrix;
  Matrix back = pushed * p;
  for (std::size_t c = 0; c < px.cols(); ++c) {
    if (!(px.column(c) == back.column(c))) {
      throw VerificationError("well defined on tensor quotient",
                              what + " does not preserve the relations at " + product.label(c));
    }
  }
  return pushed;
}

BalancedTensor tensorOverB(const RightModule& m, const LeftModule& n) {
  if (m.algebra->dim() != n.algebra->dim()) throw ShapeError("tensorOverB: modules over different algebras");
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  const std::size_t db = m.algebra->dim();
  std::vector<Vector> relations;
  for (std::size_t p = 0; p < dm; ++p) {
    for (std::size_t j = 0; j < db; ++j) {
      for (std::size_t q = 0; q < dn; ++q) {
        Vector r(dm * dn);
        for (std::size_t s = 0; s < dm; ++s) {
          const Scalar& c = m.action[j](s, p);
          if (!c.isZero()) r[s * dn + q] += c;
        }
        for (std::size_t s = 0; s < dn; ++s) {
          const Scalar& c = n.action[j](s, q);
          if (!c.isZero()) r[p * dn + s] -= c;
        }
        if (!isZero(r)) relations.push_back(std::move(r));
      }
    }
  }
  BalancedTensor t;
  t.product = tensorSpace(m.space, n.space);
  t.quotient = quotientSpace(t.product, relations);
  t.leftDim = dm;
  t.rightDim = dn;
  return t;
}

LeftModule tensorLeftAction(const BalancedTensor& t, const LeftModule& onM) {
  if (onM.dim() != t.leftDim) throw ShapeError("left action does not live on the left factor");
  LeftModule out{onM.algebra, t.space(), std::vector<Matrix>(onM.action.size())};
  const Matrix id = Matrix::identity(t.rightDim);
  parallelFor(onM.action.size(), [&](std::size_t i) {
    out.action[i] = t.transport(kronecker(onM.action[i], id), "left action of " + onM.algebra->space().label(i));
  });
  return out;
}

RightModule tensorRightAction(const BalancedTensor& t, const RightModule& onN) {
  if (onN.dim() != t.rightDim) throw ShapeError("right action does not live on the right factor");
  RightModule out{onN.algebra, t.space(), std::vector<Matrix>(onN.action.size())};
  const Matrix id = Matrix::identity(t.leftDim);
  parallelFor(onN.action.size(), [&](std::size_t i) {
    out.action[i] = t.transport(kronecker(id, onN.action[i]), "right action of " + onN.algebra->space().label(i));
  });
  return out;
}

TensorBimodule tensorBimodule(const Bimodule& m, const Bimodule& n) {
  TensorBimodule out;
  out.tensor = tensorOverB(m.right, n.left);
  out.bimodule.left = tensorLeftAction(out.tensor, m.left);
  out.bimodule.right = tensorRightAction(out.tensor, n.right);
  Report r = verifyBimodule(out.bimodule);
  if (const Check* f = r.firstFailure()) throw VerificationError("tensor bimodule: " + f->name, f->witness);
  return out;
}

Matrix unitTensorIso(const BalancedTensor& t, const LeftModule& n) {
  const std::size_t dn = n.dim();
  if (t.rightDim != dn || t.leftDim != n.algebra->dim()) throw ShapeError("unitTensorIso: tensor is not B ⊗_B N");
  // μ on B⊗N: column (b, ν) is b·e_ν.
  Matrix mu(dn, t.leftDim * dn);
  for (std::size_t b = 0; b < t.leftDim; ++b) {
    for (std::size_t v = 0; v < dn; ++v) mu.setColumn(b * dn + v, n.action[b].column(v));
  }
  Matrix iso = mu * t.quotient.section.matrix;
  if (!(iso * t.quotient.proj.matrix == mu)) {
    throw VerificationError("unit tensor iso", "b⊗n ↦ bn does not vanish on the balancing relations");
  }
  if (!inverse(iso)) throw VerificationError("unit tensor iso", "B ⊗_B N -> N is not bijective");
  return iso;
}

BDual homOverB(const HopfSubalgebraEmbedding& e) {
  const Algebra& a = e.ambient->alg();
  const Algebra& b = e.sub->alg();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t n = da * db;  // θ is db x da, flattened row-major
  std::vector<Matrix> leftB(db);
  for (std::size_t j = 0; j < db; ++j) leftB[j] = b.leftMultiplication(b.basisVector(j));

  // θ(b_j e_i) - b_j θ(e_i) = 0
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < db; ++j) {
    Vector bj = e.incl.column(j);
    for (std::size_t i = 0; i < da; ++i) {
      Vector x = a.multiply(bj, a.basisVector(i));
      for (std::size_t r = 0; r < db; ++r) {
        Vector row(n);
        for (std::size_t c = 0; c < da; ++c) {
          if (!x[c].isZero()) row[r * da + c] += x[c];
        }
        for (std::size_t s = 0; s < db; ++s) {
          if (!leftB[j](r, s).isZero()) row[s * da + i] -= leftB[j](r, s);
        }
        if (!isZero(row)) rows.push_back(std::move(row));
      }
    }
  }
  BDual out;
  out.span = Subspace::span(n, kernelBasis(rows.empty() ? Matrix(0, n) : Matrix::fromRows(n, rows)));
  const std::size_t d = out.span.dim();
  for (std::size_t t = 0; t < d; ++t) out.maps.push_back(Matrix::fromFlat(db, da, out.span.basisVector(t)));

  auto coords = [&](const Matrix& theta, const std::string& what) {
    auto c = out.span.coordinates(theta.flat());
    if (!c) throw VerificationError("Hom_B(A,B) closure", what + " is not left B-linear");
    return *c;
  };
  AlgebraPtr aPtr = e.ambient->algebra;
  AlgebraPtr bPtr = e.sub->algebra;
  FiniteDimSpace space = FiniteDimSpace::numbered(d, "θ");
  LeftModule left{aPtr, space, {}};
  for (std::size_t i = 0; i < da; ++i) {
    Matrix ra = a.rightMultiplication(a.basisVector(i));
    std::vector<Vector> cols;
    for (std::size_t t = 0; t < d; ++t) cols.push_back(coords(out.maps[t] * ra, a.space().label(i) + "·θ" + std::to_string(t)));
    left.action.push_back(Matrix::fromColumns(d, cols));
  }
  RightModule right{bPtr, space, {}};
  for (std::size_t j = 0; j < db; ++j) {
    Matrix rb = b.rightMultiplication(b.basisVector(j));
    std::vector<Vector> cols;
    for (std::size_t t = 0; t < d; ++t) cols.push_back(coords(rb * out.maps[t], "θ" + std::to_string(t) + "·" + b.space().label(j)));
    right.action.push_back(Matrix::fromColumns(d, cols));
  }
  out.bimodule = Bimodule{std::move(left), std::move(right)};
  return out;
}

namespace {

Subspace invariantsOf(const std::vector<Matrix>& ops, const Matrix& alpha, std::size_t dim) {
  if (alpha.rows() != 1 || alpha.cols() != ops.size()) throw ShapeError("augmentation has the wrong shape");
  std::vector<Vector> rows;
  const Matrix id = Matrix::identity(dim);
  for (std::size_t x = 0; x < ops.size(); ++x) {
    Matrix m = ops[x] - alpha(0, x) * id;
    for (std::size_t r = 0; r < dim; ++r) {
      if (!isZero(m.row(r))) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    }
  }
  if (rows.empty()) return Subspace(dim, kernelBasis(Matrix(0, dim)));
  return Subspace::span(dim, kernelBasis(Matrix::fromRows(dim, rows)));
}

}  // namespace

Subspace invariantsLeft(const LeftModule& m, const Matrix& alpha) { return invariantsOf(m.action, alpha, m.dim()); }
Subspace invariantsRight(const RightModule& m, const Matrix& alpha) { return invariantsOf(m.action, alpha, m.dim()); }

EndomorphismAlgebra endomorphismAlgebraOfRightModule(const RightModule& m, const std::string& labelPrefix) {
  if (const Check* f = verifyRightModule(m).firstFailure()) throw HypothesisError("module axioms", f->name + ": " + f->witness);
  EndomorphismAlgebra e = commutantAlgebra(m.algebra->field(), m.dim(), m.action, labelPrefix);
  for (std::size_t b = 0; b < e.basis.size(); ++b) {
    for (std::size_t r = 0; r < m.action.size(); ++r) {
      if (!(e.basis[b] * m.action[r] == m.action[r] * e.basis[b])) {
        throw VerificationError("endomorphism algebra",
                                "basis element " + std::to_string(b) + " is not right " +
                                    m.algebra->space().label(r) + "-linear");
      }
    }
  }
  return e;
}

}  // namespace hopfind
