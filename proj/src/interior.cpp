#include "hopfind/interior.hpp"

#include "hopfind/error.hpp"
#include "hopfind/parallel.hpp"

namespace hopfind {

namespace {

// C as a left B-module through σ: b·c = σ(b)c.
LeftModule leftVia(const InteriorAlgebra& c) {
  LeftModule m{c.base, c.algebra->space(), {}};
  for (std::size_t j = 0; j < c.base->dim(); ++j) m.action.push_back(c.algebra->leftMultiplication(c.sigma.column(j)));
  return m;
}

// C as a right B-module through σ: c·b = cσ(b).
RightModule rightVia(const InteriorAlgebra& c) {
  RightModule m{c.base, c.algebra->space(), {}};
  for (std::size_t j = 0; j < c.base->dim(); ++j) m.action.push_back(c.algebra->rightMultiplication(c.sigma.column(j)));
  return m;
}

// k as a right K-module through α_B restricted to K.
RightModule groundRight(const Subalgebra& k, const Matrix& alphaOnK) {
  RightModule m{k.algebra, FiniteDimSpace({"1"}), {}};
  for (std::size_t x = 0; x < k.algebra->dim(); ++x) {
    Matrix op(1, 1);
    op(0, 0) = alphaOnK(0, x);
    m.action.push_back(std::move(op));
  }
  return m;
}

InteriorAlgebra restrictInterior(const InteriorAlgebra& c, const Subalgebra& k) {
  return InteriorAlgebra{k.algebra, c.algebra, c.sigma * k.incl, {}};
}

void requireBase(const InteriorAlgebra& c, const Algebra& b, const std::string& where) {
  if (c.base->dim() != b.dim() || !sameStructureConstants(*c.base, b)) {
    throw ShapeError(where + ": interior algebra lives over a different base algebra");
  }
}

// X given on the product space of t, pushed to the quotient; throws unless X
// vanishes on the relations.
Matrix descend(const BalancedTensor& t, const Matrix& full, const std::string& what) {
  Matrix op = full * t.quotient.section.matrix;
  Matrix back = op * t.quotient.proj.matrix;
  for (std::size_t col = 0; col < full.cols(); ++col) {
    if (!(back.column(col) == full.column(col))) {
      throw VerificationError("well defined on tensor quotient", what + " does not vanish on the relations at " +
                                                                     t.product.label(col));
    }
  }
  return op;
}

Vector cProduct3(const Algebra& c, std::size_t left, std::span<const Scalar> middle, std::size_t right) {
  Vector u = zeroVector(c.dim());
  for (std::size_t k = 0; k < middle.size(); ++k) {
    if (!middle[k].isZero()) c.addBasisProduct(middle[k], left, k, u);
  }
  Vector w = zeroVector(c.dim());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!u[k].isZero()) c.addBasisProduct(u[k], k, right, w);
  }
  return w;
}

Vector tensor3(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) {
  return tensorVectors(tensorVectors(x, y), z);
}

std::vector<std::string> labelsOf(const FiniteDimSpace& space, const std::vector<Vector>& basis) {
  std::vector<std::string> out;
  for (const auto& v : basis) out.push_back(formatElement(space, v));
  return out;
}

Matrix requireLift(const Matrix& phi, std::size_t target) {
  auto lift = solveLinear(phi, unitVector(phi.rows(), target));
  if (!lift) throw HypothesisError("surjective", "basis element " + std::to_string(target) + " has no preimage");
  Matrix out(phi.cols(), 1);
  out.setColumn(0, *lift);
  return out;
}

void requireSurjective(const AugmentedMorphism& phi) {
  if (rank(phi.map) != phi.target.algebra->dim()) {
    throw HypothesisError("surjective", "φ has rank " + std::to_string(rank(phi.map)) + " < dim A = " +
                                            std::to_string(phi.target.algebra->dim()));
  }
}

void requireAugmented(const AugmentedMorphism& phi) {
  Report r = verifyAugmentedMorphism(phi);
  if (const Check* f = r.firstFailure()) throw HypothesisError("augmented morphism", f->name + ": " + f->witness);
}

}  // namespace

Report verifyInterior(const InteriorAlgebra& c) {
  Report report;
  report.merge("sigma", verifyAlgebraMorphism(*c.base, *c.algebra, c.sigma));
  if (!report.ok()) return report;
  report.merge("bimodule", verifyBimodule(Bimodule{leftVia(c), rightVia(c)}));
  return report;
}

InteriorAlgebra makeInterior(AlgebraPtr base, AlgebraPtr algebra, Matrix sigma) {
  if (sigma.rows() != algebra->dim() || sigma.cols() != base->dim()) throw ShapeError("σ must be dim C x dim B");
  InteriorAlgebra c{std::move(base), std::move(algebra), std::move(sigma), {}};
  c.verified = verifyInterior(c);
  if (const Check* f = c.verified.firstFailure()) throw HypothesisError("interior algebra", f->name + ": " + f->witness);
  return c;
}

InteriorAlgebra regularInterior(AlgebraPtr b) {
  const std::size_t d = b->dim();
  return makeInterior(b, b, Matrix::identity(d));
}

InteriorAlgebra groundInterior(AlgebraPtr b, const Matrix& augmentation) {
  return makeInterior(b, makeAlgebra(groundAlgebra(b->field())), augmentation);
}

EndomorphismInduction linckelmannInduction(const Bimodule& m, const InteriorAlgebra& c) {
  requireBase(c, *m.right.algebra, "linckelmannInduction");
  const Algebra& a = *m.left.algebra;
  EndomorphismInduction out;
  out.tensor = tensorOverB(m.right, leftVia(c));
  out.rightC = tensorRightAction(out.tensor, regularRight(c.algebra));
  out.leftA = tensorLeftAction(out.tensor, m.left).action;
  out.end = commutantAlgebra(a.field(), out.tensor.dim(), out.rightC.action, "E");
  Matrix structural(out.end.algebra->dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    structural.setColumn(i, out.end.coordinatesOf(out.leftA[i], "left multiplication by " + a.space().label(i)));
  }
  out.induced = InducedInteriorAlgebra{m.left.algebra, out.end.algebra, std::move(structural), {}};
  out.induced.verified.merge("structural", verifyAlgebraMorphism(a, *out.end.algebra, out.induced.structural));
  requirePassed(out.induced.verified, "Ind_M(C)");
  return out;
}

Bimodule bimoduleAlong(AlgebraPtr a, AlgebraPtr b, const Matrix& phi) {
  return Bimodule{regularLeft(a), restrictRight(regularRight(a), std::move(b), phi)};
}

Bimodule twistedAmbient(const FrobeniusSystem& sys) {
  const HopfSubalgebraEmbedding& e = *sys.embedding;
  AlgebraPtr a = e.ambient->algebra;
  RightModule right = twistRight(restrictRight(regularRight(a), e.sub->algebra, e.incl), sys.beta);
  return Bimodule{regularLeft(a), std::move(right)};
}

std::size_t TensorInduction::tripleIndex(std::size_t a, std::size_t c, std::size_t a2) const {
  const std::size_t da = sys->embedding->ambient->dim();
  return (a * coeff.algebra->dim() + c) * da + a2;
}

Vector TensorInduction::project(std::span<const Scalar> triple) const {
  if (triple.size() != projection.size()) throw ShapeError("element of A⊗C⊗A has the wrong length");
  Vector out = zeroVector(outer.dim());
  for (std::size_t v = 0; v < triple.size(); ++v) {
    if (triple[v].isZero()) continue;
    for (const auto& [q, coeffq] : projection[v]) out[q] += triple[v] * coeffq;
  }
  return out;
}

Vector TensorInduction::projectedProduct(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t da = sys->embedding->ambient->dim();
  const std::size_t dc = coeff.algebra->dim();
  const Algebra& c = *coeff.algebra;
  Vector out = zeroVector(outer.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].isZero()) continue;
    const std::size_t a1 = i / (dc * da), c1 = (i / da) % dc, a1r = i % da;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].isZero()) continue;
      const std::size_t a2 = j / (dc * da), c2 = (j / da) % dc, a2r = j % da;
      const Vector& mid = pairing[a1r * da + a2];
      if (isZero(mid)) continue;
      Vector w = cProduct3(c, c1, mid, c2);
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dc; ++k) {
        if (w[k].isZero()) continue;
        const Scalar coeffk = xy * w[k];
        for (const auto& [q, p] : projection[tripleIndex(a1, k, a2r)]) out[q] += coeffk * p;
      }
    }
  }
  return out;
}

TensorInduction puigInducedAlgebra(FrobeniusPtr sys, const InteriorAlgebra& c) {
  const HopfSubalgebraEmbedding& e = *sys->embedding;
  const Algebra& a = e.ambient->alg();
  const Algebra& b = e.sub->alg();
  requireBase(c, b, "puigInducedAlgebra");
  if (const Check* f = verifyFrobenius(*sys).firstFailure()) throw HypothesisError("Frobenius system", f->name + ": " + f->witness);
  const std::size_t da = a.dim();
  const std::size_t dc = c.algebra->dim();

  TensorInduction t;
  t.sys = sys;
  t.coeff = c;
  t.inner = tensorOverB(twistedAmbient(*sys).right, leftVia(c));
  RightModule innerRight = tensorRightAction(t.inner, rightVia(c));
  t.outer = tensorOverB(innerRight, restrictLeft(regularLeft(e.ambient->algebra), e.sub->algebra, e.incl));

  for (std::size_t rep : t.outer.quotient.representatives) {
    const std::size_t inner = t.inner.quotient.representatives[rep / da];
    t.reps.push_back({inner / dc, inner % dc, rep % da});
  }
  t.pairing.resize(da * da);
  for (std::size_t x = 0; x < da; ++x) {
    for (std::size_t y = 0; y < da; ++y) {
      Vector prod = zeroVector(da);
      a.addBasisProduct(1, x, y, prod);
      t.pairing[x * da + y] = c.sigma.apply(sys->betaInverse.apply(sys->phi.apply(prod)));
    }
  }
  Matrix p3 = t.outer.quotient.proj.matrix * kronecker(t.inner.quotient.proj.matrix, Matrix::identity(da));
  for (std::size_t v = 0; v < p3.cols(); ++v) t.projection.push_back(sparsify(p3.column(v)));

  const std::size_t n = t.outer.dim();
  auto basisTriple = [&](std::size_t q) {
    const auto& [x, y, z] = t.reps[q];
    return unitVector(da * dc * da, t.tripleIndex(x, y, z));
  };
  std::vector<Vector> basisTriples;
  for (std::size_t q = 0; q < n; ++q) basisTriples.push_back(basisTriple(q));

  Vector unitTriple = zeroVector(da * dc * da);
  for (std::size_t i = 0; i < sys->index(); ++i) axpy(1, tensor3(sys->r[i], c.algebra->unit(), sys->l[i]), unitTriple);
  std::vector<Vector> products(n * n);
  parallelFor(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = t.projectedProduct(basisTriples[i], basisTriples[j]);
  });
  AlgebraPtr carrier = makeAlgebra(
      a.field(), t.outer.space(), [&](std::size_t i, std::size_t j) { return products[i * n + j]; },
      t.project(unitTriple));

  Report report;
  report.merge("algebra", verifyAlgebra(*carrier));

  // The relations of A_β⊗_B C⊗_B A are spanned by
  //   R1 = aβ(b)⊗c⊗a' - a⊗σ(b)c⊗a'  and  R2 = a⊗cσ(b)⊗a' - a⊗c⊗ba'.
  // Both families are stable under left multiplication of the first factor
  // and right multiplication of the last, so a relation times y₁⊗y_c⊗y₁'
  // vanishes iff it does with y₁' replaced by 1, and symmetrically.
  std::vector<Vector> relations;
  const Vector unitA = a.unit();
  const Vector unitC = c.algebra->unit();
  for (std::size_t x = 0; x < da; ++x) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vector xb = a.multiply(a.basisVector(x), e.includeVector(sys->beta.column(j)));
      Vector bx = a.multiply(e.incl.column(j), a.basisVector(x));
      for (std::size_t k = 0; k < dc; ++k) {
        Vector sc = c.algebra->multiply(c.sigma.column(j), c.algebra->basisVector(k));
        Vector cs = c.algebra->multiply(c.algebra->basisVector(k), c.sigma.column(j));
        for (std::size_t y = 0; y < da; ++y) {
          Vector r1 = subtract(tensor3(xb, unitVector(dc, k), unitVector(da, y)),
                               tensor3(unitVector(da, x), sc, unitVector(da, y)));
          Vector r2 = subtract(tensor3(unitVector(da, y), cs, unitVector(da, x)),
                               tensor3(unitVector(da, y), unitVector(dc, k), bx));
          if (!isZero(r1)) relations.push_back(std::move(r1));
          if (!isZero(r2)) relations.push_back(std::move(r2));
        }
      }
    }
  }
  auto bad = firstWitness(relations.size(), [&](std::size_t r) -> std::optional<std::string> {
    for (std::size_t y = 0; y < da; ++y) {
      for (std::size_t k = 0; k < dc; ++k) {
        Vector right = tensor3(unitVector(da, y), unitVector(dc, k), unitA);
        Vector left = tensor3(unitA, unitVector(dc, k), unitVector(da, y));
        if (!isZero(t.projectedProduct(relations[r], right))) {
          return "relation · (" + a.space().label(y) + "⊗" + c.algebra->space().label(k) + "⊗1) is not a relation";
        }
        if (!isZero(t.projectedProduct(left, relations[r]))) {
          return "(1⊗" + c.algebra->space().label(k) + "⊗" + a.space().label(y) + ") · relation is not a relation";
        }
      }
    }
    return std::nullopt;
  });
  report.add("product well defined", !bad, bad ? bad->second : "");

  Matrix tau(n, da);
  for (std::size_t x = 0; x < da; ++x) {
    Vector sum = zeroVector(da * dc * da);
    for (std::size_t i = 0; i < sys->index(); ++i) {
      axpy(1, tensor3(a.multiply(a.basisVector(x), sys->r[i]), unitC, sys->l[i]), sum);
    }
    tau.setColumn(x, t.project(sum));
  }
  report.merge("tau", verifyAlgebraMorphism(a, *carrier, tau));
  t.induced = InducedInteriorAlgebra{e.ambient->algebra, carrier, std::move(tau), std::move(report)};
  requirePassed(t.induced.verified, "A_β⊗_B C⊗_B A");
  return t;
}

PsiIsomorphism psiIsomorphism(const TensorInduction& t) {
  const FrobeniusSystem& sys = *t.sys;
  const Algebra& a = sys.embedding->ambient->alg();
  const Algebra& c = *t.coeff.algebra;
  const std::size_t da = a.dim();
  const std::size_t dc = c.dim();
  PsiIsomorphism out;
  out.endForm = linckelmannInduction(twistedAmbient(sys), t.coeff);
  const BalancedTensor& w = out.endForm.tensor;
  if (!(w.quotient.proj.matrix == t.inner.quotient.proj.matrix)) {
    throw VerificationError("Ψ", "A_β ⊗_B C differs between the two constructions");
  }
  const EndomorphismAlgebra& end = out.endForm.end;

  // Ψ_{a⊗c⊗a'} on the product space A⊗C, then pushed to the quotient.
  auto operatorOf = [&](std::size_t x, std::size_t k, std::size_t y) {
    Matrix full(w.dim(), da * dc);
    for (std::size_t bb = 0; bb < da; ++bb) {
      const Vector& mid = t.pairing[y * da + bb];
      for (std::size_t d = 0; d < dc; ++d) {
        Vector img = tensorVectors(unitVector(da, x), cProduct3(c, k, mid, d));
        full.setColumn(bb * dc + d, w.quotient.proj(img));
      }
    }
    std::string what = "Ψ(" + a.space().label(x) + "⊗" + c.space().label(k) + "⊗" + a.space().label(y) + ")";
    return end.coordinatesOf(descend(w, full, what), what);
  };

  const std::size_t n = t.outer.dim();
  Matrix psi(end.algebra->dim(), n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto& [x, k, y] = t.reps[q];
    psi.setColumn(q, operatorOf(x, k, y));
  }

  // Ψ must not depend on the representative of a class of A⊗C⊗A.
  const std::size_t triples = da * dc * da;
  auto bad = firstWitness(triples, [&](std::size_t v) -> std::optional<std::string> {
    const std::size_t x = v / (dc * da), k = (v / da) % dc, y = v % da;
    Vector direct = operatorOf(x, k, y);
    Vector viaClass = psi.apply(t.project(unitVector(triples, v)));
    if (direct == viaClass) return std::nullopt;
    return "Ψ(" + a.space().label(x) + "⊗" + c.space().label(k) + "⊗" + a.space().label(y) +
           ") differs from Ψ of its class";
  });

  Matrix psiInv(n, end.algebra->dim());
  for (std::size_t f = 0; f < end.basis.size(); ++f) {
    Vector sum = zeroVector(triples);
    for (std::size_t i = 0; i < sys.index(); ++i) {
      Vector ri = w.quotient.proj(tensorVectors(sys.r[i], c.unit()));
      Vector lifted = w.quotient.section(end.basis[f].apply(ri));
      axpy(1, tensorVectors(lifted, sys.l[i]), sum);
    }
    psiInv.setColumn(f, t.project(sum));
  }
  out.iso = verifyIsomorphism(t.induced.algebra, end.algebra, std::move(psi), std::move(psiInv), MorphismKind::Morphism,
                              InteriorCompat{t.induced.over, t.induced.structural, out.endForm.induced.structural});
  out.iso.report.add("well defined", !bad, bad ? bad->second : "");
  return out;
}

Subalgebra hopfSubalgebra(const HopfSubalgebraEmbedding& e) { return Subalgebra{e.sub->algebra, e.incl}; }

Subalgebra groundSubalgebra(const Algebra& b) {
  Matrix incl(b.dim(), 1);
  incl.setColumn(0, b.unit());
  return Subalgebra{makeAlgebra(groundAlgebra(b.field())), std::move(incl)};
}

Report verifyAugmentedMorphism(const AugmentedMorphism& phi) {
  Report report;
  report.merge("source", verifyAugmentation(phi.source));
  report.merge("target", verifyAugmentation(phi.target));
  report.merge("morphism", verifyAlgebraMorphism(*phi.source.algebra, *phi.target.algebra, phi.map));
  bool compatible = phi.target.augmentation * phi.map == phi.source.augmentation;
  report.add("augmentations compatible", compatible, "α_A∘φ != α_B");
  return report;
}

SandwichCheck checkSandwich(const AugmentedMorphism& phi, const Subalgebra& k) {
  const Algebra& b = *phi.source.algebra;
  const std::size_t db = b.dim();
  if (k.incl.rows() != db) throw ShapeError("K does not sit inside B");
  SandwichCheck s;
  s.kerPhi = Subspace::span(db, kernelBasis(phi.map));
  std::vector<Vector> aug;
  for (const auto& v : kernelBasis(phi.source.augmentation * k.incl)) aug.push_back(k.incl.apply(v));
  s.augmentedK = Subspace::span(db, aug);
  std::vector<Vector> right, left;
  for (const auto& m : s.augmentedK.basis()) {
    for (std::size_t j = 0; j < db; ++j) {
      right.push_back(b.multiply(m, b.basisVector(j)));
      left.push_back(b.multiply(b.basisVector(j), m));
    }
  }
  s.rightIdeal = Subspace::span(db, right);
  s.leftIdeal = Subspace::span(db, left);
  s.lower = s.kerPhi.containsAll(s.augmentedK);
  s.upper = s.rightIdeal.containsAll(s.kerPhi);
  s.upperLeft = s.leftIdeal.containsAll(s.kerPhi);
  if (!s.lower) {
    for (const auto& v : s.augmentedK.basis()) {
      if (!s.kerPhi.contains(v)) {
        s.witness = "Ker α_B ∩ K ⊄ Ker φ: " + formatElement(b.space(), v) + " is not killed by φ";
        break;
      }
    }
  } else if (!s.upper) {
    for (const auto& v : s.kerPhi.basis()) {
      if (!s.rightIdeal.contains(v)) {
        s.witness = "Ker φ ⊄ (Ker α_B ∩ K)B: " + formatElement(b.space(), v);
        break;
      }
    }
  }
  if (s.upper != s.upperLeft) {
    s.notes.push_back(std::string("Ker φ ⊆ (Ker α_B ∩ K)B ") + (s.upper ? "holds" : "fails") +
                      " while Ker φ ⊆ B(Ker α_B ∩ K) " + (s.upperLeft ? "holds" : "fails"));
  }
  if (!(s.rightIdeal.containsAll(s.leftIdeal) && s.leftIdeal.containsAll(s.rightIdeal))) {
    s.notes.push_back("(Ker α_B ∩ K)B has dimension " + std::to_string(s.rightIdeal.dim()) +
                      " and B(Ker α_B ∩ K) has dimension " + std::to_string(s.leftIdeal.dim()) + "; they differ");
  }
  return s;
}

SurjectiveLemma surjectiveInductionLemma(const AugmentedMorphism& phi, const Subalgebra& k, const InteriorAlgebra& c) {
  requireAugmented(phi);
  requireSurjective(phi);
  const Algebra& a = *phi.target.algebra;
  const Algebra& b = *phi.source.algebra;
  requireBase(c, b, "surjectiveInductionLemma");
  const Algebra& calg = *c.algebra;
  const std::size_t da = a.dim();
  const std::size_t dc = calg.dim();

  SurjectiveLemma out;
  out.sandwich = checkSandwich(phi, k);
  if (!out.sandwich.upper) throw HypothesisError("sandwich", out.sandwich.witness);
  Matrix alphaK = phi.source.augmentation * k.incl;
  out.lhs = tensorOverB(restrictRight(regularRight(phi.target.algebra), phi.source.algebra, phi.map), leftVia(c));
  out.rhs = tensorOverB(groundRight(k, alphaK), leftVia(restrictInterior(c, k)));

  Report report;
  // ψ(ā⊗c) = 1⊗σ(b)c for a fixed preimage b of ā.
  Matrix psiFull(out.rhs.dim(), da * dc);
  for (std::size_t x = 0; x < da; ++x) {
    Vector sb = c.sigmaOf(requireLift(phi.map, x).column(0));
    for (std::size_t d = 0; d < dc; ++d) {
      psiFull.setColumn(x * dc + d, out.rhs.quotient.proj(calg.multiply(sb, calg.basisVector(d))));
    }
  }
  std::string liftWitness;
  for (const auto& kappa : out.sandwich.kerPhi.basis()) {
    Vector sk = c.sigmaOf(kappa);
    for (std::size_t d = 0; d < dc && liftWitness.empty(); ++d) {
      if (!isZero(out.rhs.quotient.proj(calg.multiply(sk, calg.basisVector(d))))) {
        liftWitness = "1⊗σ(κ)c != 0 for κ = " + formatElement(b.space(), kappa) + " ∈ Ker φ, c = " + calg.space().label(d);
      }
    }
    if (!liftWitness.empty()) break;
  }
  report.add("ψ independent of lift", liftWitness.empty(), liftWitness);

  auto wellDefined = [&](const BalancedTensor& t, const Matrix& full, const std::string& name) {
    Matrix op = full * t.quotient.section.matrix;
    bool ok = op * t.quotient.proj.matrix == full;
    report.add(name + " well defined", ok, name + " does not vanish on the balancing relations");
    return op;
  };
  out.psi = wellDefined(out.lhs, psiFull, "ψ");
  Matrix invFull(out.lhs.dim(), dc);
  for (std::size_t d = 0; d < dc; ++d) {
    invFull.setColumn(d, out.lhs.quotient.proj(tensorVectors(a.unit(), calg.basisVector(d))));
  }
  out.psiInverse = wellDefined(out.rhs, invFull, "ψ⁻¹");
  report.add("ψ∘ψ⁻¹ = id", out.psi * out.psiInverse == Matrix::identity(out.rhs.dim()), "ψ∘ψ⁻¹ != id");
  report.add("ψ⁻¹∘ψ = id", out.psiInverse * out.psi == Matrix::identity(out.lhs.dim()), "ψ⁻¹∘ψ != id");

  RightModule onL = tensorRightAction(out.lhs, regularRight(c.algebra));
  RightModule onR = tensorRightAction(out.rhs, regularRight(c.algebra));
  std::string linWitness;
  for (std::size_t d = 0; d < dc && linWitness.empty(); ++d) {
    if (!(out.psi * onL.action[d] == onR.action[d] * out.psi)) linWitness = "ψ(x·c) != ψ(x)·c at c = " + calg.space().label(d);
  }
  report.add("right C-linear", linWitness.empty(), linWitness);
  out.verified = std::move(report);
  return out;
}

Vector SurjectiveInduction::lift(std::span<const Scalar> coords) const {
  return tensor.quotient.section(invariants.combine(coords));
}

SurjectiveInduction surjectivePuigInduction(const AugmentedMorphism& phi, const Subalgebra& k, const InteriorAlgebra& c) {
  requireAugmented(phi);
  requireSurjective(phi);
  const Algebra& a = *phi.target.algebra;
  const Algebra& b = *phi.source.algebra;
  requireBase(c, b, "surjectivePuigInduction");
  const Algebra& calg = *c.algebra;
  const std::size_t dc = calg.dim();

  SurjectiveInduction out;
  out.sandwich = checkSandwich(phi, k);
  if (!out.sandwich.lower || !out.sandwich.upper) throw HypothesisError("sandwich", out.sandwich.witness);
  Matrix alphaK = phi.source.augmentation * k.incl;
  InteriorAlgebra onK = restrictInterior(c, k);
  out.tensor = tensorOverB(groundRight(k, alphaK), leftVia(onK));
  RightModule rightK = tensorRightAction(out.tensor, rightVia(onK));
  out.invariants = invariantsRight(rightK, alphaK);
  const BalancedTensor& x = out.tensor;
  const std::size_t n = out.invariants.dim();

  auto coordsOf = [&](const Vector& classVec, const std::string& what) {
    auto co = out.invariants.coordinates(classVec);
    if (!co) throw VerificationError("closure", what + " is not K-invariant");
    return *co;
  };
  std::vector<Vector> lifts;
  for (std::size_t i = 0; i < n; ++i) lifts.push_back(out.lift(unitVector(n, i)));

  Report report;
  // Relations of k ⊗_K C are (α(x) - σ(x))c; the product must kill them on both sides.
  std::string wdWitness;
  for (std::size_t xk = 0; xk < k.algebra->dim() && wdWitness.empty(); ++xk) {
    Vector rel = subtract(scaled(alphaK(0, xk), calg.unit()), onK.sigma.column(xk));
    for (std::size_t d = 0; d < dc && wdWitness.empty(); ++d) {
      Vector rho = calg.multiply(rel, calg.basisVector(d));
      for (std::size_t i = 0; i < n && wdWitness.empty(); ++i) {
        if (!isZero(x.quotient.proj(calg.multiply(lifts[i], rho))) ||
            !isZero(x.quotient.proj(calg.multiply(rho, lifts[i])))) {
          wdWitness = "invariant " + std::to_string(i) + " times the relation at (" + k.algebra->space().label(xk) + ", " +
                      calg.space().label(d) + ") is not a relation";
        }
      }
    }
  }
  report.add("product well defined", wdWitness.empty(), wdWitness);

  std::vector<Vector> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      products[i * n + j] = coordsOf(x.quotient.proj(calg.multiply(lifts[i], lifts[j])),
                                     "product of invariants " + std::to_string(i) + ", " + std::to_string(j));
    }
  }
  Vector unit = coordsOf(x.quotient.proj(calg.unit()), "1⊗1");
  FiniteDimSpace space(labelsOf(x.space(), out.invariants.basis()));
  AlgebraPtr carrier = makeAlgebra(
      a.field(), space, [&](std::size_t i, std::size_t j) { return products[i * n + j]; }, unit);
  report.merge("algebra", verifyAlgebra(*carrier));

  // σ'(ā) = 1⊗σ(b) for a preimage b; Ker φ must map to zero.
  Matrix structural(n, a.dim());
  for (std::size_t xa = 0; xa < a.dim(); ++xa) {
    Vector img = x.quotient.proj(c.sigmaOf(requireLift(phi.map, xa).column(0)));
    structural.setColumn(xa, coordsOf(img, "σ'(" + a.space().label(xa) + ")"));
  }
  std::string liftWitness;
  for (const auto& kappa : out.sandwich.kerPhi.basis()) {
    if (!isZero(x.quotient.proj(c.sigmaOf(kappa)))) {
      liftWitness = "1⊗σ(κ) != 0 for κ = " + formatElement(b.space(), kappa);
      break;
    }
  }
  report.add("σ' independent of lift", liftWitness.empty(), liftWitness);
  report.merge("structural", verifyAlgebraMorphism(a, *carrier, structural));
  out.induced = InducedInteriorAlgebra{phi.target.algebra, carrier, std::move(structural), std::move(report)};
  requirePassed(out.induced.verified, "(k ⊗_K C)^K");
  return out;
}

GeneralInduction generalInduction(const AugmentedMorphism& phi, const Subalgebra& k, const InteriorAlgebra& c) {
  requireAugmented(phi);
  AlgebraPtr aPtr = phi.target.algebra;
  const Algebra& a = *aPtr;
  const Algebra& calg = *c.algebra;
  const std::size_t da = a.dim();
  const std::size_t dc = calg.dim();

  GeneralInduction out;
  out.direct = linckelmannInduction(bimoduleAlong(aPtr, phi.source.algebra, phi.map), c);

  // φ(B) with the basis of the reduced echelon form of the image.
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < phi.map.cols(); ++j) cols.push_back(phi.map.column(j));
  Subspace image = Subspace::span(da, cols);
  const std::size_t dp = image.dim();
  auto imageCoords = [&](const Vector& v, const std::string& what) {
    auto co = image.coordinates(v);
    if (!co) throw VerificationError("image subalgebra", what + " leaves φ(B)");
    return *co;
  };
  std::vector<Vector> products(dp * dp);
  for (std::size_t i = 0; i < dp; ++i) {
    for (std::size_t j = 0; j < dp; ++j) {
      products[i * dp + j] = imageCoords(a.multiply(image.basisVector(i), image.basisVector(j)), "a product");
    }
  }
  out.image = makeAlgebra(
      a.field(), FiniteDimSpace(labelsOf(a.space(), image.basis())),
      [&](std::size_t i, std::size_t j) { return products[i * dp + j]; }, imageCoords(a.unit(), "1"));
  out.imageInclusion = image.asMatrix();
  Matrix phiBar(dp, phi.map.cols());
  for (std::size_t j = 0; j < phi.map.cols(); ++j) phiBar.setColumn(j, imageCoords(phi.map.column(j), "φ(b)"));
  AugmentedMorphism corestriction{phi.source, AugmentedAlgebra{out.image, phi.target.augmentation * out.imageInclusion},
                                  phiBar};
  out.corestricted = surjectivePuigInduction(corestriction, k, c);
  const InducedInteriorAlgebra& d = out.corestricted.induced;
  InteriorAlgebra dInterior = makeInterior(out.image, d.algebra, d.structural);
  out.factored = linckelmannInduction(bimoduleAlong(aPtr, out.image, out.imageInclusion), dInterior);

  // Γ(f) = f ⊗_D id on A ⊗_{φ(B)} (k ⊗_K C) ≅ A_φ ⊗_B C:
  // Γ(f)(a⊗c) = Σ a'⊗ĉ(d)c over the terms a'⊗d of f(a⊗1_D).
  const BalancedTensor& x2 = out.factored.tensor;
  const BalancedTensor& w = out.direct.tensor;
  const std::size_t dd = d.algebra->dim();
  std::vector<Vector> dLift;
  for (std::size_t i = 0; i < dd; ++i) dLift.push_back(out.corestricted.lift(unitVector(dd, i)));
  const EndomorphismAlgebra& end2 = out.factored.end;
  Matrix gamma(out.direct.end.algebra->dim(), end2.algebra->dim());
  for (std::size_t f = 0; f < end2.basis.size(); ++f) {
    Matrix full(w.dim(), da * dc);
    for (std::size_t xa = 0; xa < da; ++xa) {
      Vector image2 = x2.quotient.section(end2.basis[f].apply(x2.quotient.proj(tensorVectors(a.basisVector(xa), d.algebra->unit()))));
      for (std::size_t xc = 0; xc < dc; ++xc) {
        Vector sum = zeroVector(da * dc);
        for (std::size_t a2 = 0; a2 < da; ++a2) {
          for (std::size_t di = 0; di < dd; ++di) {
            const Scalar& coeff = image2[a2 * dd + di];
            if (coeff.isZero()) continue;
            axpy(coeff, tensorVectors(a.basisVector(a2), calg.multiply(dLift[di], calg.basisVector(xc))), sum);
          }
        }
        full.setColumn(xa * dc + xc, w.quotient.proj(sum));
      }
    }
    std::string what = "Γ(" + end2.algebra->space().label(f) + ")";
    gamma.setColumn(f, out.direct.end.coordinatesOf(descend(w, full, what), what));
  }
  out.comparison = verifyIsomorphism(end2.algebra, out.direct.end.algebra, std::move(gamma), std::nullopt,
                                     MorphismKind::Morphism,
                                     InteriorCompat{aPtr, out.factored.induced.structural, out.direct.induced.structural});
  return out;
}

}  // namespace hopfind
