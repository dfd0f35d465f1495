#include "hopfind/duality.hpp"

#include <algorithm>

#include "hopfind/error.hpp"
#include "hopfind/parallel.hpp"

namespace hopfind {

namespace {

Scalar evaluate(std::span<const Scalar> f, std::span<const Scalar> x) {
  Scalar s = x.empty() ? Scalar(0) : x[0] * 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].isZero() && !f[i].isZero()) s += f[i] * x[i];
  }
  return s;
}

std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> sweedlerTable(const HopfAlgebra& h) {
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> sw(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) sw[k] = h.sweedler(k);
  return sw;
}

// ρ'(f#a)(x) = ψ_T(ρ^op(f#a))(x) with ψ_T(ζ)(x) = Σ T(x_(2)) ζ(x_(1)).
Report factorizationReport(const HopfAlgebra& a, const CoinvariantDualAlgebra& dual, const Matrix& t,
                           const std::string& name) {
  const Algebra& alg = a.alg();
  const std::size_t da = a.dim();
  const std::size_t n = dual.functionals.dim();
  auto sw = sweedlerTable(a);
  std::vector<Matrix> rho(n * da);
  parallelFor(n * da, [&](std::size_t i) { rho[i] = rhoOperator(a, dual.functional(i / da), i % da); });
  auto w = firstWitness(n * da * da, [&](std::size_t idx) -> std::optional<std::string> {
    const std::size_t f = idx / (da * da);
    const std::size_t ai = (idx / da) % da;
    const std::size_t x = idx % da;
    const Vector& fun = dual.functional(f);
    Vector lhs = scaled(evaluate(fun, a.antipode.column(x)), alg.basisVector(ai));
    Vector rhs = zeroVector(da);
    const Matrix& r = rho[f * da + ai];
    for (const auto& [p, q, c] : sw[x]) axpy(c, alg.multiply(t.column(q), r.column(p)), rhs);
    if (lhs == rhs) return std::nullopt;
    return "(f, a, x) = (" + dual.algebra->space().label(f) + ", " + alg.space().label(ai) + ", " +
           alg.space().label(x) + "): ρ'(f#a)(x) = " + formatElement(alg.space(), lhs) + " but ψ(ρ^op(f#a))(x) = " +
           formatElement(alg.space(), rhs);
  });
  Report report;
  report.add(name, !w, w ? w->second : "");
  return report;
}

Matrix coordinateColumns(const EndomorphismAlgebra& end, std::span<const Matrix> ops, const std::string& what) {
  Matrix out(end.algebra->dim(), ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) out.setColumn(i, end.coordinatesOf(ops[i], what));
  return out;
}

std::vector<Matrix> rightMultiplications(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.rightMultiplication(a.basisVector(i)));
  return out;
}

void dimensionCheck(Report& r, const std::string& name, std::size_t actual, std::size_t expected) {
  r.add(name, actual == expected, std::to_string(actual) + " != " + std::to_string(expected));
}

}  // namespace

EmbeddingPtr groundEmbedding(HopfPtr a) {
  Matrix incl(a->dim(), 1);
  incl.setColumn(0, a->alg().unit());
  auto k = std::make_shared<const HopfAlgebra>(trivialHopf(a->field()));
  return std::make_shared<const HopfSubalgebraEmbedding>(makeEmbedding(k, std::move(a), std::move(incl)));
}

Matrix rhoOperator(const HopfAlgebra& a, std::span<const Scalar> f, std::size_t aIndex) {
  const Algebra& alg = a.alg();
  const std::size_t da = a.dim();
  Matrix m(da, da);
  for (std::size_t x = 0; x < da; ++x) {
    Vector col = zeroVector(da);
    for (const auto& [p, q, c] : a.sweedler(x)) {
      Scalar coeff = c * evaluate(f, a.antipode.column(p));
      if (coeff.isZero()) continue;
      for (const auto& [k, v] : alg.basisProduct(q, aIndex)) col[k] += coeff * v;
    }
    m.setColumn(x, col);
  }
  return m;
}

RhoOp rhoOp(HopfPtr a) {
  const HopfAlgebra& h = *a;
  const std::size_t da = h.dim();
  RhoOp out;
  out.dual = buildF(groundEmbedding(a));
  out.smash = smashProduct(moduleAlgebraOfF(out.dual));
  out.endK = commutantAlgebra(h.field(), da, std::span<const Matrix>{}, "E");
  const std::size_t n = out.dual.functionals.dim();
  std::vector<Matrix> ops(n * da);
  parallelFor(n * da, [&](std::size_t i) { ops[i] = rhoOperator(h, out.dual.functional(i / da), i % da); });
  Matrix forward = coordinateColumns(out.endK, ops, "ρ^op(f#a)");
  out.iso = verifyIsomorphism(out.smash.interior.algebra, out.endK.algebra, std::move(forward), std::nullopt,
                              MorphismKind::AntiMorphism);
  out.factorization = factorizationReport(h, out.dual, h.antipode, "ρ' = ψ∘ρ^op");
  auto sInv = inverse(h.antipode);
  if (!sInv) throw VerificationError("antipode", "S is not invertible");
  out.factorizationInverse = factorizationReport(h, out.dual, *sInv, "ρ' = ψ∘ρ^op with S⁻¹ in ψ");
  return out;
}

EndomorphismAlgebra leftLinearEndomorphisms(const HopfSubalgebraEmbedding& e) {
  const Algebra& a = e.ambient->alg();
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < e.sub->dim(); ++j) ops.push_back(a.leftMultiplication(e.incl.column(j)));
  return commutantAlgebra(a.field(), a.dim(), ops, "E");
}

RhoF rhoF(EmbeddingPtr e) {
  const HopfAlgebra& a = *e->ambient;
  const Algebra& alg = a.alg();
  const std::size_t da = a.dim();
  const std::size_t db = e->sub->dim();
  RhoF out;
  out.f = buildF(e);
  out.smash = smashProduct(moduleAlgebraOfF(out.f));
  out.endB = leftLinearEndomorphisms(*e);
  out.endBOp = makeAlgebra(oppositeAlgebra(*out.endB.algebra));
  const std::size_t n = out.f.functionals.dim();

  dimensionCheck(out.dimensions, "dim F = dim A / dim B", n * db, da);
  dimensionCheck(out.dimensions, "dim F#A = (dim A)²/dim B", out.smash.alg().dim() * db, da * da);
  dimensionCheck(out.dimensions, "dim End_B(A) = (dim A)²/dim B", out.endB.algebra->dim() * db, da * da);

  std::vector<Matrix> ops(n * da);
  parallelFor(n * da, [&](std::size_t i) { ops[i] = rhoOperator(a, out.f.functional(i / da), i % da); });
  std::vector<Matrix> leftB;
  for (std::size_t j = 0; j < db; ++j) leftB.push_back(alg.leftMultiplication(e->incl.column(j)));
  auto w = firstWitness(n * da * db, [&](std::size_t idx) -> std::optional<std::string> {
    const std::size_t fa = idx / db;
    const std::size_t j = idx % db;
    Matrix lhs = ops[fa] * leftB[j];
    Matrix rhs = leftB[j] * ops[fa];
    for (std::size_t x = 0; x < da; ++x) {
      if (lhs.column(x) == rhs.column(x)) continue;
      return "(f, a, b, x) = (" + out.f.algebra->space().label(fa / da) + ", " + alg.space().label(fa % da) + ", " +
             e->sub->space().label(j) + ", " + alg.space().label(x) + "): ρ^op(f#a)(bx) = " +
             formatElement(alg.space(), lhs.column(x)) + " but b·ρ^op(f#a)(x) = " +
             formatElement(alg.space(), rhs.column(x));
    }
    return std::nullopt;
  });
  out.containment.add("ρ^op(F#A) ⊆ End_B(A)", !w, w ? w->second : "");
  requirePassed(out.containment, "ρ_F^op");

  Matrix forward = coordinateColumns(out.endB, ops, "ρ^op(f#a)");
  out.sourceStructural = Matrix(out.smash.alg().dim(), da);
  for (std::size_t i = 0; i < da; ++i) {
    out.sourceStructural.setColumn(i, tensorVectors(out.f.algebra->unit(), alg.basisVector(i)));
  }
  out.targetStructural = coordinateColumns(out.endB, rightMultiplications(alg), "x ↦ xa");
  out.iso = verifyIsomorphism(out.smash.interior.algebra, out.endBOp, std::move(forward), std::nullopt,
                              MorphismKind::Morphism,
                              InteriorCompat{e->ambient->algebra, out.sourceStructural, out.targetStructural});
  return out;
}

DualTranspose dualTranspose(EmbeddingPtr e) {
  const Algebra& alg = e->ambient->alg();
  const std::size_t da = alg.dim();
  DualTranspose out;
  out.endB = leftLinearEndomorphisms(*e);
  out.endBOp = makeAlgebra(oppositeAlgebra(*out.endB.algebra));
  out.dual = homOverB(*e);
  out.endDual = endomorphismAlgebraOfRightModule(out.dual.bimodule.right, "T");
  const std::size_t dd = out.dual.maps.size();

  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < out.endB.basis.size(); ++j) {
    Matrix star(dd, dd);
    for (std::size_t k = 0; k < dd; ++k) {
      auto c = out.dual.span.coordinates((out.dual.maps[k] * out.endB.basis[j]).flat());
      if (!c) throw VerificationError("f*", "θ∘f is not left B-linear for f = " + out.endB.algebra->space().label(j));
      star.setColumn(k, *c);
    }
    ops.push_back(std::move(star));
  }
  Matrix forward = coordinateColumns(out.endDual, ops, "f*");
  out.sourceStructural = coordinateColumns(out.endB, rightMultiplications(alg), "x ↦ xa");
  out.targetStructural = coordinateColumns(out.endDual, out.dual.bimodule.left.action, "θ ↦ aθ");
  (void)da;
  out.iso = verifyIsomorphism(out.endBOp, out.endDual.algebra, std::move(forward), std::nullopt, MorphismKind::Morphism,
                              InteriorCompat{e->ambient->algebra, out.sourceStructural, out.targetStructural});
  return out;
}

std::optional<Matrix> findBimoduleIso(const Bimodule& from, const Bimodule& to) {
  const std::size_t m = from.dim();
  const std::size_t t = to.dim();
  if (m != t) return std::nullopt;
  // Unknown U (t x m) flattened row-major; U X - Y U = 0 for paired actions.
  std::vector<Vector> rows;
  auto addPair = [&](const Matrix& x, const Matrix& y) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Vector row(t * m);
        for (std::size_t k = 0; k < m; ++k) {
          if (!x(k, j).isZero()) row[i * m + k] += x(k, j);
        }
        for (std::size_t k = 0; k < t; ++k) {
          if (!y(i, k).isZero()) row[k * m + j] -= y(i, k);
        }
        if (!isZero(row)) rows.push_back(std::move(row));
      }
    }
  };
  for (std::size_t a = 0; a < from.left.action.size(); ++a) addPair(from.left.action[a], to.left.action[a]);
  for (std::size_t b = 0; b < from.right.action.size(); ++b) addPair(from.right.action[b], to.right.action[b]);
  std::vector<Vector> sols =
      reducedBasis(kernelBasis(rows.empty() ? Matrix(0, t * m) : Matrix::fromRows(t * m, rows)), t * m);
  std::vector<Vector> candidates = sols;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    for (std::size_t j = i + 1; j < sols.size(); ++j) candidates.push_back(add(sols[i], sols[j]));
  }
  if (sols.size() > 2) {
    Vector all = zeroVector(t * m);
    for (const auto& s : sols) axpy(1, s, all);
    candidates.push_back(std::move(all));
  }
  for (const auto& c : candidates) {
    Matrix u = Matrix::fromFlat(t, m, c);
    if (rank(u) == m) return u;
  }
  return std::nullopt;
}

InjectiveTheorem theoremInjective(FrobeniusPtr sys, const ModuleAlgebra& ma) {
  EmbeddingPtr e = sys->embedding;
  const HopfAlgebra& a = *e->ambient;
  const Algebra& alg = a.alg();
  const Algebra& c = *ma.algebra;
  const std::size_t da = a.dim();
  const std::size_t db = e->sub->dim();
  const std::size_t dc = c.dim();
  const std::size_t n = e->index();
  AlgebraPtr aPtr = e->ambient->algebra;

  InjectiveTheorem thm;
  thm.sys = sys;
  thm.turull = turullInduction(e, ma);
  thm.source = smashProduct(thm.turull.induced);
  thm.coefficient = smashProduct(ma);
  thm.rho = rhoF(e);
  thm.transpose = dualTranspose(e);
  if (!sameStructureConstants(*thm.rho.endBOp, *thm.transpose.endBOp)) {
    throw VerificationError("End_B(A)", "the two constructions of End_B(A) differ");
  }
  const std::size_t expected = n * n * db * dc;
  dimensionCheck(thm.dimensions, "dim (F⊗C)#A = n²·dim B·dim C", thm.source.alg().dim(), expected);

  thm.sourceStructural = Matrix(thm.source.alg().dim(), da);
  for (std::size_t i = 0; i < da; ++i) {
    thm.sourceStructural.setColumn(i, tensorVectors(thm.turull.induced.algebra->unit(), alg.basisVector(i)));
  }

  // Step 1: (f⊗c)#a ↦ ρ_F^op(f#a) ⊗ c.
  AlgebraPtr t1 = makeAlgebra(tensorAlgebra(*thm.rho.endBOp, c));
  Matrix m1(t1->dim(), thm.source.alg().dim());
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t ci = 0; ci < dc; ++ci) {
      for (std::size_t ai = 0; ai < da; ++ai) {
        m1.setColumn((f * dc + ci) * da + ai,
                     tensorVectors(thm.rho.iso.forward.column(f * da + ai), c.basisVector(ci)));
      }
    }
  }
  Matrix struct1(t1->dim(), da);
  for (std::size_t i = 0; i < da; ++i) struct1.setColumn(i, tensorVectors(thm.rho.targetStructural.column(i), c.unit()));
  thm.step1 = verifyIsomorphism(thm.source.interior.algebra, t1, m1, std::nullopt, MorphismKind::Morphism,
                                InteriorCompat{aPtr, thm.sourceStructural, struct1});

  // Step 2: transpose ⊗ id.
  const EndomorphismAlgebra& endDual = thm.transpose.endDual;
  AlgebraPtr t2 = makeAlgebra(tensorAlgebra(*endDual.algebra, c));
  Matrix m2 = kronecker(thm.transpose.iso.forward, Matrix::identity(dc));
  Matrix struct2(t2->dim(), da);
  for (std::size_t i = 0; i < da; ++i) {
    struct2.setColumn(i, tensorVectors(thm.transpose.targetStructural.column(i), c.unit()));
  }
  thm.step2 = verifyIsomorphism(t1, t2, m2, std::nullopt, MorphismKind::Morphism, InteriorCompat{aPtr, struct1, struct2});

  // Step 3: Ψ(f*⊗c)(θ⊗c'#b') = f*(θ)⊗cc'#b', i.e. f* ⊗ left multiplication by c#1.
  thm.dualForm = linckelmannInduction(thm.transpose.dual.bimodule, thm.coefficient.interior);
  const Algebra& cb = thm.coefficient.alg();
  const Vector unitB = e->sub->alg().unit();
  Matrix m3(thm.dualForm.end.algebra->dim(), t2->dim());
  for (std::size_t j = 0; j < endDual.basis.size(); ++j) {
    for (std::size_t ci = 0; ci < dc; ++ci) {
      Matrix full = kronecker(endDual.basis[j], cb.leftMultiplication(tensorVectors(c.basisVector(ci), unitB)));
      std::string what = "Ψ(" + endDual.algebra->space().label(j) + "⊗" + c.space().label(ci) + ")";
      m3.setColumn(j * dc + ci, thm.dualForm.end.coordinatesOf(thm.dualForm.tensor.transport(full, what), what));
    }
  }
  dimensionCheck(thm.dimensions, "dim End_{(C#B)^op}(A*⊗_B C#B) = n²·dim B·dim C", thm.dualForm.end.algebra->dim(),
                 expected);
  thm.step3 = verifyIsomorphism(t2, thm.dualForm.end.algebra, m3, std::nullopt, MorphismKind::Morphism,
                                InteriorCompat{aPtr, struct2, thm.dualForm.induced.structural});

  // Step 4: A_β ≅ A* as (A,B)-bimodules.
  Bimodule twisted = twistedAmbient(*sys);
  auto u = findBimoduleIso(twisted, thm.transpose.dual.bimodule);
  if (!u) {
    Bimodule inverseTwist{regularLeft(aPtr), twistRight(restrictRight(regularRight(aPtr), e->sub->algebra, e->incl),
                                                        sys->betaInverse)};
    if (findBimoduleIso(inverseTwist, thm.transpose.dual.bimodule)) {
      throw HypothesisError("twist mismatch", "A_β ≇ A* as (A,B)-bimodules, but A_{β⁻¹} ≅ A*");
    }
    throw HypothesisError("bimodule iso", "no (A,B)-bimodule isomorphism A_β ≅ A*");
  }
  thm.bimoduleIso = *u;
  thm.twistedForm = linckelmannInduction(twisted, thm.coefficient.interior);
  const BalancedTensor& td = thm.dualForm.tensor;
  const BalancedTensor& tt = thm.twistedForm.tensor;
  Matrix lifted = td.quotient.proj.matrix * kronecker(thm.bimoduleIso, Matrix::identity(cb.dim()));
  Matrix w = lifted * tt.quotient.section.matrix;
  if (!(lifted == w * tt.quotient.proj.matrix)) {
    throw VerificationError("A_β ≅ A* on tensors", "u⊗id does not respect the balancing relations");
  }
  auto wInv = inverse(w);
  if (!wInv) throw VerificationError("A_β ≅ A* on tensors", "u⊗id is not bijective on the balanced tensors");
  Matrix m4(thm.twistedForm.end.algebra->dim(), thm.dualForm.end.algebra->dim());
  for (std::size_t j = 0; j < thm.dualForm.end.basis.size(); ++j) {
    m4.setColumn(j, thm.twistedForm.end.coordinatesOf(*wInv * thm.dualForm.end.basis[j] * w, "conjugated endomorphism"));
  }
  thm.step4 = verifyIsomorphism(thm.dualForm.end.algebra, thm.twistedForm.end.algebra, m4, std::nullopt,
                                MorphismKind::Morphism,
                                InteriorCompat{aPtr, thm.dualForm.induced.structural, thm.twistedForm.induced.structural});
  dimensionCheck(thm.dimensions, "dim Ind_{A_β}(C#B) = n²·dim B·dim C", thm.twistedForm.end.algebra->dim(), expected);

  // The composite is verified from scratch.
  thm.composite = verifyIsomorphism(thm.source.interior.algebra, thm.twistedForm.end.algebra, m4 * m3 * m2 * m1,
                                    std::nullopt, MorphismKind::Morphism,
                                    InteriorCompat{aPtr, thm.sourceStructural, thm.twistedForm.induced.structural});

  thm.report.merge("dimensions", thm.dimensions);
  thm.report.merge("ρ_F^op", thm.rho.dimensions);
  thm.report.merge("step 1", thm.step1.report);
  thm.report.merge("step 2", thm.step2.report);
  thm.report.merge("step 3", thm.step3.report);
  thm.report.merge("step 4", thm.step4.report);
  thm.report.merge("composite", thm.composite.report);
  return thm;
}

InjectiveCorollary corollaryInjective(const InjectiveTheorem& thm) {
  InjectiveCorollary out;
  out.tensorForm = puigInducedAlgebra(thm.sys, thm.coefficient.interior);
  out.psi = psiIsomorphism(out.tensorForm);
  if (!sameStructureConstants(*out.psi.endForm.end.algebra, *thm.twistedForm.end.algebra) ||
      !(out.psi.endForm.induced.structural == thm.twistedForm.induced.structural)) {
    throw VerificationError("corollary", "the endomorphism form of Ψ differs from the target of the theorem");
  }
  out.composite = verifyIsomorphism(
      thm.source.interior.algebra, out.tensorForm.induced.algebra, out.psi.iso.backward * thm.composite.forward,
      std::nullopt, MorphismKind::Morphism,
      InteriorCompat{thm.sys->embedding->ambient->algebra, thm.sourceStructural, out.tensorForm.induced.structural});
  return out;
}

SurjectiveTheorem theoremSurjective(NormalQuotientPtr q, const ModuleAlgebra& ma) {
  const HopfAlgebra& b = q->big();
  const Algebra& balg = b.alg();
  const Algebra& c = *ma.algebra;
  const HopfSubalgebraEmbedding& k = *q->kernel;
  const std::size_t db = b.dim();

  SurjectiveTheorem thm;
  thm.quotient = q;
  thm.turull = surjectiveTurull(q, ma);
  thm.source = smashProduct(thm.turull.induced);
  thm.coefficient = smashProduct(ma);
  AugmentedMorphism phi{AugmentedAlgebra{b.algebra, b.counit},
                        AugmentedAlgebra{q->quotient->algebra, q->quotient->counit}, q->proj};
  thm.target = surjectivePuigInduction(phi, hopfSubalgebra(k), thm.coefficient.interior);
  const Algebra& cb = thm.coefficient.alg();
  const Subspace& inv = thm.turull.invariants;
  const std::size_t n = inv.dim();
  const Quotient& tq = thm.target.tensor.quotient;

  std::optional<std::string> agree;
  for (std::size_t x = 0; x < k.sub->dim() && !agree; ++x) {
    Vector kx = k.incl.column(x);
    Vector sx = tensorVectors(c.unit(), kx);
    for (std::size_t i = 0; i < n && !agree; ++i) {
      for (std::size_t bi = 0; bi < db && !agree; ++bi) {
        Vector lhs = cb.multiply(sx, tensorVectors(inv.basisVector(i), balg.basisVector(bi)));
        Vector rhs = tensorVectors(inv.basisVector(i), balg.multiply(kx, balg.basisVector(bi)));
        if (!(lhs == rhs)) {
          agree = "(x, c, b) = (" + k.sub->space().label(x) + ", " + thm.turull.induced.algebra->space().label(i) +
                  ", " + balg.space().label(bi) + "): Σ x_(1)c#x_(2)b = " + formatElement(cb.space(), lhs) +
                  " but c#xb = " + formatElement(cb.space(), rhs);
        }
      }
    }
  }
  thm.actionsAgree.add("Σ x_(1)c#x_(2)b = c#xb on C^K", !agree, agree.value_or(""));

  std::optional<std::string> lift;
  for (const auto& r : q->ideal.basis()) {
    for (std::size_t i = 0; i < n && !lift; ++i) {
      if (!isZero(tq.proj(tensorVectors(inv.basisVector(i), r)))) {
        lift = "1⊗c#r != 0 for c = " + thm.turull.induced.algebra->space().label(i) +
               ", r = " + formatElement(balg.space(), r) + " ∈ BK⁺";
      }
    }
    if (lift) break;
  }
  thm.liftIndependence.add("Φ independent of lift", !lift, lift.value_or(""));

  const std::size_t dq = q->quotient->dim();
  Matrix forward(thm.target.invariants.dim(), n * dq);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t qb = 0; qb < dq; ++qb) {
      Vector cls = tq.proj(tensorVectors(inv.basisVector(i), q->section.column(qb)));
      auto co = thm.target.invariants.coordinates(cls);
      if (!co) {
        throw VerificationError("Φ lands in invariants", "1⊗c#b for (c, b̄) = (" +
                                                              thm.turull.induced.algebra->space().label(i) + ", " +
                                                              q->quotient->space().label(qb) + ") is not K-invariant");
      }
      forward.setColumn(thm.source.index(i, qb), *co);
    }
  }
  thm.iso = verifyIsomorphism(
      thm.source.interior.algebra, thm.target.induced.algebra, std::move(forward), std::nullopt, MorphismKind::Morphism,
      InteriorCompat{q->quotient->algebra, thm.source.interior.sigma, thm.target.induced.structural});

  thm.report.merge("actions", thm.actionsAgree);
  thm.report.merge("lift", thm.liftIndependence);
  thm.report.merge("Φ", thm.iso.report);
  return thm;
}

FiniteGroup subgroupOf(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  auto position = [&](std::size_t x) -> std::size_t {
    auto it = std::find(elements.begin(), elements.end(), x);
    if (it == elements.end()) throw InputError("subgroup is not closed: contains no " + g.label(x));
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(g.label(elements[i]));
    for (std::size_t j = 0; j < elements.size(); ++j) table[i][j] = position(g.mul(elements[i], elements[j]));
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

GroupSkewCorollary corollaryGroupSkew(const FiniteGroup& g, const std::vector<std::size_t>& normal, AlgebraPtr c,
                                      std::vector<Matrix> automorphisms) {
  const Field field = c->field();
  const std::size_t order = g.order();
  const std::size_t dc = c->dim();
  auto bHopf = std::make_shared<const HopfAlgebra>(groupAlgebra(g, field));
  auto kHopf = std::make_shared<const HopfAlgebra>(groupAlgebra(subgroupOf(g, normal), field));
  auto emb = std::make_shared<const HopfSubalgebraEmbedding>(subgroupEmbedding(kHopf, bHopf, normal));
  auto q = std::make_shared<const NormalHopfQuotient>(normalHopfQuotient(emb));
  ModuleAlgebra ma = makeModuleAlgebra(bHopf, c, automorphisms);

  GroupSkewCorollary out;
  out.theorem = theoremSurjective(q, ma);
  out.report.merge("theorem", out.theorem.report);

  // C*G: (c*g)(c'*g') = c(g·c') * gg'.
  {
    const std::size_t d = dc * order;
    std::vector<SparseVector> products(d * d);
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        const std::size_t gx = x % order;
        Vector left = c->multiply(c->basisVector(x / order), automorphisms[gx].column(y / order));
        const std::size_t gg = g.mul(gx, y % order);
        Vector prod = zeroVector(d);
        for (std::size_t i = 0; i < dc; ++i) prod[i * order + gg] = left[i];
        products[x * d + y] = sparsify(prod);
      }
    }
    Vector unit = zeroVector(d);
    for (std::size_t i = 0; i < dc; ++i) unit[i * order + g.identity()] = c->unit()[i];
    out.skew = makeAlgebra(field, FiniteDimSpace::numbered(d, "s"), std::move(products), unit);
  }
  out.report.add("C#kG = C*G", sameStructureConstants(*out.skew, out.theorem.coefficient.alg()),
                 "structure constants of C#kG differ from the skew group algebra");

  // Cosets gN indexed by the quotient representatives.
  const std::vector<std::size_t>& reps = q->representatives;
  auto inN = [&](std::size_t x) { return std::find(normal.begin(), normal.end(), x) != normal.end(); };
  auto coset = [&](std::size_t x) -> std::size_t {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (inN(g.mul(g.inverse(reps[r]), x))) return r;
    }
    throw VerificationError("cosets", g.label(x) + " lies in no coset of a representative");
  };
  const Subspace& inv = out.theorem.turull.invariants;
  const Algebra& ck = *out.theorem.turull.induced.algebra;
  const std::size_t n = inv.dim();
  const std::size_t nq = reps.size();
  {
    std::vector<Matrix> act;
    for (std::size_t r = 0; r < nq; ++r) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        auto co = inv.coordinates(automorphisms[reps[r]].apply(inv.basisVector(i)));
        if (!co) throw VerificationError("C^N", "G does not preserve the N-invariants");
        m.setColumn(i, *co);
      }
      act.push_back(std::move(m));
    }
    const std::size_t d = n * nq;
    std::vector<SparseVector> products(d * d);
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        Vector left = ck.multiply(ck.basisVector(x / nq), act[x % nq].column(y / nq));
        const std::size_t gg = coset(g.mul(reps[x % nq], reps[y % nq]));
        Vector prod = zeroVector(d);
        for (std::size_t i = 0; i < n; ++i) prod[i * nq + gg] = left[i];
        products[x * d + y] = sparsify(prod);
      }
    }
    Vector unit = zeroVector(d);
    for (std::size_t i = 0; i < n; ++i) unit[i * nq + coset(g.identity())] = ck.unit()[i];
    out.quotientSkew = makeAlgebra(field, FiniteDimSpace::numbered(d, "t"), std::move(products), unit);
  }
  out.report.add("C^N#kḠ = C^N*Ḡ", sameStructureConstants(*out.quotientSkew, out.theorem.source.alg()),
                 "structure constants of C^N#kḠ differ from the skew group algebra of Ḡ");

  out.generatorMap = Matrix(out.theorem.target.invariants.dim(), n * nq);
  for (std::size_t r = 0; r < nq; ++r) {
    std::size_t last = reps[r];
    for (std::size_t x = 0; x < order; ++x) {
      if (coset(x) == r) last = x;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Vector cls = out.theorem.target.tensor.quotient.proj(tensorVectors(inv.basisVector(i), unitVector(order, last)));
      auto co = out.theorem.target.invariants.coordinates(cls);
      if (!co) throw VerificationError("generator map", "1⊗c*g is not N-invariant");
      out.generatorMap.setColumn(i * nq + r, *co);
    }
  }
  out.report.add("generator map agrees with Φ", out.generatorMap == out.theorem.iso.forward,
                 "c*ḡ ↦ 1⊗c*g differs from Φ for another choice of g");
  return out;
}

}  // namespace hopfind
