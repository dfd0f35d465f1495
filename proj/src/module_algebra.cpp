#include "hopfind/module_algebra.hpp"

#include <optional>

#include "hopfind/error.hpp"
#include "hopfind/parallel.hpp"

namespace hopfind {

namespace {

std::string basisLabel(const Algebra& a, std::size_t i) { return a.space().label(i); }

void requireShape(const ModuleAlgebra& ma) {
  const std::size_t dc = ma.algebra->dim();
  if (ma.action.size() != ma.hopf->dim()) throw ShapeError("module algebra needs one operator per basis element of B");
  for (const auto& m : ma.action) {
    if (m.rows() != dc || m.cols() != dc) throw ShapeError("module algebra operators must be dim C x dim C");
  }
}

}  // namespace

Matrix ModuleAlgebra::op(std::span<const Scalar> b) const {
  const std::size_t dc = algebra->dim();
  Matrix out(dc, dc);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].isZero()) out = out + b[i] * action[i];
  }
  return out;
}

Report verifyModuleAlgebra(const ModuleAlgebra& ma) {
  requireShape(ma);
  const HopfAlgebra& b = *ma.hopf;
  const Algebra& balg = b.alg();
  const Algebra& c = *ma.algebra;
  const std::size_t db = b.dim();
  const std::size_t dc = c.dim();
  Report report;

  {
    std::optional<std::string> w;
    if (!(ma.op(balg.unit()) == Matrix::identity(dc))) w = "1_B does not act as the identity";
    for (std::size_t i = 0; i < db && !w; ++i) {
      for (std::size_t j = 0; j < db && !w; ++j) {
        if (!(ma.op(balg.multiply(balg.basisVector(i), balg.basisVector(j))) == ma.action[i] * ma.action[j])) {
          w = "(" + basisLabel(balg, i) + basisLabel(balg, j) + ")·c != " + basisLabel(balg, i) + "·(" +
              basisLabel(balg, j) + "·c)";
        }
      }
    }
    report.add("module", !w, w.value_or(""));
  }

  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> sw(db);
  for (std::size_t k = 0; k < db; ++k) sw[k] = b.sweedler(k);
  auto product = firstWitness(db * dc * dc, [&](std::size_t t) -> std::optional<std::string> {
    const std::size_t i = t / (dc * dc);
    const std::size_t x = (t / dc) % dc;
    const std::size_t y = t % dc;
    Vector lhs = ma.action[i].apply(c.multiply(c.basisVector(x), c.basisVector(y)));
    Vector rhs = zeroVector(dc);
    for (const auto& [p, q, coeff] : sw[i]) {
      axpy(coeff, c.multiply(ma.action[p].column(x), ma.action[q].column(y)), rhs);
    }
    if (lhs == rhs) return std::nullopt;
    return "(b, c, c') = (" + basisLabel(balg, i) + ", " + basisLabel(c, x) + ", " + basisLabel(c, y) +
           "): b·(cc') = " + formatElement(c.space(), lhs) + " but Σ(b_(1)·c)(b_(2)·c') = " +
           formatElement(c.space(), rhs);
  });
  report.add("b·(cc') = Σ(b_(1)·c)(b_(2)·c')", !product, product ? product->second : "");

  std::optional<std::string> unitW;
  for (std::size_t i = 0; i < db && !unitW; ++i) {
    Vector lhs = ma.action[i].apply(c.unit());
    if (!(lhs == scaled(b.counit(0, i), c.unit()))) {
      unitW = "b = " + basisLabel(balg, i) + ": b·1 = " + formatElement(c.space(), lhs);
    }
  }
  report.add("b·1 = ε(b)1", !unitW, unitW.value_or(""));
  return report;
}

ModuleAlgebra makeModuleAlgebra(HopfPtr hopf, AlgebraPtr algebra, std::vector<Matrix> action) {
  ModuleAlgebra ma{std::move(hopf), std::move(algebra), std::move(action)};
  Report r = verifyModuleAlgebra(ma);
  if (const Check* f = r.firstFailure()) throw HypothesisError("module algebra", f->name + ": " + f->witness);
  return ma;
}

ModuleAlgebra trivialAction(HopfPtr b, AlgebraPtr c) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < b->dim(); ++i) action.push_back(b->counit(0, i) * Matrix::identity(c->dim()));
  return makeModuleAlgebra(std::move(b), std::move(c), std::move(action));
}

ModuleAlgebra adjointAction(HopfPtr b) {
  const Algebra& alg = b->alg();
  const std::size_t d = b->dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix m(d, d);
    for (const auto& [p, q, coeff] : b->sweedler(i)) {
      m = m + coeff * (alg.leftMultiplication(alg.basisVector(p)) * alg.rightMultiplication(b->S(alg.basisVector(q))));
    }
    action.push_back(std::move(m));
  }
  return makeModuleAlgebra(b, b->algebra, std::move(action));
}

ModuleAlgebra translationAction(HopfPtr h) {
  const Algebra& alg = h->alg();
  const std::size_t d = h->dim();
  AlgebraPtr functions = dualHopf(*h).algebra;
  std::vector<Matrix> action;
  // (e_i ⇀ δ_j)(e_m) = δ_j(e_m e_i).
  for (std::size_t i = 0; i < d; ++i) {
    Matrix m(d, d);
    for (std::size_t mm = 0; mm < d; ++mm) {
      for (const auto& [j, c] : alg.basisProduct(mm, i)) m(mm, j) += c;
    }
    action.push_back(std::move(m));
  }
  return makeModuleAlgebra(std::move(h), std::move(functions), std::move(action));
}

ModuleAlgebra restrictModuleAlgebra(const ModuleAlgebra& ma, const HopfSubalgebraEmbedding& e) {
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < e.sub->dim(); ++j) action.push_back(ma.op(e.incl.column(j)));
  return makeModuleAlgebra(e.sub, ma.algebra, std::move(action));
}

SmashProduct smashProduct(const ModuleAlgebra& ma) {
  requirePassed(verifyModuleAlgebra(ma), "smash product");
  const HopfAlgebra& b = *ma.hopf;
  const Algebra& balg = b.alg();
  const Algebra& c = *ma.algebra;
  const std::size_t db = b.dim();
  const std::size_t dc = c.dim();
  const std::size_t d = dc * db;

  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> sw(db);
  for (std::size_t k = 0; k < db; ++k) sw[k] = b.sweedler(k);
  std::vector<SparseVector> products(d * d);
  parallelFor(d * d, [&](std::size_t t) {
    const std::size_t x = t / d;
    const std::size_t y = t % d;
    const std::size_t cx = x / db, bx = x % db;
    const std::size_t cy = y / db, by = y % db;
    Vector out = zeroVector(d);
    for (const auto& [p, q, coeff] : sw[bx]) {
      Vector left = c.multiply(c.basisVector(cx), ma.action[p].column(cy));
      Vector right = balg.multiply(balg.basisVector(q), balg.basisVector(by));
      axpy(coeff, tensorVectors(left, right), out);
    }
    products[t] = sparsify(out);
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dc; ++i) {
    for (std::size_t j = 0; j < db; ++j) labels.push_back(c.space().label(i) + "#" + balg.space().label(j));
  }
  AlgebraPtr carrier = makeAlgebra(c.field(), FiniteDimSpace(std::move(labels)), std::move(products),
                                   tensorVectors(c.unit(), balg.unit()));
  requirePassed(verifyAlgebra(*carrier), "C#B");
  Matrix sigma(d, db);
  for (std::size_t j = 0; j < db; ++j) sigma.setColumn(j, tensorVectors(c.unit(), balg.basisVector(j)));
  return SmashProduct{ma, makeInterior(b.algebra, carrier, std::move(sigma))};
}

ModuleAlgebra moduleAlgebraOfF(const CoinvariantDualAlgebra& f) {
  return makeModuleAlgebra(f.embedding->ambient, f.algebra, f.action);
}

TurullInduction turullInduction(EmbeddingPtr e, const ModuleAlgebra& ma) {
  if (!sameStructureConstants(*ma.hopf->algebra, *e->sub->algebra)) {
    throw InputError("turullInduction: the module algebra is not over the subalgebra B");
  }
  requirePassed(verifyModuleAlgebra(ma), "turullInduction");
  TurullInduction t;
  t.coefficient = ma;
  t.f = buildF(e);
  t.fModule = moduleAlgebraOfF(t.f);
  const std::size_t dc = ma.algebra->dim();
  AlgebraPtr carrier = makeAlgebra(tensorAlgebra(*t.f.algebra, *ma.algebra));
  std::vector<Matrix> action;
  for (const auto& m : t.f.action) action.push_back(kronecker(m, Matrix::identity(dc)));
  t.induced = ModuleAlgebra{e->ambient, carrier, std::move(action)};
  requirePassed(verifyModuleAlgebra(t.induced), "F⊗C over A");
  return t;
}

GroupTurullComparison compareWithGroupTurull(const TurullInduction& t, const FiniteGroup& g,
                                             const std::vector<std::size_t>& subgroup) {
  const HopfSubalgebraEmbedding& e = *t.f.embedding;
  const ModuleAlgebra& coeff = t.coefficient;
  const Algebra& c = *coeff.algebra;
  const std::size_t dc = c.dim();
  const std::size_t n = t.f.algebra->dim();
  if (g.order() != e.ambient->dim() || subgroup.size() != e.sub->dim()) {
    throw ShapeError("compareWithGroupTurull: group data does not match the embedding");
  }
  auto inH = [&](std::size_t x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < subgroup.size(); ++i) {
      if (subgroup[i] == x) return i;
    }
    return std::nullopt;
  };
  const std::vector<std::size_t>& reps = e.freeBasisIndices;
  if (reps.size() != n) throw VerificationError("coset representatives", "free basis size differs from dim F");
  // gx = x'h with x' a representative and h ∈ H.
  auto decompose = [&](std::size_t gx) {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (auto h = inH(g.mul(g.inverse(reps[r]), gx))) return std::make_pair(r, *h);
    }
    throw VerificationError("coset representatives", g.label(gx) + " lies in no listed coset");
  };

  const std::size_t d = n * dc;
  std::vector<std::string> labels;
  for (std::size_t r : reps) {
    for (std::size_t i = 0; i < dc; ++i) labels.push_back(g.label(r) + "⊗" + c.space().label(i));
  }
  std::vector<SparseVector> products(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      if (x / dc != y / dc) continue;
      Vector prod = zeroVector(d);
      Vector cd = c.multiply(c.basisVector(x % dc), c.basisVector(y % dc));
      for (std::size_t i = 0; i < dc; ++i) prod[(x / dc) * dc + i] = cd[i];
      products[x * d + y] = sparsify(prod);
    }
  }
  Vector unit = zeroVector(d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < dc; ++i) unit[r * dc + i] = c.unit()[i];
  }
  GroupTurullComparison out;
  AlgebraPtr carrier = makeAlgebra(c.field(), FiniteDimSpace(std::move(labels)), std::move(products), unit);
  std::vector<Matrix> action;
  for (std::size_t gi = 0; gi < g.order(); ++gi) {
    Matrix m(d, d);
    for (std::size_t r = 0; r < n; ++r) {
      auto [r2, h] = decompose(g.mul(gi, reps[r]));
      for (std::size_t i = 0; i < dc; ++i) {
        Vector moved = coeff.action[h].column(i);
        for (std::size_t j = 0; j < dc; ++j) m(r2 * dc + j, r * dc + i) = moved[j];
      }
    }
    action.push_back(std::move(m));
  }
  out.turull = ModuleAlgebra{e.ambient, carrier, std::move(action)};

  // f⊗c ↦ Σ_x f(x) x⊗c.
  Matrix map(d, n * dc);
  for (std::size_t f = 0; f < n; ++f) {
    const Vector& fun = t.f.functional(f);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < dc; ++i) map(r * dc + i, f * dc + i) = fun[reps[r]];
    }
  }
  out.algebraIso = verifyIsomorphism(t.induced.algebra, carrier, map);
  std::optional<std::string> w;
  for (std::size_t gi = 0; gi < g.order() && !w; ++gi) {
    if (!(map * t.induced.action[gi] == out.turull.action[gi] * map)) {
      w = "g = " + g.label(gi) + ": the map does not intertwine the two actions";
    }
  }
  out.equivariance.add("G-equivariant", !w, w.value_or(""));
  out.equivariance.merge("turull module algebra", verifyModuleAlgebra(out.turull));
  return out;
}

SurjectiveTurull surjectiveTurull(NormalQuotientPtr q, const ModuleAlgebra& ma) {
  const HopfSubalgebraEmbedding& k = *q->kernel;
  if (!sameStructureConstants(*ma.hopf->algebra, *k.ambient->algebra)) {
    throw InputError("surjectiveTurull: the module algebra is not over B");
  }
  requirePassed(verifyModuleAlgebra(ma), "surjectiveTurull");
  const Algebra& c = *ma.algebra;

  SurjectiveTurull out;
  out.quotient = q;
  LeftModule onK{k.sub->algebra, c.space(), {}};
  for (std::size_t j = 0; j < k.sub->dim(); ++j) onK.action.push_back(ma.op(k.incl.column(j)));
  out.invariants = invariantsLeft(onK, k.sub->counit);
  const Subspace& inv = out.invariants;
  const std::size_t n = inv.dim();

  auto coords = [&](const Vector& v, const std::string& what) {
    auto co = inv.coordinates(v);
    if (!co) throw VerificationError("closure", what + " = " + formatElement(c.space(), v) + " is not K-invariant");
    return *co;
  };
  std::vector<Vector> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      products[i * n + j] = coords(c.multiply(inv.basisVector(i), inv.basisVector(j)),
                                   "product of invariants " + std::to_string(i) + ", " + std::to_string(j));
    }
  }
  Vector unit = coords(c.unit(), "1_C");
  std::vector<std::string> labels;
  for (const auto& v : inv.basis()) labels.push_back(formatElement(c.space(), v));
  AlgebraPtr carrier = makeAlgebra(
      c.field(), FiniteDimSpace(std::move(labels)), [&](std::size_t i, std::size_t j) { return products[i * n + j]; },
      unit);

  Report report;
  report.merge("algebra", verifyAlgebra(*carrier));
  // b̄·c = s(b̄)·c through the fixed section; BK⁺ must act as zero on C^K.
  std::optional<std::string> liftW;
  for (const auto& r : q->ideal.basis()) {
    Matrix act = ma.op(r);
    for (std::size_t i = 0; i < n && !liftW; ++i) {
      if (!isZero(act.apply(inv.basisVector(i)))) {
        liftW = formatElement(ma.hopf->space(), r) + " ∈ BK⁺ moves " + formatElement(c.space(), inv.basisVector(i));
      }
    }
    if (liftW) break;
  }
  report.add("action independent of lift", !liftW, liftW.value_or(""));

  const Matrix& section = q->section;
  std::vector<Matrix> action;
  for (std::size_t qb = 0; qb < q->quotient->dim(); ++qb) {
    Matrix act = ma.op(section.column(qb));
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.setColumn(i, coords(act.apply(inv.basisVector(i)), q->quotient->space().label(qb) + "·invariant"));
    }
    action.push_back(std::move(m));
  }
  out.induced = ModuleAlgebra{q->quotient, carrier, std::move(action)};
  report.merge("module algebra", verifyModuleAlgebra(out.induced));
  out.verified = std::move(report);
  requirePassed(out.verified, "C^K");
  return out;
}

}  // namespace hopfind
