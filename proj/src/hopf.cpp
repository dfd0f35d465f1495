#include "hopfind/hopf.hpp"

#include "hopfind/error.hpp"
#include "hopfind/parallel.hpp"

namespace hopfind {

namespace {

/// First basis index k where the columns differ, as a witness string.
std::optional<std::string> firstColumnMismatch(const Matrix& lhs, const Matrix& rhs, const FiniteDimSpace& domain,
                                               const std::string& what) {
  for (std::size_t k = 0; k < lhs.cols(); ++k) {
    Vector a = lhs.column(k);
    Vector b = rhs.column(k);
    if (!(a == b)) return what + " fails at " + domain.label(k) + ": " + formatVector(a) + " vs " + formatVector(b);
  }
  return std::nullopt;
}

void addColumnCheck(Report& report, const std::string& name, const Matrix& lhs, const Matrix& rhs,
                    const FiniteDimSpace& domain) {
  auto w = firstColumnMismatch(lhs, rhs, domain, name);
  report.add(name, !w, w.value_or(""));
}

void addSubReport(Report& report, const std::string& name, const Report& sub) {
  const Check* f = sub.firstFailure();
  report.add(name, f == nullptr, f ? f->name + ": " + f->witness : "");
}

Matrix unitColumn(const Algebra& a) { return Matrix::fromColumns(a.dim(), std::vector<Vector>{a.unit()}); }

Vector power(const Algebra& a, const Vector& x, std::size_t e) {
  Vector r = a.unit();
  for (std::size_t i = 0; i < e; ++i) r = a.multiply(r, x);
  return r;
}

Scalar scalarPower(Scalar q, std::size_t e) {
  Scalar r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

void throwOnFailure(const Report& r) {
  if (const Check* f = r.firstFailure()) throw HypothesisError(f->name, f->witness);
}

}  // namespace

std::vector<std::tuple<std::size_t, std::size_t, Scalar>> HopfAlgebra::sweedler(std::size_t k) const {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  const std::size_t d = dim();
  for (std::size_t pq = 0; pq < d * d; ++pq) {
    const Scalar& c = delta(pq, k);
    if (!c.isZero()) out.emplace_back(pq / d, pq % d, c);
  }
  return out;
}

Report verifyHopf(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  if (h.delta.rows() != d * d || h.delta.cols() != d || h.counit.rows() != 1 || h.counit.cols() != d ||
      h.antipode.rows() != d || h.antipode.cols() != d) {
    throw ShapeError("Hopf structure maps have the wrong shape");
  }
  Report report;
  const Matrix id = Matrix::identity(d);
  const FiniteDimSpace& sp = h.space();
  addColumnCheck(report, "coassociativity", kronecker(h.delta, id) * h.delta, kronecker(id, h.delta) * h.delta, sp);

  auto left = firstColumnMismatch(kronecker(h.counit, id) * h.delta, id, sp, "(ε⊗id)Δ = id");
  auto right = firstColumnMismatch(kronecker(id, h.counit) * h.delta, id, sp, "(id⊗ε)Δ = id");
  report.add("counit", !left && !right, left ? *left : right.value_or(""));

  Algebra aa = tensorAlgebra(h.alg(), h.alg());
  addSubReport(report, "delta multiplicative", verifyAlgebraMorphism(h.alg(), aa, h.delta));
  addSubReport(report, "counit multiplicative", verifyAlgebraMorphism(h.alg(), groundAlgebra(h.field()), h.counit));

  const Matrix m = multiplicationMap(h.alg());
  const Matrix ue = unitColumn(h.alg()) * h.counit;
  auto sl = firstColumnMismatch(m * kronecker(h.antipode, id) * h.delta, ue, sp, "m(S⊗id)Δ = uε");
  auto sr = firstColumnMismatch(m * kronecker(id, h.antipode) * h.delta, ue, sp, "m(id⊗S)Δ = uε");
  report.add("antipode", !sl && !sr, sl ? *sl : sr.value_or(""));
  return report;
}

HopfAlgebra trivialHopf(Field field) {
  HopfAlgebra h;
  h.algebra = makeAlgebra(groundAlgebra(field));
  h.delta = Matrix::identity(1);
  h.counit = Matrix::identity(1);
  h.antipode = Matrix::identity(1);
  return h;
}

HopfAlgebra groupAlgebra(const FiniteGroup& g, Field field) {
  const std::size_t n = g.order();
  HopfAlgebra h;
  h.algebra = makeAlgebra(field, FiniteDimSpace(g.labels()),
                          [&](std::size_t a, std::size_t b) { return unitVector(n, g.mul(a, b)); },
                          unitVector(n, g.identity()));
  h.delta = Matrix(n * n, n);
  h.counit = Matrix(1, n);
  h.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.delta(a * n + a, a) = field.one();
    h.counit(0, a) = field.one();
    h.antipode(g.inverse(a), a) = field.one();
  }
  return h;
}

HopfAlgebra dualHopf(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  std::vector<std::string> labels;
  for (const auto& l : h.space().labels()) labels.push_back("δ" + l);
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = h.delta(i * d + j, k);
        if (!c.isZero()) products[i * d + j].emplace_back(static_cast<std::uint32_t>(k), c);
      }
    }
  }
  HopfAlgebra out;
  out.algebra = makeAlgebra(h.field(), FiniteDimSpace(std::move(labels)), std::move(products),
                            Vector(h.counit.row(0).begin(), h.counit.row(0).end()));
  out.delta = multiplicationMap(h.alg()).transpose();
  out.counit = Matrix::fromRows(d, std::vector<Vector>{h.alg().unit()});
  out.antipode = h.antipode.transpose();
  return out;
}

Scalar primitiveRootOfUnity(std::size_t n, Field field) {
  if (n == 0) throw InputError("root of unity order must be positive");
  auto isPrimitive = [&](const Scalar& q) {
    if (!(scalarPower(q, n) == field.one())) return false;
    for (std::size_t k = 1; k < n; ++k) {
      if (scalarPower(q, k) == field.one()) return false;
    }
    return true;
  };
  if (!field.isPrime()) {
    for (const Scalar& q : {field.one(), field.fromInt(-1)}) {
      if (isPrimitive(q)) return q;
    }
    throw InputError("no primitive " + std::to_string(n) + "-th root of unity in " + field.name());
  }
  for (std::uint32_t v = 1; v < field.characteristic(); ++v) {
    Scalar q = field.fromInt(v);
    if (isPrimitive(q)) return q;
  }
  throw InputError("no primitive " + std::to_string(n) + "-th root of unity in " + field.name());
}

HopfAlgebra taftAlgebra(std::size_t n, const Scalar& qIn, Field field) {
  if (n < 2) throw InputError("Taft algebra needs n >= 2");
  const Scalar q = field.coerce(qIn);
  if (!(scalarPower(q, n) == field.one())) throw InputError("q is not an n-th root of unity");
  for (std::size_t k = 1; k < n; ++k) {
    if (scalarPower(q, k) == field.one()) throw InputError("q is not a primitive n-th root of unity");
  }
  const std::size_t d = n * n;
  auto index = [n](std::size_t i, std::size_t j) { return j * n + i; };
  auto label = [](std::size_t i, std::size_t j) {
    std::string s;
    if (i == 1) s += "g";
    else if (i > 1) s += "g^" + std::to_string(i);
    if (j == 1) s += "x";
    else if (j > 1) s += "x^" + std::to_string(j);
    return s.empty() ? std::string("1") : s;
  };
  std::vector<std::string> labels(d);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) labels[index(i, j)] = label(i, j);
  }
  // (g^a x^b)(g^c x^e) = q^{bc} g^{a+c} x^{b+e}
  auto product = [&](std::size_t s, std::size_t t) {
    std::size_t a = s % n, b = s / n, c = t % n, e = t / n;
    Vector v(d, field.zero());
    if (b + e < n) v[index((a + c) % n, b + e)] = scalarPower(q, b * c);
    return v;
  };
  HopfAlgebra h;
  h.algebra = makeAlgebra(field, FiniteDimSpace(std::move(labels)), product, unitVector(d, 0));
  const Algebra& a = h.alg();
  const Vector g = a.basisVector(index(1, 0));
  const Vector x = a.basisVector(index(0, 1));
  const Vector gInv = a.basisVector(index(n - 1, 0));

  Algebra aa = tensorAlgebra(a, a);
  const Vector dg = tensorVectors(g, g);
  const Vector dx = add(tensorVectors(x, a.unit()), tensorVectors(g, x));
  const Vector sx = scaled(-1, a.multiply(gInv, x));
  h.delta = Matrix(d * d, d);
  h.counit = Matrix(1, d);
  h.antipode = Matrix(d, d);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = index(i, j);
      h.delta.setColumn(k, aa.multiply(power(aa, dg, i), power(aa, dx, j)));
      h.antipode.setColumn(k, a.multiply(power(a, sx, j), power(a, gInv, i)));
      h.counit(0, k) = j == 0 ? field.one() : field.zero();
    }
  }
  return h;
}

Report verifyHopfMorphism(const HopfAlgebra& source, const HopfAlgebra& target, const Matrix& f) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) throw ShapeError("Hopf morphism matrix has the wrong shape");
  Report report;
  addSubReport(report, "algebra morphism", verifyAlgebraMorphism(source.alg(), target.alg(), f));
  addColumnCheck(report, "coproduct compatibility", target.delta * f, kronecker(f, f) * source.delta, source.space());
  addColumnCheck(report, "counit compatibility", target.counit * f, source.counit, source.space());
  addColumnCheck(report, "antipode compatibility", target.antipode * f, f * source.antipode, source.space());
  return report;
}

HopfMorphism makeHopfMorphism(HopfPtr source, HopfPtr target, Matrix map) {
  Report r = verifyHopfMorphism(*source, *target, map);
  return HopfMorphism{std::move(source), std::move(target), std::move(map), std::move(r)};
}

std::vector<std::size_t> computeFreeBasis(const HopfAlgebra& a, const HopfAlgebra& b, const Matrix& incl) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (db == 0 || da % db != 0) {
    throw HypothesisError("freeness", "dim B = " + std::to_string(db) + " does not divide dim A = " + std::to_string(da));
  }
  std::vector<Vector> image;
  for (std::size_t j = 0; j < db; ++j) image.push_back(incl.column(j));
  std::vector<Vector> current;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < da && current.size() < da; ++i) {
    std::vector<Vector> trial = current;
    for (const auto& bj : image) trial.push_back(a.alg().multiply(a.alg().basisVector(i), bj));
    if (rank(Matrix::fromRows(da, trial)) == trial.size()) {
      current = std::move(trial);
      chosen.push_back(i);
    }
  }
  if (current.size() != da) {
    throw HypothesisError("freeness", "greedy scan found only " + std::to_string(chosen.size()) +
                                          " free generators spanning dimension " + std::to_string(current.size()) +
                                          " of " + std::to_string(da));
  }
  return chosen;
}

HopfSubalgebraEmbedding makeEmbedding(HopfPtr sub, HopfPtr ambient, Matrix incl) {
  if (!(sub->field() == ambient->field())) throw InputError("embedding between Hopf algebras over different fields");
  Report report = verifyHopfMorphism(*sub, *ambient, incl);
  std::size_t r = rank(incl);
  report.add("injective", r == sub->dim(), "rank " + std::to_string(r) + " < dim B = " + std::to_string(sub->dim()));
  throwOnFailure(report);

  HopfSubalgebraEmbedding e;
  e.freeBasisIndices = computeFreeBasis(*ambient, *sub, incl);
  for (std::size_t i : e.freeBasisIndices) e.freeBasis.push_back(ambient->alg().basisVector(i));
  report.pass("free basis");
  e.sub = std::move(sub);
  e.ambient = std::move(ambient);
  e.incl = std::move(incl);
  e.verified = std::move(report);
  return e;
}

HopfSubalgebraEmbedding subgroupEmbedding(HopfPtr sub, HopfPtr ambient, const std::vector<std::size_t>& images) {
  if (images.size() != sub->dim()) throw ShapeError("subgroup embedding: one image per element required");
  Matrix incl(ambient->dim(), sub->dim());
  for (std::size_t j = 0; j < images.size(); ++j) incl(images[j], j) = ambient->field().one();
  return makeEmbedding(std::move(sub), std::move(ambient), std::move(incl));
}

std::vector<Vector> augmentationIdealImage(const HopfSubalgebraEmbedding& e) {
  std::vector<Vector> out;
  for (const Vector& k : kernelBasis(e.sub->counit)) out.push_back(e.incl.apply(k));
  return out;
}

NormalHopfQuotient normalHopfQuotient(EmbeddingPtr kernel) {
  const HopfAlgebra& b = *kernel->ambient;
  const Algebra& alg = b.alg();
  const std::size_t d = b.dim();
  const std::vector<Vector> kplus = augmentationIdealImage(*kernel);

  std::vector<Vector> left;   // B K⁺
  std::vector<Vector> right;  // K⁺ B
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& k : kplus) {
      left.push_back(alg.multiply(alg.basisVector(i), k));
      right.push_back(alg.multiply(k, alg.basisVector(i)));
    }
  }
  Subspace bk = Subspace::span(d, left);
  Subspace kb = Subspace::span(d, right);
  for (std::size_t t = 0; t < left.size(); ++t) {
    if (!kb.contains(left[t])) {
      throw HypothesisError("normality", "BK⁺ != K⁺B: " + alg.space().label(t / kplus.size()) + "·(" +
                                             formatElement(alg.space(), kplus[t % kplus.size()]) + ") = " +
                                             formatElement(alg.space(), left[t]) + " is not in K⁺B");
    }
  }
  for (std::size_t t = 0; t < right.size(); ++t) {
    if (!bk.contains(right[t])) {
      throw HypothesisError("normality", "BK⁺ != K⁺B: (" + formatElement(alg.space(), kplus[t % kplus.size()]) +
                                             ")·" + alg.space().label(t / kplus.size()) + " = " +
                                             formatElement(alg.space(), right[t]) + " is not in BK⁺");
    }
  }

  Report report;
  report.pass("normality");
  // Hopf ideal: Δ(I) ⊆ I⊗B + B⊗I, S(I) ⊆ I, ε(I) = 0.
  std::vector<Vector> mixed;
  for (const auto& v : bk.basis()) {
    for (std::size_t j = 0; j < d; ++j) {
      mixed.push_back(tensorVectors(v, alg.basisVector(j)));
      mixed.push_back(tensorVectors(alg.basisVector(j), v));
    }
  }
  Subspace ib = Subspace::span(d * d, mixed);
  std::string coideal, sIdeal, eIdeal;
  for (const auto& v : bk.basis()) {
    if (coideal.empty() && !ib.contains(b.comultiply(v))) coideal = "Δ(" + formatElement(alg.space(), v) + ") ∉ I⊗B + B⊗I";
    if (sIdeal.empty() && !bk.contains(b.S(v))) sIdeal = "S(" + formatElement(alg.space(), v) + ") ∉ I";
    if (eIdeal.empty() && !b.epsilon(v).isZero()) eIdeal = "ε(" + formatElement(alg.space(), v) + ") != 0";
  }
  report.add("coideal", coideal.empty(), coideal);
  report.add("antipode stable", sIdeal.empty(), sIdeal);
  report.add("counit vanishes", eIdeal.empty(), eIdeal);
  if (const Check* f = report.firstFailure()) throw HypothesisError("hopf ideal", f->witness);

  Quotient q = quotientSpace(alg.space(), bk.basis());
  const Matrix& p = q.proj.matrix;
  const Matrix& s = q.section.matrix;
  auto hq = std::make_shared<HopfAlgebra>();
  hq->algebra = makeAlgebra(alg.field(), q.space,
                            [&](std::size_t x, std::size_t y) {
                              return p.apply(alg.multiply(alg.basisVector(q.representatives[x]),
                                                          alg.basisVector(q.representatives[y])));
                            },
                            p.apply(alg.unit()));
  hq->delta = kronecker(p, p) * b.delta * s;
  hq->counit = b.counit * s;
  hq->antipode = p * b.antipode * s;

  // The quotient maps must descend: P∘μ = μ̄∘(P⊗P) and likewise for Δ, ε, S.
  addColumnCheck(report, "product descends", p * multiplicationMap(alg), multiplicationMap(hq->alg()) * kronecker(p, p),
                 tensorSpace(alg.space(), alg.space()));
  addColumnCheck(report, "coproduct descends", kronecker(p, p) * b.delta, hq->delta * p, alg.space());
  addColumnCheck(report, "counit descends", b.counit, hq->counit * p, alg.space());
  addColumnCheck(report, "antipode descends", p * b.antipode, hq->antipode * p, alg.space());
  report.merge("quotient", verifyHopf(*hq));
  if (const Check* f = report.firstFailure()) throw HypothesisError("hopf ideal", f->name + ": " + f->witness);

  NormalHopfQuotient out;
  out.kernel = std::move(kernel);
  out.quotient = std::move(hq);
  out.proj = p;
  out.section = s;
  out.representatives = q.representatives;
  out.ideal = std::move(bk);
  out.verified = std::move(report);
  return out;
}

CoinvariantDualAlgebra buildF(EmbeddingPtr embedding) {
  const HopfAlgebra& a = *embedding->ambient;
  const HopfAlgebra& b = *embedding->sub;
  const Algebra& alg = a.alg();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();

  // Rows: conditions f(e_i b_j) - ε(b_j) f(e_i) = 0 in the unknowns f_k.
  std::vector<Vector> conditions;
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      Vector bj = embedding->incl.column(j);
      Vector row = alg.multiply(alg.basisVector(i), bj);
      row[i] -= b.counit(0, j);
      if (!isZero(row)) conditions.push_back(std::move(row));
    }
  }
  Matrix system = conditions.empty() ? Matrix(0, da) : Matrix::fromRows(da, conditions);
  CoinvariantDualAlgebra f;
  f.functionals = Subspace::span(da, kernelBasis(system));
  const std::size_t n = f.functionals.dim();
  if (n * db != da) {
    throw VerificationError("dim F", "dim F = " + std::to_string(n) + " but dim A / dim B = " +
                                         std::to_string(da) + "/" + std::to_string(db));
  }

  auto coords = [&](const Vector& functional, const std::string& what) {
    auto c = f.functionals.coordinates(functional);
    if (!c) throw VerificationError("F closure", what + " is not right B-linear");
    return *c;
  };
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> sw(da);
  for (std::size_t k = 0; k < da; ++k) sw[k] = a.sweedler(k);
  std::vector<SparseVector> products(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector& fx = f.functionals.basisVector(x);
      const Vector& fy = f.functionals.basisVector(y);
      Vector prod(da, a.field().zero());
      for (std::size_t k = 0; k < da; ++k) {
        for (const auto& [p, q, c] : sw[k]) prod[k] += c * fx[q] * fy[p];
      }
      products[x * n + y] = sparsify(coords(prod, "product f" + std::to_string(x) + "·f" + std::to_string(y)));
    }
  }
  Vector unit = coords(Vector(a.counit.row(0).begin(), a.counit.row(0).end()), "ε");
  f.algebra = makeAlgebra(a.field(), FiniteDimSpace::numbered(n, "f"), std::move(products), std::move(unit));

  // (e_i f)(a') = f(S(e_i) a'): as a row vector, f ∘ L_{S(e_i)}.
  f.action.resize(da);
  for (std::size_t i = 0; i < da; ++i) {
    Matrix ls = alg.leftMultiplication(a.S(alg.basisVector(i)));
    std::vector<Vector> cols;
    for (std::size_t x = 0; x < n; ++x) {
      const Vector& fx = f.functionals.basisVector(x);
      Vector moved = ls.transpose().apply(fx);
      cols.push_back(coords(moved, alg.space().label(i) + "·f" + std::to_string(x)));
    }
    f.action[i] = Matrix::fromColumns(n, cols);
  }
  f.embedding = std::move(embedding);
  return f;
}

InducedCoalgebra inducedCoalgebraC1(const CoinvariantDualAlgebra& f) {
  const HopfSubalgebraEmbedding& e = *f.embedding;
  const HopfAlgebra& a = *e.ambient;
  const Algebra& alg = a.alg();
  const std::size_t da = a.dim();

  std::vector<Vector> relations;  // A B⁺
  std::vector<Vector> bplus;
  for (const Vector& k : kernelBasis(e.sub->counit)) bplus.push_back(e.incl.apply(k));
  for (std::size_t i = 0; i < da; ++i) {
    for (const auto& v : bplus) relations.push_back(alg.multiply(alg.basisVector(i), v));
  }
  InducedCoalgebra c;
  c.quotient = quotientSpace(alg.space(), relations);
  const Matrix& p = c.quotient.proj.matrix;
  const Matrix& s = c.quotient.section.matrix;
  const std::size_t dc = c.quotient.space.dim();
  c.delta = kronecker(p, p) * a.delta * s;
  c.counit = a.counit * s;
  addColumnCheck(c.verified, "coproduct descends", kronecker(p, p) * a.delta, c.delta * p, alg.space());
  addColumnCheck(c.verified, "counit descends", a.counit, c.counit * p, alg.space());

  // (C₁^×)^op: δ_q ∗ δ_r = δ_r δ_q with (δ_r δ_q)(c) = Σ δ_r(c_(1)) δ_q(c_(2)).
  std::vector<std::string> labels;
  for (const auto& l : c.quotient.space.labels()) labels.push_back("δ" + l);
  std::vector<SparseVector> products(dc * dc);
  for (std::size_t q = 0; q < dc; ++q) {
    for (std::size_t r = 0; r < dc; ++r) {
      for (std::size_t t = 0; t < dc; ++t) {
        const Scalar& coeff = c.delta(r * dc + q, t);
        if (!coeff.isZero()) products[q * dc + r].emplace_back(static_cast<std::uint32_t>(t), coeff);
      }
    }
  }
  c.dualOp = makeAlgebra(a.field(), FiniteDimSpace(std::move(labels)), std::move(products),
                         Vector(c.counit.row(0).begin(), c.counit.row(0).end()));
  c.verified.merge("dual", verifyAlgebra(*c.dualOp));

  // δ_q ↦ δ_q ∘ p, which is row q of the projection.
  std::vector<Vector> cols;
  for (std::size_t q = 0; q < dc; ++q) {
    Vector row(p.row(q).begin(), p.row(q).end());
    auto coords = f.functionals.coordinates(row);
    if (!coords) throw VerificationError("C₁ dual", "δ" + c.quotient.space.label(q) + "∘p is not in F");
    cols.push_back(*coords);
  }
  c.iso = verifyIsomorphism(c.dualOp, f.algebra, Matrix::fromColumns(f.algebra->dim(), cols));
  c.verified.merge("iso", c.iso.report);
  return c;
}

}  // namespace hopfind
