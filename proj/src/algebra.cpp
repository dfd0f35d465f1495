#include "hopfind/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "hopfind/error.hpp"
#include "hopfind/parallel.hpp"

namespace hopfind {

SparseVector sparsify(std::span<const Scalar> v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].isZero()) out.emplace_back(static_cast<std::uint32_t>(k), v[k]);
  }
  return out;
}

namespace {

SparseVector normalized(const Field& field, const SparseVector& in, std::size_t dim) {
  SparseVector out;
  for (const auto& [k, c] : in) {
    if (k >= dim) throw ShapeError("structure constant index " + std::to_string(k) + " out of range");
    Scalar v = field.coerce(c);
    if (!v.isZero()) out.emplace_back(k, v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t t = 1; t < out.size(); ++t) {
    if (out[t].first == out[t - 1].first) throw ShapeError("duplicate structure constant entry");
  }
  return out;
}

Vector coerced(const Field& field, std::span<const Scalar> v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.coerce(v[i]);
  return out;
}

std::string showTriple(const Algebra& a, std::size_t i, std::size_t j, std::size_t l) {
  return "(" + a.space().label(i) + ", " + a.space().label(j) + ", " + a.space().label(l) + ")";
}

}  // namespace

Algebra::Algebra(Field field, FiniteDimSpace space, const ProductFn& products, Vector unit)
    : field_(field), space_(std::move(space)) {
  const std::size_t d = dim();
  if (unit.size() != d) throw ShapeError("algebra unit has wrong length");
  unit_ = coerced(field_, unit);
  products_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector v = products(i, j);
      if (v.size() != d) throw ShapeError("basis product has wrong length");
      products_[i * d + j] = sparsify(coerced(field_, v));
    }
  }
}

Algebra::Algebra(Field field, FiniteDimSpace space, std::vector<SparseVector> products, Vector unit)
    : field_(field), space_(std::move(space)) {
  const std::size_t d = dim();
  if (unit.size() != d) throw ShapeError("algebra unit has wrong length");
  if (products.size() != d * d) throw ShapeError("structure constant table has wrong size");
  unit_ = coerced(field_, unit);
  products_.reserve(d * d);
  for (const auto& p : products) products_.push_back(normalized(field_, p, d));
}

Scalar Algebra::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : basisProduct(i, j)) {
    if (idx == k) return c;
  }
  return field_.zero();
}

void Algebra::addBasisProduct(const Scalar& coeff, std::size_t i, std::size_t j, std::span<Scalar> out) const {
  if (coeff.isZero()) return;
  for (const auto& [k, c] : basisProduct(i, j)) out[k] += coeff * c;
}

Vector Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw ShapeError("algebra product: operand has wrong length");
  Vector out(d, field_.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!y[j].isZero()) addBasisProduct(x[i] * y[j], i, j, out);
    }
  }
  return out;
}

Matrix Algebra::leftMultiplication(std::span<const Scalar> x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].isZero()) continue;
      for (const auto& [k, c] : basisProduct(i, j)) m(k, j) += x[i] * c;
    }
  }
  return m;
}

Matrix Algebra::rightMultiplication(std::span<const Scalar> x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (x[j].isZero()) continue;
      for (const auto& [k, c] : basisProduct(i, j)) m(k, i) += x[j] * c;
    }
  }
  return m;
}

Matrix multiplicationMap(const Algebra& a) {
  const std::size_t d = a.dim();
  Matrix m(d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : a.basisProduct(i, j)) m(k, i * d + j) = c;
    }
  }
  return m;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.space_ == b.space_ && sameStructureConstants(a, b);
}

bool sameStructureConstants(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim() || !(a.unit() == b.unit())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.basisProduct(i, j) != b.basisProduct(i, j)) return false;
    }
  }
  return true;
}

Algebra groundAlgebra(Field field) {
  return Algebra(field, FiniteDimSpace({"1"}), [&](std::size_t, std::size_t) { return Vector{field.one()}; },
                 Vector{field.one()});
}

Report verifyAlgebra(const Algebra& a) {
  Report report;
  const std::size_t d = a.dim();
  auto assoc = firstWitness(d, [&](std::size_t i) -> std::optional<std::string> {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        Vector lhs(d, a.field().zero());
        Vector rhs(d, a.field().zero());
        for (const auto& [k, c] : a.basisProduct(i, j)) a.addBasisProduct(c, k, l, lhs);
        for (const auto& [k, c] : a.basisProduct(j, l)) a.addBasisProduct(c, i, k, rhs);
        if (!(lhs == rhs)) {
          return "(e_i e_j) e_l != e_i (e_j e_l) at " + showTriple(a, i, j, l) + ": " + formatVector(lhs) +
                 " vs " + formatVector(rhs);
        }
      }
    }
    return std::nullopt;
  });
  report.add("associativity", !assoc, assoc ? assoc->second : "");

  std::string unitWitness;
  for (std::size_t i = 0; i < d && unitWitness.empty(); ++i) {
    Vector e = a.basisVector(i);
    if (!(a.multiply(a.unit(), e) == e)) unitWitness = "1·" + a.space().label(i) + " != " + a.space().label(i);
    else if (!(a.multiply(e, a.unit()) == e))
      unitWitness = a.space().label(i) + "·1 != " + a.space().label(i);
  }
  report.add("unit", unitWitness.empty(), unitWitness);
  return report;
}

Algebra oppositeAlgebra(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) products[i * d + j] = a.basisProduct(j, i);
  }
  return Algebra(a.field(), a.space(), std::move(products), a.unit());
}

Algebra tensorAlgebra(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw ShapeError("tensor product of algebras over different fields");
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t d = da * db;
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector& out = products[i * d + j];
      const auto& pa = a.basisProduct(i / db, j / db);
      const auto& pb = b.basisProduct(i % db, j % db);
      for (const auto& [ka, ca] : pa) {
        for (const auto& [kb, cb] : pb) {
          out.emplace_back(static_cast<std::uint32_t>(ka * db + kb), ca * cb);
        }
      }
    }
  }
  return Algebra(a.field(), tensorSpace(a.space(), b.space()), std::move(products),
                 tensorVectors(a.unit(), b.unit()));
}

Algebra fullMatrixAlgebra(Field field, std::size_t n) {
  if (n == 0) throw ShapeError("matrix algebra needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) labels.push_back("E[" + std::to_string(s) + "," + std::to_string(t) + "]");
  }
  const std::size_t d = n * n;
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i % n == j / n) products[i * d + j].emplace_back(static_cast<std::uint32_t>((i / n) * n + j % n), field.one());
    }
  }
  Vector unit(d, field.zero());
  for (std::size_t s = 0; s < n; ++s) unit[s * n + s] = field.one();
  return Algebra(field, FiniteDimSpace(std::move(labels)), std::move(products), std::move(unit));
}

Algebra matrixAlgebra(std::size_t n, const Algebra& r) { return tensorAlgebra(fullMatrixAlgebra(r.field(), n), r); }

Report verifyAugmentation(const AugmentedAlgebra& a) {
  const Algebra& alg = *a.algebra;
  if (a.augmentation.rows() != 1 || a.augmentation.cols() != alg.dim()) {
    throw ShapeError("augmentation must be a 1 x dim matrix");
  }
  return verifyAlgebraMorphism(alg, groundAlgebra(alg.field()), a.augmentation);
}

Report verifyAlgebraMorphism(const Algebra& source, const Algebra& target, const Matrix& f, MorphismOptions options) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) {
    throw ShapeError("morphism matrix is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                     ", expected " + std::to_string(target.dim()) + "x" + std::to_string(source.dim()));
  }
  Report report;
  Vector image = f.apply(source.unit());
  report.add("unital", image == target.unit(), "f(1) = " + formatVector(image));

  const bool anti = options.kind == MorphismKind::AntiMorphism;
  const std::size_t d = source.dim();
  std::vector<Vector> columns(d);
  for (std::size_t i = 0; i < d; ++i) columns[i] = f.column(i);
  auto bad = firstWitness(d, [&](std::size_t i) -> std::optional<std::string> {
    for (std::size_t j = 0; j < d; ++j) {
      Vector lhs(target.dim(), target.field().zero());
      for (const auto& [k, c] : source.basisProduct(i, j)) axpy(c, columns[k], lhs);
      Vector rhs = anti ? target.multiply(columns[j], columns[i]) : target.multiply(columns[i], columns[j]);
      if (!(lhs == rhs)) {
        return "f(" + source.space().label(i) + "·" + source.space().label(j) + ") = " + formatVector(lhs) +
               " but " + (anti ? "f(y)f(x)" : "f(x)f(y)") + " = " + formatVector(rhs);
      }
    }
    return std::nullopt;
  });
  report.add(anti ? "anti-multiplicative" : "multiplicative", !bad, bad ? bad->second : "");

  if (options.requireBijective) {
    std::size_t r = rank(f);
    bool bij = source.dim() == target.dim() && r == source.dim();
    report.add("bijective", bij,
               "rank " + std::to_string(r) + " for dimensions " + std::to_string(source.dim()) + " -> " +
                   std::to_string(target.dim()));
  }
  return report;
}

Report verifyAntiMorphism(const Algebra& source, const Algebra& target, const Matrix& f, bool requireBijective) {
  return verifyAlgebraMorphism(source, target, f, {MorphismKind::AntiMorphism, requireBijective});
}

AlgebraMorphism makeMorphism(AlgebraPtr source, AlgebraPtr target, Matrix map) {
  Report r = verifyAlgebraMorphism(*source, *target, map);
  return AlgebraMorphism{std::move(source), std::move(target), std::move(map), std::move(r)};
}

VerifiedIsomorphism verifyIsomorphism(AlgebraPtr source, AlgebraPtr target, Matrix forward,
                                      std::optional<Matrix> backward, MorphismKind kind,
                                      std::optional<InteriorCompat> interior) {
  VerifiedIsomorphism iso;
  iso.report = verifyAlgebraMorphism(*source, *target, forward, {kind, true});
  if (!backward) {
    if (auto inv = inverse(forward)) backward = std::move(*inv);
  }
  if (backward) {
    bool shapes = backward->rows() == source->dim() && backward->cols() == target->dim();
    bool left = shapes && *backward * forward == Matrix::identity(source->dim());
    bool right = shapes && forward * *backward == Matrix::identity(target->dim());
    iso.report.add("inverse", left && right,
                   !shapes ? "backward map has the wrong shape"
                           : (!left ? "backward∘forward != id" : "forward∘backward != id"));
    iso.backward = std::move(*backward);
  } else {
    iso.report.fail("inverse", "forward map is not invertible");
  }
  if (interior) {
    const Matrix& sx = interior->sourceStructural;
    const Matrix& tx = interior->targetStructural;
    bool shapes = sx.rows() == source->dim() && tx.rows() == target->dim() && sx.cols() == tx.cols();
    std::string witness;
    if (!shapes) {
      witness = "structural maps have incompatible shapes";
    } else {
      Matrix moved = forward * sx;
      for (std::size_t x = 0; x < sx.cols() && witness.empty(); ++x) {
        if (!(moved.column(x) == tx.column(x))) {
          std::string label = interior->over ? interior->over->space().label(x) : std::to_string(x);
          witness = "iso(structural(" + label + ")) = " + formatVector(moved.column(x)) + " but structural(" +
                    label + ") = " + formatVector(tx.column(x));
        }
      }
    }
    iso.report.add("interior", witness.empty(), witness);
  }
  iso.source = std::move(source);
  iso.target = std::move(target);
  iso.forward = std::move(forward);
  iso.kind = kind;
  iso.interior = std::move(interior);
  return iso;
}

VerifiedIsomorphism composeIsomorphisms(const VerifiedIsomorphism& first, const VerifiedIsomorphism& second) {
  if (first.target->dim() != second.source->dim()) throw ShapeError("cannot compose isomorphisms: dimension mismatch");
  MorphismKind kind = first.kind == second.kind ? MorphismKind::Morphism : MorphismKind::AntiMorphism;
  std::optional<InteriorCompat> interior;
  if (first.interior && second.interior) {
    interior = InteriorCompat{first.interior->over, first.interior->sourceStructural,
                              second.interior->targetStructural};
  }
  std::optional<Matrix> back;
  if (first.backward.rows() > 0 && second.backward.rows() > 0) back = first.backward * second.backward;
  return verifyIsomorphism(first.source, second.target, second.forward * first.forward, std::move(back), kind,
                           std::move(interior));
}

Vector EndomorphismAlgebra::coordinatesOf(const Matrix& op, const std::string& what) const {
  auto c = span.coordinates(op.flat());
  if (!c) throw VerificationError("endomorphism membership", what + " is not in the endomorphism algebra");
  return *c;
}

Matrix EndomorphismAlgebra::operatorOf(std::span<const Scalar> coords) const {
  return Matrix::fromFlat(moduleDim, moduleDim, span.combine(coords));
}

EndomorphismAlgebra commutantAlgebra(Field field, std::size_t m, std::span<const Matrix> operators,
                                     const std::string& labelPrefix) {
  const std::size_t n = m * m;
  // Kernel of phi -> phi R - R phi, intersected one operator at a time.
  std::vector<Vector> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(unitVector(n, i));
  for (const Matrix& r : operators) {
    if (r.rows() != m || r.cols() != m) throw ShapeError("commutant: operator has wrong shape");
    std::vector<Vector> images(current.size());
    parallelFor(current.size(), [&](std::size_t b) {
      Matrix phi = Matrix::fromFlat(m, m, current[b]);
      images[b] = (phi * r - r * phi).flat();
    });
    Matrix system = Matrix::fromColumns(n, images);
    std::vector<Vector> next;
    for (const Vector& kv : kernelBasis(system)) {
      Vector combo(n, field.zero());
      for (std::size_t b = 0; b < kv.size(); ++b) axpy(kv[b], current[b], combo);
      next.push_back(std::move(combo));
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  EndomorphismAlgebra out;
  out.moduleDim = m;
  out.span = Subspace::span(n, current);
  const std::size_t d = out.span.dim();
  for (std::size_t b = 0; b < d; ++b) out.basis.push_back(Matrix::fromFlat(m, m, out.span.basisVector(b)));

  std::vector<SparseVector> products(d * d);
  parallelFor(d * d, [&](std::size_t ij) {
    Matrix prod = out.basis[ij / d] * out.basis[ij % d];
    auto c = out.span.coordinates(prod.flat());
    if (!c) throw VerificationError("commutant closure", "product of basis elements left the commutant");
    products[ij] = sparsify(*c);
  });
  auto unit = out.span.coordinates(Matrix::identity(m).flat());
  if (!unit) throw VerificationError("commutant unit", "identity is not in the commutant");
  out.algebra = makeAlgebra(field, FiniteDimSpace::numbered(d, labelPrefix), std::move(products), *unit);
  return out;
}

}  // namespace hopfind
