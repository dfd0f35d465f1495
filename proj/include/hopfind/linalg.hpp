#ifndef HOPFIND_LINALG_HPP
#define HOPFIND_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfind/scalar.hpp"

namespace hopfind {

using Vector = std::vector<Scalar>;

Vector zeroVector(std::size_t n);
Vector unitVector(std::size_t n, std::size_t i);
bool isZero(std::span<const Scalar> v);
/// y += a * x
void axpy(const Scalar& a, std::span<const Scalar> x, std::span<Scalar> y);
Vector scaled(const Scalar& a, std::span<const Scalar> x);
Vector add(std::span<const Scalar> x, std::span<const Scalar> y);
Vector subtract(std::span<const Scalar> x, std::span<const Scalar> y);
/// Lexicographic (left factor major) tensor of coefficient vectors.
Vector tensorVectors(std::span<const Scalar> x, std::span<const Scalar> y);
std::string formatVector(std::span<const Scalar> v);

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix fromColumns(std::size_t rows, std::span<const Vector> columns);
  static Matrix fromRows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void setColumn(std::size_t c, std::span<const Scalar> v);

  /// Row-major flattening; the inverse of fromFlat.
  const std::vector<Scalar>& flat() const { return data_; }
  static Matrix fromFlat(std::size_t rows, std::size_t cols, std::span<const Scalar> v);

  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  bool isZero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A dimension together with ordered, unique basis labels.
class FiniteDimSpace {
 public:
  FiniteDimSpace() = default;
  explicit FiniteDimSpace(std::vector<std::string> labels);
  /// Labels prefix0, prefix1, ...
  static FiniteDimSpace numbered(std::size_t dim, const std::string& prefix);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> indexOf(const std::string& label) const;

  friend bool operator==(const FiniteDimSpace&, const FiniteDimSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Lexicographic tensor basis with labels "u⊗v".
FiniteDimSpace tensorSpace(const FiniteDimSpace& u, const FiniteDimSpace& v);

/// Human-readable linear combination such as "x⊗1 - 2·g⊗x".
std::string formatElement(const FiniteDimSpace& space, std::span<const Scalar> v);

/// Linear map; column j of the matrix is the image of domain basis vector j.
struct LinearMap {
  FiniteDimSpace domain;
  FiniteDimSpace codomain;
  Matrix matrix;

  LinearMap() = default;
  LinearMap(FiniteDimSpace dom, FiniteDimSpace cod, Matrix m);
  Vector operator()(std::span<const Scalar> v) const { return matrix.apply(v); }
};

LinearMap compose(const LinearMap& outer, const LinearMap& inner);

/// Reduced row echelon form. Pivot rule: columns scanned left to right,
/// the first row with a non-zero entry in the column becomes the pivot.
struct RowEchelon {
  Matrix reduced;                    // only the first pivots.size() rows are non-zero
  std::vector<std::size_t> pivots;   // pivot column of each non-zero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rowReduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Some x with m x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vector> solveLinear(const Matrix& m, std::span<const Scalar> b);
/// Basis of {x : m x = 0}: one vector per free column, 1 in that column.
std::vector<Vector> kernelBasis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Kronecker product on the lexicographic tensor basis.
Matrix kronecker(const Matrix& f, const Matrix& g);
LinearMap kroneckerProduct(const LinearMap& f, const LinearMap& g);
/// Rows of the reduced echelon form of the span of the given vectors.
std::vector<Vector> reducedBasis(std::span<const Vector> vectors, std::size_t ambientDim);

/// A subspace of k^n with a fixed basis and fast coordinate extraction.
class Subspace {
 public:
  Subspace() = default;
  /// Throws ShapeError if the basis vectors are dependent or of wrong length.
  Subspace(std::size_t ambientDim, std::vector<Vector> basis);
  /// Subspace spanned by arbitrary vectors, with the reduced echelon basis.
  static Subspace span(std::size_t ambientDim, std::span<const Vector> vectors);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const Vector& basisVector(std::size_t i) const { return basis_.at(i); }

  /// Coordinates of v in this basis, or nullopt if v is not in the span.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }
  bool containsAll(const Subspace& other) const;
  Vector combine(std::span<const Scalar> coords) const;
  /// Matrix whose columns are the basis vectors.
  Matrix asMatrix() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  Matrix coordinateSolver_;  // maps entries at pivots_ to coordinates
};

/// V / span(relations) with a complement spanned by standard basis vectors;
/// the complement uses the earliest basis vectors possible.
struct Quotient {
  FiniteDimSpace space;
  LinearMap proj;      // V -> Q
  LinearMap section;   // Q -> V, basis vector q maps to e_{representatives[q]}
  std::vector<std::size_t> representatives;
  Subspace relations;  // span of the relations, i.e. ker(proj)
};

Quotient quotientSpace(const FiniteDimSpace& v, std::span<const Vector> relations);

}  // namespace hopfind

#endif  // HOPFIND_LINALG_HPP
