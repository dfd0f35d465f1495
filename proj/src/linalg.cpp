#include "hopfind/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hopfind/error.hpp"

namespace hopfind {

Vector zeroVector(std::size_t n) { return Vector(n); }

Vector unitVector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool isZero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
}

void axpy(const Scalar& a, std::span<const Scalar> x, std::span<Scalar> y) {
  if (x.size() != y.size()) throw ShapeError("axpy: length mismatch");
  if (a.isZero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].isZero()) y[i] += a * x[i];
  }
}

Vector scaled(const Scalar& a, std::span<const Scalar> x) {
  Vector r(x.size());
  if (a.isZero()) return r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].isZero()) r[i] = a * x[i];
  }
  return r;
}

Vector add(std::span<const Scalar> x, std::span<const Scalar> y) {
  Vector r(x.begin(), x.end());
  axpy(1, y, r);
  return r;
}

Vector subtract(std::span<const Scalar> x, std::span<const Scalar> y) {
  Vector r(x.begin(), x.end());
  axpy(-1, y, r);
  return r;
}

Vector tensorVectors(std::span<const Scalar> x, std::span<const Scalar> y) {
  Vector r(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j].isZero()) r[i * y.size() + j] = x[i] * y[j];
    }
  }
  return r;
}

std::string formatVector(std::span<const Scalar> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string formatElement(const FiniteDimSpace& space, std::span<const Scalar> v) {
  if (v.size() != space.dim()) throw ShapeError("formatElement: vector length does not match the space");
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].isZero()) continue;
    std::string c = v[i].toString();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (c != "1") out += c + "·";
    out += space.label(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromColumns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.setColumn(c, columns[c]);
  return m;
}

Matrix Matrix::fromRows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("fromRows: row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::fromFlat(std::size_t rows, std::size_t cols, std::span<const Scalar> v) {
  if (v.size() != rows * cols) throw ShapeError("fromFlat: size mismatch");
  Matrix m(rows, cols);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::setColumn(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw ShapeError("setColumn: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) {
    throw ShapeError("apply: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " matrix on vector of length " + std::to_string(v.size()));
  }
  Vector r(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].isZero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& m = (*this)(i, c);
      if (!m.isZero()) r[i] += m * v[c];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::isZero() const { return hopfind::isZero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                     std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.isZero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum: shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) {
    if (!b.data_[i].isZero()) r.data_[i] += b.data_[i];
  }
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (Scalar(-1) * b); }

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  if (s.isZero()) return r;
  for (std::size_t i = 0; i < m.data_.size(); ++i) {
    if (!m.data_[i].isZero()) r.data_[i] = s * m.data_[i];
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- spaces

FiniteDimSpace::FiniteDimSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InputError("duplicate basis label '" + l + "'");
  }
}

FiniteDimSpace FiniteDimSpace::numbered(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return FiniteDimSpace(std::move(labels));
}

std::optional<std::size_t> FiniteDimSpace::indexOf(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

FiniteDimSpace tensorSpace(const FiniteDimSpace& u, const FiniteDimSpace& v) {
  std::vector<std::string> labels;
  labels.reserve(u.dim() * v.dim());
  for (const auto& a : u.labels()) {
    for (const auto& b : v.labels()) labels.push_back(a + "⊗" + b);
  }
  return FiniteDimSpace(std::move(labels));
}

LinearMap::LinearMap(FiniteDimSpace dom, FiniteDimSpace cod, Matrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
  if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim()) {
    throw ShapeError("linear map matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                     " but spaces have dims " + std::to_string(codomain.dim()) + " <- " +
                     std::to_string(domain.dim()));
  }
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.domain.dim() != inner.codomain.dim()) throw ShapeError("compose: dimension mismatch");
  return LinearMap(inner.domain, outer.codomain, outer.matrix * inner.matrix);
}

// ---------------------------------------------------------------- elimination

RowEchelon rowReduce(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivotRow = 0;
  std::vector<std::size_t> nonzeros;
  for (std::size_t c = 0; c < cols && pivotRow < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = pivotRow; r < rows; ++r) {
      if (!m(r, c).isZero()) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != pivotRow) {
      auto a = m.row(found);
      auto b = m.row(pivotRow);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(pivotRow);
    const Scalar inv = prow[c].inverse();
    nonzeros.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!prow[j].isZero()) {
        if (!inv.isOne()) prow[j] *= inv;
        nonzeros.push_back(j);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivotRow) continue;
      auto row = m.row(r);
      if (row[c].isZero()) continue;
      const Scalar factor = row[c];
      for (std::size_t j : nonzeros) row[j] -= factor * prow[j];
    }
    out.pivots.push_back(c);
    ++pivotRow;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rowReduce(m).rank(); }

std::optional<Vector> solveLinear(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) {
    throw ShapeError("solveLinear: matrix has " + std::to_string(m.rows()) + " rows, rhs has " +
                     std::to_string(b.size()));
  }
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = rowReduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

std::vector<Vector> kernelBasis(const Matrix& m) {
  RowEchelon e = rowReduce(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : e.pivots) isPivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Scalar& entry = e.reduced(i, f);
      if (!entry.isZero()) v[e.pivots[i]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rowReduce(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

Matrix kronecker(const Matrix& f, const Matrix& g) {
  Matrix r(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& a = f(i, j);
      if (a.isZero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& b = g(k, l);
          if (!b.isZero()) r(i * g.rows() + k, j * g.cols() + l) = a * b;
        }
      }
    }
  }
  return r;
}

LinearMap kroneckerProduct(const LinearMap& f, const LinearMap& g) {
  return LinearMap(tensorSpace(f.domain, g.domain), tensorSpace(f.codomain, g.codomain),
                   kronecker(f.matrix, g.matrix));
}

std::vector<Vector> reducedBasis(std::span<const Vector> vectors, std::size_t ambientDim) {
  if (vectors.empty()) return {};
  RowEchelon e = rowReduce(Matrix::fromRows(ambientDim, vectors));
  std::vector<Vector> rows;
  rows.reserve(e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i) {
    auto r = e.reduced.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambientDim, std::vector<Vector> basis)
    : ambient_(ambientDim), basis_(std::move(basis)) {
  for (const auto& b : basis_) {
    if (b.size() != ambient_) throw ShapeError("subspace basis vector has wrong length");
  }
  const std::size_t k = basis_.size();
  if (k == 0) return;
  RowEchelon e = rowReduce(Matrix::fromRows(ambient_, basis_));
  if (e.rank() != k) throw ShapeError("subspace basis is linearly dependent");
  pivots_ = e.pivots;
  // coordinates c satisfy sum_i c_i basis_i[p_j] = v[p_j]; solve with M^T.
  Matrix restricted(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) restricted(j, i) = basis_[i][pivots_[j]];
  }
  auto inv = inverse(restricted);
  if (!inv) throw ShapeError("subspace coordinate system is singular");
  coordinateSolver_ = std::move(*inv);
}

Subspace Subspace::span(std::size_t ambientDim, std::span<const Vector> vectors) {
  return Subspace(ambientDim, reducedBasis(vectors, ambientDim));
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw ShapeError("coordinates: vector length mismatch");
  const std::size_t k = basis_.size();
  Vector restricted(k);
  for (std::size_t j = 0; j < k; ++j) restricted[j] = v[pivots_[j]];
  Vector coords = k == 0 ? Vector{} : coordinateSolver_.apply(restricted);
  Vector residual(v.begin(), v.end());
  for (std::size_t i = 0; i < k; ++i) axpy(-coords[i], basis_[i], residual);
  if (!hopfind::isZero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::containsAll(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& b) { return contains(b); });
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != basis_.size()) throw ShapeError("combine: coordinate count mismatch");
  Vector v(ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(coords[i], basis_[i], v);
  return v;
}

Matrix Subspace::asMatrix() const { return Matrix::fromColumns(ambient_, basis_); }

// ---------------------------------------------------------------- quotients

Quotient quotientSpace(const FiniteDimSpace& v, std::span<const Vector> relations) {
  const std::size_t n = v.dim();
  for (const auto& r : relations) {
    if (r.size() != n) throw ShapeError("quotientSpace: relation has wrong length");
  }
  // Eliminate with the columns reversed, so pivots land on the latest basis
  // vectors and the complement keeps the earliest ones.
  std::vector<Vector> reversed(relations.begin(), relations.end());
  for (auto& r : reversed) std::reverse(r.begin(), r.end());
  std::vector<Vector> reduced = reducedBasis(reversed, n);
  std::vector<bool> isPivot(n, false);
  std::vector<std::size_t> pivots;
  for (auto& row : reduced) {
    std::reverse(row.begin(), row.end());
    auto it = std::find_if(row.rbegin(), row.rend(), [](const Scalar& s) { return !s.isZero(); });
    std::size_t p = n - 1 - static_cast<std::size_t>(it - row.rbegin());
    pivots.push_back(p);
    isPivot[p] = true;
  }
  Quotient q;
  std::vector<std::size_t> index(n, 0);
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j) {
    if (isPivot[j]) continue;
    index[j] = q.representatives.size();
    q.representatives.push_back(j);
    labels.push_back(v.label(j));
  }
  q.space = FiniteDimSpace(std::move(labels));
  const std::size_t d = q.representatives.size();
  Matrix proj(d, n);
  for (std::size_t i = 0; i < d; ++i) proj(i, q.representatives[i]) = 1;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!isPivot[j] && !reduced[i][j].isZero()) proj(index[j], pivots[i]) = -reduced[i][j];
    }
  }
  Matrix section(n, d);
  for (std::size_t i = 0; i < d; ++i) section(q.representatives[i], i) = 1;
  q.proj = LinearMap(v, q.space, std::move(proj));
  q.section = LinearMap(q.space, v, std::move(section));
  q.relations = Subspace(n, std::move(reduced));
  return q;
}

}  // namespace hopfind
