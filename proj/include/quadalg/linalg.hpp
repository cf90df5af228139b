#pragma once

// Dense exact linear algebra: matrices, row reduction, kernels, complements.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/scalar.hpp"

namespace quadalg {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

inline void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " differ");
  }
}

inline Vector add(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector sub(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector scaled(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

/// Adds s·v to acc in place.
inline void axpy(Vector& acc, const Scalar& s, const Vector& v) {
  require_same_length(acc, v);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += s * v[i];
  }
}

inline Scalar dot(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Scalar out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

inline Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Row-major dense matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionMismatch("matrix entry count does not equal rows x cols");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size());
  }

  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Vector row(std::size_t i) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Vector column(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  std::vector<Vector> column_vectors() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_zero() const {
    for (const auto& s : entries_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  bool is_symmetric() const { return is_square() && *this == transpose(); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& e : out.entries_) e = s * e;
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }
  friend Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out = zero_vector(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
      }
    }
    return out;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix power(const Matrix& m, unsigned k) {
  Matrix out = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

/// Vertical stack of two matrices with equal column counts.
inline Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatch("stack: column counts differ");
  std::vector<Scalar> e = top.entries();
  e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(e));
}

struct RowReduction {
  Matrix rref;  // full matrix in reduced row-echelon form, zero rows last
  std::vector<std::size_t> pivots;
};

inline RowReduction row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// A linear subspace of an n-dimensional coordinate space, stored as the
/// reduced row-echelon basis so that equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace full(std::size_t n) {
    Subspace s(n);
    s.basis_ = Matrix::identity(n);
    s.pivots_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_[i] = i;
    return s;
  }

  /// RREF of the row span of m (any shape, any rank).
  static Subspace row_span(const Matrix& m) {
    RowReduction rr = row_reduce(m);
    Subspace s(m.cols());
    std::size_t k = rr.pivots.size();
    std::vector<Scalar> e(rr.rref.entries().begin(),
                          rr.rref.entries().begin() + static_cast<std::ptrdiff_t>(k * m.cols()));
    s.basis_ = Matrix(k, m.cols(), std::move(e));
    s.pivots_ = std::move(rr.pivots);
    return s;
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  /// Basis vectors as rows of a dim × ambient matrix in RREF.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }
  Vector vector(std::size_t i) const { return basis_.row(i); }

  /// ambient × dim matrix whose columns are the basis vectors.
  Matrix embedding() const { return basis_.transpose(); }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace membership: wrong length");
    Vector residual = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      Scalar c = residual[pivots_[i]];
      if (!c.is_zero()) axpy(residual, -c, basis_.row(i));
    }
    return quadalg::is_zero(residual);
  }

  /// Coordinates of v in the RREF basis; throws if v is not in the subspace.
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw PreconditionFailed("membership", "vector is not in the subspace");
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool is_subspace_of(const Subspace& other) const {
    require_same_ambient(other);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!other.contains(basis_.row(i))) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  void require_same_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) {
      throw DimensionMismatch("subspaces of ambient dimension " + std::to_string(ambient_) +
                              " and " + std::to_string(other.ambient_));
    }
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the span of the given n-vectors.
inline Subspace span_normal_form(std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) {
      throw DimensionMismatch("span: vector of length " + std::to_string(v.size()) +
                              " in ambient dimension " + std::to_string(ambient));
    }
  }
  return Subspace::row_span(Matrix::from_rows(vectors, ambient));
}

/// Span of vectors that must share one length (taken from the first vector).
inline Subspace span_normal_form(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace(0);
  return span_normal_form(vectors.front().size(), vectors);
}

inline Subspace kernel_of(const Matrix& m) {
  RowReduction rr = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.rref(r, f);
    basis.push_back(std::move(v));
  }
  return span_normal_form(n, basis);
}

inline Subspace image_of(const Matrix& m) { return Subspace::row_span(m.transpose()); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  return Subspace::row_span(stack(a.basis(), b.basis()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  // Vectors annihilated by both annihilators.
  Subspace ann_a = kernel_of(a.basis());
  Subspace ann_b = kernel_of(b.basis());
  return kernel_of(stack(ann_a.basis(), ann_b.basis()));
}

/// {x : B(x, s) = 0 for all s ∈ S}.
inline Subspace orth_complement(const Matrix& form, const Subspace& s) {
  if (!form.is_square() || form.rows() != s.ambient()) {
    throw DimensionMismatch("orthogonal complement: form and subspace dimensions differ");
  }
  return kernel_of(s.basis() * form);
}

/// Some x with Mx = b (free variables set to 0), or nothing if inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (m.rows() != b.size()) throw DimensionMismatch("solve: rhs length differs from row count");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowReduction rr = row_reduce(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.rref(r, m.cols());
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowReduction rr = row_reduce(aug);
  if (rr.pivots.size() < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.rref(i, n + j);
  }
  return inv;
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

/// Columns of the given vectors completed by standard basis vectors (in index
/// order) to a basis of the ambient space.
inline std::vector<Vector> complete_basis(std::size_t ambient, std::vector<Vector> vectors) {
  std::size_t r = rank(Matrix::from_rows(vectors, ambient));
  for (std::size_t i = 0; i < ambient && r < ambient; ++i) {
    vectors.push_back(unit_vector(ambient, i));
    std::size_t r2 = rank(Matrix::from_rows(vectors, ambient));
    if (r2 == r) {
      vectors.pop_back();
    } else {
      r = r2;
    }
  }
  return vectors;
}

}  // namespace quadalg
