#pragma once

// Algebras given by structure constants, invariant subspaces, and forms.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/linalg.hpp"
#include "quadalg/scalar.hpp"

namespace quadalg {

/// An n-dimensional algebra with e_i e_j = Σ_k c_{ij}^k e_k.
class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;

  explicit AlgebraPresentation(std::size_t n) : AlgebraPresentation(default_labels(n)) {}

  explicit AlgebraPresentation(std::vector<std::string> labels)
      : n_(labels.size()), labels_(std::move(labels)), table_(n_ * n_ * n_, Scalar(0)) {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw Error("duplicate basis label '" + l + "'");
    }
  }

  static std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e") {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
    return out;
  }

  std::size_t dim() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (labels_[i] == label) return i;
    }
    throw UnknownName("no basis vector labelled '" + label + "'");
  }

  /// Square-free d the constants live in (0 = ℚ).
  std::int64_t field_d() const noexcept { return field_d_; }
  void set_field_d(std::int64_t d) {
    if (d != 0 && !is_square_free(d)) throw Error("field_d must be 0 or square-free >= 2");
    field_d_ = d;
  }

  const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }
  void set_coefficient(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    check_index(i);
    check_index(j);
    check_index(k);
    table_[(i * n_ + j) * n_ + k] = c;
  }

  /// Sets e_i e_j to the given vector.
  void set_product(std::size_t i, std::size_t j, const Vector& v) {
    check_index(i);
    check_index(j);
    if (v.size() != n_) throw DimensionMismatch("product vector has wrong length");
    for (std::size_t k = 0; k < n_; ++k) table_[(i * n_ + j) * n_ + k] = v[k];
  }

  Vector product(std::size_t i, std::size_t j) const {
    Vector v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = coefficient(i, j, k);
    return v;
  }

  const std::vector<Scalar>& table() const noexcept { return table_; }

  bool is_zero_product() const {
    for (const auto& c : table_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.table_ == b.table_ &&
           a.field_d_ == b.field_d_;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= n_) throw DimensionMismatch("basis index " + std::to_string(i) + " out of range");
  }

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> table_;
  std::int64_t field_d_ = 0;
};

inline void require_dim(const AlgebraPresentation& alg, const Vector& v) {
  if (v.size() != alg.dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " in an algebra of dimension " + std::to_string(alg.dim()));
  }
}

inline Vector multiply(const AlgebraPresentation& alg, const Vector& u, const Vector& v) {
  require_dim(alg, u);
  require_dim(alg, v);
  const std::size_t n = alg.dim();
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = alg.coefficient(i, j, k);
        if (!c.is_zero()) out[k] += uv * c;
      }
    }
  }
  return out;
}

/// L_x: v ↦ xv.
inline Matrix left_operator(const AlgebraPresentation& alg, const Vector& x) {
  require_dim(alg, x);
  const std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = alg.coefficient(i, j, k);
        if (!c.is_zero()) m(k, j) += x[i] * c;
      }
    }
  }
  return m;
}

/// R_x: v ↦ vx.
inline Matrix right_operator(const AlgebraPresentation& alg, const Vector& x) {
  require_dim(alg, x);
  const std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = alg.coefficient(j, i, k);
        if (!c.is_zero()) m(k, j) += x[i] * c;
      }
    }
  }
  return m;
}

struct MultOperators {
  Matrix left;
  Matrix right;
};

inline MultOperators mult_operators(const AlgebraPresentation& alg, const Vector& x) {
  return {left_operator(alg, x), right_operator(alg, x)};
}

/// (x,y,z) = (xy)z − x(yz).
inline Vector associator(const AlgebraPresentation& alg, const Vector& x, const Vector& y,
                         const Vector& z) {
  return sub(multiply(alg, multiply(alg, x, y), z), multiply(alg, x, multiply(alg, y, z)));
}

struct Brackets {
  Vector commutator;      // [x,y] = xy − yx
  Vector anticommutator;  // [x,y]₊ = xy + yx
};

inline Brackets brackets(const AlgebraPresentation& alg, const Vector& x, const Vector& y) {
  Vector xy = multiply(alg, x, y);
  Vector yx = multiply(alg, y, x);
  return {sub(xy, yx), add(xy, yx)};
}

inline Vector basis_vector(const AlgebraPresentation& alg, std::size_t i) {
  return unit_vector(alg.dim(), i);
}

inline Subspace subspace_product(const AlgebraPresentation& alg, const Subspace& s,
                                 const Subspace& t) {
  if (s.ambient() != alg.dim() || t.ambient() != alg.dim()) {
    throw DimensionMismatch("subspace_product: ambient dimension differs from algebra");
  }
  std::vector<Vector> products;
  for (const auto& u : s.vectors()) {
    for (const auto& v : t.vectors()) products.push_back(multiply(alg, u, v));
  }
  return span_normal_form(alg.dim(), products);
}

inline Subspace square(const AlgebraPresentation& alg) {
  Subspace full = Subspace::full(alg.dim());
  return subspace_product(alg, full, full);
}

struct PowerSeries {
  std::vector<Subspace> terms;  // terms[m-1] = J^m
  std::optional<std::size_t> nil_index;  // k with J^{k+1} = 0 ≠ J^k
};

/// J¹ = J, J^m = Σ_{i+j=m} J^i J^j, until the series vanishes or stabilises.
inline PowerSeries power_series(const AlgebraPresentation& alg) {
  PowerSeries out;
  out.terms.push_back(Subspace::full(alg.dim()));
  if (alg.dim() == 0) return out;
  for (std::size_t m = 2;; ++m) {
    Subspace next(alg.dim());
    for (std::size_t i = 1; i < m; ++i) {
      next = sum(next, subspace_product(alg, out.terms[i - 1], out.terms[m - i - 1]));
    }
    out.terms.push_back(next);
    if (next.is_zero()) {
      out.nil_index = m - 1;
      return out;
    }
    // J^m = … = J^{⌈m/2⌉} forces every later term to equal J^m.
    std::size_t half = (m + 1) / 2;
    bool stable = true;
    for (std::size_t i = half; i < m; ++i) {
      if (out.terms[i - 1] != next) {
        stable = false;
        break;
      }
    }
    if (stable) return out;
  }
}

enum class AnnKind { left, right, two_sided };

/// Kernel of the stacked blocks f(e_1), …, f(e_n) where each block is n×n.
template <class BlockFn>
inline Subspace stacked_kernel(std::size_t n, BlockFn&& block) {
  Matrix acc(0, n);
  for (std::size_t j = 0; j < n; ++j) acc = stack(acc, block(j));
  return kernel_of(acc);
}

inline Subspace annihilator(const AlgebraPresentation& alg, AnnKind kind) {
  const std::size_t n = alg.dim();
  // x e_j = R_{e_j} x and e_j x = L_{e_j} x.
  Matrix acc(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector ej = basis_vector(alg, j);
    if (kind != AnnKind::right) acc = stack(acc, right_operator(alg, ej));
    if (kind != AnnKind::left) acc = stack(acc, left_operator(alg, ej));
  }
  return kernel_of(acc);
}

inline Subspace annihilator(const AlgebraPresentation& alg) {
  return annihilator(alg, AnnKind::two_sided);
}

/// {x : xy = yx for all y}.
inline Subspace center_of(const AlgebraPresentation& alg) {
  const std::size_t n = alg.dim();
  return stacked_kernel(n, [&](std::size_t j) {
    Vector ej = basis_vector(alg, j);
    return right_operator(alg, ej) - left_operator(alg, ej);
  });
}

/// Matrix of x ↦ f(x) for a linear f given on basis vectors.
template <class Fn>
inline Matrix linear_map_matrix(std::size_t n, std::size_t m, Fn&& f) {
  Matrix out(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector col = f(unit_vector(n, i));
    for (std::size_t k = 0; k < m; ++k) out(k, i) = col[k];
  }
  return out;
}

/// As(J) = {x : (x,y,z) = 0 for all y, z}.
inline Subspace left_nucleus(const AlgebraPresentation& alg) {
  const std::size_t n = alg.dim();
  Matrix acc(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector ej = basis_vector(alg, j), ek = basis_vector(alg, k);
      acc = stack(acc, linear_map_matrix(n, n, [&](const Vector& x) {
                    return associator(alg, x, ej, ek);
                  }));
    }
  }
  return kernel_of(acc);
}

/// N(J) = {x : (x,y,z) = (y,x,z) = (y,z,x) = 0 for all y, z}.
inline Subspace nucleus(const AlgebraPresentation& alg) {
  const std::size_t n = alg.dim();
  Matrix acc(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector ej = basis_vector(alg, j), ek = basis_vector(alg, k);
      acc = stack(acc, linear_map_matrix(n, n, [&](const Vector& x) {
                    return associator(alg, x, ej, ek);
                  }));
      acc = stack(acc, linear_map_matrix(n, n, [&](const Vector& x) {
                    return associator(alg, ej, x, ek);
                  }));
      acc = stack(acc, linear_map_matrix(n, n, [&](const Vector& x) {
                    return associator(alg, ej, ek, x);
                  }));
    }
  }
  return kernel_of(acc);
}

/// (J,J,J): span of all basis associators.
inline Subspace associator_span(const AlgebraPresentation& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector a = associator(alg, basis_vector(alg, i), basis_vector(alg, j),
                              basis_vector(alg, k));
        if (!is_zero(a)) out.push_back(std::move(a));
      }
    }
  }
  return span_normal_form(n, out);
}

struct NucleusAndAssociator {
  Subspace nucleus;
  Subspace associator_span;
};

inline NucleusAndAssociator nucleus_and_associator_span(const AlgebraPresentation& alg) {
  return {nucleus(alg), associator_span(alg)};
}

/// [J,J]: span of basis commutators.
inline Subspace commutator_span(const AlgebraPresentation& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(sub(alg.product(i, j), alg.product(j, i)));
    }
  }
  return span_normal_form(n, out);
}

inline bool is_ideal(const AlgebraPresentation& alg, const Subspace& s) {
  Subspace full = Subspace::full(alg.dim());
  return subspace_product(alg, s, full).is_subspace_of(s) &&
         subspace_product(alg, full, s).is_subspace_of(s);
}

/// Unique unit element, if any.
inline std::optional<Vector> unit_element(const AlgebraPresentation& alg) {
  const std::size_t n = alg.dim();
  if (n == 0) return std::nullopt;
  // e e_j = e_j  ⇔  R_{e_j} e = e_j;   e_j e = e_j  ⇔  L_{e_j} e = e_j.
  Matrix sys(0, n);
  Vector rhs;
  for (std::size_t j = 0; j < n; ++j) {
    Vector ej = basis_vector(alg, j);
    sys = stack(sys, right_operator(alg, ej));
    rhs.insert(rhs.end(), ej.begin(), ej.end());
    sys = stack(sys, left_operator(alg, ej));
    rhs.insert(rhs.end(), ej.begin(), ej.end());
  }
  if (!kernel_of(sys).is_zero()) return std::nullopt;
  return solve(sys, rhs);
}

/// Symmetric bilinear form given by its Gram matrix.
class FormMatrix {
 public:
  FormMatrix() = default;
  explicit FormMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DimensionMismatch("form matrix must be square");
    if (!m_.is_symmetric()) throw PreconditionFailed("symmetric", "form matrix is not symmetric");
  }

  static FormMatrix identity(std::size_t n) { return FormMatrix(Matrix::identity(n)); }

  /// Block form on span{x, y} with B(x,y) = 1, B(x,x) = B(y,y) = 0.
  static FormMatrix hyperbolic() { return FormMatrix(Matrix::from_rows({{0, 1}, {1, 0}})); }

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Scalar eval(const Vector& u, const Vector& v) const { return dot(u, m_ * v); }

  bool is_nondegenerate() const { return rank(m_) == dim(); }

  friend bool operator==(const FormMatrix& a, const FormMatrix& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

inline Scalar bilinear(const Matrix& b, const Vector& u, const Vector& v) {
  return dot(u, b * v);
}

struct FormCheckReport {
  bool symmetric = false;
  bool nondegenerate = false;
  bool associative = false;
  /// First basis triple (i,j,k) with B(e_ie_j, e_k) ≠ B(e_i, e_je_k).
  std::optional<std::array<std::size_t, 3>> witness;

  bool all() const { return symmetric && nondegenerate && associative; }
};

inline FormCheckReport form_checks(const AlgebraPresentation& alg, const Matrix& b) {
  if (!b.is_square() || b.rows() != alg.dim()) {
    throw DimensionMismatch("form dimension differs from algebra dimension");
  }
  FormCheckReport r;
  r.symmetric = b.is_symmetric();
  r.nondegenerate = rank(b) == alg.dim();
  r.associative = true;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n && r.associative; ++i) {
    for (std::size_t j = 0; j < n && r.associative; ++j) {
      Vector bij = b.transpose() * alg.product(i, j);  // k ↦ B(e_ie_j, e_k)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar rhs = dot(b.row(i), alg.product(j, k));  // B(e_i, e_je_k)
        if (bij[k] != rhs) {
          r.associative = false;
          r.witness = std::array<std::size_t, 3>{i, j, k};
          break;
        }
      }
    }
  }
  return r;
}

inline FormCheckReport form_checks(const AlgebraPresentation& alg, const FormMatrix& b) {
  return form_checks(alg, b.matrix());
}

/// An algebra with a nondegenerate associative symmetric form (checked on construction).
class QuadraticAlgebra {
 public:
  QuadraticAlgebra(AlgebraPresentation alg, FormMatrix form)
      : alg_(std::move(alg)), form_(std::move(form)) {
    FormCheckReport r = form_checks(alg_, form_);
    if (!r.nondegenerate) throw PreconditionFailed("nondegenerate", "form is degenerate");
    if (!r.associative) {
      const auto& w = *r.witness;
      throw PreconditionFailed("associative_form",
                               "B(" + alg_.label(w[0]) + alg_.label(w[1]) + ", " +
                                   alg_.label(w[2]) + ") != B(" + alg_.label(w[0]) + ", " +
                                   alg_.label(w[1]) + alg_.label(w[2]) + ")");
    }
  }

  const AlgebraPresentation& alg() const noexcept { return alg_; }
  const FormMatrix& form() const noexcept { return form_; }
  const Matrix& gram() const noexcept { return form_.matrix(); }
  std::size_t dim() const noexcept { return alg_.dim(); }

  Scalar b(const Vector& u, const Vector& v) const { return form_.eval(u, v); }

  friend bool operator==(const QuadraticAlgebra& a, const QuadraticAlgebra& b) {
    return a.alg_ == b.alg_ && a.form_ == b.form_;
  }

 private:
  AlgebraPresentation alg_;
  FormMatrix form_;
};

/// Gram matrix of B restricted to S in S's RREF basis.
inline Matrix restrict_form(const Matrix& b, const Subspace& s) {
  return s.basis() * b * s.basis().transpose();
}

inline bool is_totally_isotropic(const Matrix& b, const Subspace& s) {
  return restrict_form(b, s).is_zero();
}

/// The subalgebra S in its RREF basis; S must be closed under the product.
inline AlgebraPresentation restrict_to(const AlgebraPresentation& alg, const Subspace& s,
                                       std::vector<std::string> labels = {}) {
  if (s.ambient() != alg.dim()) throw DimensionMismatch("restrict_to: ambient mismatch");
  if (!subspace_product(alg, s, s).is_subspace_of(s)) {
    throw PreconditionFailed("closed", "subspace is not closed under the product");
  }
  if (labels.empty()) {
    for (auto p : s.pivots()) labels.push_back(alg.label(p));
  }
  AlgebraPresentation out(std::move(labels));
  if (out.dim() != s.dim()) throw DimensionMismatch("restrict_to: wrong label count");
  out.set_field_d(alg.field_d());
  auto vs = s.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      out.set_product(i, j, s.coordinates(multiply(alg, vs[i], vs[j])));
    }
  }
  return out;
}

inline QuadraticAlgebra restrict_to(const QuadraticAlgebra& qa, const Subspace& s,
                                    std::vector<std::string> labels = {}) {
  return QuadraticAlgebra(restrict_to(qa.alg(), s, std::move(labels)),
                          FormMatrix(restrict_form(qa.gram(), s)));
}

/// The same algebra in the basis given by the columns of m.
inline AlgebraPresentation change_basis(const AlgebraPresentation& alg, const Matrix& m,
                                        std::vector<std::string> labels = {}) {
  if (!m.is_square() || m.rows() != alg.dim()) {
    throw DimensionMismatch("change_basis: matrix shape differs from algebra dimension");
  }
  auto inv = inverse(m);
  if (!inv) throw PreconditionFailed("invertible", "change-of-basis matrix is singular");
  if (labels.empty()) labels = alg.labels();
  AlgebraPresentation out(std::move(labels));
  out.set_field_d(alg.field_d());
  auto cols = m.column_vectors();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.set_product(i, j, *inv * multiply(alg, cols[i], cols[j]));
    }
  }
  return out;
}

inline QuadraticAlgebra change_basis(const QuadraticAlgebra& qa, const Matrix& m,
                                     std::vector<std::string> labels = {}) {
  return QuadraticAlgebra(change_basis(qa.alg(), m, std::move(labels)),
                          FormMatrix(m.transpose() * qa.gram() * m));
}

/// Block-diagonal sum of two matrices.
inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) {
      labels.push_back(l + "'");
    } else {
      labels.push_back(l);
    }
  }
  AlgebraPresentation out(std::move(labels));
  const std::size_t n = a.dim(), m = b.dim();
  if (a.field_d() != 0) out.set_field_d(a.field_d());
  if (b.field_d() != 0) out.set_field_d(b.field_d());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.set_coefficient(i, j, k, a.coefficient(i, j, k));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        out.set_coefficient(n + i, n + j, n + k, b.coefficient(i, j, k));
      }
    }
  }
  return out;
}

inline QuadraticAlgebra orthogonal_sum(const QuadraticAlgebra& a, const QuadraticAlgebra& b) {
  return QuadraticAlgebra(direct_sum(a.alg(), b.alg()),
                          FormMatrix(block_diagonal(a.gram(), b.gram())));
}

}  // namespace quadalg
