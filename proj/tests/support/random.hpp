#pragma once

// Seeded generators for property tests and the acceptance binary.

#include <cstdint>
#include <random>
#include <vector>

#include "quadalg/quadalg.hpp"

namespace quadalg::testing {

using Rng = std::mt19937_64;

inline Scalar rand_int(Rng& rng, int lo, int hi) {
  return Scalar(static_cast<long long>(std::uniform_int_distribution<int>(lo, hi)(rng)));
}

inline Scalar rand_nonzero(Rng& rng, int bound) {
  while (true) {
    Scalar s = rand_int(rng, -bound, bound);
    if (!s.is_zero()) return s;
  }
}

/// Small fractions p/q with |p| ≤ bound, 1 ≤ q ≤ 3.
inline Scalar rand_fraction(Rng& rng, int bound) {
  int p = std::uniform_int_distribution<int>(-bound, bound)(rng);
  int q = std::uniform_int_distribution<int>(1, 3)(rng);
  return Scalar::fraction(p, q);
}

inline Vector rand_vector(Rng& rng, std::size_t n, int bound = 3) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_int(rng, -bound, bound));
  return v;
}

inline Matrix rand_matrix(Rng& rng, std::size_t r, std::size_t c, int bound = 2) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_int(rng, -bound, bound);
  }
  return m;
}

inline Matrix rand_invertible(Rng& rng, std::size_t n, int bound = 2) {
  while (true) {
    Matrix m = rand_matrix(rng, n, n, bound);
    if (is_invertible(m)) return m;
  }
}

/// Product of random elementary shears: integer entries, determinant 1.
inline Matrix rand_unimodular(Rng& rng, std::size_t n) {
  Matrix m = Matrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < 2 * n; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Scalar f = rand_nonzero(rng, 1);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
  }
  return m;
}

inline Matrix rand_symmetric(Rng& rng, std::size_t n, int bound = 2) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rand_int(rng, -bound, bound);
  }
  return m;
}

inline FormMatrix rand_form(Rng& rng, std::size_t n) {
  while (true) {
    Matrix m = rand_symmetric(rng, n);
    if (is_invertible(m)) return FormMatrix(m);
  }
}

/// Random structure constants in [-bound, bound], optionally commutative.
inline AlgebraPresentation rand_algebra(Rng& rng, std::size_t n, bool commutative, int bound = 2) {
  AlgebraPresentation a(AlgebraPresentation::default_labels(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = commutative ? i : 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar c = rand_int(rng, -bound, bound);
        a.set_coefficient(i, j, k, c);
        if (commutative) a.set_coefficient(j, i, k, c);
      }
    }
  }
  return a;
}

/// A pair (B₀, C₀) in block normal form, conjugated by a random P:
/// B = PᵀB₀P, C = P⁻¹C₀P keeps C B-symmetric and keeps its minimal polynomial.
struct FormAndOperator {
  FormMatrix b;
  Matrix c;
};

inline FormAndOperator conjugate_pair(Rng& rng, const Matrix& b0, const Matrix& c0) {
  Matrix p = rand_invertible(rng, b0.rows());
  return {FormMatrix(p.transpose() * b0 * p), *inverse(p) * c0 * p};
}

/// B-symmetric nilpotent C with C³ = 0 and C ≠ 0: Jordan blocks of size ≤ 3
/// against the anti-diagonal form, at least one block of size ≥ 2.
inline FormAndOperator rand_nilpotent_cube_zero(Rng& rng, std::size_t n) {
  std::vector<std::size_t> sizes;
  std::size_t left = n;
  std::size_t first = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(3, n))(rng);
  sizes.push_back(first);
  left -= first;
  while (left > 0) {
    std::size_t s = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, left))(rng);
    sizes.push_back(s);
    left -= s;
  }
  Matrix b0(n, n), c0(n, n);
  std::size_t off = 0;
  for (std::size_t s : sizes) {
    Scalar sign = rand_int(rng, 0, 1).is_zero() ? Scalar(1) : Scalar(-1);
    Scalar scale = rand_nonzero(rng, 2);
    for (std::size_t i = 0; i < s; ++i) {
      b0(off + i, off + s - 1 - i) = sign;
      if (i + 1 < s) c0(off + i + 1, off + i) = scale;
    }
    off += s;
  }
  return conjugate_pair(rng, b0, c0);
}

/// B-symmetric diagonalizable C with spectrum in `values`, not all zero.
inline FormAndOperator rand_diagonalizable(Rng& rng, std::size_t n, const std::vector<Scalar>& values) {
  while (true) {
    Matrix b0(n, n), c0(n, n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      b0(i, i) = rand_nonzero(rng, 2);
      c0(i, i) = values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
      nonzero = nonzero || !c0(i, i).is_zero();
    }
    if (nonzero) return conjugate_pair(rng, b0, c0);
  }
}

/// C = B⁻¹S for random symmetric S: B-symmetric with no constraint on its spectrum.
inline FormAndOperator rand_symmetric_operator(Rng& rng, std::size_t n) {
  FormMatrix b = rand_form(rng, n);
  return {b, *inverse(b.matrix()) * rand_symmetric(rng, n)};
}

inline CubicForm rand_cubic(Rng& rng, std::size_t m, int bound = 2) {
  std::map<std::array<std::size_t, 3>, Scalar> coeffs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      for (std::size_t k = j; k < m; ++k) coeffs[{i, j, k}] = rand_int(rng, -bound, bound);
    }
  }
  return CubicForm::from_monomials(m, coeffs);
}

inline CubicForm rand_nondegenerate_cubic(Rng& rng, std::size_t m) {
  while (true) {
    CubicForm f = rand_cubic(rng, m);
    if (is_nondegenerate_cubic(f)) return f;
  }
}

/// A 2SN central extension with an associative form: the T*-extension of a
/// random nondegenerate cubic, orthogonally extended by an Abelian summand
/// and written in a random integral basis.
inline QuadraticAlgebra rand_2sn_quadratic(Rng& rng) {
  std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  QuadraticAlgebra q = t_star_extension(rand_nondegenerate_cubic(rng, m));
  std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  if (extra > 0) {
    QuadraticAlgebra ab(AlgebraPresentation(AlgebraPresentation::default_labels(extra, "z")),
                        rand_form(rng, extra));
    q = orthogonal_sum(q, ab);
  }
  return change_basis(q, rand_unimodular(rng, q.dim()), AlgebraPresentation::default_labels(q.dim()));
}

}  // namespace quadalg::testing
