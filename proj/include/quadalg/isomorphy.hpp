#pragma once

// Witness checking, isomorphism criteria for extensions, cubic-form classes.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadalg/algebra.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/extensions.hpp"
#include "quadalg/linalg.hpp"

namespace quadalg {

enum class WitnessKind { iso, i_iso };

inline const char* to_string(WitnessKind k) { return k == WitnessKind::iso ? "iso" : "i-iso"; }

struct MapWitness {
  Matrix m;
  WitnessKind kind = WitnessKind::iso;
};

struct WitnessReport {
  bool is_morphism = false;
  bool is_isometry = false;
  std::optional<std::pair<std::size_t, std::size_t>> morphism_failure;  // first bad basis pair
};

inline void require_witness_shape(const Matrix& m, std::size_t n_src, std::size_t n_dst) {
  if (n_src != n_dst) throw DimensionMismatch("witness between algebras of different dimension");
  if (m.rows() != n_dst || m.cols() != n_src) throw DimensionMismatch("witness has wrong shape");
  if (!is_invertible(m)) throw PreconditionFailed("invertible", "witness matrix is singular");
}

/// M(e_i e_j) = M(e_i) M(e_j) on basis pairs; isometry is left false.
inline WitnessReport verify_witness(const Matrix& m, const AlgebraPresentation& src,
                                    const AlgebraPresentation& dst) {
  require_witness_shape(m, src.dim(), dst.dim());
  WitnessReport r;
  r.is_morphism = true;
  std::vector<Vector> img = m.column_vectors();
  for (std::size_t i = 0; i < src.dim() && r.is_morphism; ++i) {
    for (std::size_t j = 0; j < src.dim(); ++j) {
      if (m * src.product(i, j) != multiply(dst, img[i], img[j])) {
        r.is_morphism = false;
        r.morphism_failure = std::make_pair(i, j);
        break;
      }
    }
  }
  return r;
}

inline WitnessReport verify_witness(const Matrix& m, const QuadraticAlgebra& src,
                                    const QuadraticAlgebra& dst) {
  WitnessReport r = verify_witness(m, src.alg(), dst.alg());
  r.is_isometry = m.transpose() * dst.gram() * m == src.gram();
  return r;
}

inline WitnessReport verify_witness(const MapWitness& w, const QuadraticAlgebra& src,
                                    const QuadraticAlgebra& dst) {
  return verify_witness(w.m, src, dst);
}

/// Witness passes for its declared kind.
inline bool witness_holds(const MapWitness& w, const QuadraticAlgebra& src,
                          const QuadraticAlgebra& dst) {
  WitnessReport r = verify_witness(w, src, dst);
  return r.is_morphism && (w.kind == WitnessKind::iso || r.is_isometry);
}

inline std::int64_t field_of(const Matrix& m) {
  std::int64_t d = 0;
  for (const auto& s : m.entries()) d = merged_field(d, s.field_d());
  return d;
}

/// Block-diagonal witness over the basis (q, x₁, y₁).
inline Matrix de_block_witness(const Matrix& p, const Scalar& on_x1, const Scalar& on_y1) {
  Matrix tail(2, 2);
  tail(0, 0) = on_x1;
  tail(1, 1) = on_y1;
  return block_diagonal(p, tail);
}

// ---------------------------------------------------------------------------
// Double extension criteria

struct DeIsoResult {
  std::optional<MapWitness> witness;
  std::string reason;                  // empty on success
  bool needs_field_extension = false;  // √κ missing from the field
  bool rank_hypothesis = false;        // rank C' ≥ 3: A(q ⊕ ℂx₁) = q ⊕ ℂx'₁ is automatic
};

/// B-adjoint P* = B⁻¹ Pᵀ B.
inline Matrix form_adjoint(const Matrix& p, const Matrix& b) {
  auto binv = inverse(b);
  if (!binv) throw PreconditionFailed("nondegenerate", "form is degenerate");
  return *binv * p.transpose() * b;
}

inline bool is_isometry_of(const Matrix& p, const Matrix& b) { return p.transpose() * b * p == b; }

/// Iso criterion for nilpotent double extensions of the same (q, B_q):
/// λC' = PCP⁻¹ and P*PC = κC (κ ≠ 0; P is rescaled by κ^{-1/2}). The witness is
/// A|q = P, A(x₁) = λ⁻¹x'₁, A(y₁) = λy'₁; it is an i-iso when P ∈ O(q).
inline DeIsoResult nilpotent_de_iso(Matrix p, const Scalar& lambda, const DoubleExtSpec& s,
                                    const DoubleExtSpec& t) {
  DeIsoResult r;
  if (!(s.bq == t.bq)) throw PreconditionFailed("same_q", "both extensions must share (q, B_q)");
  if (s.epsilon != 0 || t.epsilon != 0) throw PreconditionFailed("nilpotent", "epsilon must be 0");
  if (lambda.is_zero()) throw PreconditionFailed("lambda_nonzero", "λ must be nonzero");
  auto pinv = inverse(p);
  if (!pinv) throw PreconditionFailed("invertible", "P is singular");
  const Matrix& b = s.bq.matrix();
  r.rank_hypothesis = rank(t.c) >= 3;
  if (lambda * t.c != p * s.c * *pinv) {
    r.reason = "lambda_C_prime_eq_PCP_inv";
    return r;
  }
  Matrix lhs = form_adjoint(p, b) * p * s.c;
  std::optional<Scalar> kappa;
  for (std::size_t i = 0; i < s.c.entries().size(); ++i) {
    if (!s.c.entries()[i].is_zero()) {
      kappa = lhs.entries()[i] / s.c.entries()[i];
      break;
    }
  }
  if (!kappa || kappa->is_zero() || lhs != *kappa * s.c) {
    r.reason = "Pstar_P_C_eq_C";
    return r;
  }
  if (*kappa != Scalar(1)) {
    std::int64_t d = merged_field(field_of(p), kappa->field_d());
    auto root = sqrt_in_field(*kappa, d);
    if (!root) {
      r.reason = "needs_field_extension";
      r.needs_field_extension = true;
      return r;
    }
    p = root->inverse() * p;
  }
  WitnessKind kind = is_isometry_of(p, b) ? WitnessKind::i_iso : WitnessKind::iso;
  r.witness = MapWitness{de_block_witness(p, lambda.inverse(), lambda), kind};
  return r;
}

/// Diagonalizable case: P ∈ O(q) with C' = PCP⁻¹ gives the i-iso A|q = P, A(x₁) = x'₁, A(y₁) = y'₁.
inline DeIsoResult diagonalizable_de_iso(const Matrix& p, const DoubleExtSpec& s,
                                         const DoubleExtSpec& t) {
  DeIsoResult r;
  if (!(s.bq == t.bq)) throw PreconditionFailed("same_q", "both extensions must share (q, B_q)");
  auto pinv = inverse(p);
  if (!pinv) throw PreconditionFailed("invertible", "P is singular");
  r.rank_hypothesis = rank(t.c) >= 3;
  if (!is_isometry_of(p, s.bq.matrix())) {
    r.reason = "P_isometry";
    return r;
  }
  if (t.c != p * s.c * *pinv) {
    r.reason = "C_prime_eq_PCP_inv";
    return r;
  }
  r.witness = MapWitness{de_block_witness(p, 1, 1), WitnessKind::i_iso};
  return r;
}

struct DeSpectrum {
  bool relation = false;  // 2C² − 3C + Id = 0
  std::size_t dim_ker_one = 0;
  std::size_t dim_ker_half = 0;
  bool orthogonal = false;
};

inline DeSpectrum de_spectrum(const Matrix& c, const FormMatrix& bq) {
  const std::size_t n = c.rows();
  if (c.cols() != n || bq.dim() != n) throw DimensionMismatch("C and B_q must be n x n");
  const Matrix id = Matrix::identity(n);
  DeSpectrum s;
  s.relation = (Scalar(2) * c * c - Scalar(3) * c + id).is_zero();
  Subspace k1 = kernel_of(c - id);
  Subspace kh = kernel_of(c - Scalar::fraction(1, 2) * id);
  s.dim_ker_one = k1.dim();
  s.dim_ker_half = kh.dim();
  s.orthogonal = (k1.basis() * bq.matrix() * kh.basis().transpose()).is_zero();
  return s;
}

// ---------------------------------------------------------------------------
// T*-extensions and cubic forms

/// Pullback (A·I)(x, y, z) = I(Ax, Ay, Az).
inline CubicForm act_on_cubic(const Matrix& a, const CubicForm& f) {
  const std::size_t m = f.dim();
  if (a.rows() != m || a.cols() != m) throw DimensionMismatch("A must be m x m");
  // Contract one index at a time.
  auto contract = [&](const std::vector<Scalar>& t, int axis) {
    std::vector<Scalar> out(m * m * m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          Scalar acc = 0;
          for (std::size_t p = 0; p < m; ++p) {
            std::size_t idx[3] = {i, j, k};
            std::size_t src[3] = {i, j, k};
            src[axis] = p;
            const Scalar& v = t[(src[0] * m + src[1]) * m + src[2]];
            if (!v.is_zero()) acc += a(p, idx[axis]) * v;
          }
          out[(i * m + j) * m + k] = acc;
        }
      }
    }
    return out;
  };
  std::vector<Scalar> t = f.tensor();
  for (int axis = 0; axis < 3; ++axis) t = contract(t, axis);
  return CubicForm::from_tensor(m, std::move(t));
}

/// Given A₁ on a, the A₂ on a* with A₂θ(x,y) = θ'(A₁x, A₁y), if one exists.
inline std::optional<Matrix> tstar_dual_part(const Matrix& a1, const CubicForm& f,
                                             const CubicForm& g) {
  const std::size_t m = f.dim();
  ThetaMap t1 = theta_from_cubic(f);
  // Unknown A₂ flattened row-major: equation (i,j,r): Σ_s A₂(r,s) θ(i,j)_s = θ'(A₁e_i, A₁e_j)_r.
  Matrix sys(m * m * m, m * m);
  Vector rhs(m * m * m, Scalar(0));
  std::vector<Vector> cols = a1.column_vectors();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < m; ++r) {
        std::size_t row = (i * m + j) * m + r;
        for (std::size_t s = 0; s < m; ++s) sys(row, r * m + s) = t1.at(i, j)[s];
        Scalar val = 0;
        for (std::size_t p = 0; p < m; ++p) {
          for (std::size_t q = 0; q < m; ++q) {
            if (!cols[i][p].is_zero() && !cols[j][q].is_zero()) val += cols[i][p] * cols[j][q] * g.at(p, q, r);
          }
        }
        rhs[row] = val;
      }
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix a2(m, m, *sol);
  if (!is_invertible(a2)) return std::nullopt;
  // θ spans a* when nondegenerate, so the solution is unique; recheck anyway.
  if (sys * a2.entries() != rhs) return std::nullopt;
  return a2;
}

/// Isomorphism T*(I) → T*(I') from given (A₁, A₂); nothing if the condition fails.
inline std::optional<MapWitness> tstar_iso(const Matrix& a1, const Matrix& a2, const CubicForm& f,
                                           const CubicForm& g) {
  const std::size_t m = f.dim();
  if (g.dim() != m) throw DimensionMismatch("cubic forms differ in dimension");
  if (!is_invertible(a1) || !is_invertible(a2)) return std::nullopt;
  auto needed = tstar_dual_part(a1, f, g);
  if (!needed || *needed != a2) return std::nullopt;
  return MapWitness{block_diagonal(a1, a2), WitnessKind::iso};
}

/// i-isomorphism T*(I) → T*(I') with A₂ = f ↦ f∘A₁⁻¹, i.e. I = A₁·I'.
inline std::optional<MapWitness> tstar_iiso(const Matrix& a1, const CubicForm& f,
                                            const CubicForm& g) {
  if (g.dim() != f.dim()) throw DimensionMismatch("cubic forms differ in dimension");
  auto inv = inverse(a1);
  if (!inv) return std::nullopt;
  if (act_on_cubic(a1, g) != f) return std::nullopt;
  return MapWitness{block_diagonal(a1, inv->transpose()), WitnessKind::i_iso};
}

/// T*(I) → T*(λI) by A(x + f) = α⁻¹x + αf with α³ = λ.
inline MapWitness tstar_scaling_witness(const CubicForm& f, const Scalar& lambda) {
  if (lambda.is_zero()) throw PreconditionFailed("lambda_nonzero", "λ must be nonzero");
  auto alpha = rational_cbrt(lambda);
  if (!alpha) throw NeedsFieldExtension("cube root of " + lambda.to_string() + " is not rational");
  auto w = tstar_iiso(alpha->inverse() * Matrix::identity(f.dim()), f, lambda * f);
  if (!w) throw PreconditionFailed("scaling", "scaling map is not an i-isomorphism");
  return *w;
}

/// Lexicographically first A₁ with entries in `grid` admitting an isomorphism
/// T*(I) → T*(I'). Heuristic negative evidence only when nothing is found.
inline std::optional<MapWitness> grid_search_tstar_iso(const CubicForm& f, const CubicForm& g,
                                                       const std::vector<Scalar>& grid) {
  const std::size_t m = f.dim();
  const std::size_t cells = m * m;
  std::vector<std::size_t> idx(cells, 0);
  if (grid.empty()) return std::nullopt;
  while (true) {
    std::vector<Scalar> e(cells);
    for (std::size_t i = 0; i < cells; ++i) e[i] = grid[idx[i]];
    Matrix a1(m, m, e);
    if (is_invertible(a1)) {
      if (auto a2 = tstar_dual_part(a1, f, g)) return MapWitness{block_diagonal(a1, *a2), WitnessKind::iso};
    }
    std::size_t pos = 0;
    while (pos < cells && ++idx[pos] == grid.size()) idx[pos++] = 0;
    if (pos == cells) return std::nullopt;
  }
}

enum class CubicClass { degenerate, class_I0, class_generic, needs_extension };

inline const char* to_string(CubicClass c) {
  switch (c) {
    case CubicClass::degenerate: return "degenerate";
    case CubicClass::class_I0: return "class_I0";
    case CubicClass::class_generic: return "class_generic";
    case CubicClass::needs_extension: return "needs_extension";
  }
  return "?";
}

/// Binary cubic F(s,t) = I(v,v,v) = a s³ + 3b s²t + 3c st² + d t³.
struct BinaryCubicCovariants {
  Scalar a, b, c, d;
  Scalar discriminant;                  // of a s³ + 3b s²t + 3c st² + d t³
  std::array<Scalar, 3> hessian;        // (ac − b², ad − bc, bd − c²)
};

inline BinaryCubicCovariants binary_cubic_covariants(const CubicForm& f) {
  if (f.dim() != 2) throw DimensionMismatch("binary cubic needs dim 2");
  BinaryCubicCovariants r{f.at(0, 0, 0), f.at(0, 0, 1), f.at(0, 1, 1), f.at(1, 1, 1), 0, {}};
  const Scalar A = r.a, B = Scalar(3) * r.b, C = Scalar(3) * r.c, D = r.d;
  r.discriminant = B * B * C * C - Scalar(4) * A * C * C * C - Scalar(4) * B * B * B * D -
                   Scalar(27) * A * A * D * D + Scalar(18) * A * B * C * D;
  r.hessian = {r.a * r.c - r.b * r.b, r.a * r.d - r.b * r.c, r.b * r.d - r.c * r.c};
  return r;
}

/// dim 1: nonzero forms make up a single class (reported as class_generic).
/// dim 2: Δ ≠ 0 → generic (≅ I_λ), Δ = 0 with a double root → I0, cube of a linear form or zero → degenerate.
inline CubicClass classify_binary_cubic(const CubicForm& f) {
  if (f.dim() > 2) throw DimensionMismatch("classification is only available for dim <= 2");
  if (f.dim() == 0 || f.is_zero()) return CubicClass::degenerate;
  if (f.dim() == 1) return CubicClass::class_generic;
  BinaryCubicCovariants cv = binary_cubic_covariants(f);
  if (!cv.discriminant.is_zero()) return CubicClass::class_generic;
  bool hessian_zero = cv.hessian[0].is_zero() && cv.hessian[1].is_zero() && cv.hessian[2].is_zero();
  return hessian_zero ? CubicClass::degenerate : CubicClass::class_I0;
}

}  // namespace quadalg
