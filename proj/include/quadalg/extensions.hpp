#pragma once

// Extension constructors: double, unital, central, semidirect, T* and friends.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/algebra.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/identities.hpp"
#include "quadalg/linalg.hpp"
#include "quadalg/quadratic.hpp"

namespace quadalg {

/// `stem`, or `stem'`, `stem''`, … until it avoids every existing label.
inline std::string fresh_label(const std::vector<std::string>& taken, std::string stem) {
  while (std::find(taken.begin(), taken.end(), stem) != taken.end()) stem += "'";
  return stem;
}

inline std::vector<std::string> append_labels(std::vector<std::string> base,
                                              const std::vector<std::string>& extra) {
  for (const auto& l : extra) base.push_back(fresh_label(base, l));
  return base;
}

/// Copies `src` into `dst` at basis offset `off` (src products land in the block).
inline void embed_table(AlgebraPresentation& dst, const AlgebraPresentation& src,
                        std::size_t off) {
  const std::size_t n = src.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = src.coefficient(i, j, k);
        if (!c.is_zero()) dst.set_coefficient(off + i, off + j, off + k, c);
      }
    }
  }
}

inline void add_coefficient(AlgebraPresentation& a, std::size_t i, std::size_t j, std::size_t k,
                            const Scalar& c) {
  if (c.is_zero()) return;
  a.set_coefficient(i, j, k, a.coefficient(i, j, k) + c);
}

/// C is B-symmetric: B(Cx, y) = B(x, Cy).
inline bool is_form_symmetric(const Matrix& c, const Matrix& b) {
  return b * c == c.transpose() * b;
}

inline std::int64_t merged_field(std::int64_t a, std::int64_t b) {
  if (a != 0 && b != 0 && a != b) throw FieldMismatch("inputs live in different fields");
  return a != 0 ? a : b;
}

// ---------------------------------------------------------------------------
// Double extension of a quadratic vector space

struct DoubleExtSpec {
  FormMatrix bq;
  Matrix c;
  int epsilon = 0;
  std::vector<std::string> labels;  // for q, default e1..en
};

/// Names the first violated condition, or nothing.
inline std::optional<std::string> double_extension_violation(const DoubleExtSpec& s) {
  const std::size_t n = s.bq.dim();
  if (s.c.rows() != n || s.c.cols() != n) throw DimensionMismatch("C must be n x n");
  if (s.epsilon != 0 && s.epsilon != 1) return "epsilon_in_0_1";
  if (!s.bq.is_nondegenerate()) return "nondegenerate_Bq";
  if (!is_form_symmetric(s.c, s.bq.matrix())) return "C_symmetric";
  if (s.c.is_zero()) return "C_nonzero";
  Matrix c2 = s.c * s.c;
  Matrix c3 = c2 * s.c;
  if (s.epsilon == 0 && !c3.is_zero()) return "C_cubed_zero";
  if (s.epsilon == 1 && Scalar(3) * c2 != Scalar(2) * c3 + s.c) return "3C2_eq_2C3_plus_C";
  return std::nullopt;
}

/// Table of q ⊥ span{x₁, y₁} without validating `s`.
inline AlgebraPresentation double_extension_table(const DoubleExtSpec& s) {
  const std::size_t n = s.bq.dim();
  auto ql = s.labels.empty() ? AlgebraPresentation::default_labels(n) : s.labels;
  AlgebraPresentation a(append_labels(ql, {"x1", "y1"}));
  const std::size_t x1 = n, y1 = n + 1;
  const Matrix bc = s.bq.matrix() * s.c;  // (i,j) ↦ B(e_i, Ce_j)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.set_coefficient(i, j, x1, bc(j, i));  // B(Ce_i, e_j)
    }
    for (std::size_t k = 0; k < n; ++k) {
      a.set_coefficient(y1, i, k, s.c(k, i));
      a.set_coefficient(i, y1, k, s.c(k, i));
    }
  }
  if (s.epsilon != 0) {
    a.set_coefficient(y1, y1, y1, s.epsilon);
    a.set_coefficient(x1, y1, x1, s.epsilon);
    a.set_coefficient(y1, x1, x1, s.epsilon);
  }
  return a;
}

inline FormMatrix double_extension_form(const DoubleExtSpec& s) {
  return FormMatrix(block_diagonal(s.bq.matrix(), FormMatrix::hyperbolic().matrix()));
}

inline QuadraticAlgebra double_extension(const DoubleExtSpec& s) {
  if (auto v = double_extension_violation(s)) {
    throw PreconditionFailed(*v, "double extension spec violates " + *v);
  }
  return QuadraticAlgebra(double_extension_table(s), double_extension_form(s));
}

// ---------------------------------------------------------------------------
// Unital extension

/// J ⊕ ℂe with (λe + x)(μe + y) = λμe + λy + μx + xy; e is appended last.
inline AlgebraPresentation unital_extension(const AlgebraPresentation& alg,
                                            const std::string& unit_label = "e") {
  const std::size_t n = alg.dim();
  AlgebraPresentation out(append_labels(alg.labels(), {unit_label}));
  out.set_field_d(alg.field_d());
  embed_table(out, alg, 0);
  out.set_coefficient(n, n, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    out.set_coefficient(n, i, i, 1);
    out.set_coefficient(i, n, i, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Central extensions and semidirect sums

/// A bilinear map J × J → V on basis pairs.
struct BilinearMap {
  std::size_t n = 0;
  std::size_t v = 0;
  std::vector<Vector> values;  // values[i*n + j] = φ(e_i, e_j)

  BilinearMap() = default;
  BilinearMap(std::size_t n_, std::size_t v_) : n(n_), v(v_), values(n_ * n_, zero_vector(v_)) {}

  const Vector& at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  void set(std::size_t i, std::size_t j, Vector val) {
    if (val.size() != v) throw DimensionMismatch("bilinear map value has wrong length");
    values[i * n + j] = std::move(val);
  }
  Vector eval(const Vector& x, const Vector& y) const {
    Vector out = zero_vector(v);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j].is_zero()) axpy(out, x[i] * y[j], at(i, j));
      }
    }
    return out;
  }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (at(i, j) != at(j, i)) return false;
      }
    }
    return true;
  }
};

/// J ⊕ V with (x+u)(y+v) = xy + φ(x,y), no checks.
inline AlgebraPresentation central_extension(const AlgebraPresentation& alg,
                                             const BilinearMap& phi,
                                             std::vector<std::string> v_labels = {}) {
  const std::size_t n = alg.dim();
  if (phi.n != n) throw DimensionMismatch("phi is defined on a space of the wrong dimension");
  if (v_labels.empty()) v_labels = AlgebraPresentation::default_labels(phi.v, "v");
  AlgebraPresentation out(append_labels(alg.labels(), v_labels));
  out.set_field_d(alg.field_d());
  embed_table(out, alg, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& val = phi.at(i, j);
      for (std::size_t k = 0; k < phi.v; ++k) out.set_coefficient(i, j, n + k, val[k]);
    }
  }
  return out;
}

/// The 2SN-central extension of a 2SN algebra by a symmetric φ with φ(xy, z) = 0.
inline AlgebraPresentation central_extension_2SN(const AlgebraPresentation& alg,
                                                 const BilinearMap& phi,
                                                 std::vector<std::string> v_labels = {}) {
  IdentityReport r = check_identity(alg, "two_step_nilpotent");
  if (!r.holds) throw PreconditionFailed("base_2SN", "base algebra is not 2-step nilpotent");
  if (phi.n != alg.dim()) throw DimensionMismatch("phi is defined on a space of the wrong dimension");
  if (!phi.is_symmetric()) throw PreconditionFailed("phi_symmetric", "phi is not symmetric");
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector xy = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(phi.eval(xy, unit_vector(n, k)))) {
          throw PreconditionFailed("phi_of_product_zero",
                                   "phi(" + alg.label(i) + alg.label(j) + ", " + alg.label(k) +
                                       ") != 0");
        }
      }
    }
  }
  return central_extension(alg, phi, std::move(v_labels));
}

struct QuotientBySquare {
  AlgebraPresentation h;        // J/J², Abelian
  BilinearMap phi;              // φ(p(x), p(y)) = xy in J² coordinates
  AlgebraPresentation rebuilt;  // h ⊕ J² as a 2SN-central extension
  Matrix witness;               // rebuilt → J, columns: complement of J², then J² basis
};

/// Rebuilds a 2SN algebra as the central extension of J/J² by J².
inline QuotientBySquare quotient_by_square(const AlgebraPresentation& alg) {
  if (!holds(alg, "two_step_nilpotent")) {
    throw PreconditionFailed("base_2SN", "quotient construction needs a 2SN algebra");
  }
  const std::size_t n = alg.dim();
  Subspace sq = square(alg);
  std::vector<Vector> basis = complete_basis(n, sq.vectors());
  std::vector<Vector> comp(basis.begin() + static_cast<std::ptrdiff_t>(sq.dim()), basis.end());
  const std::size_t hd = comp.size();
  std::vector<std::string> hl, vl;
  for (std::size_t i = 0; i < hd; ++i) hl.push_back("h" + std::to_string(i + 1));
  for (std::size_t i = 0; i < sq.dim(); ++i) vl.push_back("v" + std::to_string(i + 1));
  AlgebraPresentation h(hl);
  h.set_field_d(alg.field_d());
  BilinearMap phi(hd, sq.dim());
  for (std::size_t i = 0; i < hd; ++i) {
    for (std::size_t j = 0; j < hd; ++j) phi.set(i, j, sq.coordinates(multiply(alg, comp[i], comp[j])));
  }
  AlgebraPresentation rebuilt = central_extension_2SN(h, phi, vl);
  std::vector<Vector> cols = comp;
  for (const auto& v : sq.vectors()) cols.push_back(v);
  return {std::move(h), std::move(phi), std::move(rebuilt), Matrix::from_columns(cols, n)};
}

/// J₁ ⊕ J₂ with (x+y)(x'+y') = xx' + π(x)y' + π(x')y + yy'.
inline AlgebraPresentation semidirect_sum_table(const AlgebraPresentation& j1,
                                                const AlgebraPresentation& j2,
                                                const RepresentationSpec& pi) {
  const std::size_t n = j1.dim(), m = j2.dim();
  AlgebraPresentation out(append_labels(j1.labels(), j2.labels()));
  out.set_field_d(merged_field(j1.field_d(), j2.field_d()));
  embed_table(out, j1, 0);
  embed_table(out, j2, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& c = pi.maps[i](k, j);
        out.set_coefficient(i, n + j, n + k, c);
        out.set_coefficient(n + j, i, n + k, c);
      }
    }
  }
  return out;
}

inline AlgebraPresentation semidirect_sum_2SN(const AlgebraPresentation& j1,
                                              const AlgebraPresentation& j2,
                                              const RepresentationSpec& pi) {
  if (!(pi.source == j1)) throw PreconditionFailed("rep_source", "π is not defined on J1");
  if (!holds(j1, "two_step_nilpotent")) throw PreconditionFailed("J1_2SN", "J1 is not 2SN");
  if (!holds(j2, "two_step_nilpotent")) throw PreconditionFailed("J2_2SN", "J2 is not 2SN");
  IdentityReport r = validate_2SN_admissible(pi, j2);
  if (!r.holds) throw PreconditionFailed(r.component, "π violates " + r.component);
  return semidirect_sum_table(j1, j2, pi);
}

// ---------------------------------------------------------------------------
// Double extension of a quadratic algebra by an algebra (basis: h, J, h*)

namespace detail {

/// h ⊕ J ⊕ h* with (x+y+f)(x'+y'+f') = xx' + yy' + π(x)y' + π(x')y
///   + f'∘R_x + f∘R_{x'} + φ(y,y'),   φ(y,y')(z) = B(π(z)y, y').
inline AlgebraPresentation h_j_hdual_table(const AlgebraPresentation& h,
                                           const QuadraticAlgebra& j,
                                           const RepresentationSpec& pi) {
  const std::size_t p = h.dim(), n = j.dim();
  std::vector<std::string> dual;
  for (const auto& l : h.labels()) dual.push_back(l + "*");
  AlgebraPresentation out(append_labels(append_labels(h.labels(), j.alg().labels()), dual));
  out.set_field_d(merged_field(h.field_d(), j.alg().field_d()));
  const std::size_t oj = p, od = p + n;
  embed_table(out, h, 0);
  embed_table(out, j.alg(), oj);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = pi.maps[i](k, a);
        out.set_coefficient(i, oj + a, oj + k, c);
        out.set_coefficient(oj + a, i, oj + k, c);
      }
    }
    // e_i · ε_l = ε_l ∘ R_{e_i} = Σ_k c_{k i}^l ε_k.
    for (std::size_t l = 0; l < p; ++l) {
      for (std::size_t k = 0; k < p; ++k) {
        const Scalar& c = h.coefficient(k, i, l);
        out.set_coefficient(i, od + l, od + k, c);
        out.set_coefficient(od + l, i, od + k, c);
      }
    }
  }
  const Matrix& b = j.gram();
  for (std::size_t z = 0; z < p; ++z) {
    const Matrix bp = b * pi.maps[z];  // (y', y) ↦ B(y', π(z)y)
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        add_coefficient(out, oj + a, oj + c, od + z, bp(c, a));
      }
    }
  }
  return out;
}

/// γ(x,x') + B(y,y') + f(x') + f'(x) on h ⊕ J ⊕ h*.
inline Matrix h_j_hdual_form(std::size_t p, const Matrix& bj, const std::optional<Matrix>& gamma) {
  const std::size_t n = bj.rows();
  Matrix out(2 * p + n, 2 * p + n);
  for (std::size_t i = 0; i < p; ++i) {
    out(i, p + n + i) = 1;
    out(p + n + i, i) = 1;
    if (gamma) {
      for (std::size_t k = 0; k < p; ++k) out(i, k) = (*gamma)(i, k);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) out(p + a, p + c) = bj(a, c);
  }
  return out;
}

inline void require_symmetric_rep(const RepresentationSpec& pi, const QuadraticAlgebra& j) {
  if (pi.target_dim != j.dim()) throw DimensionMismatch("π acts on a space of the wrong dimension");
  for (std::size_t i = 0; i < pi.maps.size(); ++i) {
    if (!is_form_symmetric(pi.maps[i], j.gram())) {
      throw PreconditionFailed("pi_symmetric", "π(" + pi.source.label(i) +
                                                   ") is not symmetric with respect to B");
    }
  }
}

}  // namespace detail

/// 2SN-double extension of a 2SNPE algebra J by a 2SN algebra h.
inline QuadraticAlgebra double_extension_2SN(const QuadraticAlgebra& j,
                                             const AlgebraPresentation& h,
                                             const RepresentationSpec& pi) {
  if (!(pi.source == h)) throw PreconditionFailed("rep_source", "π is not defined on h");
  if (!holds(j.alg(), "two_step_nilpotent")) throw PreconditionFailed("J_2SN", "J is not 2SN");
  if (!holds(h, "two_step_nilpotent")) throw PreconditionFailed("h_2SN", "h is not 2SN");
  detail::require_symmetric_rep(pi, j);
  IdentityReport r = validate_2SN_admissible(pi, j.alg());
  if (!r.holds) throw PreconditionFailed(r.component, "π violates " + r.component);
  return QuadraticAlgebra(detail::h_j_hdual_table(h, j, pi),
                          FormMatrix(detail::h_j_hdual_form(h.dim(), j.gram(), std::nullopt)));
}

/// Double extension of J₁ by J₂ by an admissible π: J₂ → End_s(J₁),
/// basis (J₂, J₁, J₂*), optionally with the extra form γ on J₂.
inline QuadraticAlgebra general_double_extension(const QuadraticAlgebra& j1,
                                                 const AlgebraPresentation& j2,
                                                 const RepresentationSpec& pi,
                                                 const std::optional<Matrix>& gamma = std::nullopt) {
  if (!(pi.source == j2)) throw PreconditionFailed("rep_source", "π is not defined on J2");
  detail::require_symmetric_rep(pi, j1);
  IdentityReport r = validate_admissible_rep(pi, j1.alg());
  if (!r.holds) throw PreconditionFailed(r.component, "π violates " + r.component);
  if (gamma) {
    FormCheckReport g = form_checks(j2, *gamma);
    if (!g.symmetric) throw PreconditionFailed("gamma_symmetric", "γ is not symmetric");
    if (!g.associative) throw PreconditionFailed("gamma_associative", "γ is not associative");
  }
  return QuadraticAlgebra(detail::h_j_hdual_table(j2, j1, pi),
                          FormMatrix(detail::h_j_hdual_form(j2.dim(), j1.gram(), gamma)));
}

// ---------------------------------------------------------------------------
// Generalized double extension of a 2SNPE algebra

struct GeneralizedDESpec {
  QuadraticAlgebra base;
  Matrix d;
  Vector x0;
  Scalar alpha;
};

inline std::optional<std::string> generalized_de_violation(const GeneralizedDESpec& s) {
  const AlgebraPresentation& a = s.base.alg();
  const std::size_t n = a.dim();
  if (s.d.rows() != n || s.d.cols() != n || s.x0.size() != n) {
    throw DimensionMismatch("D and x0 must match the base dimension");
  }
  if (!holds(a, "two_step_nilpotent")) return "base_2SN";
  IdentityReport r = validate_2SN_pair(s.d, s.x0, a);
  if (!r.holds) return r.component;
  if (!is_form_symmetric(s.d, s.base.gram())) return "D_symmetric";
  if (!s.base.b(s.x0, s.x0).is_zero()) return "x0_isotropic";
  return std::nullopt;
}

/// Basis (base, x₁, y₁): y₁y₁ = x₀ + αx₁, y₁x = D(x) + B(x₀,x)x₁, x⋆y = xy + B(Dx,y)x₁.
inline AlgebraPresentation generalized_double_extension_table(const GeneralizedDESpec& s) {
  const AlgebraPresentation& a = s.base.alg();
  const std::size_t n = a.dim();
  AlgebraPresentation out(append_labels(a.labels(), {"x1", "y1"}));
  out.set_field_d(a.field_d());
  const std::size_t x1 = n, y1 = n + 1;
  embed_table(out, a, 0);
  const Matrix& b = s.base.gram();
  const Matrix bd = b * s.d;  // (j, i) ↦ B(e_j, De_i) = B(De_i, e_j)
  const Vector bx0 = b * s.x0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) add_coefficient(out, i, j, x1, bd(j, i));
    for (std::size_t k = 0; k < n; ++k) {
      out.set_coefficient(y1, i, k, s.d(k, i));
      out.set_coefficient(i, y1, k, s.d(k, i));
    }
    out.set_coefficient(y1, i, x1, bx0[i]);
    out.set_coefficient(i, y1, x1, bx0[i]);
    out.set_coefficient(y1, y1, i, s.x0[i]);
  }
  out.set_coefficient(y1, y1, x1, s.alpha);
  return out;
}

inline QuadraticAlgebra generalized_double_extension(const GeneralizedDESpec& s) {
  if (auto v = generalized_de_violation(s)) {
    throw PreconditionFailed(*v, "generalized double extension spec violates " + *v);
  }
  return QuadraticAlgebra(
      generalized_double_extension_table(s),
      FormMatrix(block_diagonal(s.base.gram(), FormMatrix::hyperbolic().matrix())));
}

struct PeelResult {
  GeneralizedDESpec spec;
  Matrix witness;  // generalized_double_extension(spec) → input, i-isomorphism
};

/// Writes a reduced 2SNPE algebra as a generalized double extension of W = span{x₁,y₁}^⊥.
inline PeelResult peel_generalized_double_extension(const QuadraticAlgebra& qa) {
  const AlgebraPresentation& a = qa.alg();
  const Matrix& b = qa.gram();
  const std::size_t n = a.dim();
  if (!holds(a, "two_step_nilpotent")) throw PreconditionFailed("2SN", "input is not 2SN");
  if (!is_reduced(qa)) throw PreconditionFailed("reduced", "input is not reduced");
  Subspace ann = annihilator(a);
  Vector x1 = ann.vector(0);
  auto y = solve(Matrix::from_rows({b * x1}, n), Vector{Scalar(1)});
  if (!y) throw PreconditionFailed("nondegenerate", "no partner for x1");
  Vector y1 = sub(*y, scaled(qa.b(*y, *y) / Scalar(2), x1));
  Subspace w = orth_complement(b, span_normal_form(n, {x1, y1}));
  std::vector<Vector> wv = w.vectors();
  const std::size_t m = wv.size();

  // v ∈ x₁^⊥ splits as W-part + B(v, y₁)x₁.
  auto w_part = [&](const Vector& v) { return sub(v, scaled(qa.b(v, y1), x1)); };

  std::vector<std::string> labels;
  for (auto p : w.pivots()) labels.push_back(a.label(p));
  AlgebraPresentation base(labels);
  base.set_field_d(a.field_d());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      base.set_product(i, j, w.coordinates(w_part(multiply(a, wv[i], wv[j]))));
    }
  }
  QuadraticAlgebra base_qa(base, FormMatrix(restrict_form(b, w)));

  Matrix d(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector dc = w.coordinates(w_part(multiply(a, y1, wv[i])));
    for (std::size_t k = 0; k < m; ++k) d(k, i) = dc[k];
  }
  Vector y1sq = multiply(a, y1, y1);
  if (!qa.b(y1sq, x1).is_zero()) {
    throw PreconditionFailed("y1_squared_in_x1_perp", "y1 y1 has a y1 component");
  }
  Vector x0 = w.coordinates(w_part(y1sq));
  Scalar alpha = qa.b(y1sq, y1);

  std::vector<Vector> cols = wv;
  cols.push_back(x1);
  cols.push_back(y1);
  return {GeneralizedDESpec{std::move(base_qa), std::move(d), std::move(x0), std::move(alpha)},
          Matrix::from_columns(cols, n)};
}

// ---------------------------------------------------------------------------
// Cubic forms and T*-extensions

/// Symmetric trilinear form stored as the full tensor I_{ijk}.
class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(std::size_t m) : m_(m), t_(m * m * m, Scalar(0)) {}

  /// From a full tensor; throws unless it is symmetric.
  static CubicForm from_tensor(std::size_t m, std::vector<Scalar> t) {
    if (t.size() != m * m * m) throw DimensionMismatch("cubic tensor must have m^3 entries");
    CubicForm f(m);
    f.t_ = std::move(t);
    if (!f.is_symmetric()) throw PreconditionFailed("symmetric", "cubic tensor is not symmetric");
    return f;
  }

  /// From monomial coefficients keyed by a sorted index triple; each
  /// coefficient is written to every permutation of its triple.
  static CubicForm from_monomials(std::size_t m,
                                  const std::map<std::array<std::size_t, 3>, Scalar>& mono) {
    CubicForm f(m);
    for (auto [key, c] : mono) {
      std::array<std::size_t, 3> k = key;
      std::sort(k.begin(), k.end());
      if (k[2] >= m) throw DimensionMismatch("monomial index out of range");
      do {
        f.at(k[0], k[1], k[2]) = c;
      } while (std::next_permutation(k.begin(), k.end()));
    }
    return f;
  }

  std::size_t dim() const noexcept { return m_; }
  const std::vector<Scalar>& tensor() const noexcept { return t_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * m_ + j) * m_ + k];
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return t_[(i * m_ + j) * m_ + k]; }

  Scalar eval(const Vector& u, const Vector& v, const Vector& w) const {
    Scalar out = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < m_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t k = 0; k < m_; ++k) {
          if (!w[k].is_zero() && !at(i, j, k).is_zero()) out += u[i] * v[j] * w[k] * at(i, j, k);
        }
      }
    }
    return out;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        for (std::size_t k = 0; k < m_; ++k) {
          const Scalar& v = at(i, j, k);
          if (v != at(j, i, k) || v != at(i, k, j)) return false;
        }
      }
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& s : t_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const CubicForm& a, const CubicForm& b) {
    return a.m_ == b.m_ && a.t_ == b.t_;
  }
  friend CubicForm operator*(const Scalar& s, CubicForm f) {
    for (auto& e : f.t_) e = s * e;
    return f;
  }

 private:
  std::size_t m_ = 0;
  std::vector<Scalar> t_;
};

/// θ: a × a → a*, stored as θ(e_i, e_j) in dual coordinates.
struct ThetaMap {
  std::size_t m = 0;
  std::vector<Vector> values;  // values[i*m + j]
  const Vector& at(std::size_t i, std::size_t j) const { return values[i * m + j]; }
};

inline ThetaMap theta_from_cubic(const CubicForm& f) {
  const std::size_t m = f.dim();
  ThetaMap th{m, std::vector<Vector>(m * m, zero_vector(m))};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) th.values[i * m + j][k] = f.at(i, j, k);
    }
  }
  return th;
}

/// Inverse of theta_from_cubic; θ must be symmetric and cyclic.
inline CubicForm cubic_from_theta(const ThetaMap& th) {
  const std::size_t m = th.m;
  if (th.values.size() != m * m) throw DimensionMismatch("theta must have m^2 values");
  std::vector<Scalar> t(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (th.at(i, j).size() != m) throw DimensionMismatch("theta value has wrong length");
      for (std::size_t k = 0; k < m; ++k) t[(i * m + j) * m + k] = th.at(i, j)[k];
    }
  }
  return CubicForm::from_tensor(m, std::move(t));
}

/// Some nonzero x with θ(x, a) = 0, if θ is degenerate.
inline std::optional<Vector> cubic_kernel_vector(const CubicForm& f) {
  const std::size_t m = f.dim();
  Matrix rows(m * m, m);  // row (j,k), column i: I_ijk
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) rows(j * m + k, i) = f.at(i, j, k);
    }
  }
  Subspace ker = kernel_of(rows);
  if (ker.is_zero()) return std::nullopt;
  return ker.vector(0);
}

inline bool is_nondegenerate_cubic(const CubicForm& f) {
  return f.dim() > 0 && !cubic_kernel_vector(f);
}

inline std::vector<std::string> default_tstar_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) out.push_back("a" + std::to_string(i + 1) + "*");
  return out;
}

/// a ⊕ a* with a_i a_j = Σ_k I_ijk a*_k and the dual pairing as form.
inline QuadraticAlgebra t_star_extension(const CubicForm& f, std::vector<std::string> labels = {}) {
  const std::size_t m = f.dim();
  if (!f.is_symmetric()) throw PreconditionFailed("symmetric", "cubic tensor is not symmetric");
  if (auto k = cubic_kernel_vector(f)) {
    std::string v;
    for (std::size_t i = 0; i < k->size(); ++i) v += (i ? "," : "") + (*k)[i].to_string();
    throw PreconditionFailed("nondegenerate_cubic", "theta(x, a) = 0 for x = (" + v + ")");
  }
  if (m == 0) throw PreconditionFailed("nondegenerate_cubic", "empty cubic form");
  if (labels.empty()) labels = default_tstar_labels(m);
  AlgebraPresentation a(std::move(labels));
  if (a.dim() != 2 * m) throw DimensionMismatch("T* extension needs 2m labels");
  std::int64_t d = 0;
  for (const auto& s : f.tensor()) d = merged_field(d, s.field_d());
  a.set_field_d(d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) a.set_coefficient(i, j, m + k, f.at(i, j, k));
    }
  }
  Matrix b(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    b(i, m + i) = 1;
    b(m + i, i) = 1;
  }
  return QuadraticAlgebra(std::move(a), FormMatrix(std::move(b)));
}

struct TStarExtraction {
  CubicForm cubic;
  Matrix witness;  // t_star_extension(cubic) → input, i-isomorphism
};

/// The cubic form of a reduced 2SNPE algebra, with an i-isomorphism from its T*-extension.
inline TStarExtraction extract_t_star(const QuadraticAlgebra& qa) {
  const AlgebraPresentation& a = qa.alg();
  const std::size_t n = a.dim();
  if (!holds(a, "two_step_nilpotent")) throw PreconditionFailed("2SN", "input is not 2SN");
  if (!is_reduced(qa)) throw PreconditionFailed("reduced", "input is not reduced");
  Subspace ann = annihilator(a);
  if (!(ann == square(a))) throw PreconditionFailed("ann_is_square", "Ann differs from J^2");
  const std::size_t m = ann.dim();
  std::vector<Vector> all = complete_basis(n, ann.vectors());
  std::vector<Vector> c(all.begin() + static_cast<std::ptrdiff_t>(m), all.end());
  if (c.size() != m) throw PreconditionFailed("half_dimension", "dim Ann is not half of dim J");
  std::vector<Vector> av = ann.vectors();
  // w_j ∈ Ann with B(c_i, w_j) = δ_ij.
  Matrix k(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) k(i, j) = qa.b(c[i], av[j]);
  }
  auto kinv = inverse(k);
  if (!kinv) throw PreconditionFailed("nondegenerate", "Ann is not paired with its complement");
  std::vector<Vector> w(m, zero_vector(n));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) axpy(w[j], (*kinv)(l, j), av[l]);
  }
  std::vector<Vector> cp(m);
  for (std::size_t i = 0; i < m; ++i) {
    cp[i] = c[i];
    for (std::size_t j = 0; j < m; ++j) axpy(cp[i], -qa.b(c[i], c[j]) / Scalar(2), w[j]);
  }
  CubicForm f(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector p = multiply(a, cp[i], cp[j]);
      for (std::size_t l = 0; l < m; ++l) f.at(i, j, l) = qa.b(p, cp[l]);
    }
  }
  std::vector<Vector> cols = cp;
  cols.insert(cols.end(), w.begin(), w.end());
  return {std::move(f), Matrix::from_columns(cols, n)};
}

}  // namespace quadalg
