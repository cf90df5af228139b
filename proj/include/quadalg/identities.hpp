#pragma once

// Polynomial identities, checked exactly on basis tuples via multilinear forms.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/algebra.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/linalg.hpp"

namespace quadalg {

struct IdentityReport {
  std::string name;
  bool holds = true;
  /// Failing component and its first failing basis tuple (lexicographic).
  std::string component;
  std::vector<std::size_t> tuple;
  Vector residual;
};

/// Residuals for every last argument at once: column w is the residual at prefix + (w).
using BatchEval = std::function<Matrix(const std::vector<std::size_t>& prefix)>;

/// One multilinear component of an identity: arity basis vectors in, residual out.
/// `batch`, when set, builds a BatchEval for one algebra; it must agree with `eval`.
struct IdentityComponent {
  std::string name;
  std::size_t arity;
  std::function<Vector(const AlgebraPresentation&, const std::vector<Vector>&)> eval;
  std::function<BatchEval(const AlgebraPresentation&)> batch = nullptr;
};

namespace detail {

inline Vector mul(const AlgebraPresentation& a, const Vector& u, const Vector& v) {
  return multiply(a, u, v);
}

inline Vector commutative_residual(const AlgebraPresentation& a, const std::vector<Vector>& v) {
  return sub(mul(a, v[0], v[1]), mul(a, v[1], v[0]));
}

/// [R_x,R_{yz}](w) + [R_y,R_{zx}](w) + [R_z,R_{xy}](w), with R_a(b) = ba.
inline Vector jordan_operator_residual(const AlgebraPresentation& a,
                                       const std::vector<Vector>& v) {
  const Vector &x = v[0], &y = v[1], &z = v[2], &w = v[3];
  auto term = [&](const Vector& p, const Vector& q, const Vector& r) {
    Vector qr = mul(a, q, r);
    return sub(mul(a, mul(a, w, qr), p), mul(a, mul(a, w, p), qr));
  };
  Vector out = term(x, y, z);
  out = add(out, term(y, z, x));
  out = add(out, term(z, x, y));
  return out;
}

/// Batched form of the above: Σ_cyc [R_x, R_{yz}] as a matrix, with R_{e_q e_r}
/// cached per pair.
inline BatchEval jordan_operator_batch(const AlgebraPresentation& a) {
  const std::size_t n = a.dim();
  auto rb = std::make_shared<std::vector<Matrix>>();
  for (std::size_t i = 0; i < n; ++i) rb->push_back(right_operator(a, unit_vector(n, i)));
  auto rp = std::make_shared<std::vector<std::optional<Matrix>>>(n * n);
  return [&a, n, rb, rp](const std::vector<std::size_t>& t) {
    auto r_prod = [&](std::size_t q, std::size_t r) -> const Matrix& {
      auto& slot = (*rp)[q * n + r];
      if (!slot) slot = right_operator(a, a.product(q, r));
      return *slot;
    };
    auto term = [&](std::size_t p, std::size_t q, std::size_t r) {
      return commutator((*rb)[p], r_prod(q, r));
    };
    return term(t[0], t[1], t[2]) + term(t[1], t[2], t[0]) + term(t[2], t[0], t[1]);
  };
}

inline Vector associator_residual(const AlgebraPresentation& a, const std::vector<Vector>& v) {
  return associator(a, v[0], v[1], v[2]);
}

inline Vector cube_zero_residual(const AlgebraPresentation& a, const std::vector<Vector>& v) {
  std::array<std::size_t, 3> p{0, 1, 2};
  Vector out = zero_vector(a.dim());
  do {
    out = add(out, associator(a, v[p[0]], v[p[1]], v[p[2]]));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Vector bracket(const AlgebraPresentation& a, const Vector& x, const Vector& y) {
  return sub(mul(a, x, y), mul(a, y, x));
}

inline std::vector<std::pair<std::string, std::vector<IdentityComponent>>> build_registry() {
  using Args = const std::vector<Vector>&;
  using Alg = const AlgebraPresentation&;
  IdentityComponent commutative{"commutative", 2, commutative_residual};
  IdentityComponent anticommutative{"anticommutative", 2, [](Alg a, Args v) {
                                      return add(mul(a, v[0], v[1]), mul(a, v[1], v[0]));
                                    }};
  IdentityComponent jordan_op{"jordan_operator", 4, jordan_operator_residual, jordan_operator_batch};
  IdentityComponent left_symmetric{"left_symmetric", 3, [](Alg a, Args v) {
                                     return sub(associator(a, v[0], v[1], v[2]),
                                                associator(a, v[1], v[0], v[2]));
                                   }};
  IdentityComponent right_commute{"right_commute", 3, [](Alg a, Args v) {
                                    return sub(mul(a, mul(a, v[0], v[1]), v[2]),
                                               mul(a, mul(a, v[0], v[2]), v[1]));
                                  }};
  IdentityComponent associative{"associative", 3, associator_residual};
  IdentityComponent flexible{"flexible", 3, [](Alg a, Args v) {
                               return add(associator(a, v[0], v[1], v[2]),
                                          associator(a, v[2], v[1], v[0]));
                             }};
  IdentityComponent cube_zero{"cube_zero", 3, cube_zero_residual};
  IdentityComponent jacobi_left{"jacobi_left", 3, [](Alg a, Args v) {
                                  Vector out = mul(a, bracket(a, v[0], v[1]), v[2]);
                                  out = add(out, mul(a, bracket(a, v[1], v[2]), v[0]));
                                  return add(out, mul(a, bracket(a, v[2], v[0]), v[1]));
                                }};
  IdentityComponent jacobi_right{"jacobi_right", 3, [](Alg a, Args v) {
                                   Vector out = mul(a, v[0], bracket(a, v[1], v[2]));
                                   out = add(out, mul(a, v[1], bracket(a, v[2], v[0])));
                                   return add(out, mul(a, v[2], bracket(a, v[0], v[1])));
                                 }};
  IdentityComponent jacobi{"jacobi", 3, [](Alg a, Args v) {
                             Vector out = mul(a, mul(a, v[0], v[1]), v[2]);
                             out = add(out, mul(a, mul(a, v[1], v[2]), v[0]));
                             return add(out, mul(a, mul(a, v[2], v[0]), v[1]));
                           }};
  IdentityComponent cubes_vanish{"product_of_three", 3, [](Alg a, Args v) {
                                   return mul(a, mul(a, v[0], v[1]), v[2]);
                                 }};
  return {
      {"commutative", {commutative}},
      {"anticommutative", {anticommutative}},
      {"jordan", {commutative, jordan_op}},
      {"left_symmetric", {left_symmetric}},
      {"right_commute", {right_commute}},
      {"novikov", {left_symmetric, right_commute}},
      {"associative", {associative}},
      {"flexible", {flexible}},
      {"cube_zero", {cube_zero}},
      {"jacobi_left", {jacobi_left}},
      {"jacobi_right", {jacobi_right}},
      {"jacobi", {jacobi}},
      {"two_step_nilpotent", {commutative, cubes_vanish}},
  };
}

inline const std::vector<std::pair<std::string, std::vector<IdentityComponent>>>& registry() {
  static const auto reg = build_registry();
  return reg;
}

/// Calls f on every index tuple of the given arity in lexicographic order
/// until f returns true.
template <class Fn>
inline bool for_each_tuple(std::size_t n, std::size_t arity, Fn&& f) {
  std::vector<std::size_t> t(arity, 0);
  if (n == 0 && arity > 0) return false;
  while (true) {
    if (f(t)) return true;
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 0) return false;
    }
    if (arity == 0) return false;
  }
}

}  // namespace detail

inline std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : detail::registry()) out.push_back(name);
  return out;
}

inline const std::vector<IdentityComponent>& identity_components(const std::string& name) {
  for (const auto& [n, comps] : detail::registry()) {
    if (n == name) return comps;
  }
  throw UnknownName("unknown identity '" + name + "'");
}

/// Residual of one component at arbitrary vectors.
inline Vector evaluate_identity(const AlgebraPresentation& alg, const std::string& name,
                                const std::string& component, const std::vector<Vector>& args) {
  for (const auto& c : identity_components(name)) {
    if (c.name != component) continue;
    if (args.size() != c.arity) {
      throw DimensionMismatch("component '" + component + "' takes " +
                              std::to_string(c.arity) + " arguments");
    }
    for (const auto& v : args) require_dim(alg, v);
    return c.eval(alg, args);
  }
  throw UnknownName("identity '" + name + "' has no component '" + component + "'");
}

inline Vector evaluate_identity(const AlgebraPresentation& alg, const std::string& name,
                                const std::string& component,
                                const std::vector<std::size_t>& tuple) {
  std::vector<Vector> args;
  for (auto i : tuple) args.push_back(basis_vector(alg, i));
  return evaluate_identity(alg, name, component, args);
}

inline IdentityReport check_identity(const AlgebraPresentation& alg, const std::string& name) {
  IdentityReport r;
  r.name = name;
  const std::size_t n = alg.dim();
  for (const auto& c : identity_components(name)) {
    if (c.batch && n > 0) {
      BatchEval f = c.batch(alg);
      bool failed = detail::for_each_tuple(n, c.arity - 1, [&](const std::vector<std::size_t>& t) {
        Matrix m = f(t);
        for (std::size_t w = 0; w < n; ++w) {
          Vector res = m.column(w);
          if (is_zero(res)) continue;
          r.holds = false;
          r.component = c.name;
          r.tuple = t;
          r.tuple.push_back(w);
          r.residual = std::move(res);
          return true;
        }
        return false;
      });
      if (failed) return r;
      continue;
    }
    bool failed = detail::for_each_tuple(n, c.arity, [&](const std::vector<std::size_t>& t) {
      std::vector<Vector> args;
      for (auto i : t) args.push_back(basis_vector(alg, i));
      Vector res = c.eval(alg, args);
      if (is_zero(res)) return false;
      r.holds = false;
      r.component = c.name;
      r.tuple = t;
      r.residual = std::move(res);
      return true;
    });
    if (failed) return r;
  }
  return r;
}

inline bool holds(const AlgebraPresentation& alg, const std::string& name) {
  return check_identity(alg, name).holds;
}

/// x ↦ S_x for x in the source algebra, acting on an m-dimensional space.
struct RepresentationSpec {
  AlgebraPresentation source;
  std::size_t target_dim = 0;
  std::vector<Matrix> maps;  // S_{e_i}

  RepresentationSpec() = default;
  RepresentationSpec(AlgebraPresentation src, std::size_t m, std::vector<Matrix> ms)
      : source(std::move(src)), target_dim(m), maps(std::move(ms)) {
    if (maps.size() != source.dim()) {
      throw DimensionMismatch("representation needs one matrix per source basis vector");
    }
    for (const auto& s : maps) {
      if (s.rows() != m || s.cols() != m) {
        throw DimensionMismatch("representation matrix is not " + std::to_string(m) + "x" +
                                std::to_string(m));
      }
    }
  }

  static RepresentationSpec zero(AlgebraPresentation src, std::size_t m) {
    std::vector<Matrix> ms(src.dim(), Matrix(m, m));
    return RepresentationSpec(std::move(src), m, std::move(ms));
  }

  Matrix at(const Vector& x) const {
    require_dim(source, x);
    Matrix out(target_dim, target_dim);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i].is_zero()) out = out + x[i] * maps[i];
    }
    return out;
  }
};

inline RepresentationSpec adjoint_rep(const AlgebraPresentation& alg) {
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < alg.dim(); ++i) ms.push_back(right_operator(alg, basis_vector(alg, i)));
  return RepresentationSpec(alg, alg.dim(), std::move(ms));
}

/// R*(x)(f) = f∘R_x, i.e. the transpose of R_x on dual coordinates.
inline RepresentationSpec coadjoint_rep(const AlgebraPresentation& alg) {
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    ms.push_back(right_operator(alg, basis_vector(alg, i)).transpose());
  }
  return RepresentationSpec(alg, alg.dim(), std::move(ms));
}

namespace detail {

/// A condition evaluated on basis tuples; the residual is a flat vector.
struct Condition {
  std::string name;
  std::size_t arity;
  std::function<Vector(const std::vector<std::size_t>&)> eval;
};

inline IdentityReport run_conditions(
    const std::string& name, const std::vector<Condition>& conds,
    const std::function<std::size_t(const Condition&, std::size_t)>& range) {
  IdentityReport r;
  r.name = name;
  for (const auto& c : conds) {
    std::vector<std::size_t> sizes(c.arity);
    bool empty = false;
    for (std::size_t p = 0; p < c.arity; ++p) {
      sizes[p] = range(c, p);
      if (sizes[p] == 0) empty = true;
    }
    if (empty) continue;
    std::vector<std::size_t> t(c.arity, 0);
    while (true) {
      Vector res = c.eval(t);
      if (!is_zero(res)) {
        r.holds = false;
        r.component = c.name;
        r.tuple = t;
        r.residual = std::move(res);
        return r;
      }
      std::size_t pos = c.arity;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++t[pos] < sizes[pos]) {
          done = false;
          break;
        }
        t[pos] = 0;
      }
      if (done) break;
    }
  }
  return r;
}

inline Vector flatten(const Matrix& m) { return m.entries(); }

/// Full polarization of a form homogeneous of degree d_v in each variable v:
/// Σ over nonempty subsets S_v of the argument lists, signed by (−1)^{d_v −|S_v|}.
inline Vector polarize(const std::vector<std::vector<Vector>>& args,
                       const std::function<Vector(const std::vector<Vector>&)>& form,
                       std::size_t out_dim) {
  const std::size_t vars = args.size();
  Vector total = zero_vector(out_dim);
  std::vector<std::size_t> masks(vars, 1);
  while (true) {
    std::vector<Vector> point;
    int sign = 1;
    for (std::size_t v = 0; v < vars; ++v) {
      Vector s = zero_vector(args[v].front().size());
      std::size_t count = 0;
      for (std::size_t b = 0; b < args[v].size(); ++b) {
        if (masks[v] & (std::size_t{1} << b)) {
          s = add(s, args[v][b]);
          ++count;
        }
      }
      if ((args[v].size() - count) % 2 == 1) sign = -sign;
      point.push_back(std::move(s));
    }
    Vector val = form(point);
    total = sign > 0 ? add(total, val) : sub(total, val);
    std::size_t v = 0;
    while (v < vars) {
      if (++masks[v] < (std::size_t{1} << args[v].size())) break;
      masks[v] = 1;
      ++v;
    }
    if (v == vars) break;
  }
  return total;
}

}  // namespace detail

/// [S_x,S_{yz}] + [S_y,S_{zx}] + [S_z,S_{xy}] = 0 and
/// S_xS_yS_z + S_zS_yS_x + S_{(xz)y} = S_xS_{yz} + S_yS_{zx} + S_zS_{xy}.
inline IdentityReport validate_jacobson_rep(const RepresentationSpec& rep) {
  const AlgebraPresentation& a = rep.source;
  const std::size_t n = a.dim();
  auto e = [&](std::size_t i) { return basis_vector(a, i); };
  auto s_of_product = [&](std::size_t i, std::size_t j) { return rep.at(a.product(i, j)); };
  std::vector<detail::Condition> conds{
      {"jacobson_1", 3,
       [&](const std::vector<std::size_t>& t) {
         const std::size_t x = t[0], y = t[1], z = t[2];
         Matrix m = commutator(rep.maps[x], s_of_product(y, z)) +
                    commutator(rep.maps[y], s_of_product(z, x)) +
                    commutator(rep.maps[z], s_of_product(x, y));
         return detail::flatten(m);
       }},
      {"jacobson_2", 3,
       [&](const std::vector<std::size_t>& t) {
         const std::size_t x = t[0], y = t[1], z = t[2];
         const Matrix &sx = rep.maps[x], &sy = rep.maps[y], &sz = rep.maps[z];
         Matrix lhs = sx * sy * sz + sz * sy * sx +
                      rep.at(multiply(a, a.product(x, z), e(y)));
         Matrix rhs = sx * s_of_product(y, z) + sy * s_of_product(z, x) + sz * s_of_product(x, y);
         return detail::flatten(lhs - rhs);
       }},
  };
  return detail::run_conditions("jacobson_rep", conds,
                                [&](const detail::Condition&, std::size_t) { return n; });
}

/// The admissibility conditions for π: J₁ → End(J₂), J₂ an algebra.
///
/// Condition (1) mixes bidegrees (2,1,1) and (1,2,1) in (x, y, y') and is
/// split into those two homogeneous parts (1a, 1b). Every part is fully
/// polarized and checked on basis multisets.
inline IdentityReport validate_admissible_rep(const RepresentationSpec& rep,
                                              const AlgebraPresentation& target) {
  if (target.dim() != rep.target_dim) {
    throw DimensionMismatch("admissible rep: target algebra dimension differs from rep");
  }
  IdentityReport jac = validate_jacobson_rep(rep);
  jac.name = "admissible_rep";
  if (!jac.holds) return jac;

  const AlgebraPresentation& j1 = rep.source;
  const AlgebraPresentation& j2 = target;
  const std::size_t n = j1.dim(), m = j2.dim();
  auto p = [&](const Vector& x, const Vector& y) { return rep.at(x) * y; };
  auto mul2 = [&](const Vector& u, const Vector& v) { return multiply(j2, u, v); };
  auto sq1 = [&](const Vector& x) { return multiply(j1, x, x); };

  using Form = std::function<Vector(const std::vector<Vector>&)>;
  // Each form takes one value per variable.
  Form f1a = [&](const std::vector<Vector>& v) {  // (x², y, y')
    const Vector &x = v[0], &y = v[1], &yp = v[2];
    Vector px2 = rep.at(sq1(x)) * mul2(y, yp);
    Vector lhs = add(px2, scaled(2, mul2(p(x, yp), p(x, y))));
    Vector rhs = add(scaled(2, p(x, mul2(yp, p(x, y)))), mul2(rep.at(sq1(x)) * yp, y));
    return sub(lhs, rhs);
  };
  Form f1b = [&](const std::vector<Vector>& v) {  // (x, y², y')
    const Vector &x = v[0], &y = v[1], &yp = v[2];
    Vector y2 = mul2(y, y);
    Vector lhs = add(mul2(p(x, yp), y2), scaled(2, mul2(mul2(y, yp), p(x, y))));
    Vector rhs = add(p(x, mul2(yp, y2)), scaled(2, mul2(mul2(yp, p(x, y)), y)));
    return sub(lhs, rhs);
  };
  Form f2 = [&](const std::vector<Vector>& v) {  // (x, y³)
    const Vector &x = v[0], &y = v[1];
    Vector y2 = mul2(y, y);
    return sub(mul2(p(x, y), y2), mul2(p(x, y2), y));
  };
  Form f3 = [&](const std::vector<Vector>& v) {  // (x, x', y²)
    const Vector &x = v[0], &xp = v[1], &y = v[2];
    Vector y2 = mul2(y, y);
    Vector lhs = add(rep.at(multiply(j1, x, xp)) * y2, scaled(2, mul2(p(xp, y), p(x, y))));
    Vector rhs = add(rep.at(x) * (rep.at(xp) * y2), scaled(2, mul2(rep.at(xp) * p(x, y), y)));
    return sub(lhs, rhs);
  };

  struct Part {
    std::string name;
    Form form;
    std::vector<std::pair<bool, std::size_t>> vars;  // (in source?, degree)
  };
  std::vector<Part> parts{
      {"admissible_1a", f1a, {{true, 2}, {false, 1}, {false, 1}}},
      {"admissible_1b", f1b, {{true, 1}, {false, 2}, {false, 1}}},
      {"admissible_2", f2, {{true, 1}, {false, 3}}},
      {"admissible_3", f3, {{true, 1}, {true, 1}, {false, 2}}},
  };

  IdentityReport r;
  r.name = "admissible_rep";
  for (const auto& part : parts) {
    // For each variable: a non-decreasing index run of length = degree.
    std::vector<std::size_t> sizes;
    for (const auto& [src, deg] : part.vars) {
      for (std::size_t d = 0; d < deg; ++d) sizes.push_back(src ? n : m);
    }
    if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) continue;
    std::vector<std::size_t> t(sizes.size(), 0);
    while (true) {
      bool canonical = true;
      std::size_t pos = 0;
      for (const auto& [src, deg] : part.vars) {
        for (std::size_t d = 1; d < deg; ++d) {
          if (t[pos + d] < t[pos + d - 1]) canonical = false;
        }
        pos += deg;
      }
      if (canonical) {
        std::vector<std::vector<Vector>> args;
        pos = 0;
        for (const auto& [src, deg] : part.vars) {
          std::vector<Vector> list;
          for (std::size_t d = 0; d < deg; ++d) list.push_back(unit_vector(src ? n : m, t[pos + d]));
          args.push_back(std::move(list));
          pos += deg;
        }
        Vector res = detail::polarize(args, part.form, m);
        if (!is_zero(res)) {
          r.holds = false;
          r.component = part.name;
          r.tuple = t;
          r.residual = std::move(res);
          return r;
        }
      }
      std::size_t q = t.size();
      bool done = true;
      while (q > 0) {
        --q;
        if (++t[q] < sizes[q]) {
          done = false;
          break;
        }
        t[q] = 0;
      }
      if (done) break;
    }
  }
  return r;
}

/// π(xx') = 0 and π(x)π(x') = 0 on basis pairs of the source.
inline IdentityReport validate_2SN_rep(const RepresentationSpec& rep) {
  const AlgebraPresentation& a = rep.source;
  const std::size_t n = a.dim();
  std::vector<detail::Condition> conds{
      {"pi_of_product", 2,
       [&](const std::vector<std::size_t>& t) {
         return detail::flatten(rep.at(a.product(t[0], t[1])));
       }},
      {"pi_composition", 2,
       [&](const std::vector<std::size_t>& t) {
         return detail::flatten(rep.maps[t[0]] * rep.maps[t[1]]);
       }},
  };
  return detail::run_conditions("2SN_rep", conds,
                                [&](const detail::Condition&, std::size_t) { return n; });
}

/// validate_2SN_rep plus π(x)(yy') = 0 and (π(x)y)y' = 0.
inline IdentityReport validate_2SN_admissible(const RepresentationSpec& rep,
                                              const AlgebraPresentation& target) {
  if (target.dim() != rep.target_dim) {
    throw DimensionMismatch("2SN rep: target algebra dimension differs from rep");
  }
  IdentityReport r = validate_2SN_rep(rep);
  r.name = "2SN_admissible";
  if (!r.holds) return r;
  const std::size_t n = rep.source.dim(), m = target.dim();
  std::vector<detail::Condition> conds{
      {"pi_on_product", 3,
       [&](const std::vector<std::size_t>& t) {
         return rep.maps[t[0]] * target.product(t[1], t[2]);
       }},
      {"product_after_pi", 3,
       [&](const std::vector<std::size_t>& t) {
         return multiply(target, rep.maps[t[0]].column(t[1]), unit_vector(m, t[2]));
       }},
  };
  r = detail::run_conditions("2SN_admissible", conds,
                             [&](const detail::Condition&, std::size_t pos) {
                               return pos == 0 ? n : m;
                             });
  return r;
}

/// D²= 0, D(xx') = 0, D(x)x' = 0, D(x₀) = 0, x₀x = 0 on basis vectors.
inline IdentityReport validate_2SN_pair(const Matrix& d, const Vector& x0,
                                        const AlgebraPresentation& alg) {
  const std::size_t n = alg.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("D has the wrong shape");
  require_dim(alg, x0);
  std::vector<detail::Condition> conds{
      {"D_squared", 1, [&](const std::vector<std::size_t>& t) { return (d * d).column(t[0]); }},
      {"D_of_product", 2,
       [&](const std::vector<std::size_t>& t) { return d * alg.product(t[0], t[1]); }},
      {"D_then_product", 2,
       [&](const std::vector<std::size_t>& t) {
         return multiply(alg, d.column(t[0]), unit_vector(n, t[1]));
       }},
      {"D_of_x0", 0, [&](const std::vector<std::size_t>&) { return d * x0; }},
      {"x0_product", 1,
       [&](const std::vector<std::size_t>& t) { return multiply(alg, x0, unit_vector(n, t[0])); }},
  };
  return detail::run_conditions("2SN_pair", conds,
                                [&](const detail::Condition&, std::size_t) { return n; });
}

}  // namespace quadalg
