#pragma once

// Novikov algebras: sub-adjacent Lie and associated Jordan structures,
// the symmetric-Novikov consequence suite and the dimension-7 procedure.

#include <functional>
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

namespace detail {

inline AlgebraPresentation combine_table(const AlgebraPresentation& n, int sign) {
  AlgebraPresentation out(n.labels());
  out.set_field_d(n.field_d());
  const std::size_t d = n.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Scalar v = n.coefficient(i, j, k) + Scalar(sign) * n.coefficient(j, i, k);
        out.set_coefficient(i, j, k, v);
      }
    }
  }
  return out;
}

/// First basis tuple where `pred` fails.
inline std::optional<std::vector<std::size_t>> first_failure(
    std::size_t n, std::size_t arity, const std::function<bool(const std::vector<std::size_t>&)>& pred) {
  std::optional<std::vector<std::size_t>> out;
  for_each_tuple(n, arity, [&](const std::vector<std::size_t>& t) {
    if (pred(t)) return false;
    out = t;
    return true;
  });
  return out;
}

}  // namespace detail

/// [x, y] = xy − yx.
inline AlgebraPresentation sub_adjacent_lie(const AlgebraPresentation& n) {
  return detail::combine_table(n, -1);
}

/// Raised when (x, x, x) = 0 fails; carries the identity report and a concrete x.
class JordanAdmissibilityError : public PreconditionFailed {
 public:
  JordanAdmissibilityError(IdentityReport report, Vector element, const std::string& detail)
      : PreconditionFailed("cube_zero", detail),
        report_(std::move(report)),
        element_(std::move(element)) {}
  const IdentityReport& report() const noexcept { return report_; }
  const Vector& element() const noexcept { return element_; }

 private:
  IdentityReport report_;
  Vector element_;
};

/// Some x with (x, x, x) ≠ 0, searched on the grid {0, 1, −1, 2}ⁿ (four values
/// exceed the degree, so a nonzero cubic has a non-root there).
inline std::optional<Vector> cube_associator_witness(const AlgebraPresentation& a) {
  const std::size_t n = a.dim();
  const Scalar vals[4] = {0, 1, -1, 2};
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = vals[idx[i]];
    if (!is_zero(associator(a, x, x, x))) return x;
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == 4) idx[pos++] = 0;
    if (pos == n) return std::nullopt;
  }
}

/// [x, y]₊ = xy + yx, gated on (x, x, x) = 0.
inline AlgebraPresentation plus_jordan(const AlgebraPresentation& n) {
  IdentityReport r = check_identity(n, "cube_zero");
  if (!r.holds) {
    Vector x = cube_associator_witness(n).value_or(Vector{});
    std::string lab;
    for (auto i : r.tuple) lab += (lab.empty() ? "" : ",") + n.label(i);
    throw JordanAdmissibilityError(r, x, "(x,x,x) = 0 fails; linearized at (" + lab + ")");
  }
  return detail::combine_table(n, 1);
}

/// Symmetric Novikov inputs pass the gate automatically.
inline QuadraticAlgebra plus_jordan(const QuadraticAlgebra& qa) {
  if (holds(qa.alg(), "novikov")) {
    return QuadraticAlgebra(detail::combine_table(qa.alg(), 1), qa.form());
  }
  return QuadraticAlgebra(plus_jordan(qa.alg()), qa.form());
}

struct NovikovCheck {
  std::string name;
  bool holds = true;
  std::vector<std::size_t> tuple;  // counterexample basis tuple when false
  std::string detail;
};

struct NovikovReport {
  std::vector<NovikovCheck> checks;
  std::size_t dim_ann = 0;
  std::size_t dim_nn = 0;
  std::size_t dim_commutant = 0;
  std::optional<std::size_t> nil_index;
  bool commutative = false;
  bool reduced = false;

  bool all_true() const {
    for (const auto& c : checks) {
      if (!c.holds) return false;
    }
    return true;
  }
  const NovikovCheck& at(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return c;
    }
    throw UnknownName("no Novikov check '" + name + "'");
  }
};

inline bool is_two_step(const AlgebraPresentation& a) {
  PowerSeries ps = power_series(a);
  return ps.nil_index && *ps.nil_index <= 2;
}

inline NovikovReport symmetric_novikov_suite(const QuadraticAlgebra& qa) {
  const AlgebraPresentation& a = qa.alg();
  const Matrix& b = qa.gram();
  const std::size_t n = a.dim();
  if (!holds(a, "novikov")) throw PreconditionFailed("novikov", "input is not a Novikov algebra");

  NovikovReport r;
  auto e = [&](std::size_t i) { return basis_vector(a, i); };
  auto mul = [&](const Vector& x, const Vector& y) { return multiply(a, x, y); };
  auto br = [&](const Vector& x, const Vector& y) { return sub(mul(x, y), mul(y, x)); };
  auto pl = [&](const Vector& x, const Vector& y) { return add(mul(x, y), mul(y, x)); };
  auto tuple_check = [&](std::string name, std::size_t arity,
                         std::function<bool(const std::vector<Vector>&)> pred) {
    auto fail = detail::first_failure(n, arity, [&](const std::vector<std::size_t>& t) {
      std::vector<Vector> v;
      for (auto i : t) v.push_back(e(i));
      return pred(v);
    });
    NovikovCheck c{std::move(name), !fail.has_value(), fail.value_or(std::vector<std::size_t>{}), ""};
    r.checks.push_back(std::move(c));
  };
  auto flag = [&](std::string name, bool ok, std::string detail = "") {
    r.checks.push_back({std::move(name), ok, {}, std::move(detail)});
  };

  tuple_check("left_mult_commute", 2, [&](const std::vector<Vector>& v) {
    return commutator(left_operator(a, v[0]), left_operator(a, v[1])).is_zero();
  });
  tuple_check("left_mult_of_bracket_zero", 2, [&](const std::vector<Vector>& v) {
    return left_operator(a, br(v[0], v[1])).is_zero();
  });
  Subspace comm = center_of(a);
  Subspace nn = square(a);
  flag("square_in_commutant", nn.is_subspace_of(comm));
  tuple_check("associative", 3, [&](const std::vector<Vector>& v) {
    return is_zero(associator(a, v[0], v[1], v[2]));
  });
  tuple_check("bracket_kills_products", 3, [&](const std::vector<Vector>& v) {
    Vector c = br(v[1], v[2]);
    return is_zero(mul(v[0], c)) && is_zero(mul(c, v[0]));
  });
  tuple_check("plus_right_swap", 3, [&](const std::vector<Vector>& v) {
    return mul(pl(v[0], v[1]), v[2]) == mul(pl(v[0], v[2]), v[1]);
  });
  tuple_check("plus_product_chain", 3, [&](const std::vector<Vector>& v) {
    Vector p1 = pl(v[0], mul(v[1], v[2]));
    return p1 == pl(mul(v[0], v[1]), v[2]) && p1 == mul(v[0], pl(v[1], v[2])) &&
           p1 == mul(pl(v[0], v[1]), v[2]);
  });
  tuple_check("plus_central", 3, [&](const std::vector<Vector>& v) {
    Vector p = pl(v[1], v[2]);
    return mul(v[0], p) == mul(p, v[0]);
  });
  tuple_check("plus_left_swap", 3, [&](const std::vector<Vector>& v) {
    return pl(v[0], mul(v[1], v[2])) == pl(v[1], mul(v[0], v[2]));
  });

  DualityReport dr = duality_report(qa);
  for (const char* name : {"commutant_is_bracket_perp", "nucleus_is_left_nucleus",
                           "left_nucleus_is_associator_perp", "left_ann_is_ann",
                           "right_ann_is_ann", "ann_perp_is_square"}) {
    flag(name, dr.at(name).holds);
  }
  Subspace ann = annihilator(a);
  flag("ann_is_square_perp", ann == orth_complement(b, nn));

  r.dim_ann = ann.dim();
  r.dim_nn = nn.dim();
  r.dim_commutant = comm.dim();
  r.nil_index = power_series(a).nil_index;
  r.commutative = holds(a, "commutative");
  r.reduced = is_reduced(qa);
  bool bounds = true;
  if (!r.commutative && r.reduced) {
    bounds = 3 <= r.dim_ann && r.dim_ann <= r.dim_nn && r.dim_nn + 3 <= n;
  }
  flag("reduced_dimension_bounds", bounds,
       "dims (Ann, NN, N) = (" + std::to_string(r.dim_ann) + ", " + std::to_string(r.dim_nn) +
           ", " + std::to_string(n) + ")");

  AlgebraPresentation g = sub_adjacent_lie(a);
  tuple_check("lie_form_invariant", 3, [&](const std::vector<Vector>& v) {
    return bilinear(b, br(v[0], v[1]), v[2]) == bilinear(b, v[0], br(v[1], v[2]));
  });
  tuple_check("lie_two_step", 3, [&](const std::vector<Vector>& v) {
    return is_zero(br(br(v[0], v[1]), v[2]));
  });
  AlgebraPresentation j = detail::combine_table(a, 1);
  flag("jordan_is_jordan_novikov", holds(j, "commutative") && holds(j, "associative"));
  flag("jordan_form_associative", form_checks(j, b).associative);

  const bool g_reduced = is_reduced(QuadraticAlgebra(g, qa.form()));
  const bool j_reduced = is_reduced(QuadraticAlgebra(j, qa.form()));
  flag("lie_or_jordan_reduced_implies_reduced", !(g_reduced || j_reduced) || r.reduced);
  flag("lie_reduced_implies_two_step", !g_reduced || is_two_step(a));
  flag("two_step_iff_jordan_two_step", is_two_step(a) == holds(j, "two_step_nilpotent"));
  return r;
}

/// A 2SN Lie algebra read as an anticommutative Novikov algebra with xy := [x, y].
inline AlgebraPresentation anticommutative_from_2SN_lie(const AlgebraPresentation& g) {
  if (!holds(g, "anticommutative")) {
    throw PreconditionFailed("anticommutative", "bracket table is not anticommutative");
  }
  const std::size_t n = g.dim();
  auto fail = detail::first_failure(n, 3, [&](const std::vector<std::size_t>& t) {
    return is_zero(multiply(g, g.product(t[0], t[1]), basis_vector(g, t[2])));
  });
  if (fail) {
    throw PreconditionFailed("two_step", "[[" + g.label((*fail)[0]) + "," + g.label((*fail)[1]) +
                                             "]," + g.label((*fail)[2]) + "] != 0");
  }
  return g;
}

enum class Dim7Branch { nilpotent3, split };

struct Dim7Result {
  Dim7Branch branch = Dim7Branch::nilpotent3;
  Vector x;                              // the non-isotropic element of NN \ Ann
  std::optional<Vector> idempotent;      // x₁ with x₁² = x₁ (split branch)
  std::optional<QuadraticAlgebra> line;  // ℂx₁
  std::optional<QuadraticAlgebra> rest;  // x₁^⊥
};

inline Dim7Result split_dim7(const QuadraticAlgebra& qa) {
  const AlgebraPresentation& a = qa.alg();
  const std::size_t n = a.dim();
  if (n != 7) throw PreconditionFailed("dim7", "input has dimension " + std::to_string(n));
  if (!holds(a, "novikov")) throw PreconditionFailed("novikov", "input is not Novikov");
  if (holds(a, "commutative")) throw PreconditionFailed("noncommutative", "input is commutative");
  if (!is_reduced(qa)) throw PreconditionFailed("reduced", "input is not reduced");
  NovikovReport rep = symmetric_novikov_suite(qa);
  if (!rep.all_true()) throw PreconditionFailed("symmetric_novikov_suite", "suite reports a failure");
  Subspace ann = annihilator(a);
  Subspace nn = square(a);
  if (ann.dim() != 3 || nn.dim() != 4) {
    throw PreconditionFailed("dims", "expected dim Ann = 3 and dim NN = 4");
  }

  std::vector<Vector> cand = nn.vectors();
  const std::size_t k = cand.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) cand.push_back(add(cand[i], cand[j]));
  }
  std::optional<Vector> x;
  for (const auto& v : cand) {
    if (!ann.contains(v) && !qa.b(v, v).is_zero()) {
      x = v;
      break;
    }
  }
  if (!x) throw PreconditionFailed("non_isotropic_x", "no x in NN \\ Ann with B(x,x) != 0");

  Dim7Result out;
  out.x = *x;
  bool into_ann = true;
  for (std::size_t j = 0; j < n && into_ann; ++j) {
    into_ann = ann.contains(multiply(a, *x, basis_vector(a, j)));
  }
  if (into_ann) {
    if (rep.nil_index != std::optional<std::size_t>(3)) {
      throw Error("x N lies in Ann but the algebra is not 3-step nilpotent");
    }
    out.branch = Dim7Branch::nilpotent3;
    return out;
  }
  Vector x2 = multiply(a, *x, *x);
  Scalar mu = qa.b(x2, *x) / qa.b(*x, *x);
  if (mu.is_zero()) throw PreconditionFailed("mu_nonzero", "x^2 has no x component");
  Vector xp = scaled(mu.inverse(), *x);
  Vector x1 = multiply(a, xp, xp);
  if (multiply(a, x1, x1) != x1) throw Error("x1 is not idempotent");
  Subspace line = span_normal_form(n, {x1});
  out.branch = Dim7Branch::split;
  out.idempotent = x1;
  out.line = restrict_to(qa, line, {"x1"});
  out.rest = restrict_to(qa, orth_complement(qa.gram(), line));
  return out;
}

}  // namespace quadalg
