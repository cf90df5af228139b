#pragma once

// Built-in worked examples with their expected properties.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadalg/algebra.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/extensions.hpp"
#include "quadalg/identities.hpp"
#include "quadalg/isomorphy.hpp"
#include "quadalg/novikov.hpp"
#include "quadalg/quadratic.hpp"

namespace quadalg {

using PropertyValue = std::variant<bool, std::int64_t, std::string>;

inline std::string to_string(const PropertyValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

struct CatalogEntry {
  std::string name;
  std::string source;  // which construction the example comes from
  AlgebraPresentation alg;
  std::optional<FormMatrix> form;
  std::optional<DoubleExtSpec> de_spec;  // set for double extensions
  std::vector<Vector> summand;           // a proper orthogonal ideal summand, if known
  std::map<std::string, PropertyValue> expected;

  QuadraticAlgebra quadratic() const {
    if (!form) throw PreconditionFailed("form_present", name + " has no form");
    return QuadraticAlgebra(alg, *form);
  }
};

struct CatalogDiff {
  std::string property;
  std::string expected;
  std::string actual;
  std::string source;
};

// ---------------------------------------------------------------------------
// Constructions used by the entries

/// ℂe ⊕ q with (λe + u)(μe + v) = (λμ + B(u,v))e + λv + μu and B_J = 1 ⊕ B.
inline QuadraticAlgebra spin_factor(const FormMatrix& b) {
  const std::size_t n = b.dim();
  std::vector<std::string> labels{"e"};
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i + 1));
  AlgebraPresentation a(labels);
  a.set_coefficient(0, 0, 0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    a.set_coefficient(0, i + 1, i + 1, 1);
    a.set_coefficient(i + 1, 0, i + 1, 1);
    for (std::size_t j = 0; j < n; ++j) a.set_coefficient(i + 1, j + 1, 0, b(i, j));
  }
  Matrix one(1, 1);
  one(0, 0) = 1;
  return QuadraticAlgebra(a, FormMatrix(block_diagonal(one, b.matrix())));
}

/// q ⊕ ℂf with uv = B(u,v)f, basis (u…, f).
inline AlgebraPresentation quadratic_square_to_line(const FormMatrix& b) {
  const std::size_t n = b.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i + 1));
  labels.push_back("f");
  AlgebraPresentation a(labels);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.set_coefficient(i, j, n, b(i, j));
  }
  return a;
}

/// ℂe ⊕ q ⊕ ℂf with e unit, uv = B(u,v)f, and B(e,f) = 1, B|q = B.
inline QuadraticAlgebra spin_factor_extension(const FormMatrix& b) {
  const std::size_t n = b.dim();
  AlgebraPresentation inner = quadratic_square_to_line(b);
  std::vector<std::string> labels{"e"};
  for (const auto& l : inner.labels()) labels.push_back(l);
  AlgebraPresentation a(labels);
  embed_table(a, inner, 1);
  a.set_coefficient(0, 0, 0, 1);
  for (std::size_t i = 1; i <= n + 1; ++i) {
    a.set_coefficient(0, i, i, 1);
    a.set_coefficient(i, 0, i, 1);
  }
  Matrix g(n + 2, n + 2);
  g(0, n + 1) = 1;
  g(n + 1, 0) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i + 1, j + 1) = b(i, j);
  }
  return QuadraticAlgebra(a, FormMatrix(g));
}

/// Permutation taking unital_extension(q ⊕ ℂf), basis (u…, f, e), to (e, u…, f).
inline Matrix spin_extension_permutation(std::size_t q_dim) {
  const std::size_t n = q_dim + 2;
  Matrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  m(0, n - 1) = 1;
  return m;
}

/// The 2SN quadratic Lie algebra [x₁,x₂] = z₃, [x₂,x₃] = z₁, [x₃,x₁] = z₂, B(x_i, z_i) = 1.
inline QuadraticAlgebra g6_lie() {
  AlgebraPresentation g({"x1", "x2", "x3", "z1", "z2", "z3"});
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    g.set_coefficient(i, j, k, 1);
    g.set_coefficient(j, i, k, -1);
  };
  set(0, 1, 5);
  set(1, 2, 3);
  set(2, 0, 4);
  Matrix b(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    b(i, i + 3) = 1;
    b(i + 3, i) = 1;
  }
  return QuadraticAlgebra(g, FormMatrix(b));
}

inline Matrix pairing_form(std::size_t half) {
  Matrix b(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    b(i, half + i) = 1;
    b(half + i, i) = 1;
  }
  return b;
}

inline QuadraticAlgebra n6_algebra() {
  AlgebraPresentation a(6);
  a.set_coefficient(3, 4, 2, 1);
  a.set_coefficient(4, 5, 0, 1);
  a.set_coefficient(5, 3, 1, 1);
  return QuadraticAlgebra(a, FormMatrix(pairing_form(3)));
}

inline QuadraticAlgebra n7_algebra() {
  AlgebraPresentation a({"x", "e1", "e2", "e3", "e4", "e5", "e6"});
  a.set_coefficient(0, 4, 1, 1);
  a.set_coefficient(4, 0, 1, 1);
  a.set_coefficient(4, 4, 0, 1);
  a.set_coefficient(4, 5, 3, 1);
  a.set_coefficient(5, 6, 1, 1);
  a.set_coefficient(6, 4, 2, 1);
  Matrix b(7, 7);
  b(0, 0) = 1;
  for (std::size_t i = 1; i <= 3; ++i) {
    b(i, i + 3) = 1;
    b(i + 3, i) = 1;
  }
  return QuadraticAlgebra(a, FormMatrix(b));
}

/// ℂc with c² = c and B(c,c) = 1.
inline QuadraticAlgebra idempotent_line(const std::string& label = "c") {
  AlgebraPresentation a({label});
  a.set_coefficient(0, 0, 0, 1);
  return QuadraticAlgebra(a, FormMatrix::identity(1));
}

inline CubicForm cubic_I0() { return CubicForm::from_monomials(2, {{{0, 0, 1}, Scalar(1)}}); }

/// x*y*(x* + λy*) in the monomial convention: I_xxy = 1, I_xyy = λ.
inline CubicForm cubic_I_lambda(const Scalar& lambda) {
  return CubicForm::from_monomials(2, {{{0, 0, 1}, Scalar(1)}, {{0, 1, 1}, lambda}});
}

// ---------------------------------------------------------------------------
// Property evaluation

namespace catalog_detail {

inline std::string render_vector(const AlgebraPresentation& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coeff = v[i] == Scalar(1) ? "" : v[i] == Scalar(-1) ? "-" : v[i].to_string() + "*";
    if (!out.empty() && coeff.rfind('-', 0) != 0) out += "+";
    out += coeff + a.label(i);
  }
  return out.empty() ? "0" : out;
}

inline std::string spectrum_string(const DeSpectrum& s) {
  return "(" + std::to_string(s.dim_ker_one) + "," + std::to_string(s.dim_ker_half) + ")";
}

inline bool is_proper_orthogonal_summand(const CatalogEntry& e) {
  if (!e.form || e.summand.empty()) return false;
  const std::size_t n = e.alg.dim();
  Subspace s = span_normal_form(n, e.summand);
  if (s.dim() == 0 || s.dim() == n) return false;
  if (!FormMatrix(restrict_form(e.form->matrix(), s)).is_nondegenerate()) return false;
  Subspace perp = orth_complement(e.form->matrix(), s);
  return is_ideal(e.alg, s) && is_ideal(e.alg, perp);
}

}  // namespace catalog_detail

inline const CatalogEntry& catalog_get(const std::string& name);

/// Computes one named property of an entry.
inline PropertyValue compute_property(const CatalogEntry& e, const std::string& prop) {
  using namespace catalog_detail;
  const AlgebraPresentation& a = e.alg;
  const auto names = identity_names();
  if (std::find(names.begin(), names.end(), prop) != names.end()) return holds(a, prop);
  if (prop == "unital") return unit_element(a).has_value();
  if (prop == "unit") {
    auto u = unit_element(a);
    return u ? render_vector(a, *u) : std::string("none");
  }
  if (prop == "pseudo_euclidean") return e.form.has_value() && form_checks(a, *e.form).all();
  if (prop == "frobenius") {
    return unit_element(a).has_value() && holds(a, "associative") && e.form.has_value() &&
           form_checks(a, *e.form).all();
  }
  if (prop == "nil_index") {
    auto k = power_series(a).nil_index;
    return k ? PropertyValue(static_cast<std::int64_t>(*k)) : PropertyValue(std::string("none"));
  }
  if (prop == "dim_ann") return static_cast<std::int64_t>(annihilator(a).dim());
  if (prop == "dim_nn") return static_cast<std::int64_t>(square(a).dim());
  if (prop == "dim_commutant") return static_cast<std::int64_t>(center_of(a).dim());
  if (prop == "jordan_admissible") return holds(a, "cube_zero");
  if (prop == "decomposable") return is_proper_orthogonal_summand(e);
  if (prop == "reduced") return is_reduced(e.quadratic());
  if (prop == "dualities") return duality_report(e.quadratic()).all_applicable_hold();
  if (prop == "symmetric_novikov_suite") return symmetric_novikov_suite(e.quadratic()).all_true();
  if (prop == "plus_jordan_is_jordan") return holds(plus_jordan(a), "jordan");
  if (prop == "lie_reduced") {
    return is_reduced(QuadraticAlgebra(sub_adjacent_lie(a), *e.form));
  }
  if (prop == "split_dim7") {
    return std::string(split_dim7(e.quadratic()).branch == Dim7Branch::nilpotent3 ? "nilpotent3"
                                                                                 : "split");
  }
  if (prop == "lie_bracket_doubles") {
    // xy := [x,y] read back through the commutator gives 2[x,y].
    AlgebraPresentation g = sub_adjacent_lie(anticommutative_from_2SN_lie(a));
    AlgebraPresentation twice(a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) twice.set_product(i, j, scaled(2, a.product(i, j)));
    }
    return g == twice;
  }
  if (prop == "cubic_class") {
    return std::string(to_string(classify_binary_cubic(extract_t_star(e.quadratic()).cubic)));
  }
  if (prop == "tstar_roundtrip") {
    QuadraticAlgebra qa = e.quadratic();
    TStarExtraction x = extract_t_star(qa);
    return witness_holds({x.witness, WitnessKind::i_iso}, t_star_extension(x.cubic), qa);
  }
  if (prop == "de_table") {
    return e.de_spec.has_value() && double_extension(*e.de_spec).alg() == a;
  }
  if (prop == "de_spectrum") {
    if (!e.de_spec) throw PreconditionFailed("de_spec", e.name + " is not a double extension");
    return spectrum_string(de_spectrum(e.de_spec->c, e.de_spec->bq));
  }
  if (prop == "matches_unital_extension") {
    const std::size_t q = a.dim() - 2;
    AlgebraPresentation inner = restrict_to(a, span_normal_form(a.dim(), [&] {
      std::vector<Vector> vs;
      for (std::size_t i = 1; i <= q + 1; ++i) vs.push_back(unit_vector(a.dim(), i));
      return vs;
    }()));
    AlgebraPresentation ext = unital_extension(inner);
    return verify_witness(spin_extension_permutation(q), ext, a).is_morphism;
  }
  const std::string tag = "not_isomorphic_to:";
  if (prop.rfind(tag, 0) == 0) {
    const CatalogEntry& other = catalog_get(prop.substr(tag.size()));
    if (e.de_spec && other.de_spec) {
      return spectrum_string(de_spectrum(e.de_spec->c, e.de_spec->bq)) !=
             spectrum_string(de_spectrum(other.de_spec->c, other.de_spec->bq));
    }
    if (e.form && other.form) {
      auto c1 = classify_binary_cubic(extract_t_star(e.quadratic()).cubic);
      auto c2 = classify_binary_cubic(extract_t_star(other.quadratic()).cubic);
      return c1 != c2;
    }
    throw PreconditionFailed("certificate", "no invariant separates " + e.name + " and " + other.name);
  }
  throw UnknownName("unknown catalog property '" + prop + "'");
}

/// Differences between expected and computed values; errors count as differences.
inline std::vector<CatalogDiff> catalog_verify_entry(const CatalogEntry& e) {
  std::vector<CatalogDiff> out;
  for (const auto& [prop, want] : e.expected) {
    std::string got;
    try {
      got = to_string(compute_property(e, prop));
    } catch (const Error& err) {
      got = std::string("error: ") + err.what();
    }
    if (got != to_string(want)) out.push_back({prop, to_string(want), got, e.source});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entries

namespace catalog_detail {

inline CatalogEntry make_entry(std::string name, std::string source, const QuadraticAlgebra& qa,
                               std::map<std::string, PropertyValue> expected) {
  CatalogEntry e{std::move(name), std::move(source), qa.alg(), qa.form(), std::nullopt, {},
                 std::move(expected)};
  return e;
}

inline DoubleExtSpec diag_spec(const Scalar& c) {
  Matrix m(1, 1);
  m(0, 0) = c;
  return DoubleExtSpec{FormMatrix::identity(1), m, 1, {"x"}};
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  const FormMatrix q2 = FormMatrix::identity(2);

  out.push_back(make_entry("spin_factor", "spin factor of a quadratic space", spin_factor(q2),
                           {{"unital", true}, {"unit", std::string("e")}, {"jordan", true},
                            {"pseudo_euclidean", true}, {"associative", false}}));

  {
    CatalogEntry e = make_entry("spin_factor_ext", "unital extension of q + Cf with uv = B(u,v)f",
                                spin_factor_extension(q2),
                                {{"unital", true}, {"unit", std::string("e")}, {"jordan", true},
                                 {"pseudo_euclidean", true}, {"matches_unital_extension", true},
                                 {"novikov", true}, {"symmetric_novikov_suite", true}});
    out.push_back(std::move(e));
  }

  {
    DoubleExtSpec s = diag_spec(1);
    CatalogEntry e = make_entry("diag_de_id", "diagonalizable double extension of Cx by C = Id",
                                double_extension(s),
                                {{"jordan", true}, {"pseudo_euclidean", true}, {"unital", true},
                                 {"unit", std::string("y1")}, {"de_table", true},
                                 {"de_spectrum", std::string("(1,0)")},
                                 {"not_isomorphic_to:diag_de_half", true},
                                 {"nil_index", std::string("none")}});
    e.de_spec = s;
    out.push_back(std::move(e));
  }
  {
    DoubleExtSpec s = diag_spec(Scalar::fraction(1, 2));
    CatalogEntry e = make_entry("diag_de_half", "diagonalizable double extension of Cx by C = Id/2",
                                double_extension(s),
                                {{"jordan", true}, {"pseudo_euclidean", true}, {"unital", false},
                                 {"unit", std::string("none")}, {"de_table", true},
                                 {"de_spectrum", std::string("(0,1)")},
                                 {"not_isomorphic_to:diag_de_id", true},
                                 {"nil_index", std::string("none")}});
    e.de_spec = s;
    out.push_back(std::move(e));
  }

  {
    DoubleExtSpec s = diag_spec(1);
    CatalogEntry e = make_entry("jn3", "Jordan-Novikov algebra y1^2 = y1, y1x = x, y1x1 = x1, x^2 = x1",
                                double_extension(s),
                                {{"jordan", true}, {"associative", true}, {"commutative", true},
                                 {"novikov", true}, {"pseudo_euclidean", true}, {"unital", true},
                                 {"frobenius", true}, {"symmetric_novikov_suite", true}});
    out.push_back(std::move(e));
  }

  {
    CubicForm one = CubicForm::from_monomials(1, {{{0, 0, 0}, Scalar(1)}});
    out.push_back(make_entry("tstar1", "T*-extension of Ca: a^2 = b, B(a,b) = 1",
                             t_star_extension(one, {"a", "b"}),
                             {{"two_step_nilpotent", true}, {"pseudo_euclidean", true},
                              {"reduced", true}, {"cubic_class", std::string("class_generic")},
                              {"tstar_roundtrip", true}, {"symmetric_novikov_suite", true}}));
  }
  out.push_back(make_entry("tstar_J0", "T*-extension by (x*)^2 y*: x^2 = f, xy = e",
                           t_star_extension(cubic_I0(), {"x", "y", "e", "f"}),
                           {{"two_step_nilpotent", true}, {"pseudo_euclidean", true},
                            {"reduced", true}, {"cubic_class", std::string("class_I0")},
                            {"tstar_roundtrip", true}, {"not_isomorphic_to:tstar_J1", true},
                            {"symmetric_novikov_suite", true}}));
  out.push_back(make_entry("tstar_J1", "T*-extension by x*y*(x* + y*): x^2 = f, xy = e + f, y^2 = e",
                           t_star_extension(cubic_I_lambda(1), {"x", "y", "e", "f"}),
                           {{"two_step_nilpotent", true}, {"pseudo_euclidean", true},
                            {"reduced", true}, {"cubic_class", std::string("class_generic")},
                            {"tstar_roundtrip", true}, {"not_isomorphic_to:tstar_J0", true},
                            {"symmetric_novikov_suite", true}}));

  {
    AlgebraPresentation a({"a", "b"});
    a.set_coefficient(1, 0, 0, -1);
    CatalogEntry e{"explus", "Novikov algebra ba = -a that is not Jordan-admissible", a,
                   std::nullopt, std::nullopt, {},
                   {{"novikov", true}, {"cube_zero", false}, {"jordan_admissible", false},
                    {"commutative", false}}};
    out.push_back(std::move(e));
  }

  out.push_back(make_entry("N6", "symmetric non-commutative Novikov algebra of dimension 6",
                           n6_algebra(),
                           {{"novikov", true}, {"commutative", false}, {"pseudo_euclidean", true},
                            {"symmetric_novikov_suite", true}, {"nil_index", std::int64_t{2}},
                            {"dim_ann", std::int64_t{3}}, {"dim_nn", std::int64_t{3}},
                            {"dim_commutant", std::int64_t{3}}, {"reduced", true},
                            {"dualities", true}, {"plus_jordan_is_jordan", true}}));
  out.push_back(make_entry("N7", "3-step nilpotent symmetric Novikov algebra Cx + N6",
                           n7_algebra(),
                           {{"novikov", true}, {"commutative", false}, {"pseudo_euclidean", true},
                            {"symmetric_novikov_suite", true}, {"nil_index", std::int64_t{3}},
                            {"reduced", true}, {"split_dim7", std::string("nilpotent3")},
                            {"lie_reduced", false}, {"dim_ann", std::int64_t{3}},
                            {"dim_nn", std::int64_t{4}}, {"dualities", true}}));

  {
    QuadraticAlgebra g = g6_lie();
    out.push_back(make_entry("g6_anticomm", "anticommutative Novikov algebra xy := [x,y] on g6",
                             QuadraticAlgebra(anticommutative_from_2SN_lie(g.alg()), g.form()),
                             {{"novikov", true}, {"anticommutative", true},
                              {"pseudo_euclidean", true}, {"symmetric_novikov_suite", true},
                              {"lie_bracket_doubles", true}, {"nil_index", std::int64_t{2}},
                              {"reduced", true}}));
    QuadraticAlgebra sum = orthogonal_sum(QuadraticAlgebra(g.alg(), g.form()), idempotent_line("c"));
    CatalogEntry e = make_entry("g6_plus_c", "g6 orthogonally summed with Cc, c^2 = c, B(c,c) = 1",
                                sum,
                                {{"novikov", true}, {"commutative", false},
                                 {"pseudo_euclidean", true}, {"symmetric_novikov_suite", true},
                                 {"nil_index", std::string("none")}, {"decomposable", true}});
    e.summand = {unit_vector(7, 6)};
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace catalog_detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = catalog_detail::build_catalog();
  return entries;
}

inline std::vector<std::string> catalog_list() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.push_back(e.name);
  return out;
}

inline const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw UnknownName("no catalog entry '" + name + "'");
}

inline std::vector<CatalogDiff> catalog_verify(const std::string& name) {
  return catalog_verify_entry(catalog_get(name));
}

}  // namespace quadalg
