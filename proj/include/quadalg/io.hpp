#pragma once

// Algebra file format (JSON, sorted keys, zero entries omitted) and helpers
// for the other documents the CLI reads: matrices, cubic forms, witnesses.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quadalg/algebra.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/extensions.hpp"
#include "quadalg/linalg.hpp"
#include "quadalg/scalar.hpp"

namespace quadalg {

using Json = nlohmann::json;

struct AlgebraFile {
  AlgebraPresentation alg;
  std::optional<FormMatrix> form;

  QuadraticAlgebra quadratic() const {
    if (!form) throw PreconditionFailed("form_present", "document has no form");
    return QuadraticAlgebra(alg, *form);
  }
};

namespace io_detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

inline std::size_t index_value(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace io_detail

// --- scalars --------------------------------------------------------------

inline Json scalar_to_json(const Scalar& s) { return s.to_string(); }

/// Accepts strings in the scalar text format and plain integers.
inline Scalar scalar_from_json(const Json& j, std::int64_t field_d, const std::string& where) {
  Scalar s;
  if (j.is_number_integer()) {
    s = Scalar(j.get<long long>());
  } else if (j.is_string()) {
    try {
      s = Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      io_detail::fail(where, e.what());
    }
  } else {
    io_detail::fail(where, "expected a scalar string");
  }
  if (s.field_d() != 0 && s.field_d() != field_d) {
    throw FieldMismatch(where + ": scalar uses √" + std::to_string(s.field_d()) +
                        " but the document field is d = " + std::to_string(field_d));
  }
  return s;
}

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

inline Vector vector_from_json(const Json& j, std::int64_t d, const std::string& where) {
  if (!j.is_array()) io_detail::fail(where, "expected an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(scalar_from_json(j[i], d, where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

inline Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& r : m.row_vectors()) out.push_back(vector_to_json(r));
  return out;
}

inline Matrix matrix_from_json(const Json& j, std::int64_t d, const std::string& where) {
  if (!j.is_array()) io_detail::fail(where, "expected an array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_from_json(j[i], d, where + "[" + std::to_string(i) + "]"));
  }
  if (rows.empty()) return Matrix(0, 0);
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) io_detail::fail(where, "rows have different lengths");
  }
  return Matrix::from_rows(rows, rows[0].size());
}

// --- algebras -------------------------------------------------------------

inline Json algebra_to_json(const AlgebraPresentation& a, const std::optional<FormMatrix>& form = {}) {
  Json out;
  const std::size_t n = a.dim();
  out["dim"] = n;
  out["labels"] = a.labels();
  if (a.field_d() != 0) out["field_d"] = a.field_d();
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = a.coefficient(i, j, k);
        if (!c.is_zero()) table.push_back({{"c", scalar_to_json(c)}, {"i", i}, {"j", j}, {"k", k}});
      }
    }
  }
  out["table"] = std::move(table);
  if (form) out["form"] = matrix_to_json(form->matrix());
  return out;
}

inline Json algebra_to_json(const QuadraticAlgebra& qa) {
  return algebra_to_json(qa.alg(), qa.form());
}

/// `default_d` applies when the document has no field_d.
inline AlgebraFile algebra_from_json(const Json& j, std::int64_t default_d = 0,
                                     const std::string& where = "algebra") {
  using io_detail::fail;
  using io_detail::field;
  const std::size_t n = io_detail::index_value(field(j, "dim", where), where + ".dim");
  std::int64_t d = default_d;
  if (j.contains("field_d")) {
    if (!j["field_d"].is_number_integer()) fail(where + ".field_d", "expected an integer");
    d = j["field_d"].get<std::int64_t>();
    if (default_d != 0 && d != default_d) {
      throw FieldMismatch(where + ".field_d: document has d = " + std::to_string(d) +
                          " but d = " + std::to_string(default_d) + " was requested");
    }
  }
  if (d != 0 && (d == 1 || !is_square_free(d))) fail(where + ".field_d", "d must be square-free and not 1");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array()) fail(where + ".labels", "expected an array of strings");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) fail(where + ".labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(l[i].get<std::string>());
    }
    if (labels.size() != n) fail(where + ".labels", "expected " + std::to_string(n) + " labels");
  } else {
    labels = AlgebraPresentation::default_labels(n);
  }
  AlgebraPresentation a = [&] {
    try {
      return AlgebraPresentation(labels);
    } catch (const Error& e) {
      fail(where + ".labels", e.what());
    }
  }();
  a.set_field_d(d);
  const Json& t = field(j, "table", where);
  if (!t.is_array()) fail(where + ".table", "expected an array");
  for (std::size_t e = 0; e < t.size(); ++e) {
    std::string w = where + ".table[" + std::to_string(e) + "]";
    std::size_t i = io_detail::index_value(field(t[e], "i", w), w + ".i");
    std::size_t jj = io_detail::index_value(field(t[e], "j", w), w + ".j");
    std::size_t k = io_detail::index_value(field(t[e], "k", w), w + ".k");
    if (i >= n || jj >= n || k >= n) fail(w, "index out of range");
    a.set_coefficient(i, jj, k, scalar_from_json(field(t[e], "c", w), d, w + ".c"));
  }
  AlgebraFile out{std::move(a), std::nullopt};
  if (j.contains("form")) {
    Matrix m = matrix_from_json(j["form"], d, where + ".form");
    if (m.rows() != n || m.cols() != n) fail(where + ".form", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    try {
      out.form = FormMatrix(m);
    } catch (const PreconditionFailed& e) {
      fail(where + ".form", e.what());
    }
  }
  return out;
}

/// Parses text; JSON syntax errors report line and column.
inline Json parse_json_text(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON");
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json load_json_file(const std::string& path) { return parse_json_text(read_text_file(path), path); }

inline AlgebraFile load_algebra_file(const std::string& path, std::int64_t default_d = 0) {
  return algebra_from_json(load_json_file(path), default_d, path);
}

inline std::string serialize_algebra(const AlgebraPresentation& a, const std::optional<FormMatrix>& form = {}) {
  return algebra_to_json(a, form).dump(2) + "\n";
}

inline std::string serialize_algebra(const QuadraticAlgebra& qa) {
  return serialize_algebra(qa.alg(), qa.form());
}

// --- cubic forms and witnesses --------------------------------------------

/// {"dim": m, "monomials": [{"i","j","k","c"}]}, each entry keyed by its sorted triple.
inline Json cubic_to_json(const CubicForm& f) {
  Json out;
  const std::size_t m = f.dim();
  out["dim"] = m;
  Json mono = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      for (std::size_t k = j; k < m; ++k) {
        if (!f.at(i, j, k).is_zero()) {
          mono.push_back({{"c", scalar_to_json(f.at(i, j, k))}, {"i", i}, {"j", j}, {"k", k}});
        }
      }
    }
  }
  out["monomials"] = std::move(mono);
  return out;
}

inline CubicForm cubic_from_json(const Json& j, std::int64_t d = 0, const std::string& where = "cubic") {
  using io_detail::field;
  const std::size_t m = io_detail::index_value(field(j, "dim", where), where + ".dim");
  const Json& mono = field(j, "monomials", where);
  if (!mono.is_array()) io_detail::fail(where + ".monomials", "expected an array");
  std::map<std::array<std::size_t, 3>, Scalar> coeffs;
  for (std::size_t e = 0; e < mono.size(); ++e) {
    std::string w = where + ".monomials[" + std::to_string(e) + "]";
    std::array<std::size_t, 3> key{io_detail::index_value(field(mono[e], "i", w), w + ".i"),
                                   io_detail::index_value(field(mono[e], "j", w), w + ".j"),
                                   io_detail::index_value(field(mono[e], "k", w), w + ".k")};
    for (auto x : key) {
      if (x >= m) io_detail::fail(w, "index out of range");
    }
    std::sort(key.begin(), key.end());
    if (coeffs.count(key)) io_detail::fail(w, "duplicate monomial");
    coeffs[key] = scalar_from_json(field(mono[e], "c", w), d, w + ".c");
  }
  return CubicForm::from_monomials(m, coeffs);
}

}  // namespace quadalg
