#pragma once

// Command-line front end: check, invariants, extend, novikov, iso, catalog.
// Exit codes: 0 pass, 1 fail, 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadalg/catalog.hpp"
#include "quadalg/io.hpp"
#include "quadalg/quadalg.hpp"

namespace quadalg::cli {

enum class Format { json, text };

class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void check(const std::string& name, bool holds, Json detail = nullptr) {
    Json c{{"holds", holds}, {"name", name}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks_.push_back(std::move(c));
    if (!holds) failed_ = true;
  }
  Json& result() { return result_; }
  void set_error(const std::string& type, const std::string& message) {
    error_ = Json{{"message", message}, {"type", type}};
  }
  std::string status() const { return !error_.is_null() ? "error" : failed_ ? "fail" : "pass"; }
  int exit_code() const { return !error_.is_null() ? 2 : failed_ ? 1 : 0; }

  Json to_json() const {
    Json out{{"checks", checks_}, {"command", command_}, {"status", status()}};
    if (!result_.is_null()) out["result"] = result_;
    if (!error_.is_null()) out["error"] = error_;
    return out;
  }

  std::string render(Format f) const {
    if (f == Format::json) return to_json().dump(2) + "\n";
    std::ostringstream os;
    os << "command: " << command_ << "\n";
    for (const auto& c : checks_) {
      os << (c["holds"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      if (c.contains("detail")) os << "  " << c["detail"].dump();
      os << "\n";
    }
    if (!result_.is_null()) os << "result: " << result_.dump(2) << "\n";
    if (!error_.is_null()) os << "error: " << error_["message"].get<std::string>() << "\n";
    os << "status: " << status() << "\n";
    return os.str();
  }

 private:
  std::string command_;
  Json checks_ = Json::array();
  Json result_;
  Json error_;
  bool failed_ = false;
};

inline Json labels_of(const AlgebraPresentation& a, const std::vector<std::size_t>& t) {
  Json out = Json::array();
  for (auto i : t) out.push_back(a.label(i));
  return out;
}

inline void add_identity_check(RunReport& r, const AlgebraPresentation& a, const std::string& name) {
  IdentityReport ir = check_identity(a, name);
  Json detail;
  if (!ir.holds) {
    detail = Json{{"component", ir.component}, {"residual", vector_to_json(ir.residual)},
                  {"tuple", labels_of(a, ir.tuple)}};
  }
  r.check(name, ir.holds, detail);
}

inline void add_form_checks(RunReport& r, const AlgebraPresentation& a, const FormMatrix& f) {
  FormCheckReport fc = form_checks(a, f);
  r.check("form_symmetric", fc.symmetric);
  r.check("form_nondegenerate", fc.nondegenerate);
  Json w;
  if (fc.witness) {
    w = Json{{"tuple", labels_of(a, {(*fc.witness)[0], (*fc.witness)[1], (*fc.witness)[2]})}};
  }
  r.check("form_associative", fc.associative, w);
}

inline Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.vectors()) basis.push_back(vector_to_json(v));
  return Json{{"basis", basis}, {"dim", s.dim()}};
}

// ---------------------------------------------------------------------------
// Extension documents

inline RepresentationSpec rep_from_json(const AlgebraPresentation& src, std::size_t target,
                                        const Json& j, std::int64_t d, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of matrices");
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < j.size(); ++i) {
    maps.push_back(matrix_from_json(j[i], d, where + "[" + std::to_string(i) + "]"));
  }
  return RepresentationSpec(src, target, std::move(maps));
}

inline const Json& require_field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError("spec: missing field '" + key + "'");
  return j[key];
}

struct ExtendOutcome {
  AlgebraPresentation alg;
  std::optional<FormMatrix> form;
  std::vector<std::string> required_identities;
};

/// Builds the algebra described by an extension document.
inline ExtendOutcome extend_from_json(const Json& spec, std::int64_t d) {
  const std::string kind = require_field(spec, "kind").get<std::string>();
  auto doc = [&](const std::string& key) { return algebra_from_json(require_field(spec, key), d, key); };
  auto mat = [&](const std::string& key) { return matrix_from_json(require_field(spec, key), d, key); };

  if (kind == "double") {
    DoubleExtSpec s{FormMatrix(mat("form")), mat("C"), require_field(spec, "epsilon").get<int>(), {}};
    if (spec.contains("labels")) s.labels = spec["labels"].get<std::vector<std::string>>();
    QuadraticAlgebra qa = double_extension(s);
    return {qa.alg(), qa.form(), {"jordan"}};
  }
  if (kind == "unital") {
    AlgebraFile f = doc("algebra");
    std::vector<std::string> req;
    if (holds(f.alg, "jordan")) req.push_back("jordan");
    return {unital_extension(f.alg), std::nullopt, req};
  }
  if (kind == "central2sn") {
    AlgebraFile f = doc("algebra");
    const std::size_t v = require_field(spec, "v_dim").get<std::size_t>();
    const std::size_t n = f.alg.dim();
    BilinearMap phi(n, v);
    for (const auto& e : require_field(spec, "phi")) {
      std::size_t i = e.at("i").get<std::size_t>(), j = e.at("j").get<std::size_t>(),
                  k = e.at("k").get<std::size_t>();
      if (i >= n || j >= n || k >= v) throw ParseError("phi: index out of range");
      Vector val = phi.at(i, j);
      val[k] = scalar_from_json(e.at("c"), d, "phi.c");
      phi.set(i, j, val);
    }
    return {central_extension_2SN(f.alg, phi), std::nullopt, {"two_step_nilpotent"}};
  }
  if (kind == "semidirect2sn") {
    AlgebraFile j1 = doc("J1"), j2 = doc("J2");
    RepresentationSpec pi = rep_from_json(j1.alg, j2.alg.dim(), require_field(spec, "pi"), d, "pi");
    return {semidirect_sum_2SN(j1.alg, j2.alg, pi), std::nullopt, {"two_step_nilpotent"}};
  }
  if (kind == "de2sn") {
    QuadraticAlgebra j = doc("J").quadratic();
    AlgebraFile h = doc("h");
    RepresentationSpec pi = rep_from_json(h.alg, j.dim(), require_field(spec, "pi"), d, "pi");
    QuadraticAlgebra out = double_extension_2SN(j, h.alg, pi);
    return {out.alg(), out.form(), {"two_step_nilpotent"}};
  }
  if (kind == "generalized") {
    QuadraticAlgebra base = doc("base").quadratic();
    GeneralizedDESpec s{base, mat("D"), vector_from_json(require_field(spec, "x0"), d, "x0"),
                        scalar_from_json(require_field(spec, "alpha"), d, "alpha")};
    QuadraticAlgebra out = generalized_double_extension(s);
    return {out.alg(), out.form(), {"two_step_nilpotent"}};
  }
  if (kind == "tstar") {
    CubicForm f = cubic_from_json(require_field(spec, "cubic"), d);
    std::vector<std::string> labels;
    if (spec.contains("labels")) labels = spec["labels"].get<std::vector<std::string>>();
    QuadraticAlgebra out = t_star_extension(f, labels);
    return {out.alg(), out.form(), {"two_step_nilpotent"}};
  }
  if (kind == "general_de") {
    QuadraticAlgebra j1 = doc("J1").quadratic();
    AlgebraFile j2 = doc("J2");
    RepresentationSpec pi = rep_from_json(j2.alg, j1.dim(), require_field(spec, "pi"), d, "pi");
    std::optional<Matrix> gamma;
    if (spec.contains("gamma")) gamma = mat("gamma");
    QuadraticAlgebra out = general_double_extension(j1, j2.alg, pi, gamma);
    std::vector<std::string> req;
    if (holds(j1.alg(), "jordan") && holds(j2.alg, "jordan")) req.push_back("jordan");
    return {out.alg(), out.form(), req};
  }
  throw UnknownName("unknown extension kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Commands

struct Options {
  std::int64_t field_d = 0;
  Format format = Format::json;
};

inline void cmd_check(RunReport& r, const Options& o, const std::string& file,
                      const std::vector<std::string>& axioms) {
  AlgebraFile f = load_algebra_file(file, o.field_d);
  for (const auto& ax : axioms) add_identity_check(r, f.alg, ax);
  if (f.form) add_form_checks(r, f.alg, *f.form);
}

inline void cmd_invariants(RunReport& r, const Options& o, const std::string& file) {
  AlgebraFile f = load_algebra_file(file, o.field_d);
  const AlgebraPresentation& a = f.alg;
  Json& res = r.result();
  res["ann"] = subspace_json(annihilator(a));
  res["left_ann"] = subspace_json(annihilator(a, AnnKind::left));
  res["right_ann"] = subspace_json(annihilator(a, AnnKind::right));
  res["commutant"] = subspace_json(center_of(a));
  res["nucleus"] = subspace_json(nucleus(a));
  res["associator_span"] = subspace_json(associator_span(a));
  res["square"] = subspace_json(square(a));
  PowerSeries ps = power_series(a);
  Json dims = Json::array();
  for (const auto& t : ps.terms) dims.push_back(t.dim());
  res["power_series_dims"] = dims;
  res["nil_index"] = ps.nil_index ? Json(*ps.nil_index) : Json("none");
  auto u = unit_element(a);
  res["unit"] = u ? vector_to_json(*u) : Json(nullptr);
  if (f.form) {
    add_form_checks(r, a, *f.form);
    if (form_checks(a, *f.form).all()) {
      QuadraticAlgebra qa = f.quadratic();
      res["reduced"] = is_reduced(qa);
      for (const auto& e : duality_report(qa).entries) {
        if (e.applies) r.check("duality_" + e.name, e.holds);
      }
    }
  }
}

inline void cmd_extend(RunReport& r, const Options& o, const std::string& spec_file,
                       const std::string& out_file, std::ostream& out) {
  Json spec = load_json_file(spec_file);
  ExtendOutcome x = extend_from_json(spec, o.field_d);
  std::string text = serialize_algebra(x.alg, x.form);
  AlgebraFile back = algebra_from_json(parse_json_text(text, "output"), o.field_d);
  r.check("roundtrip", back.alg == x.alg && serialize_algebra(back.alg, back.form) == text);
  for (const auto& id : x.required_identities) add_identity_check(r, x.alg, id);
  if (x.form) add_form_checks(r, x.alg, *x.form);
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream os(out_file);
  if (!os) throw Error("cannot write " + out_file);
  os << text;
  r.result()["output"] = out_file;
}

inline void cmd_novikov(RunReport& r, const Options& o, const std::string& action,
                        const std::string& file) {
  AlgebraFile f = load_algebra_file(file, o.field_d);
  if (action == "suite") {
    NovikovReport rep = symmetric_novikov_suite(f.quadratic());
    for (const auto& c : rep.checks) {
      Json detail;
      if (!c.holds && !c.tuple.empty()) detail = Json{{"tuple", labels_of(f.alg, c.tuple)}};
      r.check(c.name, c.holds, detail);
    }
    r.result() = Json{{"dim_ann", rep.dim_ann},
                      {"dim_commutant", rep.dim_commutant},
                      {"dim_nn", rep.dim_nn},
                      {"nil_index", rep.nil_index ? Json(*rep.nil_index) : Json("none")}};
  } else if (action == "lie") {
    AlgebraPresentation g = sub_adjacent_lie(f.alg);
    add_identity_check(r, g, "anticommutative");
    add_identity_check(r, g, "jacobi");
    r.result() = algebra_to_json(g, f.form);
  } else if (action == "jordanize") {
    try {
      AlgebraPresentation j = f.form && form_checks(f.alg, *f.form).all()
                                  ? plus_jordan(f.quadratic()).alg()
                                  : plus_jordan(f.alg);
      r.check("jordan_admissible", true);
      add_identity_check(r, j, "jordan");
      r.result() = algebra_to_json(j, f.form);
    } catch (const JordanAdmissibilityError& e) {
      r.check("jordan_admissible", false,
              Json{{"element", vector_to_json(e.element())},
                   {"tuple", labels_of(f.alg, e.report().tuple)}});
    }
  } else if (action == "split7") {
    Dim7Result s = split_dim7(f.quadratic());
    Json& res = r.result();
    res["branch"] = s.branch == Dim7Branch::nilpotent3 ? "nilpotent3" : "split";
    res["x"] = vector_to_json(s.x);
    if (s.branch == Dim7Branch::split) {
      res["idempotent"] = vector_to_json(*s.idempotent);
      res["line"] = algebra_to_json(*s.line);
      res["rest"] = algebra_to_json(*s.rest);
      add_identity_check(r, s.rest->alg(), "novikov");
      r.check("rest_noncommutative", !holds(s.rest->alg(), "commutative"));
    } else {
      r.check("nil_index_3", power_series(f.alg).nil_index == std::optional<std::size_t>(3));
    }
  } else {
    throw UnknownName("unknown novikov action '" + action + "'");
  }
}

inline void cmd_iso(RunReport& r, const Options& o, const std::string& action,
                    const std::vector<std::string>& files, const std::string& witness_file) {
  if (action == "verify") {
    if (files.size() != 2 || witness_file.empty()) {
      throw ParseError("iso verify needs --witness W.json A.json B.json");
    }
    Json w = load_json_file(witness_file);
    Matrix m = matrix_from_json(require_field(w, "matrix"), o.field_d, "witness.matrix");
    std::string kind = w.value("kind", std::string("iso"));
    AlgebraFile a = load_algebra_file(files[0], o.field_d);
    AlgebraFile b = load_algebra_file(files[1], o.field_d);
    WitnessReport rep = a.form && b.form ? verify_witness(m, a.quadratic(), b.quadratic())
                                         : verify_witness(m, a.alg, b.alg);
    Json detail;
    if (rep.morphism_failure) {
      detail = Json{{"pair", labels_of(a.alg, {rep.morphism_failure->first, rep.morphism_failure->second})}};
    }
    r.check("is_morphism", rep.is_morphism, detail);
    if (kind == "i-iso") r.check("is_isometry", rep.is_isometry);
    else if (kind != "iso") throw ParseError("witness.kind must be iso or i-iso");
  } else if (action == "de-criterion") {
    if (files.size() != 1) throw ParseError("iso de-criterion needs one spec file");
    Json j = load_json_file(files[0]);
    FormMatrix bq(matrix_from_json(require_field(j, "form"), o.field_d, "form"));
    Matrix c = matrix_from_json(require_field(j, "C"), o.field_d, "C");
    Matrix c2 = matrix_from_json(require_field(j, "C_prime"), o.field_d, "C_prime");
    Matrix p = matrix_from_json(require_field(j, "P"), o.field_d, "P");
    std::string kind = require_field(j, "kind").get<std::string>();
    DeIsoResult res;
    DoubleExtSpec s{bq, c, 0, {}}, t{bq, c2, 0, {}};
    if (kind == "nilpotent") {
      res = nilpotent_de_iso(p, scalar_from_json(require_field(j, "lambda"), o.field_d, "lambda"), s, t);
    } else if (kind == "diagonalizable") {
      s.epsilon = t.epsilon = 1;
      res = diagonalizable_de_iso(p, s, t);
    } else {
      throw ParseError("kind must be nilpotent or diagonalizable");
    }
    r.result()["rank_hypothesis"] = res.rank_hypothesis;
    if (!res.witness) {
      r.check("criterion", false, Json{{"reason", res.reason}});
      return;
    }
    r.check("criterion", true);
    r.result()["witness"] = Json{{"kind", to_string(res.witness->kind)},
                                 {"matrix", matrix_to_json(res.witness->m)}};
    r.check("witness_verifies",
            witness_holds(*res.witness, double_extension(s), double_extension(t)));
  } else if (action == "cubic-class") {
    if (files.size() != 1) throw ParseError("iso cubic-class needs one cubic file");
    CubicForm f = cubic_from_json(load_json_file(files[0]), o.field_d, files[0]);
    r.result()["class"] = to_string(classify_binary_cubic(f));
  } else {
    throw UnknownName("unknown iso action '" + action + "'");
  }
}

inline Json entry_json(const CatalogEntry& e) {
  Json out = algebra_to_json(e.alg, e.form);
  return out;
}

inline bool cmd_catalog(RunReport& r, const std::string& action, const std::string& name, bool all,
                        std::ostream& out) {
  if (action == "list") {
    Json names = Json::array();
    for (const auto& n : catalog_list()) names.push_back(n);
    r.result()["entries"] = names;
  } else if (action == "emit") {
    out << serialize_algebra(catalog_get(name).alg, catalog_get(name).form);
    return false;
  } else if (action == "verify") {
    std::vector<std::string> names = all || name.empty() ? catalog_list() : std::vector<std::string>{name};
    for (const auto& n : names) {
      const CatalogEntry& e = catalog_get(n);
      auto diffs = catalog_verify_entry(e);
      Json d = Json::array();
      for (const auto& x : diffs) {
        d.push_back(Json{{"actual", x.actual}, {"expected", x.expected}, {"property", x.property}});
      }
      r.check(n, diffs.empty(), diffs.empty() ? Json(nullptr) : Json{{"diffs", d}, {"source", e.source}});
    }
  } else {
    throw UnknownName("unknown catalog action '" + action + "'");
  }
  return true;
}

inline std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const PreconditionFailed*>(&e)) return "precondition_failed";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension_mismatch";
  if (dynamic_cast<const FieldMismatch*>(&e)) return "field_mismatch";
  if (dynamic_cast<const NeedsFieldExtension*>(&e)) return "needs_field_extension";
  if (dynamic_cast<const UnknownName*>(&e)) return "unknown_name";
  if (dynamic_cast<const Json::exception*>(&e)) return "parse_error";
  return "error";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic workbench for quadratic Jordan and Novikov algebras", "quadalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "json";
  app.add_option("--field-d", o.field_d, "Square-free d for the field Q(sqrt d); 0 means Q");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file, file2, spec, out_file, action, name, witness;
  std::vector<std::string> axioms, files;
  bool all = false;

  auto* check = app.add_subcommand("check", "Check identities and form axioms");
  check->add_option("file", file, "Algebra file")->required();
  check->add_option("--axioms", axioms, "Identities to check")->delimiter(',');

  auto* inv = app.add_subcommand("invariants", "Canonical subspaces, power series, dualities");
  inv->add_option("file", file, "Algebra file")->required();

  auto* ext = app.add_subcommand("extend", "Build an extension from a spec document");
  ext->add_option("spec", spec, "Extension spec")->required();
  ext->add_option("-o,--out", out_file, "Output algebra file (stdout if omitted)");

  auto* nov = app.add_subcommand("novikov", "Novikov pipeline");
  nov->add_option("action", action, "suite | lie | jordanize | split7")
      ->required()
      ->check(CLI::IsMember({"suite", "lie", "jordanize", "split7"}));
  nov->add_option("file", file, "Algebra file")->required();

  auto* iso = app.add_subcommand("iso", "Witness checks and isomorphism criteria");
  iso->add_option("action", action, "verify | de-criterion | cubic-class")
      ->required()
      ->check(CLI::IsMember({"verify", "de-criterion", "cubic-class"}));
  iso->add_option("files", files, "Input files");
  iso->add_option("--witness", witness, "Witness file");

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->add_option("action", action, "list | emit | verify")
      ->required()
      ->check(CLI::IsMember({"list", "emit", "verify"}));
  cat->add_option("name", name, "Entry name");
  cat->add_flag("--all", all, "Verify every entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  o.format = format == "text" ? Format::text : Format::json;

  std::string command = app.get_subcommands().front()->get_name();
  RunReport r(command);
  bool print = true;
  try {
    if (o.field_d != 0 && (o.field_d == 1 || !is_square_free(o.field_d))) {
      throw ParseError("--field-d must be square-free and not 1");
    }
    if (*check) cmd_check(r, o, file, axioms);
    else if (*inv) cmd_invariants(r, o, file);
    else if (*ext) {
      cmd_extend(r, o, spec, out_file, out);
      print = !out_file.empty();
    } else if (*nov) cmd_novikov(r, o, action, file);
    else if (*iso) cmd_iso(r, o, action, files, witness);
    else if (*cat) {
      if (action == "emit" && name.empty()) throw ParseError("catalog emit needs a name");
      print = cmd_catalog(r, action, name, all, out);
    }
  } catch (const std::exception& e) {
    r.set_error(error_type(e), e.what());
    print = true;
  }
  if (print) out << r.render(o.format);
  return r.exit_code();
}

}  // namespace quadalg::cli
