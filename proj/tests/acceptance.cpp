// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "quadalg/quadalg.hpp"
#include "support/random.hpp"

using namespace quadalg;
using namespace quadalg::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note << what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title;
  if (!o.note.str().empty()) std::cout << " (" << o.note.str() << ")";
  std::cout << " [" << std::fixed << std::setprecision(2) << secs << "s]\n";
  if (!o.ok) ++failures;
}

std::size_t rand_dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool rejects_with(const DoubleExtSpec& s, const std::string& condition) {
  try {
    double_extension(s);
  } catch (const PreconditionFailed& e) {
    return e.condition() == condition;
  }
  return false;
}

void double_extension_direction(Outcome& o, Rng& rng, int epsilon) {
  const std::string cond = epsilon == 0 ? "C_cubed_zero" : "3C2_eq_2C3_plus_C";
  auto relation = [&](const Matrix& c) {
    if (epsilon == 0) return power(c, 3).is_zero();
    return Scalar(3) * power(c, 2) == Scalar(2) * power(c, 3) + c;
  };
  for (int t = 0; t < 25; ++t) {
    std::size_t n = rand_dim(rng, 2, 5);
    FormAndOperator p = epsilon == 0
                            ? rand_nilpotent_cube_zero(rng, n)
                            : rand_diagonalizable(rng, n, {Scalar(0), Scalar(1), Scalar::fraction(1, 2)});
    o.require(relation(p.c), "generator broke the relation");
    QuadraticAlgebra de = double_extension({p.b, p.c, epsilon, {}});
    o.require(holds(de.alg(), "jordan"), "eps=" + std::to_string(epsilon) + " extension not Jordan");
    o.require(form_checks(de.alg(), de.form()).all(), "extension form not associative");
  }
  for (int t = 0; t < 25; ++t) {
    std::size_t n = rand_dim(rng, 2, 5);
    FormAndOperator p;
    do {
      p = rand_symmetric_operator(rng, n);
    } while (p.c.is_zero() || relation(p.c));
    DoubleExtSpec s{p.b, p.c, epsilon, {}};
    o.require(rejects_with(s, cond), "constructor accepted C violating " + cond);
    o.require(!holds(double_extension_table(s), "jordan"),
              "bypassed eps=" + std::to_string(epsilon) + " table is Jordan");
  }
}

}  // namespace

int main() {
  Rng rng(20261014);

  criterion(1, "catalog conformance: every entry reproduces its expected properties", [](Outcome& o) {
    std::size_t n = 0;
    for (const auto& e : catalog_entries()) {
      auto diffs = catalog_verify_entry(e);
      for (const auto& d : diffs) {
        o.require(false, e.name + "." + d.property + ": expected " + d.expected + ", got " + d.actual);
      }
      ++n;
    }
    o.require(n == 13, "catalog has " + std::to_string(n) + " entries");
  });

  criterion(2, "double extensions: eps=0 iff C^3=0, eps=1 iff 3C^2=2C^3+C (25 + 25 each)",
            [&](Outcome& o) {
              double_extension_direction(o, rng, 0);
              double_extension_direction(o, rng, 1);
            });

  criterion(3, "2C^2-3C+Id=0: kernels of C-Id and C-Id/2 are B-orthogonal and span (25 samples)",
            [&](Outcome& o) {
              for (int t = 0; t < 25; ++t) {
                std::size_t n = rand_dim(rng, 2, 5);
                FormAndOperator p = rand_diagonalizable(rng, n, {Scalar(1), Scalar::fraction(1, 2)});
                Matrix id = Matrix::identity(n);
                o.require((Scalar(2) * power(p.c, 2) - Scalar(3) * p.c + id).is_zero(), "generator");
                DeSpectrum s = de_spectrum(p.c, p.b);
                o.require(s.relation, "relation flag not set");
                o.require(s.dim_ker_one + s.dim_ker_half == n, "kernel dimensions do not sum to n");
                o.require(s.orthogonal, "kernels not B-orthogonal");
              }
            });

  criterion(4, "T* pipeline: reduced 2SN pseudo-Euclidean output, extraction is an i-iso (20 cubics)",
            [&](Outcome& o) {
              for (int t = 0; t < 20; ++t) {
                std::size_t m = 1 + t % 3;
                CubicForm f = rand_nondegenerate_cubic(rng, m);
                QuadraticAlgebra q = t_star_extension(f);
                o.require(holds(q.alg(), "two_step_nilpotent"), "not 2SN");
                o.require(form_checks(q.alg(), q.form()).all(), "not pseudo-Euclidean");
                o.require(is_reduced(q), "not reduced");
                TStarExtraction x = extract_t_star(q);
                WitnessReport w = verify_witness(x.witness, t_star_extension(x.cubic), q);
                o.require(w.is_morphism && w.is_isometry, "extraction witness is not an i-iso");
              }
            });

  criterion(5, "binary cubic classes: I0 vs I1 separated, invariant under 50 changes of basis each",
            [&](Outcome& o) {
              CubicForm i0 = cubic_I0(), i1 = cubic_I_lambda(Scalar(1));
              o.require(classify_binary_cubic(i0) == CubicClass::class_I0, "I0 misclassified");
              o.require(classify_binary_cubic(i1) == CubicClass::class_generic, "I1 misclassified");
              std::set<CubicClass> seen;
              for (int t = 0; t < 50; ++t) {
                CubicForm g0 = act_on_cubic(rand_invertible(rng, 2), i0);
                CubicForm g1 = act_on_cubic(rand_invertible(rng, 2), i1);
                o.require(classify_binary_cubic(g0) == CubicClass::class_I0, "I0 class not invariant");
                o.require(classify_binary_cubic(g1) == CubicClass::class_generic, "I1 class not invariant");
                seen.insert(classify_binary_cubic(g0));
                seen.insert(classify_binary_cubic(g1));
                CubicForm r = rand_cubic(rng, 2);
                CubicClass c = classify_binary_cubic(r);
                o.require((c != CubicClass::degenerate) == is_nondegenerate_cubic(r),
                          "degenerate class disagrees with the kernel test");
                if (is_nondegenerate_cubic(r)) seen.insert(c);
              }
              o.require(seen.size() == 2, "nondegenerate forms fall into " + std::to_string(seen.size()) +
                                              " classes");
            });

  criterion(6, "symmetric Novikov suite all true on catalog entries and 20 random 2SN extensions",
            [&](Outcome& o) {
              for (const auto& e : catalog_entries()) {
                if (!e.form || !holds(e.alg, "novikov") || !form_checks(e.alg, *e.form).all()) continue;
                NovikovReport r = symmetric_novikov_suite(e.quadratic());
                for (const auto& c : r.checks) o.require(c.holds, e.name + ": " + c.name);
              }
              for (int t = 0; t < 20; ++t) {
                QuadraticAlgebra q = rand_2sn_quadratic(rng);
                o.require(holds(q.alg(), "two_step_nilpotent"), "generator not 2SN");
                o.require(form_checks(q.alg(), q.form()).all(), "generator form not associative");
                NovikovReport r = symmetric_novikov_suite(q);
                for (const auto& c : r.checks) o.require(c.holds, "random sample: " + c.name);
              }
            });

  criterion(7, "Jordan-admissibility gate: explus rejected with a witness, J(N6) is Jordan", [](Outcome& o) {
    const CatalogEntry& ex = catalog_get("explus");
    bool raised = false;
    try {
      plus_jordan(ex.alg);
    } catch (const JordanAdmissibilityError& e) {
      raised = true;
      const Vector& x = e.element();
      o.require(!is_zero(associator(ex.alg, x, x, x)), "witness has (x,x,x) = 0");
      o.require(e.report().name == "cube_zero", "report names " + e.report().name);
    }
    o.require(raised, "plus_jordan(explus) did not raise");
    o.require(holds(plus_jordan(catalog_get("N6").quadratic()).alg(), "jordan"), "J(N6) not Jordan");
  });

  criterion(8, "dim-7 dichotomy: N7 is nilpotent3, Cx + N6 splits", [](Outcome& o) {
    o.require(split_dim7(catalog_get("N7").quadratic()).branch == Dim7Branch::nilpotent3, "N7 branch");
    QuadraticAlgebra q = orthogonal_sum(idempotent_line("x"), catalog_get("N6").quadratic());
    Dim7Result s = split_dim7(q);
    o.require(s.branch == Dim7Branch::split, "Cx + N6 did not split");
    if (s.branch != Dim7Branch::split) return;
    const Vector& x1 = *s.idempotent;
    o.require(multiply(q.alg(), x1, x1) == x1, "x1^2 != x1");
    o.require(s.line->dim() == 1 && s.rest->dim() == 6, "part dimensions");
    o.require(!holds(s.rest->alg(), "commutative"), "rest is commutative");
    o.require(holds(s.rest->alg(), "novikov"), "rest is not Novikov");
    o.require(form_checks(s.rest->alg(), s.rest->form()).all(), "rest form");
    o.require(symmetric_novikov_suite(*s.rest).all_true(), "rest fails the symmetric suite");
  });

  criterion(9, "linearized jordan/cube_zero checks agree with direct evaluation (20 algebras x 200)",
            [&](Outcome& o) {
              for (int t = 0; t < 20; ++t) {
                std::size_t n = rand_dim(rng, 1, 4);
                AlgebraPresentation a;
                switch (t % 4) {
                  case 0: {
                    FormMatrix b = rand_form(rng, n);
                    a = change_basis(spin_factor(b).alg(), rand_invertible(rng, n + 1));
                    break;
                  }
                  case 1:
                    a = rand_algebra(rng, n, true);
                    break;
                  case 2:
                    a = change_basis(catalog_get(t % 8 == 2 ? "explus" : "jn3").alg,
                                     rand_invertible(rng, t % 8 == 2 ? 2 : 3));
                    break;
                  default:
                    a = rand_algebra(rng, n, false);
                }
                const std::size_t d = a.dim();
                bool jordan_direct = true, cube_direct = true;
                for (int k = 0; k < 200; ++k) {
                  Vector x = rand_vector(rng, d), y = rand_vector(rng, d);
                  Vector xx = multiply(a, x, x);
                  Vector direct_j = sub(multiply(a, multiply(a, x, y), xx),
                                        multiply(a, x, multiply(a, y, xx)));
                  Vector comm = sub(multiply(a, x, y), multiply(a, y, x));
                  Vector cube = associator(a, x, x, x);
                  jordan_direct = jordan_direct && is_zero(comm) && is_zero(direct_j);
                  cube_direct = cube_direct && is_zero(cube);
                  Vector lin_c = evaluate_identity(a, "cube_zero", "cube_zero", {x, x, x});
                  o.require(lin_c == scaled(Scalar(6), cube), "cube_zero linearization at (x,x,x)");
                  if (holds(a, "commutative")) {
                    Vector lin_j = evaluate_identity(a, "jordan", "jordan_operator", {x, x, x, y});
                    o.require(lin_j == scaled(Scalar(-3), direct_j), "jordan linearization at (x,x,x,y)");
                  }
                }
                o.require(holds(a, "jordan") == jordan_direct, "jordan verdicts differ");
                o.require(holds(a, "cube_zero") == cube_direct, "cube_zero verdicts differ");
              }
            });

  criterion(10, "peel then rebuild is i-isomorphic to the original (tstar1, tstar_J0, tstar_J1)",
            [](Outcome& o) {
              for (const char* name : {"tstar1", "tstar_J0", "tstar_J1"}) {
                QuadraticAlgebra q = catalog_get(name).quadratic();
                PeelResult p = peel_generalized_double_extension(q);
                QuadraticAlgebra rebuilt = generalized_double_extension(p.spec);
                WitnessReport w = verify_witness(p.witness, rebuilt, q);
                o.require(w.is_morphism && w.is_isometry, std::string(name) + ": witness rejected");
              }
            });

  return failures == 0 ? 0 : 1;
}
