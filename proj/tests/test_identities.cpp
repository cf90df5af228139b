#include <gtest/gtest.h>

#include <set>

#include "quadalg/quadalg.hpp"
#include "support/random.hpp"

using namespace quadalg;
using quadalg::testing::Rng;

namespace {

const AlgebraPresentation& cat(const std::string& name) { return catalog_get(name).alg; }

}  // namespace

TEST(Registry, ListsEveryIdentity) {
  std::vector<std::string> names = identity_names();
  std::set<std::string> got(names.begin(), names.end());
  for (const char* n : {"commutative", "anticommutative", "jordan", "left_symmetric",
                        "right_commute", "novikov", "associative", "flexible", "cube_zero",
                        "jacobi_left", "jacobi_right", "jacobi", "two_step_nilpotent"}) {
    EXPECT_TRUE(got.count(n)) << n;
  }
  EXPECT_THROW(identity_components("moufang"), UnknownName);
  EXPECT_THROW(check_identity(cat("N6"), "moufang"), UnknownName);
}

TEST(Registry, CatalogVerdicts) {
  EXPECT_TRUE(holds(cat("spin_factor"), "jordan"));
  EXPECT_FALSE(holds(cat("spin_factor"), "associative"));
  EXPECT_TRUE(holds(cat("jn3"), "associative"));
  EXPECT_TRUE(holds(cat("N6"), "novikov"));
  EXPECT_FALSE(holds(cat("N6"), "commutative"));
  EXPECT_TRUE(holds(cat("explus"), "novikov"));
  EXPECT_FALSE(holds(cat("explus"), "cube_zero"));
  EXPECT_TRUE(holds(cat("tstar_J0"), "two_step_nilpotent"));
  EXPECT_TRUE(holds(g6_lie().alg(), "anticommutative"));
  EXPECT_TRUE(holds(g6_lie().alg(), "jacobi"));
  EXPECT_FALSE(holds(cat("diag_de_id"), "two_step_nilpotent"));
}

TEST(Registry, FailureNamesFirstTupleAndResidual) {
  IdentityReport r = check_identity(cat("explus"), "commutative");
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.component, "commutative");
  EXPECT_EQ(r.tuple, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.residual, evaluate_identity(cat("explus"), "commutative", "commutative", r.tuple));
  EXPECT_FALSE(is_zero(r.residual));
}

TEST(Registry, EvaluateChecksArity) {
  EXPECT_THROW(evaluate_identity(cat("N6"), "novikov", "left_symmetric",
                                 std::vector<std::size_t>{0, 1}),
               DimensionMismatch);
  EXPECT_THROW(evaluate_identity(cat("N6"), "novikov", "nope", std::vector<std::size_t>{0, 1, 2}),
               UnknownName);
}

TEST(Registry, ReportedTupleIsTheFirstFailure) {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + t % 2;
    AlgebraPresentation a = quadalg::testing::rand_algebra(rng, n, t % 2 == 0, 1);
    for (const std::string& name : {std::string("jordan"), std::string("novikov")}) {
      IdentityReport r = check_identity(a, name);
      // Brute force over components in order and tuples in lexicographic order.
      IdentityReport first;
      for (const auto& c : identity_components(name)) {
        std::vector<std::size_t> tup(c.arity, 0);
        bool done = false;
        while (!done) {
          if (first.holds && !is_zero(evaluate_identity(a, name, c.name, tup))) {
            first.holds = false;
            first.component = c.name;
            first.tuple = tup;
          }
          std::size_t pos = c.arity;
          while (pos > 0 && ++tup[pos - 1] == n) tup[--pos] = 0;
          done = pos == 0;
        }
        if (!first.holds) break;
      }
      EXPECT_EQ(r.holds, first.holds);
      EXPECT_EQ(r.component, first.component);
      EXPECT_EQ(r.tuple, first.tuple);
    }
  }
}

TEST(Batch, JordanBatchAgreesWithDirectEvaluation) {
  Rng rng(32);
  const IdentityComponent* jop = nullptr;
  for (const auto& c : identity_components("jordan")) {
    if (c.batch) jop = &c;
  }
  ASSERT_NE(jop, nullptr);
  for (int t = 0; t < 8; ++t) {
    std::size_t n = 2 + t % 3;
    AlgebraPresentation a = quadalg::testing::rand_algebra(rng, n, t % 2 == 0, 2);
    BatchEval f = jop->batch(a);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          Matrix m = f({i, j, k});
          for (std::size_t w = 0; w < n; ++w) {
            EXPECT_EQ(m.column(w), evaluate_identity(a, "jordan", jop->name,
                                                     std::vector<std::size_t>{i, j, k, w}));
          }
        }
      }
    }
  }
}

TEST(Soundness, SpinFactorsAreJordanInAnyBasis) {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    std::size_t q = 1 + t % 3;
    AlgebraPresentation a = spin_factor(quadalg::testing::rand_form(rng, q)).alg();
    AlgebraPresentation b = change_basis(a, quadalg::testing::rand_invertible(rng, q + 1));
    EXPECT_TRUE(holds(b, "jordan"));
    EXPECT_TRUE(holds(b, "flexible"));
  }
}

TEST(Soundness, TwoStepNilpotentIsNovikovAndJordan) {
  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    AlgebraPresentation a = quadalg::testing::rand_2sn_quadratic(rng).alg();
    EXPECT_TRUE(holds(a, "novikov"));
    EXPECT_TRUE(holds(a, "jordan"));
    EXPECT_TRUE(holds(a, "associative"));
  }
}

TEST(Representations, RegularRepOfJordanIsJacobson) {
  for (const char* n : {"spin_factor", "diag_de_id", "jn3", "tstar_J1"}) {
    EXPECT_TRUE(validate_jacobson_rep(adjoint_rep(cat(n))).holds) << n;
    EXPECT_TRUE(validate_jacobson_rep(coadjoint_rep(cat(n))).holds) << n;
  }
  EXPECT_TRUE(validate_jacobson_rep(RepresentationSpec::zero(cat("spin_factor"), 2)).holds);
}

TEST(Representations, RandomMapsAreNotJacobson) {
  AlgebraPresentation a = cat("spin_factor");
  std::vector<Matrix> ms{Matrix::identity(2), Matrix::from_rows({{1, 1}, {0, 1}}),
                         Matrix::from_rows({{0, 1}, {0, 0}})};
  IdentityReport r = validate_jacobson_rep(RepresentationSpec(a, 2, ms));
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.component.empty());
}

TEST(Representations, RepShapeIsChecked) {
  AlgebraPresentation a = cat("spin_factor");
  EXPECT_THROW(RepresentationSpec(a, 2, {Matrix::identity(2)}), DimensionMismatch);
  std::vector<Matrix> ms(3, Matrix::identity(3));
  EXPECT_THROW(RepresentationSpec(a, 2, ms), DimensionMismatch);
}

TEST(Representations, AdjointOf2SNIsAdmissible) {
  AlgebraPresentation a = cat("tstar_J0");
  EXPECT_TRUE(validate_2SN_rep(adjoint_rep(a)).holds);
  EXPECT_TRUE(validate_2SN_admissible(adjoint_rep(a), a).holds);
  IdentityReport bad = validate_2SN_rep(adjoint_rep(cat("diag_de_id")));
  EXPECT_FALSE(bad.holds);
}

TEST(Representations, TwoStepPairs) {
  AlgebraPresentation a = cat("tstar_J0");  // x, y, e, f
  Matrix zero(4, 4);
  EXPECT_TRUE(validate_2SN_pair(zero, unit_vector(4, 2), a).holds);
  IdentityReport r = validate_2SN_pair(zero, unit_vector(4, 0), a);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.component, "x0_product");
  Matrix d(4, 4);
  d(2, 0) = 1;  // D(x) = e, D² = 0, lands in the annihilator
  EXPECT_TRUE(validate_2SN_pair(d, unit_vector(4, 3), a).holds);
  Matrix dd(4, 4);
  dd(0, 2) = 1;  // D(e) = x: x·x ≠ 0 after D
  EXPECT_FALSE(validate_2SN_pair(dd, unit_vector(4, 3), a).holds);
}
