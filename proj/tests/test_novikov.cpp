#include <gtest/gtest.h>

#include "quadalg/quadalg.hpp"
#include "support/random.hpp"

using namespace quadalg;
using quadalg::testing::Rng;

namespace {

const CatalogEntry& cat(const std::string& name) { return catalog_get(name); }

std::string condition_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionFailed& e) {
    return e.condition();
  }
  return "";
}

}  // namespace

TEST(SubAdjacentLie, N6Brackets) {
  AlgebraPresentation g = sub_adjacent_lie(cat("N6").alg);
  EXPECT_EQ(g.product(4, 5), unit_vector(6, 0));  // [e5,e6] = e1
  EXPECT_EQ(g.product(5, 4), scaled(-1, unit_vector(6, 0)));
  EXPECT_EQ(g.product(3, 4), unit_vector(6, 2));
  EXPECT_TRUE(holds(g, "anticommutative"));
  EXPECT_TRUE(holds(g, "jacobi"));
}

TEST(SubAdjacentLie, ExplusBracket) {
  AlgebraPresentation g = sub_adjacent_lie(cat("explus").alg);
  EXPECT_EQ(g.product(0, 1), (Vector{1, 0}));  // [a,b] = a
  EXPECT_TRUE(holds(g, "jacobi"));
}

TEST(SubAdjacentLie, NovikovGivesLieOnRandomInputs) {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    AlgebraPresentation a = quadalg::testing::rand_2sn_quadratic(rng).alg();
    AlgebraPresentation moved = change_basis(cat("N6").alg, quadalg::testing::rand_unimodular(rng, 6));
    EXPECT_TRUE(holds(sub_adjacent_lie(a), "jacobi"));
    EXPECT_TRUE(holds(sub_adjacent_lie(moved), "jacobi"));
    EXPECT_TRUE(holds(sub_adjacent_lie(moved), "anticommutative"));
  }
}

TEST(PlusJordan, GateRejectsExplus) {
  try {
    plus_jordan(cat("explus").alg);
    FAIL() << "explus passed the gate";
  } catch (const JordanAdmissibilityError& e) {
    EXPECT_EQ(e.condition(), "cube_zero");
    EXPECT_EQ(e.report().name, "cube_zero");
    EXPECT_FALSE(e.report().holds);
    const Vector& x = e.element();
    EXPECT_FALSE(is_zero(associator(cat("explus").alg, x, x, x)));
  }
  Vector w = *cube_associator_witness(cat("explus").alg);
  EXPECT_FALSE(is_zero(associator(cat("explus").alg, w, w, w)));
  EXPECT_FALSE(cube_associator_witness(cat("N6").alg).has_value());
}

TEST(PlusJordan, OfN6) {
  QuadraticAlgebra j = plus_jordan(cat("N6").quadratic());
  EXPECT_TRUE(holds(j.alg(), "jordan"));
  EXPECT_TRUE(holds(j.alg(), "commutative"));
  EXPECT_EQ(j.alg().product(3, 4), unit_vector(6, 2));
  EXPECT_EQ(j.alg().product(4, 3), unit_vector(6, 2));
  EXPECT_EQ(j.form(), cat("N6").form);
}

TEST(Suite, N6AndN7) {
  NovikovReport r6 = symmetric_novikov_suite(cat("N6").quadratic());
  EXPECT_TRUE(r6.all_true());
  EXPECT_EQ(r6.dim_ann, 3u);
  EXPECT_EQ(r6.dim_nn, 3u);
  EXPECT_EQ(r6.nil_index, std::optional<std::size_t>(2));
  EXPECT_FALSE(r6.commutative);
  EXPECT_TRUE(r6.reduced);
  EXPECT_TRUE(r6.at("reduced_dimension_bounds").holds);
  EXPECT_THROW(r6.at("nope"), UnknownName);

  NovikovReport r7 = symmetric_novikov_suite(cat("N7").quadratic());
  EXPECT_TRUE(r7.all_true());
  EXPECT_EQ(r7.nil_index, std::optional<std::size_t>(3));
  EXPECT_EQ(r7.dim_nn, 4u);
  EXPECT_TRUE(is_two_step(cat("N6").alg));
  EXPECT_FALSE(is_two_step(cat("N7").alg));
}

TEST(Suite, NeedsNovikovInput) {
  EXPECT_EQ(condition_of([] { symmetric_novikov_suite(cat("spin_factor").quadratic()); }), "novikov");
}

TEST(Suite, HoldsOnRandomSymmetricNovikov) {
  Rng rng(62);
  for (int t = 0; t < 8; ++t) {
    QuadraticAlgebra q = quadalg::testing::rand_2sn_quadratic(rng);
    NovikovReport r = symmetric_novikov_suite(q);
    for (const auto& c : r.checks) EXPECT_TRUE(c.holds) << c.name;
  }
  QuadraticAlgebra moved = change_basis(cat("N7").quadratic(), quadalg::testing::rand_unimodular(rng, 7));
  EXPECT_TRUE(symmetric_novikov_suite(moved).all_true());
}

TEST(AnticommutativeLie, G6) {
  AlgebraPresentation a = anticommutative_from_2SN_lie(g6_lie().alg());
  EXPECT_TRUE(holds(a, "novikov"));
  EXPECT_EQ(a.product(0, 1), unit_vector(6, 5));  // [x1,x2] = z3
  EXPECT_EQ(condition_of([] { anticommutative_from_2SN_lie(cat("N6").alg); }), "anticommutative");
  AlgebraPresentation so3(3);
  for (std::size_t i = 0; i < 3; ++i) {
    so3.set_coefficient(i, (i + 1) % 3, (i + 2) % 3, 1);
    so3.set_coefficient((i + 1) % 3, i, (i + 2) % 3, -1);
  }
  EXPECT_EQ(condition_of([&] { anticommutative_from_2SN_lie(so3); }), "two_step");
}

TEST(SplitDim7, N7IsThreeStep) {
  Dim7Result r = split_dim7(cat("N7").quadratic());
  EXPECT_EQ(r.branch, Dim7Branch::nilpotent3);
  EXPECT_FALSE(r.idempotent.has_value());
}

TEST(SplitDim7, IdempotentLineSplitsOff) {
  Dim7Result r = split_dim7(cat("g6_plus_c").quadratic());
  ASSERT_EQ(r.branch, Dim7Branch::split);
  EXPECT_EQ(*r.idempotent, unit_vector(7, 6));
  EXPECT_EQ(r.line->dim(), 1u);
  EXPECT_EQ(r.rest->dim(), 6u);
  EXPECT_TRUE(holds(r.rest->alg(), "anticommutative"));
  EXPECT_TRUE(symmetric_novikov_suite(*r.rest).all_true());
}

TEST(SplitDim7, Preconditions) {
  EXPECT_EQ(condition_of([] { split_dim7(cat("N6").quadratic()); }), "dim7");
  QuadraticAlgebra z(AlgebraPresentation(AlgebraPresentation::default_labels(1, "z")),
                     FormMatrix::identity(1));
  EXPECT_EQ(condition_of([&] { split_dim7(orthogonal_sum(cat("N6").quadratic(), z)); }), "reduced");
  QuadraticAlgebra tj = orthogonal_sum(cat("tstar_J0").quadratic(), cat("diag_de_id").quadratic());
  EXPECT_EQ(condition_of([&] { split_dim7(tj); }), "noncommutative");
}
