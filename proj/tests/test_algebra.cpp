#include <gtest/gtest.h>

#include "quadalg/quadalg.hpp"
#include "support/random.hpp"

using namespace quadalg;
using quadalg::testing::Rng;

namespace {

AlgebraPresentation explus() {
  AlgebraPresentation a({"a", "b"});
  a.set_coefficient(1, 0, 0, -1);
  return a;
}

Subspace span(std::size_t n, std::vector<Vector> vs) { return span_normal_form(n, vs); }

}  // namespace

TEST(Presentation, LabelsAndIndexChecks) {
  AlgebraPresentation a(3);
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(a.index_of("e2"), 1u);
  EXPECT_THROW(a.index_of("z"), UnknownName);
  EXPECT_THROW(a.set_coefficient(3, 0, 0, 1), Error);
  EXPECT_THROW(AlgebraPresentation({"x", "x"}), Error);
}

TEST(Presentation, N6Products) {
  AlgebraPresentation a = n6_algebra().alg();
  EXPECT_EQ(a.product(3, 4), unit_vector(6, 2));
  EXPECT_EQ(a.product(4, 5), unit_vector(6, 0));
  EXPECT_EQ(a.product(5, 3), unit_vector(6, 1));
  EXPECT_TRUE(is_zero(a.product(4, 3)));
  // R_{e4}(e6) = e6 e4 = e2
  EXPECT_EQ(right_operator(a, unit_vector(6, 3)) * unit_vector(6, 5), unit_vector(6, 1));
  EXPECT_EQ(left_operator(a, unit_vector(6, 3)) * unit_vector(6, 4), unit_vector(6, 2));
}

TEST(Presentation, MultiplyIsBilinear) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    AlgebraPresentation a = quadalg::testing::rand_algebra(rng, 3, false);
    Vector u = quadalg::testing::rand_vector(rng, 3), v = quadalg::testing::rand_vector(rng, 3),
           w = quadalg::testing::rand_vector(rng, 3);
    Scalar s = quadalg::testing::rand_fraction(rng, 3);
    EXPECT_EQ(multiply(a, add(u, scaled(s, v)), w),
              add(multiply(a, u, w), scaled(s, multiply(a, v, w))));
    EXPECT_EQ(left_operator(a, u) * v, multiply(a, u, v));
    EXPECT_EQ(right_operator(a, v) * u, multiply(a, u, v));
  }
}

TEST(Structure, ExplusSubspaces) {
  AlgebraPresentation a = explus();
  Subspace sa = span(2, {Vector{1, 0}});
  EXPECT_EQ(annihilator(a, AnnKind::left), sa);
  EXPECT_EQ(annihilator(a, AnnKind::right), span(2, {Vector{0, 1}}));
  EXPECT_TRUE(annihilator(a).is_zero());
  EXPECT_TRUE(center_of(a).is_zero());
  EXPECT_EQ(associator_span(a), sa);
  EXPECT_EQ(commutator_span(a), sa);
  EXPECT_EQ(square(a), sa);
  EXPECT_EQ(associator(a, Vector{0, 1}, Vector{0, 1}, Vector{1, 0}), (Vector{-1, 0}));
  Brackets br = brackets(a, Vector{1, 0}, Vector{0, 1});
  EXPECT_EQ(br.commutator, (Vector{1, 0}));
  EXPECT_EQ(br.anticommutator, (Vector{-1, 0}));
}

TEST(Structure, N6Subspaces) {
  AlgebraPresentation a = n6_algebra().alg();
  Subspace low = span(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)});
  EXPECT_EQ(square(a), low);
  EXPECT_EQ(annihilator(a), low);
  EXPECT_EQ(commutator_span(a), low);
  PowerSeries ps = power_series(a);
  ASSERT_TRUE(ps.nil_index.has_value());
  EXPECT_EQ(*ps.nil_index, 2u);
  EXPECT_EQ(ps.terms.size(), 3u);
  EXPECT_TRUE(ps.terms[2].is_zero());
  EXPECT_FALSE(unit_element(a).has_value());
}

TEST(Structure, PowerSeriesOfIdempotentStabilises) {
  PowerSeries ps = power_series(idempotent_line().alg());
  EXPECT_FALSE(ps.nil_index.has_value());
  EXPECT_TRUE(ps.terms.back().is_full());
}

TEST(Structure, UnitElements) {
  AlgebraPresentation id = catalog_get("diag_de_id").alg;
  ASSERT_TRUE(unit_element(id).has_value());
  EXPECT_EQ(*unit_element(id), unit_vector(3, 2));
  EXPECT_FALSE(unit_element(catalog_get("diag_de_half").alg).has_value());
  EXPECT_EQ(*unit_element(spin_factor(FormMatrix::identity(2)).alg()), unit_vector(3, 0));
}

TEST(Structure, CenterOfCommutativeAssociativeIsEverything) {
  AlgebraPresentation a = catalog_get("jn3").alg;
  EXPECT_TRUE(center_of(a).is_full());
  EXPECT_TRUE(nucleus(a).is_full());
  EXPECT_TRUE(associator_span(a).is_zero());
}

TEST(Structure, AnnihilatorKillsProducts) {
  Rng rng(22);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + t % 3;
    AlgebraPresentation a = quadalg::testing::rand_algebra(rng, n, t % 2 == 0, 1);
    for (const auto& z : annihilator(a).vectors()) {
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(is_zero(multiply(a, z, basis_vector(a, i))));
        EXPECT_TRUE(is_zero(multiply(a, basis_vector(a, i), z)));
      }
    }
    EXPECT_TRUE(annihilator(a).is_subspace_of(annihilator(a, AnnKind::left)));
  }
}

TEST(Forms, Checks) {
  QuadraticAlgebra n6 = n6_algebra();
  EXPECT_TRUE(form_checks(n6.alg(), n6.form()).all());
  FormCheckReport bad = form_checks(n6.alg(), FormMatrix::identity(6));
  EXPECT_TRUE(bad.symmetric);
  EXPECT_TRUE(bad.nondegenerate);
  EXPECT_FALSE(bad.associative);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_THROW(QuadraticAlgebra(n6.alg(), FormMatrix::identity(6)), PreconditionFailed);
  EXPECT_THROW(form_checks(n6.alg(), FormMatrix::identity(2)), DimensionMismatch);
  Matrix degenerate(6, 6);
  try {
    QuadraticAlgebra(n6.alg(), FormMatrix(degenerate));
    FAIL() << "degenerate form accepted";
  } catch (const PreconditionFailed& e) {
    EXPECT_EQ(e.condition(), "nondegenerate");
  }
}

TEST(Forms, ChangeOfBasisPreservesAssociativity) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    QuadraticAlgebra q = quadalg::testing::rand_2sn_quadratic(rng);
    EXPECT_TRUE(form_checks(q.alg(), q.form()).all());
    EXPECT_TRUE(holds(q.alg(), "two_step_nilpotent"));
  }
}

TEST(Forms, OrthogonalSumAndRestriction) {
  QuadraticAlgebra s = orthogonal_sum(n6_algebra(), idempotent_line("c"));
  EXPECT_EQ(s.dim(), 7u);
  EXPECT_TRUE(form_checks(s.alg(), s.form()).all());
  QuadraticAlgebra back = restrict_to(s, span(7, {unit_vector(7, 6)}));
  EXPECT_EQ(back, idempotent_line("c"));
  Subspace notclosed = span(6, {unit_vector(6, 3), unit_vector(6, 4)});
  EXPECT_THROW(restrict_to(n6_algebra().alg(), notclosed), PreconditionFailed);
}

TEST(Quadratic, DualitiesOnN6AndN7) {
  for (const char* name : {"N6", "N7"}) {
    DualityReport r = duality_report(catalog_get(name).quadratic());
    EXPECT_TRUE(r.all_applicable_hold()) << name;
    EXPECT_TRUE(r.at("ann_perp_is_square").applies);
    EXPECT_TRUE(r.at("left_ann_is_ann").applies);
  }
}

TEST(Quadratic, AnnPerpIsSquareOnRandomQuadratic) {
  Rng rng(24);
  for (int t = 0; t < 15; ++t) {
    QuadraticAlgebra q = quadalg::testing::rand_2sn_quadratic(rng);
    DualityReport r = duality_report(q);
    const DualityEntry& e = r.at("ann_perp_is_square");
    EXPECT_TRUE(e.holds);
    EXPECT_EQ(e.lhs, e.rhs);
  }
}

TEST(Quadratic, Reduction) {
  EXPECT_TRUE(is_reduced(n6_algebra()));
  QuadraticAlgebra ab(AlgebraPresentation(AlgebraPresentation::default_labels(1, "z")),
                      FormMatrix::identity(1));
  QuadraticAlgebra s = orthogonal_sum(n6_algebra(), ab);
  EXPECT_FALSE(is_reduced(s));
  Reduction r = reduce_quadratic(s);
  EXPECT_EQ(r.z.dim(), 1u);
  EXPECT_EQ(r.l.dim(), 6u);
  EXPECT_TRUE(is_reduced(r.l));
  EXPECT_THROW(reduce_quadratic(ab), PreconditionFailed);
}
