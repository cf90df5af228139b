#include <gtest/gtest.h>

#include <algorithm>

#include "quadalg/linalg.hpp"
#include "quadalg/scalar.hpp"
#include "support/random.hpp"

using namespace quadalg;
using quadalg::testing::Rng;

namespace {

Matrix rows(std::vector<Vector> r) { return Matrix::from_rows(r); }

Scalar rand_q2(Rng& rng) {
  return Scalar(Rational(quadalg::testing::rand_fraction(rng, 5).rational_part()),
                Rational(quadalg::testing::rand_fraction(rng, 5).rational_part()), 2);
}

}  // namespace

TEST(Scalar, ParsesAndPrintsCanonicalText) {
  EXPECT_EQ(Scalar::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Scalar::parse("-0").to_string(), "0");
  EXPECT_EQ(Scalar::parse("1/2 + 3√2").to_string(), "1/2+3√2");
  EXPECT_EQ(Scalar::parse("sqrt3").to_string(), "√3");
  EXPECT_EQ(Scalar::parse("-3/4√5").to_string(), "-3/4√5");
  EXPECT_EQ(Scalar::parse("2 - √2"), Scalar(2) - Scalar::root(2));
}

TEST(Scalar, RejectsMalformedText) {
  EXPECT_THROW(Scalar::parse(""), ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), Error);
  EXPECT_THROW(Scalar::parse("√4"), ParseError);
  EXPECT_THROW(Scalar::parse("√2+√3"), ParseError);
  EXPECT_THROW(Scalar::parse("abc"), ParseError);
}

TEST(Scalar, ZeroRadicalDropsField) {
  Scalar r = Scalar::root(2);
  Scalar z = r - r;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.field_d(), 0);
  EXPECT_EQ(r * r, Scalar(2));
  EXPECT_EQ((r * r).field_d(), 0);
}

TEST(Scalar, MixingFieldsThrows) {
  EXPECT_THROW(Scalar::root(2) + Scalar::root(3), FieldMismatch);
}

TEST(Scalar, FieldAxiomsOnRandomQSqrt2Triples) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Scalar a = rand_q2(rng), b = rand_q2(rng), c = rand_q2(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(Scalar, SquareRootsInField) {
  EXPECT_EQ(*sqrt_in_field(Scalar::fraction(9, 4), 0), Scalar::fraction(3, 2));
  EXPECT_FALSE(sqrt_in_field(Scalar(2), 0).has_value());
  EXPECT_EQ(*sqrt_in_field(Scalar(2), 2), Scalar::root(2));
  EXPECT_EQ(*sqrt_in_field(Scalar(8), 2), Scalar(2) * Scalar::root(2));
  // (1 + √2)² = 3 + 2√2
  Scalar s = *sqrt_in_field(Scalar(3) + Scalar(2) * Scalar::root(2), 2);
  EXPECT_EQ(s * s, Scalar(3) + Scalar(2) * Scalar::root(2));
  EXPECT_EQ(*rational_cbrt(Scalar::fraction(-8, 27)), Scalar::fraction(-2, 3));
  EXPECT_FALSE(rational_cbrt(Scalar(2)).has_value());
}

TEST(SpanNormalForm, Examples) {
  Subspace s = span_normal_form(2, {Vector{1, 0}, Vector{2, 0}});
  EXPECT_EQ(s.basis(), rows({{1, 0}}));
  EXPECT_EQ(span_normal_form(3, {}).dim(), 0u);
  EXPECT_EQ(span_normal_form(3, {}).ambient(), 3u);
  Subspace t = span_normal_form(3, {Vector{0, 1, 1}, Vector{1, 0, 1}});
  EXPECT_EQ(t.basis(), rows({{1, 0, 1}, {0, 1, 1}}));
}

TEST(SpanNormalForm, MixedLengthsThrow) {
  EXPECT_THROW(span_normal_form({Vector{1, 0}, Vector{1}}), DimensionMismatch);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_of(Matrix::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel_of(Matrix(2, 2)), Subspace::full(2));
  EXPECT_EQ(kernel_of(rows({{0, 1}, {0, 0}})).basis(), rows({{1, 0}}));
}

TEST(OrthComplement, Examples) {
  Matrix hyp = rows({{0, 1}, {1, 0}});
  EXPECT_EQ(orth_complement(hyp, Subspace::full(2)).dim(), 0u);
  Subspace e1 = span_normal_form(2, {Vector{1, 0}});
  EXPECT_EQ(orth_complement(hyp, e1), e1);
  Subspace f1 = span_normal_form(4, {unit_vector(4, 0)});
  EXPECT_EQ(orth_complement(Matrix::identity(4), f1),
            span_normal_form(4, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}));
  EXPECT_THROW(orth_complement(Matrix::identity(3), e1), DimensionMismatch);
}

TEST(Solve, Examples) {
  Vector b{3, -1, 2};
  EXPECT_EQ(*solve(Matrix::identity(3), b), b);
  EXPECT_FALSE(solve(Matrix(2, 2), Vector{1, 0}).has_value());
  EXPECT_EQ(*solve(rows({{1, 1}}), Vector{3}), (Vector{3, 0}));
}

TEST(LinalgProperties, RankNullity) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
    Matrix m = quadalg::testing::rand_matrix(rng, r, c, 1);
    EXPECT_EQ(rank(m) + kernel_of(m).dim(), c);
    for (const auto& v : kernel_of(m).vectors()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(LinalgProperties, SpanIsIdempotentAndOrderInsensitive) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    std::vector<Vector> vs;
    for (int k = 0; k < 3; ++k) vs.push_back(quadalg::testing::rand_vector(rng, 4, 2));
    Subspace s = span_normal_form(4, vs);
    EXPECT_EQ(span_normal_form(4, s.vectors()), s);
    std::reverse(vs.begin(), vs.end());
    EXPECT_EQ(span_normal_form(4, vs), s);
  }
}

TEST(LinalgProperties, DoubleComplementIsIdentity) {
  Rng rng(14);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 4;
    FormMatrix b = quadalg::testing::rand_form(rng, n);
    Subspace s = span_normal_form(n, {quadalg::testing::rand_vector(rng, n, 2),
                                      quadalg::testing::rand_vector(rng, n, 2)});
    Subspace perp = orth_complement(b.matrix(), s);
    EXPECT_EQ(perp.dim() + s.dim(), n);
    EXPECT_EQ(orth_complement(b.matrix(), perp), s);
  }
}

TEST(LinalgProperties, InverseRoundTrip) {
  Rng rng(15);
  for (int t = 0; t < 40; ++t) {
    Matrix m = quadalg::testing::rand_invertible(rng, 1 + t % 4);
    EXPECT_EQ(*inverse(m) * m, Matrix::identity(m.rows()));
  }
}
