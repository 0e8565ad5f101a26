#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hypercomp/poly_io.hpp"
#include "hypercomp/quadrics.hpp"

using namespace hypercomp;

TEST(Quadrics, ClosedForms) {
  auto x23 = closed_form_count({QuadricKind::X, 2, 3}, 3);
  EXPECT_EQ(x23.total, 24u);
  EXPECT_EQ(x23.singular, 0u);
  auto y12 = closed_form_count({QuadricKind::Y, 1, 2}, 2);
  EXPECT_EQ(y12.total, 4u);
  EXPECT_EQ(y12.regular, 3u);
  EXPECT_EQ(y12.singular, 1u);
  auto y02 = closed_form_count({QuadricKind::Y, 0, 2}, 3);
  EXPECT_EQ(y02.total, 18u);
}

TEST(Quadrics, FormValidity) {
  EXPECT_THROW((QuadricNormalForm{QuadricKind::X, 2, 2}.validate()), InvalidArgument);
  EXPECT_THROW((QuadricNormalForm{QuadricKind::Y, 2, 3}.validate()), InvalidArgument);
  EXPECT_TRUE((QuadricNormalForm{QuadricKind::Y, 1, 2}.valid()));
  EXPECT_EQ(normal_forms_up_to(4).size(), 10u);
  auto with_y0 = normal_forms_up_to(4, true);
  EXPECT_GT(with_y0.size(), 10u);
  QuadricNormalForm y{QuadricKind::Y, 1, 2};
  EXPECT_EQ(y.affine_polynomial(), parse_polynomial("x0*x1 + x2^2 - 1", {"x0", "x1", "x2"}));
}

TEST(Quadrics, BruteForceAgreesOnSmallCases) {
  for (const auto& form : normal_forms_up_to(3)) {
    auto checks = verify_against_bruteforce(form, {parse_field_spec("q=2"), parse_field_spec("q=3"),
                                                   parse_field_spec("q=4")});
    for (const auto& c : checks) EXPECT_TRUE(c.match()) << form.name() << " q=" << c.q;
  }
}

TEST(Quadrics, Distinguishability) {
  EXPECT_NE(closed_form_count({QuadricKind::X, 1, 2}, 3).regular, closed_form_count({QuadricKind::Y, 1, 2}, 3).regular);
  for (std::uint64_t q : {2, 4, 8})
    for (const auto& f : normal_forms_up_to(4)) {
      auto c = closed_form_count(f, q);
      if (f.kind == QuadricKind::X)
        EXPECT_EQ(c.singular, 0u);
      else
        EXPECT_GT(c.singular, 0u);
    }
}

TEST(Quadrics, Classification) {
  const std::vector<std::string> v{"x0", "x1", "x2", "x3"};
  auto y = classify_quadric(parse_polynomial("x0*x1 + x2^2", v));
  EXPECT_EQ(y.kind, QuadricKind::Y);
  EXPECT_EQ(y.m, 1u);
  EXPECT_EQ(y.rank, 3u);
  auto x = classify_quadric(parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", v));
  EXPECT_EQ(x.kind, QuadricKind::X);
  EXPECT_EQ(x.m, 2u);
  auto dbl = classify_quadric(parse_polynomial("x0^2", v));
  EXPECT_EQ(dbl.rank, 1u);
  EXPECT_TRUE(dbl.non_reduced);
  EXPECT_TRUE(classify_quadric(parse_polynomial("x0*x1", v)).reducible);
  EXPECT_THROW(classify_quadric(parse_polynomial("x0*x1", v), 2), InvalidArgument);
  EXPECT_THROW(classify_quadric(parse_polynomial("x0^3", v)), InvalidArgument);
}

TEST(Quadrics, SumOfFourSquaresMatchesSplitFormCounts) {
  // Over GF(5) -1 is a square, so x0^2+..+x3^2 = 1 counts like x0x1 + x2x3 = 1.
  const std::vector<std::string> v{"x0", "x1", "x2", "x3"};
  auto F = FiniteField::make_q(5);
  auto a = count_points(Hypersurface::affine(parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 - 1", v)), F);
  EXPECT_EQ(a.total, closed_form_count({QuadricKind::X, 2, 3}, 5).total);
}

TEST(Quadrics, CharacteristicTwoFingerprint) {
  const std::vector<std::string> v{"x0", "x1", "x2"};
  auto e = classify_quadric_char2(parse_polynomial("x0*x1 + x2^2", v));
  ASSERT_FALSE(e.matches.empty());
  EXPECT_EQ(e.matches.front(), (QuadricNormalForm{QuadricKind::Y, 1, 2}));
  auto x = classify_quadric_char2(parse_polynomial("x0*x1", v));
  ASSERT_FALSE(x.matches.empty());
  EXPECT_EQ(x.matches.front(), (QuadricNormalForm{QuadricKind::X, 1, 2}));
}

TEST(QuadricsProperty, GramRankInvariantUnderCoordinateChanges) {
  // Random invertible upper-triangular substitutions preserve the rank.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::vector<std::string> v{"x0", "x1", "x2", "x3"};
  const std::vector<QPoly> forms{parse_polynomial("x0*x1 + x2*x3", v), parse_polynomial("x0*x1 + x2^2", v),
                                 parse_polynomial("x0*x1", v), parse_polynomial("x0^2", v)};
  for (int i = 0; i < 1000; ++i) {
    const QPoly& f = forms[i % forms.size()];
    std::vector<QPoly> subs;
    for (std::size_t r = 0; r < 4; ++r) {
      QPoly s = QPoly::variable(Rationals{}, 4, r);
      for (std::size_t c = r + 1; c < 4; ++c)
        s = s + QPoly::variable(Rationals{}, 4, c).scale(mpq_class(coef(rng)));
      subs.push_back(s);
    }
    QPoly g = compose(f, subs);
    ASSERT_EQ(gram_rank(g, 0), gram_rank(f, 0));
    ASSERT_EQ(gram_rank(g, 7), gram_rank(f, 7));
  }
}
