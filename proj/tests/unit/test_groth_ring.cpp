#include <gtest/gtest.h>

#include <random>

#include "hypercomp/groth_ring.hpp"
#include "hypercomp/poly_io.hpp"

using namespace hypercomp;

namespace {

std::vector<FieldSpec> fields(std::initializer_list<const char*> qs) {
  std::vector<FieldSpec> out;
  for (auto q : qs) out.push_back(parse_field_spec(q));
  return out;
}

std::vector<std::pair<std::uint64_t, mpz_class>> sample(const MotivicClass& c, std::initializer_list<std::uint64_t> qs) {
  std::vector<std::pair<std::uint64_t, mpz_class>> out;
  for (auto q : qs) out.emplace_back(q, c.predicted_count(q));
  return out;
}

}  // namespace

TEST(GrothRing, EulerCharacteristics) {
  EXPECT_EQ(MotivicClass::projective_space(3).chi(), 4);
  EXPECT_EQ(MotivicClass::affine_space(5).chi(), 1);
  EXPECT_EQ((MotivicClass::L() - MotivicClass::point()).chi(), 0);
  for (long n = 0; n <= 7; ++n) {
    auto c = MotivicClass::affine_space(2) + MotivicClass::point() + n * MotivicClass::L();
    EXPECT_EQ(c.chi(), 2 + n);
  }
  EXPECT_EQ(MotivicClass::projective_space(1) * MotivicClass::projective_space(1),
            MotivicClass::projective_space(2) + MotivicClass::L());
}

TEST(GrothRing, PieceCounts) {
  EXPECT_EQ(piece_class(PieceKind::P1VeeP1).predicted_count(5), 11);
  EXPECT_EQ(piece_class(PieceKind::A1xGm).predicted_count(5), 20);
  auto f5 = nonnormal_cubic_record(5);
  EXPECT_EQ(f5.klass().predicted_count(3), 16);
  EXPECT_EQ(f5.chi(), 4);
}

TEST(GrothRing, RecordsMatchCounts) {
  for (unsigned i = 1; i <= 6; ++i) {
    auto rep = verify_record(nonnormal_cubic_record(i), fields({"q=2", "q=3", "q=5"}));
    EXPECT_TRUE(rep.ok()) << rep.name;
    EXPECT_TRUE(rep.chart_consistent);
    for (const auto& f : rep.fields) EXPECT_TRUE(f.chart_checked);
  }
  auto f1 = verify_record(nonnormal_cubic_record(1), fields({"q=7"}));
  ASSERT_EQ(f1.fields.size(), 1u);
  EXPECT_EQ(f1.fields[0].observed, 50u);
  EXPECT_EQ(f1.fields[0].observed_open, 42u);
  EXPECT_EQ(f1.fields[0].observed_closed, 8u);
}

TEST(GrothRing, Registry) {
  EXPECT_EQ(find_record("record:nonnormal-cubic-f5").name, "nonnormal-cubic-f5");
  EXPECT_EQ(find_record("union-tree:r=3,s=1").chi(), 4);
  EXPECT_EQ(find_record("projective-space:m=4").chi(), 5);
  EXPECT_EQ(find_record("normal-cubic:n=7").chi(), 9);
  EXPECT_THROW(find_record("no-such-record"), InvalidArgument);
  EXPECT_THROW(find_record("normal-cubic:n=8"), InvalidArgument);
  EXPECT_THROW(nonnormal_cubic_record(7), InvalidArgument);
  EXPECT_FALSE(builtin_record_names().empty());
}

TEST(GrothRing, TreeClasses) {
  EXPECT_EQ(tree_class(1, 1).chi(), 2);
  EXPECT_EQ(tree_class(3, 1), 3 * MotivicClass::L() + MotivicClass::point());
  EXPECT_EQ(tree_class(4, 2).chi(), 6);
}

TEST(GrothRing, Interpolation) {
  auto conic = interpolate_count_polynomial(sample(MotivicClass::projective_space(2) + 2 * MotivicClass::L(),
                                                   {2, 3, 5, 7, 9}),
                                            2);
  EXPECT_TRUE(conic.polynomial);
  EXPECT_EQ(conic.klass.chi(), 5);
  auto constant = interpolate_count_polynomial({{2, 1}, {3, 1}, {5, 1}, {7, 1}}, 2);
  EXPECT_TRUE(constant.polynomial);
  EXPECT_EQ(constant.klass, MotivicClass::point());
  auto bad = interpolate_count_polynomial({{2, 5}, {3, 10}, {5, 26}, {7, 49}}, 2);
  EXPECT_FALSE(bad.polynomial);
  ASSERT_TRUE(bad.failing_q);
  EXPECT_EQ(*bad.failing_q, 7u);
}

TEST(GrothRing, EllipticConeIsNotPolynomial) {
  auto h = Hypersurface::projective(parse_polynomial("x^3 + y^3 + z^3", {"x", "y", "z", "w"}));
  std::vector<std::pair<std::uint64_t, mpz_class>> counts;
  for (std::uint64_t q : {7, 13, 19, 31})
    counts.emplace_back(q, mpz_class(static_cast<unsigned long>(count_points(h, FiniteField::make_q(q)).total)));
  EXPECT_FALSE(interpolate_count_polynomial(counts, 2).polynomial);
}

TEST(GrothRing, CurveComparison) {
  CurveRecord cusp{"cuspidal cubic", {"rational"}, 2}, line{"P1", {"rational"}, 2}, node{"nodal cubic", {"rational"}, 1};
  EXPECT_TRUE(curves_piecewise_iso(cusp, line));
  EXPECT_FALSE(curves_piecewise_iso(node, line));
  EXPECT_TRUE(curves_piecewise_iso(node, node));
}

TEST(GrothRing, QuarticCountIdentity) {
  const std::vector<std::string> v{"x", "y", "z"};
  QPoly f = parse_polynomial("x*y*z + x^3 + y^3", v);
  QPoly g = parse_polynomial("x^4 + y^4 + z^4", v);
  for (std::uint64_t q : {2, 3, 5, 7}) EXPECT_TRUE(quartic_count_check(f, g, FiniteField::make_q(q)).ok()) << q;
}

TEST(GrothRingProperty, InterpolationRecoversRandomClasses) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int i = 0; i < 1000; ++i) {
    std::vector<mpz_class> c{mpz_class(coef(rng)), mpz_class(coef(rng)), mpz_class(coef(rng))};
    MotivicClass k(c);
    auto fit = interpolate_count_polynomial(sample(k, {2, 3, 5, 7, 9}), 2);
    ASSERT_TRUE(fit.polynomial);
    ASSERT_EQ(fit.klass, k);
    ASSERT_EQ(fit.klass.chi(), c[0] + c[1] + c[2]);
  }
}

TEST(GrothRingProperty, ClassArithmeticIsARing) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coef(-4, 4);
  auto rnd = [&] { return MotivicClass({mpz_class(coef(rng)), mpz_class(coef(rng)), mpz_class(coef(rng))}); };
  for (int i = 0; i < 1000; ++i) {
    auto a = rnd(), b = rnd(), c = rnd();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b).chi(), a.chi() * b.chi());
    ASSERT_EQ((a - a), MotivicClass());
  }
}
