#include <gtest/gtest.h>

#include <random>

#include "hypercomp/laurent.hpp"
#include "hypercomp/poly_io.hpp"
#include "hypercomp/poly_ops.hpp"

using namespace hypercomp;
using QL = LaurentAtX0<Rationals>;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

QPoly P(const std::string& s, const std::vector<std::string>& v = kXYZ) { return parse_polynomial(s, v); }

template <class D>
Polynomial<D> random_poly(const D& dom, std::size_t nvars, std::mt19937_64& rng, unsigned max_terms = 5,
                          unsigned max_exp = 3) {
  std::vector<typename Polynomial<D>::Term> terms;
  std::uniform_int_distribution<unsigned> nterms(0, max_terms), ex(0, max_exp);
  std::uniform_int_distribution<int> coef(-5, 5);
  unsigned k = nterms(rng);
  for (unsigned i = 0; i < k; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < nvars; ++v) m.set(v, ex(rng));
    terms.emplace_back(m, dom.from_int(coef(rng)));
  }
  return Polynomial<D>::from_terms(dom, nvars, std::move(terms));
}

}  // namespace

TEST(PolyCore, AdditionExamples) {
  EXPECT_EQ(P("x + y") + P("-x"), P("y"));
  EXPECT_EQ(P("0") + P("x^2 + 3"), P("x^2 + 3"));
  EXPECT_EQ(P("x^2 + 1") + P("x^2 - 1"), P("2*x^2"));
  EXPECT_TRUE((P("x*y") - P("y*x")).is_zero());
}

TEST(PolyCore, MultiplicationExamples) {
  EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2"));
  EXPECT_EQ(P("x^3 + 2*y") * P("1"), P("x^3 + 2*y"));
  EXPECT_EQ(P("(x + 1)^3"), P("x^3 + 3*x^2 + 3*x + 1"));
}

TEST(PolyCore, CompositionExpandsABOfZ) {
  const std::vector<std::string> v{"x", "z"};
  QPoly A = P("z - x^2*z^3", v), B = P("z + x^2*z^3", v);
  QPoly x = P("x", v);
  EXPECT_EQ(compose(A, {x, B}), P("z - 3*x^4*z^5 - 3*x^6*z^7 - x^8*z^9", v));
}

TEST(PolyCore, CompositionKeepsInvariantQuadric) {
  const std::vector<std::string> v{"x0", "x1", "x2", "t"};
  QPoly q = P("x0*x1 + x2^2", v);
  EXPECT_EQ(compose(q, {P("x0", v), P("x1 - 2*t*x2 - t^2*x0", v), P("x2 + t*x0", v), P("t", v)}), q);
  EXPECT_EQ(compose(q, identity_map(Rationals{}, 4)), q);
}

TEST(PolyCore, ParsePrintRoundTrip) {
  for (const char* s : {"x^2*y - 3/4*z + 1", "-x", "7", "x*y*z^5 + y^2"}) {
    QPoly p = P(s);
    EXPECT_EQ(P(to_string(p, kXYZ)), p) << s;
  }
  EXPECT_EQ(to_string(P("y + x"), kXYZ), "x + y");
  EXPECT_EQ(to_string(P("0"), kXYZ), "0");
}

TEST(PolyCore, ParseErrors) {
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("q"), ParseError);
  EXPECT_THROW(P("x^-1"), ParseError);
  EXPECT_THROW(P("(x"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
  EXPECT_THROW(parse_var_list("x,x"), ParseError);
}

TEST(PolyCore, GrlexOrder) {
  QPoly p = P("z + x*y + y^2 + x^2 + 1");
  std::vector<std::string> seen;
  for (const auto& [m, c] : p.terms()) seen.push_back(detail::monomial_text(m, kXYZ));
  EXPECT_EQ(seen, (std::vector<std::string>{"x^2", "x*y", "y^2", "z", ""}));
}

TEST(PolyCore, ExactDivision) {
  auto q = divide_exact(P("x^2 - y^2"), P("x - y"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("x + y"));
  EXPECT_FALSE(divide_exact(P("x^2 + y^2"), P("x - y")));
  auto [rest, k] = divide_out(P("(x - y)^3*(x + 2)"), P("x - y"), 10);
  EXPECT_EQ(k, 3u);
  EXPECT_EQ(rest, P("x + 2"));
}

TEST(PolyCore, DivisionInOneVariable) {
  auto r = divide_monic_in_var(P("z^5"), P("1 - z^4"), 2);
  EXPECT_EQ(r.quotient, P("-z"));
  EXPECT_EQ(r.remainder, P("z"));
  auto r2 = divide_monic_in_var(P("1"), P("1 - z^4"), 2);
  EXPECT_TRUE(r2.quotient.is_zero());
  EXPECT_EQ(r2.remainder, P("1"));
}

TEST(PolyCore, TruncationAndHomogeneousParts) {
  EXPECT_EQ(truncate_mod_x0(P("x^3"), 4), P("x^3"));
  EXPECT_TRUE(truncate_mod_x0(P("x^4*y"), 4).is_zero());
  auto parts = homogeneous_components(P("x^2 + x*y + z"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(2), P("x^2 + x*y"));
  EXPECT_EQ(parts.at(1), P("z"));
  EXPECT_TRUE(homogeneous_components(P("0")).empty());
  EXPECT_EQ(homogeneous_degree(P("x^3*y + z^4")), 4u);
  EXPECT_FALSE(homogeneous_degree(P("x + 1")));
  EXPECT_EQ(degree_residues_mod(P("x + y^2"), 2), (std::set<unsigned>{0, 1}));
  EXPECT_EQ(degree_residues_mod(P("5"), 3), (std::set<unsigned>{0}));
}

TEST(PolyCore, TaylorShift) {
  const std::vector<std::string> v{"x"};
  EXPECT_EQ(taylor_shift(P("x^2", v), {mpq_class(1)}), P("x^2 + 2*x + 1", v));
  QPoly p = P("x^3*y - z + 4");
  EXPECT_EQ(taylor_shift(p, {0, 0, 0}), p);
}

TEST(PolyCore, TermCeilingRaisesResourceLimit) {
  std::size_t saved = term_limit().load();
  term_limit() = 50;
  EXPECT_THROW(P("(x + y + z + 1)^6"), ResourceLimit);
  term_limit() = saved;
  EXPECT_NO_THROW(P("(x + y + z + 1)^6"));
}

TEST(PolyCore, MixedArityRejected) {
  QPoly a = P("x"), b = parse_polynomial("x", {"x", "y"});
  EXPECT_THROW(a + b, DomainMismatch);
  EXPECT_THROW(a * b, DomainMismatch);
}

TEST(PolyCore, LaurentNormalization) {
  const std::vector<std::string> v{"x", "y"};
  QL a(P("x^3*y + x^2", v), 4);
  EXPECT_EQ(a.x0_power(), 2u);
  EXPECT_EQ(a.numerator(), P("x*y + 1", v));
  QL b(P("x^2", v), 2);
  EXPECT_TRUE(b.is_polynomial());
  EXPECT_EQ(b.to_polynomial(), P("1", v));
  QL c = QL(P("y", v), 1) * QL(P("x", v), 0);
  EXPECT_EQ(c, QL(P("y", v), 0));
}

TEST(PolyCoreProperty, RingAxiomsOverRationals) {
  std::mt19937_64 rng(1);
  Rationals Q;
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(Q, 3, rng), b = random_poly(Q, 3, rng), c = random_poly(Q, 3, rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      auto q = divide_exact(a * b, b);
      ASSERT_TRUE(q);
      ASSERT_EQ(*q, a);
    }
  }
}

TEST(PolyCoreProperty, RingAxiomsOverGF9) {
  std::mt19937_64 rng(2);
  GF F(FiniteField::make_q(9));
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(F, 3, rng), b = random_poly(F, 3, rng), c = random_poly(F, 3, rng);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) ASSERT_EQ(*divide_exact(a * b, b), a);
  }
}

TEST(PolyCoreProperty, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(3);
  GF F(FiniteField::make_q(101));
  std::uniform_int_distribution<int> pt(0, 100);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(F, 3, rng), b = random_poly(F, 3, rng);
    std::vector<FieldElement> x{F.from_int(pt(rng)), F.from_int(pt(rng)), F.from_int(pt(rng))};
    ASSERT_EQ((a * b).evaluate(x), F.mul(a.evaluate(x), b.evaluate(x)));
    ASSERT_EQ((a + b).evaluate(x), F.add(a.evaluate(x), b.evaluate(x)));
    // Substituting constants agrees with evaluation.
    std::vector<GFPoly> subs;
    for (auto v : x) subs.push_back(GFPoly::constant(F, 3, v));
    ASSERT_EQ(compose(a, subs).constant_term(), a.evaluate(x));
  }
}

TEST(PolyCoreProperty, DivisionWithRemainderInvariant) {
  std::mt19937_64 rng(4);
  Rationals Q;
  const std::vector<std::string> v{"x", "z"};
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(Q, 2, rng, 6, 5);
    auto lower = random_poly(Q, 2, rng, 3, 2);
    // Monic in z of degree 3 plus lower terms in z.
    QPoly divisor = P("z^3", v);
    for (const auto& [m, c] : lower.terms())
      if (m[1] < 3) divisor = divisor + QPoly::monomial(Q, 2, m, c);
    auto r = divide_monic_in_var(a, divisor, 1);
    ASSERT_EQ(r.quotient * divisor + r.remainder, a);
    ASSERT_LT(r.remainder.degree_in(1), 3u);
  }
}
