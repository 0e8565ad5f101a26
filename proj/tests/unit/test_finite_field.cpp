#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hypercomp/domains.hpp"
#include "hypercomp/finite_field.hpp"

using namespace hypercomp;

TEST(FiniteField, SmallFields) {
  auto F2 = FiniteField::make_q(2);
  EXPECT_EQ(F2->elements().size(), 2u);
  auto F9 = FiniteField::make_q(9);
  EXPECT_EQ(F9->elements().size(), 9u);
  int invertible = 0;
  for (auto a : F9->elements())
    if (!F9->is_zero(a)) {
      EXPECT_EQ(F9->mul(a, F9->inverse(a)), F9->one());
      ++invertible;
    }
  EXPECT_EQ(invertible, 8);
}

TEST(FiniteField, SquaringIsBijectiveInEvenCharacteristic) {
  for (std::uint64_t q : {2, 4, 8, 16}) {
    auto F = FiniteField::make_q(q);
    std::set<std::uint32_t> squares;
    for (auto a : F->elements()) squares.insert(F->mul(a, a).code);
    EXPECT_EQ(squares.size(), q);
  }
}

TEST(FiniteField, Inverses) {
  auto F5 = FiniteField::make_q(5);
  EXPECT_EQ(F5->inverse(F5->one()), F5->one());
  EXPECT_EQ(F5->inverse(F5->from_int(2)), F5->from_int(3));
  EXPECT_THROW(F5->inverse(F5->zero()), InvalidArgument);
  auto F4 = FiniteField::make(parse_field_spec("p=2,k=2,mod=u^2+u+1"));
  auto u = F4->u();
  EXPECT_EQ(F4->inverse(u), F4->add(u, F4->one()));
}

TEST(FiniteField, SpecParsing) {
  EXPECT_EQ(parse_field_spec("q=9").q(), 9u);
  EXPECT_EQ(parse_field_spec("9").p, 3u);
  auto s = parse_field_spec("p=3,k=2");
  EXPECT_EQ(s.k, 2u);
  EXPECT_THROW(parse_field_spec("q=6"), InvalidArgument);
  EXPECT_THROW(parse_field_spec("q=1"), InvalidArgument);
  EXPECT_THROW(FiniteField::make(parse_field_spec("p=3,k=2,mod=u^2+1+u+u")), InvalidArgument);
  EXPECT_THROW(FiniteField::make(parse_field_spec("p=2,k=2,mod=u^2+1")), InvalidArgument);
}

TEST(FiniteField, PrimePowers) {
  EXPECT_TRUE(is_prime(10007));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_power(8), (std::pair<std::uint32_t, unsigned>{2, 3}));
  EXPECT_FALSE(prime_power(12));
}

TEST(FiniteField, EmbeddingRationals) {
  auto F7 = FiniteField::make_q(7);
  EXPECT_EQ(embed(*F7, mpq_class(1, 2)), F7->from_int(4));
  EXPECT_EQ(embed(*F7, mpq_class(-3)), F7->from_int(4));
  EXPECT_THROW(embed(*F7, mpq_class(1, 7)), NotEmbeddable);
}

TEST(FiniteField, IrreducibleModuli) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned k = 1; k <= 4; ++k) EXPECT_TRUE(gfp_poly::is_irreducible(gfp_poly::default_modulus(p, k), p));
  EXPECT_FALSE(gfp_poly::is_irreducible({1, 0, 1}, 2));  // u^2 + 1 = (u + 1)^2
}

TEST(FiniteFieldProperty, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2, 4, 8, 9, 25, 27, 49, 121}) {
    auto F = FiniteField::make_q(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
    for (int i = 0; i < 1000; ++i) {
      auto a = F->from_code(pick(rng)), b = F->from_code(pick(rng)), c = F->from_code(pick(rng));
      ASSERT_EQ(F->add(a, b), F->add(b, a));
      ASSERT_EQ(F->mul(a, b), F->mul(b, a));
      ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
      ASSERT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
      ASSERT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
      ASSERT_EQ(F->add(a, F->neg(a)), F->zero());
      if (!F->is_zero(a)) ASSERT_EQ(F->mul(a, F->inverse(a)), F->one());
      // Frobenius is additive and a^q = a.
      ASSERT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
      ASSERT_EQ(F->pow(a, q), a);
    }
  }
}

TEST(FiniteFieldProperty, PrimitiveElementGeneratesUnits) {
  for (std::uint64_t q : {3, 4, 16, 81, 125}) {
    auto F = FiniteField::make_q(q);
    std::set<std::uint32_t> seen;
    auto g = F->primitive_element();
    auto x = F->one();
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      seen.insert(x.code);
      x = F->mul(x, g);
    }
    EXPECT_EQ(seen.size(), q - 1);
  }
}

TEST(FiniteFieldProperty, CoordinatesRoundTrip) {
  auto F = FiniteField::make_q(243);
  for (auto a : F->elements()) ASSERT_EQ(F->from_coords(F->coords(a)), a);
}
