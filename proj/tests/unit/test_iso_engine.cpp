#include <gtest/gtest.h>

#include <random>

#include "hypercomp/iso_engine.hpp"
#include "hypercomp/poly_io.hpp"

using namespace hypercomp;

namespace {

bool has_failed(const std::vector<NamedCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return true;
  return false;
}

const FamilyResult& z_square_4() {
  static const FamilyResult r = run_family(family_z_square(4));
  return r;
}

const FamilyResult& x1_square_3() {
  static const FamilyResult r = run_family(family_x1_square(3));
  return r;
}

}  // namespace

TEST(IsoEngine, FamilyData) {
  auto a = family_z_square(4);
  const std::vector<std::string>& n = a.names;
  EXPECT_EQ(a.P, parse_polynomial("1 - z^4", n));
  EXPECT_EQ(a.Q, parse_polynomial("1 - z^4 - 4*x^2*z^2", n));
  EXPECT_EQ(a.m, 4u);
  EXPECT_EQ(a.n, 3u);
  auto b = family_x1_square(3);
  EXPECT_EQ(b.A, parse_polynomial("z*(1 - x0*x1^2 + x0^2*x1^4)", b.names));
  EXPECT_EQ(b.B, parse_polynomial("z*(1 + x0*x1^2)", b.names));
  EXPECT_THROW(family_z_square(3), InvalidArgument);
  EXPECT_THROW(family_x1_square(2), InvalidArgument);
}

TEST(IsoEngine, Hypotheses) {
  EXPECT_TRUE(check_cylinder_hypotheses(family_z_square(4)).ok());
  auto b = family_x1_square(3);
  auto rep = check_cylinder_hypotheses(b);
  EXPECT_TRUE(rep.ok());
  // A(B(z)) = z (1 + x0^3 x1^6), so z - A(B(z)) = -x0^3 x1^6 z.
  EXPECT_EQ(rep.h1_ab, parse_polynomial("-x0^3*x1^6*z", b.names));
  EXPECT_TRUE(check_cylinder_hypotheses(identity_data()).ok());
}

TEST(IsoEngine, CorruptedDataIsRejected) {
  auto b = family_x1_square(3);
  b.A = parse_polynomial("z*(1 - x0*x1^2)", b.names);
  auto rep = check_cylinder_hypotheses(b);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.h1_ab.is_zero());
}

TEST(IsoEngine, OpenQuestionDataFailsTheDivisibilityHypothesis) {
  for (unsigned variant : {0u, 1u}) {
    auto rep = check_cylinder_hypotheses(open_question_data(variant));
    EXPECT_FALSE(rep.ok());
    EXPECT_FALSE(rep.h2_forward.remainder.is_zero() && rep.h2_backward.remainder.is_zero());
  }
}

TEST(IsoEngine, InversePairAndPolynomialization) {
  const auto& r = z_square_4();
  EXPECT_TRUE(r.inverse.ok());
  EXPECT_TRUE(r.inverse.symbolic);
  EXPECT_TRUE(r.forward_poly.ok);
  EXPECT_TRUE(r.backward_poly.ok);
  for (const auto& c : r.forward_poly.map.components) EXPECT_GE(c.nvars(), 4u);
  const auto& b = x1_square_3();
  EXPECT_TRUE(b.backward_poly.ok);
  for (const auto* m : {&b.forward_poly.map, &b.backward_poly.map})
    for (const auto& c : m->components) EXPECT_EQ(degree_residues_mod(c, 3), (std::set<unsigned>{1}));
}

TEST(IsoEngine, CertificatesForSmallInstances) {
  for (const FamilyResult* r : {&z_square_4(), &x1_square_3()}) {
    ASSERT_TRUE(r->ok()) << r->data.label;
    const auto& c = *r->certificate;
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(c.ell % c.d, 1u);
    EXPECT_EQ(c.d * c.s + 1, c.ell * c.ell_prime);
    EXPECT_EQ(c.forward.degree, c.ell);
  }
}

TEST(IsoEngine, ChartAndDirectRoutesAgreeOnTheIdentity) {
  QPoly f = parse_polynomial("x^2*y + z^3", {"x", "y", "z"});
  PolynomialMap id{identity_map(Rationals{}, 3), {"x", "y", "z"}, 1u, 1u};
  for (auto route : {CertRoute::Direct, CertRoute::Chart, CertRoute::Auto}) {
    auto c = certify_projective_iso(f, f, id, id, {route});
    EXPECT_TRUE(c.valid()) << route_name(route);
    EXPECT_EQ(c.ell, 1u);
    EXPECT_EQ(c.s, 0u);
    EXPECT_EQ(c.mu, 1);
    EXPECT_EQ(c.lambda, 1);
  }
}

TEST(IsoEngine, WrongMapIsRejected) {
  QPoly f = parse_polynomial("x^2*y + z^3", {"x", "y", "z"});
  auto swapped = identity_map(Rationals{}, 3);
  std::swap(swapped[0], swapped[2]);
  PolynomialMap id{identity_map(Rationals{}, 3), {"x", "y", "z"}, 1u, 1u};
  PolynomialMap sw{swapped, {"x", "y", "z"}, 1u, 1u};
  EXPECT_FALSE(certify_projective_iso(f, f, sw, id).valid());
}

TEST(IsoEngine, Charts) {
  auto ch = find_chart(parse_polynomial("x^3*y + z^4", {"x", "y", "z", "w"}));
  ASSERT_TRUE(ch);
  EXPECT_EQ(ch->y, 1u);
  EXPECT_EQ(ch->xk, 0u);
  EXPECT_EQ(ch->a, 3u);
  EXPECT_FALSE(find_chart(parse_polynomial("x^3 + y^3 + z^3", {"x", "y", "z"})));
}

TEST(IsoEngine, Stabilization) {
  const auto& c = *z_square_4().certificate;
  auto s = stabilize(c, 5);
  EXPECT_TRUE(s.valid());
  EXPECT_EQ(s.forward.components.size(), 5u);
  EXPECT_EQ(s.ell, c.ell);
  EXPECT_THROW(stabilize(c, 3), InvalidArgument);
}

TEST(IsoEngine, EvaluationCrossCheck) {
  const auto& c = *z_square_4().certificate;
  auto e = evaluation_cross_check(c, 5, 5000);
  EXPECT_TRUE(e.ok) << e.detail;
  EXPECT_GT(e.points, 0u);
}

TEST(IsoEngine, Involution) {
  auto phi = nodal_cubic_involution();
  ASSERT_EQ(phi.components.size(), 3u);
  for (const auto& c : phi.components) EXPECT_EQ(homogeneous_degree(c), 8u);
  // g(Phi) is a scalar times f^8: degree 24 with eight exact divisions.
  QPoly f = nodal_cubic();
  auto [rest, k] = divide_out(compose(f, phi.components), f, 20);
  EXPECT_EQ(k, 8u);
  EXPECT_TRUE(rest.is_constant());
  EXPECT_FALSE(rest.is_zero());
}

TEST(IsoEngine, Mutations) {
  for (const auto& m : mutation_test(x1_square_3(), 20, 7)) {
    EXPECT_TRUE(m.caught) << m.target << " " << m.change;
    EXPECT_FALSE(m.failed_check.empty());
  }
}

TEST(IsoEngine, StoredMapsReverify) {
  const auto& r = x1_square_3();
  auto checks = reverify_instance(r.data, r.certificate->forward, r.certificate->backward);
  EXPECT_FALSE(has_failed(checks));
  auto broken = r.certificate->forward;
  broken.components[0] = broken.components[0] + broken.components[1];
  EXPECT_TRUE(has_failed(reverify_instance(r.data, broken, r.certificate->backward)));
}

TEST(IsoEngine, GaActions) {
  for (const auto& a : builtin_ga_actions()) {
    auto rep = verify_ga_action(a);
    EXPECT_TRUE(rep.ok()) << a.name;
  }
  // A non-action: x -> x + t^2 breaks the cocycle identity.
  GaAction bad = ga_translation();
  bad.name = "x + t^2";
  bad.components[0] = RationalFunction::of(parse_polynomial("x0 + t^2", bad.names));
  EXPECT_FALSE(verify_ga_action(bad).ok());
}

TEST(IsoEngine, RationalFunctions) {
  const std::vector<std::string> v{"a", "b"};
  auto a = RationalFunction{parse_polynomial("a", v), parse_polynomial("b", v)};
  auto b = RationalFunction{parse_polynomial("a*b", v), parse_polynomial("b^2", v)};
  EXPECT_TRUE(a.equals(b));
  auto sum = a + RationalFunction::of(parse_polynomial("1", v));
  EXPECT_TRUE(sum.equals({parse_polynomial("a + b", v), parse_polynomial("b", v)}));
}

TEST(IsoEngineProperty, MapsAgreeWithLaurentFormulasAtRandomPoints) {
  // Phi evaluated on random points of f = 1 lands on g = mu, over GF(10007).
  const auto& r = z_square_4();
  const auto& c = *r.certificate;
  auto F = FiniteField::make_q(10007);
  GF dom(F);
  auto f = to_gf(c.f, F), g = to_gf(c.g, F);
  std::vector<GFPoly> fwd;
  for (const auto& p : c.forward.components) fwd.push_back(to_gf(p, F));
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> pick(1, 10006);
  const auto mu = embed(*F, c.mu);
  int tested = 0;
  while (tested < 1000) {
    // Solve f = 1 for y on the chart x != 0: y = (1 - z^4) / x^3.
    auto x = F->from_int(pick(rng)), z = F->from_int(pick(rng)), w = F->from_int(pick(rng));
    auto y = F->div(F->sub(F->one(), F->pow(z, 4)), F->pow(x, 3));
    std::vector<FieldElement> pt{x, y, z, w};
    ASSERT_EQ(f.evaluate(pt), F->one());
    std::vector<FieldElement> img;
    for (const auto& p : fwd) img.push_back(p.evaluate(pt));
    ASSERT_EQ(g.evaluate(img), mu);
    ++tested;
  }
}
