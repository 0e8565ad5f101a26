#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercomp/laurent.hpp"

namespace hypercomp {

using QLaurent = LaurentAtX0<Rationals>;

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Data for isomorphisms of cylinders over x0^n y = P and x0^n y = Q. The ring
// has variables (x0..xs, y, z, w); P, Q, A, B only involve x0..xs and z.
struct DanielewskiData {
  std::string label;
  unsigned s = 0;
  unsigned m = 1;
  unsigned n = 1;
  QPoly P, Q, A, B;
  std::vector<std::string> names;

  std::size_t nvars() const { return s + 4; }
  std::size_t y() const { return s + 1; }
  std::size_t z() const { return s + 2; }
  std::size_t w() const { return s + 3; }
  // f = x0^n y + 1 - P and g = x0^n y + 1 - Q, so that f - 1 and g - 1 cut out H_P and H_Q.
  QPoly f() const;
  QPoly g() const;
};

// f = x^{d-1} y + z^d against g = f + d x^{d-2} z^2 in P^3 (d >= 4).
DanielewskiData family_z_square(unsigned d, std::uint64_t characteristic = 0);
// f = x0^{d-1} y + z^d against g = f + d x0^{d-2} x1^2 in P^4 (d >= 3).
DanielewskiData family_x1_square(unsigned d, std::uint64_t characteristic = 0);
// P = Q = 1 - z^2, A = B = z, m = n = 1.
DanielewskiData identity_data();
// Naive data for f = x^2 y + z^3 versus g = x^2 y + z^3 + x w^2, where the
// isomorphism question is open. Variant 0 takes A = B = z, variant 1 copies the
// shape of the x1-square family. Nothing is asserted about the answer.
DanielewskiData open_question_data(unsigned variant = 0);

struct HypothesesReport {
  std::vector<NamedCheck> checks;
  QPoly h1_ab, h1_ba;                    // z - A(B(z)), z - B(A(z))
  DivisionResult<Rationals> h2_forward;  // Q(A + x0^m w) divided by P in z
  DivisionResult<Rationals> h2_backward; // P(B + x0^m w) divided by Q in z
  bool ok() const;
};

HypothesesReport check_cylinder_hypotheses(const DanielewskiData& data);

struct LaurentMaps {
  std::vector<QLaurent> forward;
  std::vector<QLaurent> backward;
};

LaurentMaps build_cylinder_maps(const DanielewskiData& data);

struct InversePairReport {
  std::vector<NamedCheck> checks;
  bool symbolic = true;  // false: evaluation evidence only
  bool ok() const;
};

// Composes the maps in the localization at x0 and compares with
// (x, P(z)/x0^n, z, w) and (x, Q(z)/x0^n, z, w).
InversePairReport verify_inverse_pair(const DanielewskiData& data, const LaurentMaps& maps, std::uint64_t seed = 0);

struct PolynomialMap {
  std::vector<QPoly> components;
  std::vector<std::string> names;
  std::optional<unsigned> degree;  // common degree when homogeneous
  std::optional<unsigned> residue;
};

struct PolynomializeReport {
  PolynomialMap map;
  std::vector<unsigned> depth;  // recursion depth used per component
  bool ok = true;
  std::string detail;
};

// Rewrites N / x0^k as a polynomial using x0^n y = P, recursing at most 4 times.
PolynomializeReport polynomialize_components(const std::vector<QLaurent>& map, const QPoly& relation_P, unsigned n,
                                             std::size_t yvar, std::size_t zvar, const std::vector<std::string>& names);

// Multiplies monomials by powers of f so that all components are homogeneous
// of one degree. Throws when monomial degrees are not all congruent mod deg f.
PolynomialMap homogenize_map(const PolynomialMap& map, const QPoly& f);

enum class CertRoute { Auto, Direct, Chart };
std::string route_name(CertRoute r);

struct IsoCertificate {
  PolynomialMap forward, backward;
  QPoly f, g;
  unsigned d = 0;
  unsigned ell = 0, ell_prime = 0;
  unsigned s = 0;
  unsigned t = 0, t_prime = 0;
  mpq_class mu, mu_prime, lambda, lambda_prime;
  CertRoute route = CertRoute::Direct;
  std::vector<NamedCheck> checks;
  bool irreducibility_assumed = true;
  bool valid() const;
};

struct CertifyOptions {
  CertRoute route = CertRoute::Auto;
};

// Checks g(Phi) = mu f^l, Psi_i(Phi) = lambda f^s x_i, f(Psi) = mu' g^l',
// Phi_i(Psi) = lambda' g^s x_i and d s = l l' - 1. Either by expansion and
// iterated exact division, or through the charts y -> (c - R)/(a x_k^e) when
// f and g are linear in a variable with a monomial coefficient.
IsoCertificate certify_projective_iso(const QPoly& f, const QPoly& g, const PolynomialMap& forward,
                                      const PolynomialMap& backward, const CertifyOptions& opts = {});

// Appends x_j f^r and c x_j g^r' for the new variables and re-certifies.
IsoCertificate stabilize(const IsoCertificate& cert, std::size_t target_nvars, const CertifyOptions& opts = {});

// Chart description f = c * x_k^a * y + R with R free of y.
struct Chart {
  std::size_t y = 0;
  std::size_t xk = 0;
  unsigned a = 0;
  mpq_class c;
  QPoly R;
};
std::optional<Chart> find_chart(const QPoly& f);
// Image of p under y -> (value - R) / (c x_k^a), localized at x_k.
QLaurent chart_substitute(const QPoly& p, const Chart& ch, const mpq_class& value);

struct FamilyOptions {
  CertRoute route = CertRoute::Auto;
  std::optional<std::size_t> stabilize_to_nvars;
  std::uint64_t seed = 0;
};

struct FamilyResult {
  DanielewskiData data;
  HypothesesReport hypotheses;
  LaurentMaps laurent;
  InversePairReport inverse;
  PolynomializeReport forward_poly, backward_poly;
  std::vector<NamedCheck> checks;  // every named check in pipeline order
  std::optional<IsoCertificate> certificate;
  std::optional<IsoCertificate> stabilized;
  bool ok() const;
};

// Full pipeline: hypotheses, Laurent maps, inverse check, polynomialization,
// homogenization and certification (plus optional stabilization).
FamilyResult run_family(const DanielewskiData& data, const FamilyOptions& opts = {});

// Compares the chart images y -> P/x0^n (resp. Q/x0^n) of stored polynomial or
// homogeneous maps with the Laurent maps.
std::vector<NamedCheck> check_stored_maps(const DanielewskiData& data, const LaurentMaps& laurent,
                                          const PolynomialMap& forward, const PolynomialMap& backward);

// Re-verifies a stored instance (data plus emitted homogeneous maps) without
// rebuilding the maps. Stops at the first failing check.
std::vector<NamedCheck> reverify_instance(const DanielewskiData& data, const PolynomialMap& forward,
                                          const PolynomialMap& backward, CertRoute route = CertRoute::Auto);

struct MutationOutcome {
  std::string target;  // e.g. "P", "A", "Phi_2"
  std::string change;
  bool caught = false;
  std::string failed_check;
};

// Perturbs one coefficient of P, Q, A, B, Phi_i or Psi_i per trial and reports
// whether re-verification rejects the mutant.
std::vector<MutationOutcome> mutation_test(const FamilyResult& verified, unsigned trials, std::uint64_t seed,
                                           CertRoute route = CertRoute::Auto);

// Mutation testing for a bare certificate. With tied maps (an involution) one
// perturbation changes both roles.
std::vector<MutationOutcome> mutation_test_maps(const IsoCertificate& cert, unsigned trials, std::uint64_t seed,
                                                bool tied, CertRoute route = CertRoute::Auto);

// The explicit degree-8 involution of the complement of the nodal cubic xyz + x^3 + y^3.
QPoly nodal_cubic();
PolynomialMap nodal_cubic_involution();

// Evaluation cross-check over GF(p): every point of f = 1 maps onto g = mu and
// backward o forward returns lambda times the point.
struct EvaluationCheck {
  std::uint64_t p = 0;
  std::uint64_t points = 0;
  bool ok = true;
  std::string detail;
};
EvaluationCheck evaluation_cross_check(const IsoCertificate& cert, std::uint32_t p, std::uint64_t max_points = 200000);

// Rational function num / den over the rationals; equality by cross-multiplication.
struct RationalFunction {
  QPoly num, den;
  static RationalFunction of(QPoly p);
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  bool equals(const RationalFunction& o) const;
};

RationalFunction compose_rational(const QPoly& target, const std::vector<RationalFunction>& subs);
RationalFunction compose_rational(const RationalFunction& target, const std::vector<RationalFunction>& subs);

// A G_a-action on affine coordinates x_0..x_{n-1} with parameter t; the ring
// has n + 2 variables: x_0..x_{n-1}, t, t2.
struct GaAction {
  std::string name;
  std::vector<RationalFunction> components;  // in variables x, t
  std::vector<RationalFunction> invariants;
  std::vector<std::string> names;
  std::size_t n = 0;
  // Index of an invariant u for which x -> rho(u(x), x) is checked to be
  // inverted by x -> rho(-u(x), x).
  std::optional<std::size_t> twist_invariant;
};

struct GaReport {
  std::string name;
  std::vector<NamedCheck> checks;
  bool ok() const;
};

GaReport verify_ga_action(const GaAction& action);

// Built-in actions: quadric x0x1 + x2^2 + f, quadric x0x1 + x2x3 + g, the
// linear-subspace action for f = x0 a0 + x1 a1 + b, and translation on A^1.
GaAction ga_quadric_square(unsigned n, const std::string& f_text);
GaAction ga_quadric_split(unsigned n, const std::string& g_text);
GaAction ga_linear_subspace(const std::string& f_text, unsigned n, const std::string& a0_text,
                            const std::string& a1_text);
GaAction ga_translation();
std::vector<GaAction> builtin_ga_actions();

}  // namespace hypercomp
