#include "hypercomp/iso_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "hypercomp/poly_io.hpp"

namespace hypercomp {
namespace {

const Rationals kQ{};

QPoly var(std::size_t n, std::size_t i) { return QPoly::variable(kQ, n, i); }
QPoly cst(std::size_t n, const mpq_class& c) { return QPoly::constant(kQ, n, c); }
QPoly var_pow(std::size_t n, std::size_t i, unsigned e) {
  return QPoly::monomial(kQ, n, Monomial::var(i, e), mpq_class(1));
}

QPoly substitute(const QPoly& p, std::size_t v, const QPoly& value) {
  auto subs = identity_map(kQ, p.nvars());
  subs[v] = value;
  return compose(p, subs);
}

NamedCheck make_check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

std::string clip(std::string s, std::size_t max = 200) {
  if (s.size() > max) s = s.substr(0, max) + " ...";
  return s;
}

std::string laurent_text(const QLaurent& a, const std::vector<std::string>& names) {
  std::string num = to_string(a.numerator(), names);
  if (a.x0_power() == 0) return num;
  return "(" + num + ")/" + names[a.var()] + "^" + std::to_string(a.x0_power());
}

bool all_passed(const std::vector<NamedCheck>& checks) {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

std::vector<std::string> cylinder_var_names(unsigned s) {
  if (s == 0) return {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (unsigned i = 0; i <= s; ++i) out.push_back("x" + std::to_string(i));
  out.insert(out.end(), {"y", "z", "w"});
  return out;
}

DanielewskiData make_data(std::string label, unsigned s, unsigned m, unsigned n, const std::string& P,
                          const std::string& Q, const std::string& A, const std::string& B) {
  DanielewskiData d;
  d.label = std::move(label);
  d.s = s;
  d.m = m;
  d.n = n;
  d.names = cylinder_var_names(s);
  d.P = parse_polynomial(P, d.names);
  d.Q = parse_polynomial(Q, d.names);
  d.A = parse_polynomial(A, d.names);
  d.B = parse_polynomial(B, d.names);
  return d;
}

void check_characteristic(unsigned d, std::uint64_t ch) {
  if (ch != 0 && d % ch == 0)
    throw InvalidArgument("characteristic " + std::to_string(ch) + " divides d = " + std::to_string(d));
}

bool unit_leading_in(const QPoly& p, std::size_t z) {
  unsigned dz = p.degree_in(z);
  if (dz == 0) return false;
  std::size_t count = 0;
  for (const auto& t : p.terms()) {
    if (t.first[z] != dz) continue;
    if (!(t.first == Monomial::var(z, dz))) return false;
    ++count;
  }
  return count == 1;
}

// Rebuilds p with one coefficient shifted by delta.
QPoly perturb(const QPoly& p, std::size_t index, long delta) {
  auto terms = p.terms();
  terms[index].second += delta;
  return QPoly::from_terms(p.domain(), p.nvars(), std::move(terms));
}

std::string monomial_name(const QPoly& p, std::size_t index, const std::vector<std::string>& names) {
  const Monomial& m = p.terms()[index].first;
  return m.is_one() ? std::string("1") : detail::monomial_text(m, names);
}

Chart data_chart(const DanielewskiData& data, const QPoly& relation) {
  Chart ch;
  ch.y = data.y();
  ch.xk = 0;
  ch.a = data.n;
  ch.c = 1;
  ch.R = cst(data.nvars(), 1) - relation;
  return ch;
}

// Polynomial N / x0^k modulo x0^n y = P, rewritten by dividing by P in z.
std::optional<QPoly> rewrite_component(const QPoly& num, unsigned k, const QPoly& P, unsigned n, std::size_t yv,
                                       std::size_t zv, unsigned depth, unsigned& used, std::string& why) {
  if (k == 0) return num;
  if (depth >= 4) {
    why = "iteration bound 4 reached";
    return std::nullopt;
  }
  used = std::max(used, depth + 1);
  const std::size_t N = num.nvars();
  auto dr = divide_monic_in_var(num, P, zv);
  if (!dr.remainder.is_zero() && var_order(dr.remainder, 0) < k) {
    why = "remainder modulo the relation is not divisible by the pole order " + std::to_string(k);
    return std::nullopt;
  }
  QPoly rk = dr.remainder.is_zero() ? QPoly(kQ, N) : divide_by_var_power(dr.remainder, 0, k);
  QPoly y = var(N, yv);
  if (k <= n) return y * var_pow(N, 0, n - k) * dr.quotient + rk;
  QLaurent rest(dr.quotient, k - n, 0);
  auto inner = rewrite_component(rest.numerator(), rest.x0_power(), P, n, yv, zv, depth + 1, used, why);
  if (!inner) return std::nullopt;
  return y * *inner + rk;
}

// Composes Laurent maps: outer(inner). Needs inner[var] to be a unit when the
// outer components have poles.
std::optional<std::vector<QLaurent>> compose_laurent_maps(const std::vector<QLaurent>& outer,
                                                          const std::vector<QLaurent>& inner, std::size_t nvars) {
  std::vector<QLaurent> out;
  for (const auto& o : outer) {
    QLaurent v = compose_laurent(o.numerator(), inner, nvars, 0);
    if (o.x0_power() > 0) {
      auto u = inner[o.var()].unit_exponent();
      if (!u) return std::nullopt;
      mpq_class c = inner[o.var()].numerator().terms()[0].second;
      mpq_class scale = 1;
      for (unsigned i = 0; i < o.x0_power(); ++i) scale /= c;
      v = QLaurent(v.numerator().scale(scale), v.x0_power(), v.var()).shift(-*u * static_cast<long>(o.x0_power()));
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Evaluates a Laurent element over GF(p); the localized variable must be nonzero.
FieldElement eval_laurent(const GFPoly& num, unsigned power, std::size_t v, const std::vector<FieldElement>& pt,
                          const FiniteField& F) {
  FieldElement val = num.evaluate(pt);
  if (power == 0) return val;
  return F.div(val, F.pow(pt[v], power));
}

bool sample_inverse(const std::vector<QLaurent>& outer, const std::vector<QLaurent>& inner, const QPoly& relation,
                    const DanielewskiData& data, std::uint32_t p, unsigned samples, std::mt19937_64& rng,
                    std::string& why) {
  auto F = FiniteField::make_q(p);
  GF dom(F);
  const std::size_t N = data.nvars();
  auto to_gf_l = [&](const std::vector<QLaurent>& m) {
    std::vector<GFPoly> out;
    for (const auto& c : m) out.push_back(to_gf(c.numerator(), F));
    return out;
  };
  auto outer_gf = to_gf_l(outer), inner_gf = to_gf_l(inner);
  GFPoly rel = to_gf(relation, F);
  std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
  for (unsigned k = 0; k < samples; ++k) {
    std::vector<FieldElement> pt(N);
    for (auto& c : pt) c = F->from_int(pick(rng));
    if (pt[0].code == 0) pt[0] = F->one();
    pt[data.y()] = F->zero();
    pt[data.y()] = F->div(rel.evaluate(pt), F->pow(pt[0], data.n));
    std::vector<FieldElement> mid(N), back(N);
    for (std::size_t i = 0; i < N; ++i) mid[i] = eval_laurent(inner_gf[i], inner[i].x0_power(), 0, pt, *F);
    if (mid[0].code == 0) continue;
    for (std::size_t i = 0; i < N; ++i) back[i] = eval_laurent(outer_gf[i], outer[i].x0_power(), 0, mid, *F);
    if (back != pt) {
      why = "sampled point over GF(" + std::to_string(p) + ") is not fixed";
      return false;
    }
  }
  return true;
}

// Identity checks of one direction via the chart of the source equation.
struct DirectionResult {
  std::vector<NamedCheck> checks;
  mpq_class mu, lambda;
  bool applicable = true;
  std::string why;
};

// lambda with v = lambda * e, for nonzero e.
std::optional<mpq_class> scalar_ratio(const QLaurent& v, const QLaurent& e) {
  if (v.is_zero() || v.x0_power() != e.x0_power() || v.size() != e.size()) return std::nullopt;
  mpq_class lam = v.numerator().leading().second / e.numerator().leading().second;
  if (!(v.numerator() == e.numerator().scale(lam))) return std::nullopt;
  return lam;
}

std::optional<mpq_class> scalar_multiple_of_var(const QPoly& v, std::size_t i) {
  if (v.size() != 1) return std::nullopt;
  const auto& [m, c] = v.terms()[0];
  if (!(m == Monomial::var(i))) return std::nullopt;
  return c;
}

DirectionResult chart_direction(const QPoly& src, const QPoly& dst, const std::vector<QPoly>& there,
                                const std::vector<QPoly>& back, const Chart& src_chart, const Chart& dst_chart,
                                const std::string& tag) {
  DirectionResult out;
  const std::size_t N = src.nvars();
  std::vector<QLaurent> L;
  for (const auto& c : there) L.push_back(chart_substitute(c, src_chart, 1));
  QLaurent G = compose_laurent(dst, L, N, src_chart.xk);
  bool scalar = G.x0_power() == 0 && G.numerator().is_constant() && !G.is_zero();
  if (scalar) out.mu = G.numerator().constant_term();
  out.checks.push_back(make_check(tag + ": target equation pulls back to a scalar times a power of the source", scalar,
                                  scalar ? "scalar " + out.mu.get_str() : "chart image is not a nonzero constant"));
  if (!scalar) return out;
  std::optional<long> unit;
  mpq_class unit_coeff;
  bool same_lambda = true;
  std::string detail;
  for (std::size_t i = 0; i < back.size() && same_lambda; ++i) {
    QLaurent q = chart_substitute(back[i], dst_chart, out.mu);
    QLaurent v = compose_laurent(q.numerator(), L, N, src_chart.xk);
    if (q.x0_power() > 0) {
      if (!unit) {
        unit = L[dst_chart.xk].unit_exponent();
        if (!unit) {
          out.applicable = false;
          out.why = "image of the chart variable is not a unit";
          return out;
        }
        unit_coeff = L[dst_chart.xk].numerator().terms()[0].second;
      }
      mpq_class scale = 1;
      for (unsigned e = 0; e < q.x0_power(); ++e) scale /= unit_coeff;
      v = QLaurent(v.numerator().scale(scale), v.x0_power(), v.var()).shift(-*unit * static_cast<long>(q.x0_power()));
    }
    auto lam = scalar_ratio(v, chart_substitute(var(N, i), src_chart, 1));
    if (!lam) {
      same_lambda = false;
      detail = "component " + std::to_string(i) + " is not a multiple of its variable";
    } else if (i == 0) {
      out.lambda = *lam;
    } else if (*lam != out.lambda) {
      same_lambda = false;
      detail = "component " + std::to_string(i) + " has scalar " + lam->get_str();
    }
  }
  if (same_lambda) detail = "scalar " + out.lambda.get_str();
  out.checks.push_back(
      make_check(tag + ": composite is a scalar times a power of the source times each variable", same_lambda, detail));
  return out;
}

DirectionResult direct_direction(const QPoly& src, const QPoly& dst, const std::vector<QPoly>& there,
                                 const std::vector<QPoly>& back, unsigned t_expected, unsigned s_expected,
                                 const std::string& tag) {
  DirectionResult out;
  QPoly G = compose(dst, there);
  auto [gq, t] = divide_out(G, src, t_expected);
  bool scalar = t == t_expected && gq.is_constant() && !gq.is_zero();
  if (scalar) out.mu = gq.constant_term();
  out.checks.push_back(make_check(
      tag + ": target equation pulls back to a scalar times a power of the source", scalar,
      scalar ? "scalar " + out.mu.get_str() + ", exponent " + std::to_string(t)
             : "divided " + std::to_string(t) + " times, quotient of degree " + std::to_string(gq.degree())));
  if (!scalar) return out;
  bool same_lambda = true;
  std::string detail;
  for (std::size_t i = 0; i < back.size() && same_lambda; ++i) {
    QPoly H = compose(back[i], there);
    auto [hq, k] = divide_out(H, src, s_expected);
    auto lam = k == s_expected ? scalar_multiple_of_var(hq, i) : std::nullopt;
    if (!lam) {
      same_lambda = false;
      detail = "component " + std::to_string(i) + ": " + std::to_string(k) + " exact divisions, quotient not a multiple of the variable";
    } else if (i == 0) {
      out.lambda = *lam;
    } else if (*lam != out.lambda) {
      same_lambda = false;
      detail = "component " + std::to_string(i) + " has scalar " + lam->get_str();
    }
  }
  if (same_lambda) detail = "scalar " + out.lambda.get_str() + ", exponent " + std::to_string(s_expected);
  out.checks.push_back(
      make_check(tag + ": composite is a scalar times a power of the source times each variable", same_lambda, detail));
  return out;
}

}  // namespace

QPoly DanielewskiData::f() const {
  const std::size_t N = nvars();
  return QPoly::monomial(kQ, N, Monomial::var(0, n) * Monomial::var(y()), mpq_class(1)) + cst(N, 1) - P;
}

QPoly DanielewskiData::g() const {
  const std::size_t N = nvars();
  return QPoly::monomial(kQ, N, Monomial::var(0, n) * Monomial::var(y()), mpq_class(1)) + cst(N, 1) - Q;
}

DanielewskiData family_z_square(unsigned d, std::uint64_t characteristic) {
  if (d < 4) throw InvalidArgument("the z-square family needs d >= 4 (the shear needs d <= 2(d-2))");
  check_characteristic(d, characteristic);
  const std::string D = std::to_string(d), E = std::to_string(d - 2);
  return make_data("z-square d=" + D, 0, d, d - 1, "1 - z^" + D, "1 - z^" + D + " - " + D + "*x^" + E + "*z^2",
                   "z - x^" + E + "*z^3", "z + x^" + E + "*z^3");
}

DanielewskiData family_x1_square(unsigned d, std::uint64_t characteristic) {
  if (d < 3) throw InvalidArgument("the x1-square family needs d >= 3");
  check_characteristic(d, characteristic);
  const std::string D = std::to_string(d);
  const std::string delta = "(x0^" + std::to_string(d - 2) + "*x1^2)";
  return make_data("x1-square d=" + D, 1, d, d - 1, "1 - z^" + D, "1 - z^" + D + " - " + D + "*" + delta,
                   "z*(1 - " + delta + " + " + delta + "^2)", "z*(1 + " + delta + ")");
}

DanielewskiData identity_data() { return make_data("identity data", 0, 1, 1, "1 - z^2", "1 - z^2", "z", "z"); }

DanielewskiData open_question_data(unsigned variant) {
  // x0 = x and x1 = w of the original pair; the cylinder coordinate is new.
  if (variant == 0) return make_data("open question, A = B = z", 1, 3, 2, "1 - z^3", "1 - z^3 - x0*x1^2", "z", "z");
  if (variant == 1)
    return make_data("open question, x1-square shape", 1, 3, 2, "1 - z^3", "1 - z^3 - x0*x1^2",
                     "z*(1 - x0*x1^2 + x0^2*x1^4)", "z*(1 + x0*x1^2)");
  throw InvalidArgument("open question data has variants 0 and 1");
}

bool HypothesesReport::ok() const { return all_passed(checks); }

HypothesesReport check_cylinder_hypotheses(const DanielewskiData& data) {
  const std::size_t N = data.nvars(), z = data.z(), w = data.w(), y = data.y();
  for (const QPoly* p : {&data.P, &data.Q, &data.A, &data.B}) {
    if (p->nvars() != N) throw DomainMismatch("data polynomials must live in s + 4 variables");
    if (p->involves(y) || p->involves(w)) throw InvalidArgument("P, Q, A, B must not involve y or w");
  }
  if (!unit_leading_in(data.P, z) || !unit_leading_in(data.Q, z))
    throw InvalidArgument("P and Q need a unit leading coefficient in z");
  if (data.m == 0 || data.n == 0) throw InvalidArgument("m and n must be positive");

  HypothesesReport rep;
  const auto& names = data.names;
  const std::string xm = names[0] + "^" + std::to_string(data.m), xn = names[0] + "^" + std::to_string(data.n);
  rep.h1_ab = var(N, z) - substitute(data.A, z, data.B);
  rep.h1_ba = var(N, z) - substitute(data.B, z, data.A);
  QPoly r1 = truncate_mod_x0(rep.h1_ab, data.m), r2 = truncate_mod_x0(rep.h1_ba, data.m);
  rep.checks.push_back(make_check("A(B(z)) = z modulo " + xm, r1.is_zero(),
                                  r1.is_zero() ? "" : "residual " + clip(to_string(r1, names))));
  rep.checks.push_back(make_check("B(A(z)) = z modulo " + xm, r2.is_zero(),
                                  r2.is_zero() ? "" : "residual " + clip(to_string(r2, names))));

  QPoly shift = var_pow(N, 0, data.m) * var(N, w);
  rep.h2_forward = divide_monic_in_var(substitute(data.Q, z, data.A + shift), data.P, z);
  rep.h2_backward = divide_monic_in_var(substitute(data.P, z, data.B + shift), data.Q, z);
  QPoly t1 = truncate_mod_x0(rep.h2_forward.remainder, data.n);
  QPoly t2 = truncate_mod_x0(rep.h2_backward.remainder, data.n);
  rep.checks.push_back(make_check("Q(A + " + xm + "*w) lies in (" + xn + ", P)", t1.is_zero(),
                                  t1.is_zero() ? "" : "remainder mod " + xn + ": " + clip(to_string(t1, names))));
  rep.checks.push_back(make_check("P(B + " + xm + "*w) lies in (" + xn + ", Q)", t2.is_zero(),
                                  t2.is_zero() ? "" : "remainder mod " + xn + ": " + clip(to_string(t2, names))));
  return rep;
}

namespace {

LaurentMaps build_unchecked(const DanielewskiData& data) {
  const std::size_t N = data.nvars(), z = data.z();
  QPoly shift = var_pow(N, 0, data.m) * var(N, data.w());
  LaurentMaps maps;
  auto side = [&](const QPoly& lead, const QPoly& rel, const QPoly& back) {
    std::vector<QLaurent> out;
    for (unsigned i = 0; i <= data.s; ++i) out.emplace_back(var(N, i), 0, 0);
    QPoly zz = lead + shift;
    out.emplace_back(substitute(rel, z, zz), data.n, 0);
    out.emplace_back(zz, 0, 0);
    out.emplace_back(var(N, z) - substitute(back, z, zz), data.m, 0);
    return out;
  };
  maps.forward = side(data.A, data.Q, data.B);
  maps.backward = side(data.B, data.P, data.A);
  return maps;
}

}  // namespace

LaurentMaps build_cylinder_maps(const DanielewskiData& data) {
  if (!check_cylinder_hypotheses(data).ok())
    throw InvalidArgument("hypotheses of the cylinder isomorphism fail for " + data.label);
  return build_unchecked(data);
}

bool InversePairReport::ok() const { return all_passed(checks); }

InversePairReport verify_inverse_pair(const DanielewskiData& data, const LaurentMaps& maps, std::uint64_t seed) {
  InversePairReport rep;
  const std::size_t N = data.nvars();
  bool y_free = true;
  for (const auto* side : {&maps.forward, &maps.backward}) {
    if (side->size() != N) throw DomainMismatch("map has wrong number of components");
    for (const auto& c : *side) y_free = y_free && !c.numerator().involves(data.y());
  }
  const std::string xn = data.names[0] + "^" + std::to_string(data.n);
  if (!y_free) {
    rep.symbolic = false;
    std::mt19937_64 rng(seed);
    std::string why;
    bool ok = true;
    for (std::uint32_t p : {10007u, 10009u, 10037u}) {
      ok = ok && sample_inverse(maps.backward, maps.forward, data.P, data, p, 70, rng, why);
      ok = ok && sample_inverse(maps.forward, maps.backward, data.Q, data, p, 70, rng, why);
    }
    rep.checks.push_back(make_check("maps are mutually inverse at 420 sampled points over 3 primes (evidence)", ok,
                                    ok ? "a component involves y, so only sampled evidence is available" : why));
    return rep;
  }
  rep.checks.push_back(make_check("components avoid y", true));
  auto expected = [&](const QPoly& rel) {
    std::vector<QLaurent> e;
    for (std::size_t i = 0; i < N; ++i) e.emplace_back(var(N, i), 0, 0);
    e[data.y()] = QLaurent(rel, data.n, 0);
    return e;
  };
  auto run = [&](const std::vector<QLaurent>& outer, const std::vector<QLaurent>& inner, const QPoly& rel,
                 const std::string& name) {
    auto got = compose_laurent_maps(outer, inner, N);
    auto want = expected(rel);
    std::string detail;
    bool ok = got.has_value();
    if (!ok) detail = "x0 component of the inner map is not a unit";
    for (std::size_t i = 0; ok && i < N; ++i) {
      if ((*got)[i] != want[i]) {
        ok = false;
        QLaurent diff = (*got)[i] - want[i];
        detail = "component " + data.names[i] + " differs by " + clip(laurent_text(diff, data.names));
      }
    }
    rep.checks.push_back(make_check(name, ok, detail));
  };
  run(maps.backward, maps.forward, data.P, "backward after forward is (x, P/" + xn + ", z, w)");
  run(maps.forward, maps.backward, data.Q, "forward after backward is (x, Q/" + xn + ", z, w)");
  return rep;
}

PolynomializeReport polynomialize_components(const std::vector<QLaurent>& map, const QPoly& relation_P, unsigned n,
                                             std::size_t yvar, std::size_t zvar,
                                             const std::vector<std::string>& names) {
  PolynomializeReport rep;
  rep.map.names = names;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto& c = map[i];
    if (c.var() != 0) throw InvalidArgument("components must be localized at x0");
    unsigned used = 0;
    std::string why;
    auto poly = rewrite_component(c.numerator(), c.x0_power(), relation_P, n, yvar, zvar, 0, used, why);
    rep.depth.push_back(used);
    if (!poly) {
      rep.ok = false;
      if (rep.detail.empty()) rep.detail = "component " + std::to_string(i) + ": " + why;
      rep.map.components.push_back(QPoly(kQ, c.numerator().nvars()));
    } else {
      rep.map.components.push_back(std::move(*poly));
    }
  }
  return rep;
}

PolynomialMap homogenize_map(const PolynomialMap& map, const QPoly& f) {
  auto dd = homogeneous_degree(f);
  if (!dd || *dd == 0) throw InvalidArgument("homogenization needs a homogeneous f of positive degree");
  const unsigned d = *dd;
  std::set<unsigned> residues;
  unsigned top = 0;
  for (const auto& c : map.components) {
    if (c.is_zero()) continue;
    auto r = degree_residues_mod(c, d);
    residues.insert(r.begin(), r.end());
    top = std::max<unsigned>(top, static_cast<unsigned>(c.degree()));
  }
  if (residues.size() != 1) throw InvalidArgument("component degrees are not all congruent modulo deg f");
  std::vector<QPoly> fpow{cst(f.nvars(), 1)};
  PolynomialMap out;
  out.names = map.names;
  out.degree = top;
  out.residue = *residues.begin();
  for (const auto& c : map.components) {
    QPoly acc(kQ, f.nvars());
    for (const auto& [deg, part] : homogeneous_components(c)) {
      unsigned j = (top - deg) / d;
      while (fpow.size() <= j) fpow.push_back(fpow.back() * f);
      acc = acc + part * fpow[j];
    }
    out.components.push_back(std::move(acc));
  }
  return out;
}

std::string route_name(CertRoute r) {
  switch (r) {
    case CertRoute::Auto: return "auto";
    case CertRoute::Direct: return "direct";
    case CertRoute::Chart: return "chart";
  }
  return "?";
}

std::optional<Chart> find_chart(const QPoly& f) {
  std::optional<Chart> best;
  for (std::size_t y = 0; y < f.nvars(); ++y) {
    if (f.degree_in(y) != 1) continue;
    std::vector<QPoly::Term> rest;
    std::optional<QPoly::Term> lin;
    bool single = true;
    for (const auto& t : f.terms()) {
      if (t.first[y] == 0) {
        rest.push_back(t);
      } else if (lin) {
        single = false;
      } else {
        lin = t;
      }
    }
    if (!single || !lin) continue;
    Monomial cof = Monomial::var(y).quotient_of(lin->first);
    std::size_t k = y == 0 ? 1 : 0;
    unsigned a = 0, vars = 0;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (cof[i] == 0) continue;
      ++vars;
      k = i;
      a = cof[i];
    }
    if (vars > 1) continue;
    Chart ch{y, k, a, lin->second, QPoly::from_sorted(kQ, f.nvars(), std::move(rest))};
    if (!best || ch.xk < best->xk) best = std::move(ch);
  }
  return best;
}

QLaurent chart_substitute(const QPoly& p, const Chart& ch, const mpq_class& value) {
  const std::size_t N = p.nvars();
  std::map<unsigned, std::vector<QPoly::Term>> parts;
  for (const auto& t : p.terms()) {
    Monomial m = t.first;
    unsigned e = m[ch.y];
    m.set(ch.y, 0);
    parts[e].emplace_back(m, t.second);
  }
  if (parts.empty()) return QLaurent(QPoly(kQ, N), 0, ch.xk);
  const unsigned J = parts.rbegin()->first;
  QPoly S = (cst(N, value) - ch.R).scale(1 / ch.c);
  QPoly xa = var_pow(N, ch.xk, ch.a);
  auto part = [&](unsigned j) {
    auto it = parts.find(j);
    return it == parts.end() ? QPoly(kQ, N) : QPoly::from_terms(kQ, N, it->second);
  };
  QPoly acc = part(J);
  QPoly xpow = cst(N, 1);
  for (unsigned j = J; j-- > 0;) {
    xpow = xpow * xa;
    acc = acc * S + part(j) * xpow;
  }
  return QLaurent(acc, ch.a * J, ch.xk);
}

bool IsoCertificate::valid() const { return all_passed(checks); }

IsoCertificate certify_projective_iso(const QPoly& f, const QPoly& g, const PolynomialMap& forward,
                                      const PolynomialMap& backward, const CertifyOptions& opts) {
  IsoCertificate cert;
  cert.f = f;
  cert.g = g;
  cert.forward = forward;
  cert.backward = backward;
  const std::size_t N = f.nvars();
  auto df = homogeneous_degree(f), dg = homogeneous_degree(g);
  bool eq_ok = g.nvars() == N && df && dg && *df == *dg && *df > 0;
  cert.checks.push_back(make_check("source and target equations are homogeneous of one positive degree", eq_ok));
  if (!eq_ok) return cert;
  cert.d = *df;
  auto common_degree = [&](PolynomialMap& m) -> std::optional<unsigned> {
    if (m.components.size() != N) return std::nullopt;
    std::optional<unsigned> deg;
    for (const auto& c : m.components) {
      auto h = homogeneous_degree(c);
      if (!h || (deg && *deg != *h)) return std::nullopt;
      deg = h;
    }
    m.degree = deg;
    if (deg) m.residue = *deg % cert.d;
    return deg;
  };
  auto l1 = common_degree(cert.forward), l2 = common_degree(cert.backward);
  cert.checks.push_back(make_check("forward components are homogeneous of one degree", l1.has_value(),
                                   l1 ? "degree " + std::to_string(*l1) : ""));
  cert.checks.push_back(make_check("backward components are homogeneous of one degree", l2.has_value(),
                                   l2 ? "degree " + std::to_string(*l2) : ""));
  if (!l1 || !l2) return cert;
  cert.ell = *l1;
  cert.ell_prime = *l2;
  const unsigned long prod = static_cast<unsigned long>(cert.ell) * cert.ell_prime;
  bool rel = prod >= 1 && (prod - 1) % cert.d == 0;
  if (rel) cert.s = static_cast<unsigned>((prod - 1) / cert.d);
  cert.checks.push_back(make_check("degree relation d*s = l*l' - 1", rel,
                                   "d=" + std::to_string(cert.d) + ", l=" + std::to_string(cert.ell) + ", l'=" +
                                       std::to_string(cert.ell_prime) + (rel ? ", s=" + std::to_string(cert.s) : "")));
  cert.checks.push_back(make_check("l is invertible modulo d", std::gcd(cert.ell, cert.d) == 1));
  if (!rel) return cert;
  cert.t = cert.ell;
  cert.t_prime = cert.ell_prime;

  auto cf = find_chart(f), cg = find_chart(g);
  CertRoute route = opts.route;
  if (route == CertRoute::Auto) route = (cf && cg) ? CertRoute::Chart : CertRoute::Direct;
  if (route == CertRoute::Chart && !(cf && cg)) {
    cert.checks.push_back(make_check("chart route applies", false, "an equation is not linear in a variable with a monomial coefficient"));
    return cert;
  }
  cert.route = route;
  DirectionResult fw, bw;
  if (route == CertRoute::Chart) {
    fw = chart_direction(f, g, cert.forward.components, cert.backward.components, *cf, *cg, "forward");
    if (fw.applicable && all_passed(fw.checks))
      bw = chart_direction(g, f, cert.backward.components, cert.forward.components, *cg, *cf, "backward");
    if ((!fw.applicable || !bw.applicable) && opts.route == CertRoute::Auto) {
      route = cert.route = CertRoute::Direct;
    } else if (!fw.applicable || !bw.applicable) {
      cert.checks.push_back(make_check("chart route applies", false, fw.applicable ? bw.why : fw.why));
      return cert;
    }
  }
  if (route == CertRoute::Direct) {
    fw = direct_direction(f, g, cert.forward.components, cert.backward.components, cert.t, cert.s, "forward");
    if (all_passed(fw.checks))
      bw = direct_direction(g, f, cert.backward.components, cert.forward.components, cert.t_prime, cert.s, "backward");
  }
  cert.checks.insert(cert.checks.end(), fw.checks.begin(), fw.checks.end());
  cert.checks.insert(cert.checks.end(), bw.checks.begin(), bw.checks.end());
  cert.mu = fw.mu;
  cert.lambda = fw.lambda;
  cert.mu_prime = bw.mu;
  cert.lambda_prime = bw.lambda;
  return cert;
}

IsoCertificate stabilize(const IsoCertificate& cert, std::size_t target_nvars, const CertifyOptions& opts) {
  if (!cert.valid()) throw InvalidArgument("stabilization needs a valid certificate");
  const std::size_t N = cert.f.nvars();
  if (target_nvars <= N) throw InvalidArgument("stabilization target must add variables");
  if (target_nvars > kMaxVars) throw InvalidArgument("at most 16 variables are supported");
  if (cert.ell % cert.d != 1 % cert.d || cert.ell_prime % cert.d != 1 % cert.d)
    throw InvalidArgument("stabilization needs l = l' = 1 modulo d");
  const unsigned r = (cert.ell - 1) / cert.d, rp = (cert.ell_prime - 1) / cert.d;
  QPoly f = cert.f.with_nvars(target_nvars), g = cert.g.with_nvars(target_nvars);
  mpq_class c = cert.lambda;
  for (unsigned i = 0; i < rp; ++i) c /= cert.mu;
  QPoly fr = f.pow(r), gr = g.pow(rp).scale(c);
  PolynomialMap fw, bw;
  fw.names = cert.forward.names;
  for (std::size_t j = fw.names.size(); j < target_nvars; ++j) fw.names.push_back("v" + std::to_string(j));
  bw.names = fw.names;
  for (const auto& comp : cert.forward.components) fw.components.push_back(comp.with_nvars(target_nvars));
  for (const auto& comp : cert.backward.components) bw.components.push_back(comp.with_nvars(target_nvars));
  for (std::size_t j = N; j < target_nvars; ++j) {
    fw.components.push_back(var(target_nvars, j) * fr);
    bw.components.push_back(var(target_nvars, j) * gr);
  }
  return certify_projective_iso(f, g, fw, bw, opts);
}

std::vector<NamedCheck> check_stored_maps(const DanielewskiData& data, const LaurentMaps& laurent,
                                          const PolynomialMap& forward, const PolynomialMap& backward) {
  std::vector<NamedCheck> out;
  auto run = [&](const PolynomialMap& m, const std::vector<QLaurent>& want, const QPoly& rel, const std::string& name) {
    Chart ch = data_chart(data, rel);
    bool ok = m.components.size() == want.size();
    std::string detail = ok ? "" : "wrong component count";
    for (std::size_t i = 0; ok && i < want.size(); ++i) {
      QLaurent got = chart_substitute(m.components[i], ch, 1);
      if (got != want[i]) {
        ok = false;
        detail = "component " + std::to_string(i) + " differs";
      }
    }
    out.push_back(make_check(name, ok, detail));
  };
  const std::string xn = data.names[0] + "^" + std::to_string(data.n);
  run(forward, laurent.forward, data.P, "forward polynomials restrict to the Laurent map under y = P/" + xn);
  if (out.back().passed)
    run(backward, laurent.backward, data.Q, "backward polynomials restrict to the Laurent map under y = Q/" + xn);
  return out;
}

bool FamilyResult::ok() const { return all_passed(checks); }

FamilyResult run_family(const DanielewskiData& data, const FamilyOptions& opts) {
  FamilyResult res;
  res.data = data;
  auto add = [&](const std::vector<NamedCheck>& cs) { res.checks.insert(res.checks.end(), cs.begin(), cs.end()); };
  res.hypotheses = check_cylinder_hypotheses(data);
  add(res.hypotheses.checks);
  if (!res.hypotheses.ok()) return res;
  res.laurent = build_unchecked(data);
  res.inverse = verify_inverse_pair(data, res.laurent, opts.seed);
  add(res.inverse.checks);
  if (!res.inverse.ok()) return res;

  res.forward_poly = polynomialize_components(res.laurent.forward, data.P, data.n, data.y(), data.z(), data.names);
  res.backward_poly = polynomialize_components(res.laurent.backward, data.Q, data.n, data.y(), data.z(), data.names);
  auto depth_text = [](const PolynomializeReport& r) {
    return "max depth " + std::to_string(r.depth.empty() ? 0 : *std::max_element(r.depth.begin(), r.depth.end()));
  };
  res.checks.push_back(make_check("forward components rewrite to polynomials", res.forward_poly.ok,
                                  res.forward_poly.ok ? depth_text(res.forward_poly) : res.forward_poly.detail));
  res.checks.push_back(make_check("backward components rewrite to polynomials", res.backward_poly.ok,
                                  res.backward_poly.ok ? depth_text(res.backward_poly) : res.backward_poly.detail));
  if (!res.forward_poly.ok || !res.backward_poly.ok) return res;
  add(check_stored_maps(data, res.laurent, res.forward_poly.map, res.backward_poly.map));
  if (!res.ok()) return res;

  const QPoly f = data.f(), g = data.g();
  auto d = homogeneous_degree(f);
  auto dg = homogeneous_degree(g);
  bool homog = d && dg && *d == *dg;
  res.checks.push_back(make_check("f and g are homogeneous of one degree", homog));
  if (!homog) return res;
  auto residues = [&](const PolynomialMap& m) {
    std::set<unsigned> r;
    for (const auto& c : m.components) {
      auto cr = degree_residues_mod(c, *d);
      r.insert(cr.begin(), cr.end());
    }
    return r;
  };
  auto rf = residues(res.forward_poly.map), rb = residues(res.backward_poly.map);
  bool res_ok = rf == std::set<unsigned>{1 % *d} && rb == rf;
  res.checks.push_back(make_check("all monomial degrees are 1 modulo d", res_ok, "d=" + std::to_string(*d)));
  if (!res_ok) return res;
  PolynomialMap fw = homogenize_map(res.forward_poly.map, f);
  PolynomialMap bw = homogenize_map(res.backward_poly.map, g);

  CertifyOptions co;
  co.route = opts.route;
  res.certificate = certify_projective_iso(f, g, fw, bw, co);
  add(res.certificate->checks);
  if (!res.certificate->valid()) return res;
  if (opts.stabilize_to_nvars && *opts.stabilize_to_nvars > f.nvars()) {
    res.stabilized = stabilize(*res.certificate, *opts.stabilize_to_nvars, co);
    for (auto c : res.stabilized->checks) {
      c.name = "stabilized to P^" + std::to_string(*opts.stabilize_to_nvars - 1) + ": " + c.name;
      res.checks.push_back(std::move(c));
    }
  }
  return res;
}

std::vector<NamedCheck> reverify_instance(const DanielewskiData& data, const PolynomialMap& forward,
                                          const PolynomialMap& backward, CertRoute route) {
  std::vector<NamedCheck> out;
  try {
    auto hyp = check_cylinder_hypotheses(data);
    out = hyp.checks;
  } catch (const InvalidArgument& e) {
    out.push_back(make_check("data is well formed", false, e.what()));
    return out;
  }
  if (!all_passed(out)) return out;
  LaurentMaps maps = build_unchecked(data);
  auto inv = verify_inverse_pair(data, maps);
  out.insert(out.end(), inv.checks.begin(), inv.checks.end());
  if (!inv.ok()) return out;
  auto stored = check_stored_maps(data, maps, forward, backward);
  out.insert(out.end(), stored.begin(), stored.end());
  if (!all_passed(stored)) return out;
  CertifyOptions co;
  co.route = route;
  auto cert = certify_projective_iso(data.f(), data.g(), forward, backward, co);
  out.insert(out.end(), cert.checks.begin(), cert.checks.end());
  return out;
}

namespace {

MutationOutcome summarize(MutationOutcome m, const std::vector<NamedCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) {
      m.caught = true;
      m.failed_check = c.name;
      break;
    }
  }
  return m;
}

long draw_delta(std::mt19937_64& rng) {
  static const long kDeltas[] = {-3, -2, -1, 1, 2, 3};
  return kDeltas[std::uniform_int_distribution<int>(0, 5)(rng)];
}

}  // namespace

std::vector<MutationOutcome> mutation_test(const FamilyResult& verified, unsigned trials, std::uint64_t seed,
                                           CertRoute route) {
  if (!verified.ok() || !verified.certificate) throw InvalidArgument("mutation testing needs a verified instance");
  const auto& cert = *verified.certificate;
  const auto& names = verified.data.names;
  std::mt19937_64 rng(seed);
  const std::size_t N = verified.data.nvars();
  const std::size_t targets = 4 + 2 * N;
  std::vector<MutationOutcome> out;
  for (unsigned t = 0; t < trials; ++t) {
    DanielewskiData data = verified.data;
    PolynomialMap fw = cert.forward, bw = cert.backward;
    std::size_t which = std::uniform_int_distribution<std::size_t>(0, targets - 1)(rng);
    QPoly* poly;
    std::string label;
    if (which < 4) {
      QPoly* slots[] = {&data.P, &data.Q, &data.A, &data.B};
      poly = slots[which];
      label = std::string(1, "PQAB"[which]);
    } else if (which < 4 + N) {
      poly = &fw.components[which - 4];
      label = "Phi_" + std::to_string(which - 4);
    } else {
      poly = &bw.components[which - 4 - N];
      label = "Psi_" + std::to_string(which - 4 - N);
    }
    std::size_t idx = std::uniform_int_distribution<std::size_t>(0, poly->size() - 1)(rng);
    long delta = draw_delta(rng);
    MutationOutcome m;
    m.target = label;
    m.change = "coefficient of " + monomial_name(*poly, idx, names) + " shifted by " + std::to_string(delta);
    *poly = perturb(*poly, idx, delta);
    out.push_back(summarize(std::move(m), reverify_instance(data, fw, bw, route)));
  }
  return out;
}

std::vector<MutationOutcome> mutation_test_maps(const IsoCertificate& cert, unsigned trials, std::uint64_t seed,
                                                bool tied, CertRoute route) {
  if (!cert.valid()) throw InvalidArgument("mutation testing needs a valid certificate");
  std::mt19937_64 rng(seed);
  const std::size_t N = cert.forward.components.size();
  const std::size_t targets = tied ? N : 2 * N;
  auto names = cert.forward.names.empty() ? default_var_names(N) : cert.forward.names;
  CertifyOptions co;
  co.route = route;
  std::vector<MutationOutcome> out;
  for (unsigned t = 0; t < trials; ++t) {
    PolynomialMap fw = cert.forward, bw = cert.backward;
    std::size_t which = std::uniform_int_distribution<std::size_t>(0, targets - 1)(rng);
    QPoly& poly = which < N ? fw.components[which] : bw.components[which - N];
    std::size_t idx = std::uniform_int_distribution<std::size_t>(0, poly.size() - 1)(rng);
    long delta = draw_delta(rng);
    MutationOutcome m;
    m.target = (which < N ? "Phi_" : "Psi_") + std::to_string(which % N);
    m.change = "coefficient of " + monomial_name(poly, idx, names) + " shifted by " + std::to_string(delta);
    poly = perturb(poly, idx, delta);
    if (tied) bw = fw;
    out.push_back(summarize(std::move(m), certify_projective_iso(cert.f, cert.g, fw, bw, co).checks));
  }
  return out;
}

QPoly nodal_cubic() { return parse_polynomial("x*y*z + x^3 + y^3", {"x", "y", "z"}); }

PolynomialMap nodal_cubic_involution() {
  const std::vector<std::string> names{"x", "y", "z"};
  const std::string f = "(x*y*z + x^3 + y^3)";
  PolynomialMap m;
  m.names = names;
  m.components = {
      parse_polynomial("(-x^4*z + 2*x^3*y^2 - 2*x^2*y*z^2 + 2*x*y^3*z + y^5 - y^2*z^3)*" + f, names),
      parse_polynomial("(x^2 + y*z)*" + f + "^2", names),
      parse_polynomial("x^7*y - x^6*z^2 + 6*x^5*y^2*z - x^4*y^4 - 3*x^4*y*z^3 + 9*x^3*y^3*z^2"
                       " + x^2*y^5*z - 3*x^2*y^2*z^4 - x*y^7 + 4*x*y^4*z^3 + 2*y^6*z^2 - y^3*z^5",
                       names),
  };
  m.degree = 8;
  m.residue = 2;
  return m;
}

EvaluationCheck evaluation_cross_check(const IsoCertificate& cert, std::uint32_t p, std::uint64_t max_points) {
  EvaluationCheck out;
  out.p = p;
  if (!cert.valid()) throw InvalidArgument("evaluation check needs a valid certificate");
  if (!is_prime(p)) throw InvalidArgument("evaluation check needs a prime");
  if (cert.d % p == 0) throw InvalidArgument("p divides the degree");
  auto F = FiniteField::make_q(p);
  const std::size_t N = cert.f.nvars();
  GFPoly f = to_gf(cert.f, F), g = to_gf(cert.g, F);
  std::vector<GFPoly> fw, bw;
  for (const auto& c : cert.forward.components) fw.push_back(to_gf(c, F));
  for (const auto& c : cert.backward.components) bw.push_back(to_gf(c, F));
  FieldElement mu = embed(*F, cert.mu), lambda = embed(*F, cert.lambda);
  std::vector<FieldElement> pt(N, F->zero()), img(N), back(N);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < N; ++i) {
    total *= p;
    if (total > 100'000'000ULL) throw ResourceLimit("evaluation check enumeration too large");
  }
  for (std::uint64_t code = 0; code < total && out.points < max_points; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < N; ++i, c /= p) pt[i] = FieldElement{static_cast<std::uint32_t>(c % p)};
    if (f.evaluate(pt) != F->one()) continue;
    ++out.points;
    for (std::size_t i = 0; i < N; ++i) img[i] = fw[i].evaluate(pt);
    if (g.evaluate(img) != mu) {
      out.ok = false;
      out.detail = "a point of f = 1 does not map into g = mu";
      return out;
    }
    for (std::size_t i = 0; i < N; ++i) back[i] = bw[i].evaluate(img);
    for (std::size_t i = 0; i < N; ++i) {
      if (back[i] != F->mul(lambda, pt[i])) {
        out.ok = false;
        out.detail = "backward after forward does not return lambda times the point";
        return out;
      }
    }
  }
  out.detail = std::to_string(out.points) + " points of f = 1 checked";
  return out;
}

// ---------------------------------------------------------------------------
// Rational functions and additive group actions.

RationalFunction RationalFunction::of(QPoly p) {
  const std::size_t n = p.nvars();
  return {std::move(p), cst(n, 1)};
}

namespace {

RationalFunction tidy(RationalFunction r) {
  if (r.num.is_zero()) return {r.num, cst(r.num.nvars(), 1)};
  if (r.den.is_constant()) {
    mpq_class c = r.den.constant_term();
    return {r.num.scale(1 / c), cst(r.num.nvars(), 1)};
  }
  if (auto q = divide_exact(r.num, r.den)) return {std::move(*q), cst(r.num.nvars(), 1)};
  return r;
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return tidy({a.num + b.num, a.den});
  return tidy({a.num * b.den + b.num * a.den, a.den * b.den});
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return tidy({a.num * b.num, a.den * b.den});
}

bool RationalFunction::equals(const RationalFunction& o) const { return num * o.den == o.num * den; }

RationalFunction compose_rational(const QPoly& target, const std::vector<RationalFunction>& subs) {
  if (subs.empty()) throw InvalidArgument("compose needs substitutions");
  const std::size_t n = subs.front().num.nvars();
  return compose_generic(
      target, subs, [&](const mpq_class& c) { return RationalFunction::of(cst(n, c)); },
      RationalFunction::of(QPoly(kQ, n)));
}

RationalFunction compose_rational(const RationalFunction& target, const std::vector<RationalFunction>& subs) {
  RationalFunction a = compose_rational(target.num, subs), b = compose_rational(target.den, subs);
  if (b.num.is_zero()) throw InvalidArgument("denominator vanishes after substitution");
  return tidy({a.num * b.den, a.den * b.num});
}

bool GaReport::ok() const { return all_passed(checks); }

GaReport verify_ga_action(const GaAction& action) {
  GaReport rep;
  rep.name = action.name;
  const std::size_t n = action.n, N = n + 2, t = n, t2 = n + 1;
  if (action.components.size() != n) throw InvalidArgument("action needs one component per coordinate");
  auto rv = [&](std::size_t i) { return RationalFunction::of(var(N, i)); };
  std::vector<RationalFunction> ident;
  for (std::size_t i = 0; i < N; ++i) ident.push_back(rv(i));

  auto at_zero = ident;
  at_zero[t] = RationalFunction::of(QPoly(kQ, N));
  bool zero_ok = true;
  for (std::size_t i = 0; i < n; ++i) zero_ok = zero_ok && compose_rational(action.components[i], at_zero).equals(rv(i));
  rep.checks.push_back(make_check("rho(0, x) = x", zero_ok));

  // rho(x, t2) as a substitution for the coordinates.
  auto with_t2 = ident;
  with_t2[t] = rv(t2);
  std::vector<RationalFunction> inner = ident;
  for (std::size_t i = 0; i < n; ++i) inner[i] = compose_rational(action.components[i], with_t2);
  auto sum = ident;
  sum[t] = RationalFunction::of(var(N, t) + var(N, t2));
  bool cocycle = true;
  for (std::size_t i = 0; i < n; ++i)
    cocycle = cocycle && compose_rational(action.components[i], inner).equals(compose_rational(action.components[i], sum));
  rep.checks.push_back(make_check("rho(t, rho(t2, x)) = rho(t + t2, x)", cocycle));

  std::vector<RationalFunction> moved = ident;
  for (std::size_t i = 0; i < n; ++i) moved[i] = action.components[i];
  for (std::size_t k = 0; k < action.invariants.size(); ++k) {
    const auto& inv = action.invariants[k];
    bool ok = compose_rational(inv, moved).equals(inv);
    std::string text = to_string(inv.num, action.names);
    if (!inv.den.is_constant()) text = "(" + text + ")/(" + to_string(inv.den, action.names) + ")";
    rep.checks.push_back(make_check("invariance of " + text, ok));
  }

  if (action.twist_invariant) {
    const auto& u = action.invariants.at(*action.twist_invariant);
    auto twist = [&](const RationalFunction& param) {
      auto subs = ident;
      subs[t] = param;
      std::vector<RationalFunction> out = ident;
      for (std::size_t i = 0; i < n; ++i) out[i] = compose_rational(action.components[i], subs);
      return out;
    };
    RationalFunction minus_u{-u.num, u.den};
    auto inverse = twist(minus_u);
    // rho(u(y), y) at y = rho(-u(x), x).
    auto outer_param = compose_rational(u, inverse);
    auto subs = inverse;
    subs[t] = outer_param;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && compose_rational(action.components[i], subs).equals(rv(i));
    rep.checks.push_back(make_check("x -> rho(u(x), x) is inverted by x -> rho(-u(x), x)", ok));
  }
  return rep;
}

namespace {

GaAction action_frame(std::string name, std::size_t n) {
  GaAction a;
  a.name = std::move(name);
  a.n = n;
  a.names = default_var_names(n);
  a.names.push_back("t");
  a.names.push_back("t2");
  return a;
}

RationalFunction parse_rf(const std::string& text, const GaAction& a) {
  return RationalFunction::of(parse_polynomial(text, a.names));
}

void add_quadric_invariants(GaAction& a, const std::string& quadric) {
  QPoly q = parse_polynomial(quadric, a.names);
  a.invariants.push_back(RationalFunction::of(q));
  a.invariants.push_back({parse_polynomial("x0^2", a.names), q});
  a.twist_invariant = 1;
}

}  // namespace

GaAction ga_quadric_square(unsigned n, const std::string& f_text) {
  if (n < 2) throw InvalidArgument("the square-term action needs n >= 2");
  GaAction a = action_frame("quadric x0*x1 + x2^2 + (" + f_text + ") in P^" + std::to_string(n), n + 1);
  QPoly f = parse_polynomial(f_text, a.names);
  for (std::size_t i = 0; i < 3; ++i)
    if (f.involves(i)) throw InvalidArgument("f must only involve x3..xn");
  a.components = {parse_rf("x0", a), parse_rf("x1 - 2*t*x2 - t^2*x0", a), parse_rf("x2 + t*x0", a)};
  for (unsigned i = 3; i <= n; ++i) a.components.push_back(parse_rf("x" + std::to_string(i), a));
  add_quadric_invariants(a, "x0*x1 + x2^2 + " + f_text);
  return a;
}

GaAction ga_quadric_split(unsigned n, const std::string& g_text) {
  if (n < 3) throw InvalidArgument("the split action needs n >= 3");
  GaAction a = action_frame("quadric x0*x1 + x2*x3 + (" + g_text + ") in P^" + std::to_string(n), n + 1);
  QPoly g = parse_polynomial(g_text, a.names);
  for (std::size_t i = 0; i < 4; ++i)
    if (g.involves(i)) throw InvalidArgument("g must only involve x4..xn");
  a.components = {parse_rf("x0", a), parse_rf("x1 - t*x3", a), parse_rf("x2 + t*x0", a)};
  for (unsigned i = 3; i <= n; ++i) a.components.push_back(parse_rf("x" + std::to_string(i), a));
  add_quadric_invariants(a, "x0*x1 + x2*x3 + " + g_text);
  return a;
}

GaAction ga_linear_subspace(const std::string& f_text, unsigned n, const std::string& a0_text,
                            const std::string& a1_text) {
  if (n < 3) throw InvalidArgument("the linear-subspace action needs n >= 3");
  GaAction a = action_frame("f = " + f_text + " in P^" + std::to_string(n), n + 1);
  const std::size_t N = n + 3;
  QPoly f = parse_polynomial(f_text, a.names), a0 = parse_polynomial(a0_text, a.names),
        a1 = parse_polynomial(a1_text, a.names);
  QPoly b = f - var(N, 0) * a0 - var(N, 1) * a1;
  for (const QPoly* p : {&a0, &a1, &b})
    if (p->involves(0) || p->involves(1) || p->involves(n + 1) || p->involves(n + 2))
      throw InvalidArgument("f must be x0*a0 + x1*a1 + b with a0, a1, b free of x0, x1");
  QPoly xn2 = var_pow(N, n, 2), tt = var(N, n + 1);
  a.components.push_back({var(N, 0) * f + tt * a1 * xn2, f});
  a.components.push_back({var(N, 1) * f - tt * a0 * xn2, f});
  for (unsigned i = 2; i <= n; ++i) a.components.push_back(RationalFunction::of(var(N, i)));
  a.invariants.push_back(RationalFunction::of(f));
  a.invariants.push_back({xn2, f});
  return a;
}

GaAction ga_translation() {
  GaAction a = action_frame("translation on A^1", 1);
  a.components = {parse_rf("x0 + t", a)};
  return a;
}

std::vector<GaAction> builtin_ga_actions() {
  return {ga_quadric_square(4, "x3*x4"),
          ga_quadric_square(2, "0"),
          ga_quadric_split(5, "x4*x5 + x5^2"),
          ga_quadric_split(3, "0"),
          ga_linear_subspace("x0*x2^2 + x1*x3^2", 3, "x2^2", "x3^2"),
          ga_linear_subspace("x0*x2*x3 + x1*x3^2 + x2^3", 3, "x2*x3", "x3^2"),
          ga_translation()};
}

}  // namespace hypercomp
