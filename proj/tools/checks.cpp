#include "checks.hpp"

#include <map>
#include <sstream>

#include "hypercomp/poly_io.hpp"

namespace hypercomp::cli {

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

void add_named(Report& r, const std::string& topic, const std::vector<NamedCheck>& checks, const std::string& prefix) {
  for (const auto& c : checks) r.add(topic, prefix + c.name, c.passed, c.detail);
}

std::vector<QuadricCountCheck> check_quadric_counts(Report& r, unsigned nmax, const std::vector<std::uint64_t>& qs,
                                                    bool include_y0, const CountOptions& opts) {
  std::vector<FieldSpec> fields;
  for (auto q : qs) fields.push_back(parse_field_spec(std::to_string(q)));
  std::vector<QuadricCountCheck> all;
  for (const auto& form : normal_forms_up_to(nmax, include_y0)) {
    auto checks = verify_against_bruteforce(form, fields, opts);
    std::string bad;
    for (const auto& c : checks) {
      if (!c.match())
        bad += " q=" + std::to_string(c.q) + " observed " + std::to_string(c.observed.total) + "/" +
               std::to_string(c.observed.regular) + "/" + std::to_string(c.observed.singular) + " predicted " +
               std::to_string(c.predicted.total) + "/" + std::to_string(c.predicted.regular) + "/" +
               std::to_string(c.predicted.singular) + ";";
      all.push_back(c);
    }
    r.add(kTopicQuadricCounts, form.name() + " total/regular/singular over q in {" + join(qs) + "}", bad.empty(),
          bad.empty() ? "" : bad.substr(1));
  }
  return all;
}

void check_quadric_separation(Report& r, const std::vector<QuadricCountCheck>& counts) {
  std::map<std::uint64_t, std::vector<const QuadricCountCheck*>> by_q;
  for (const auto& c : counts)
    if (c.form.kind == QuadricKind::X || c.form.m > 0) by_q[c.q].push_back(&c);
  for (const auto& [q, list] : by_q) {
    if (q % 2 == 1) {
      std::map<std::uint64_t, std::string> seen;
      std::string clash;
      for (const auto* c : list) {
        auto [it, fresh] = seen.emplace(c->observed.regular, c->form.name());
        if (!fresh) clash += " " + c->form.name() + " = " + it->second + ";";
      }
      r.add(kTopicQuadricSeparation, "q=" + std::to_string(q) + ": regular counts pairwise distinct", clash.empty(),
            clash.empty() ? std::to_string(list.size()) + " forms" : clash.substr(1));
    } else {
      std::string bad;
      for (const auto* c : list) {
        bool ok = c->form.kind == QuadricKind::X ? c->observed.singular == 0 : c->observed.singular > 0;
        if (!ok) bad += " " + c->form.name() + ";";
      }
      r.add(kTopicQuadricSeparation, "q=" + std::to_string(q) + ": singular points exactly on Y forms", bad.empty(),
            bad.empty() ? std::to_string(list.size()) + " forms" : bad.substr(1));
    }
  }
}

FamilyRun check_family(Report& r, const DanielewskiData& data, CertRoute route, unsigned mutations, std::uint64_t seed,
                       std::optional<std::size_t> stabilize_to, std::optional<std::uint32_t> eval_prime,
                       std::uint64_t eval_cap) {
  FamilyRun run;
  FamilyOptions opts;
  opts.route = route;
  opts.seed = seed;
  opts.stabilize_to_nvars = stabilize_to;
  FamilyResult res = run_family(data, opts);
  const std::string prefix = data.label + ": ";
  // Stabilized checks carry their own prefix and belong to their own topic.
  std::vector<NamedCheck> main, stab;
  for (const auto& c : res.checks) (c.name.rfind("stabilized", 0) == 0 ? stab : main).push_back(c);
  add_named(r, kTopicFamilies, main, prefix);
  add_named(r, kTopicStabilization, stab, prefix);
  if (res.certificate) {
    const auto& c = *res.certificate;
    r.add(kTopicFamilies, prefix + "certificate emitted", c.valid(),
          "l=" + std::to_string(c.ell) + ", l'=" + std::to_string(c.ell_prime) + ", s=" + std::to_string(c.s) +
              ", mu=" + c.mu.get_str() + ", lambda=" + c.lambda.get_str() + ", route " + route_name(c.route));
    if (eval_prime) {
      auto e = evaluation_cross_check(c, *eval_prime, eval_cap);
      r.add(kTopicFamilies, prefix + "evaluation over GF(" + std::to_string(*eval_prime) + ")", e.ok,
            std::to_string(e.points) + " points" + (e.detail.empty() ? "" : ", " + e.detail));
    }
    if (mutations > 0 && res.ok()) {
      auto outcomes = mutation_test(res, mutations, seed, route);
      std::string missed;
      for (const auto& m : outcomes) {
        ++run.mutants;
        if (m.caught)
          ++run.caught;
        else
          missed += " " + m.target + " " + m.change + ";";
      }
      r.add(kTopicMutation, prefix + std::to_string(mutations) + " single-coefficient mutants rejected",
            missed.empty(), std::to_string(run.caught) + "/" + std::to_string(run.mutants) + " caught" + missed);
    }
  } else {
    r.add(kTopicFamilies, prefix + "certificate emitted", false, "pipeline stopped before certification");
  }
  run.result = std::move(res);
  return run;
}

void check_open_question(Report& r, unsigned variant) {
  auto data = open_question_data(variant);
  auto hyp = check_cylinder_hypotheses(data);
  add_named(r, kTopicFamilies, hyp.checks, data.label + ": ");
  r.note("The data for x^2 y + z^3 against x^2 y + z^3 + x w^2 is a naive attempt; whether the complements are "
         "isomorphic is open and nothing is concluded from these checks.");
}

std::optional<IsoCertificate> check_involution(Report& r, CertRoute route, std::optional<std::uint32_t> eval_prime,
                                               std::uint64_t eval_cap) {
  CertifyOptions opts;
  opts.route = route;
  auto phi = nodal_cubic_involution();
  auto cert = certify_projective_iso(nodal_cubic(), nodal_cubic(), phi, phi, opts);
  add_named(r, kTopicInvolution, cert.checks);
  bool exponent = cert.ell == 8 && cert.s == 21 && 3 * cert.s + 1 == 64;
  r.add(kTopicInvolution, "Phi_i(Phi) = lambda * f^21 * x_i with composites of degree 64", exponent && cert.valid(),
        "s=" + std::to_string(cert.s) + ", lambda=" + cert.lambda.get_str() + ", mu=" + cert.mu.get_str());
  r.add(kTopicInvolution, "the map is its own inverse up to scalars", cert.lambda == cert.lambda_prime);
  if (eval_prime) {
    auto e = evaluation_cross_check(cert, *eval_prime, eval_cap);
    r.add(kTopicInvolution, "evaluation over GF(" + std::to_string(*eval_prime) + ")", e.ok,
          std::to_string(e.points) + " points" + (e.detail.empty() ? "" : ", " + e.detail));
  }
  if (!cert.valid()) return std::nullopt;
  return cert;
}

void check_multiplicities(Report& r, const std::vector<std::uint32_t>& primes, const CountOptions& opts) {
  const std::vector<std::string> xyzw{"x", "y", "z", "w"};
  for (unsigned d : {4u, 5u}) {
    const std::string f = "x^" + std::to_string(d - 1) + "*y + z^" + std::to_string(d);
    auto m = multiplicity_at(parse_polynomial(f, xyzw), true, std::vector<mpq_class>{0, 0, 0, 1});
    r.add(kTopicMultiplicity, "V(" + f + ") has multiplicity d at [0:0:0:1]", m.multiplicity == d,
          "multiplicity " + std::to_string(m.multiplicity));
  }
  const std::vector<std::string> names{"x0", "x1", "y", "z"};
  for (unsigned d : {3u, 4u}) {
    const std::string D = std::to_string(d);
    const std::string g =
        "x0^" + std::to_string(d - 1) + "*y + z^" + D + " + " + D + "*x0^" + std::to_string(d - 2) + "*x1^2";
    QPoly gp = parse_polynomial(g, names);
    auto scan = multiplicity_along_line(gp, {0, 0, 1, 0}, {0, 1, 0, 0});
    r.add(kTopicMultiplicity, "V(" + g + "), line x0 = z = 0 over QQ: no point of multiplicity " + D,
          scan.max_multiplicity < d,
          "generic " + std::to_string(scan.generic_multiplicity) + ", max " + std::to_string(scan.max_multiplicity) +
              (scan.limitation.empty() ? "" : "; " + scan.limitation));
    for (auto p : primes) {
      if (d % p == 0) continue;
      auto F = FiniteField::make_q(p);
      auto s = multiplicity_along_line(to_gf(gp, F), {F->zero(), F->zero(), F->one(), F->zero()},
                                       {F->zero(), F->one(), F->zero(), F->zero()});
      r.add(kTopicMultiplicity,
            "V(" + g + "), line x0 = z = 0 over GF(" + std::to_string(p) + "): no point of multiplicity " + D,
            s.max_multiplicity < d, "max " + std::to_string(s.max_multiplicity));
    }
  }
  struct Locus {
    std::string poly;
    std::vector<std::string> vars;
  };
  const std::vector<Locus> loci{
      {"x^3*y + z^4", xyzw},
      {"x^4*y + z^5", xyzw},
      {"x^3*y + z^4 + 4*x^2*z^2", xyzw},
      {"x0^2*y + z^3 + 3*x0*x1^2", {"x0", "x1", "y", "z", "w"}},
      {"x0^3*y + z^4 + 4*x0^2*x1^2", {"x0", "x1", "y", "z", "w"}},
      {"x0^3 + x1^3 + x2^3", {"x0", "x1", "x2", "x3", "x4"}},
  };
  auto F5 = FiniteField::make_q(5);
  for (const auto& l : loci) {
    auto rep = max_multiplicity_locus(Hypersurface::projective(parse_polynomial(l.poly, l.vars)), F5, opts);
    r.add(kTopicMultiplicity, "maximal-multiplicity locus of V(" + l.poly + ") in P^" +
                                  std::to_string(l.vars.size() - 1) + " over GF(5) is linear",
          rep.linear, std::to_string(rep.points.size()) + " points" + (rep.detail.empty() ? "" : ", " + rep.detail));
  }
}

void check_nonnormal_cubics(Report& r, const std::vector<std::uint64_t>& qs, const CountOptions& opts) {
  std::vector<FieldSpec> fields;
  for (auto q : qs) fields.push_back(parse_field_spec(std::to_string(q)));
  for (unsigned i = 1; i <= 6; ++i) {
    auto rec = nonnormal_cubic_record(i);
    auto rep = verify_record(rec, fields, opts);
    std::string detail, bad;
    for (const auto& f : rep.fields) {
      detail += (detail.empty() ? "" : ", ") + std::string("q=") + std::to_string(f.q) + ": " +
                std::to_string(f.observed) + " = " + std::to_string(f.observed_open) + " + " +
                std::to_string(f.observed_closed);
      if (!f.ok()) bad += " q=" + std::to_string(f.q);
    }
    r.add(kTopicCubics, rec.description + ": total and two-chart split", rep.ok(),
          bad.empty() ? detail : "mismatch at" + bad);
  }
}

void check_euler(Report& r, const std::vector<std::uint64_t>& qs, const CountOptions& opts) {
  auto counts_of = [&](const Hypersurface& h, const std::vector<std::uint64_t>& fields) {
    std::vector<std::pair<std::uint64_t, mpz_class>> v;
    for (auto q : fields)
      v.emplace_back(q, mpz_class(static_cast<unsigned long>(count_points(h, FiniteField::make_q(q), {}, opts).total)));
    return v;
  };
  for (unsigned i = 1; i <= 6; ++i) {
    auto rec = nonnormal_cubic_record(i);
    auto fit = interpolate_count_polynomial(counts_of(Hypersurface::projective(*rec.surface), qs), 2);
    bool ok = fit.polynomial && fit.klass == rec.klass();
    r.add(kTopicEuler, rec.name + ": counts interpolate to the recorded class", ok,
          fit.polynomial ? "class " + fit.klass.to_string() + ", chi = " + fit.klass.chi().get_str() : fit.detail);
  }
  for (unsigned m = 1; m <= 4; ++m) {
    std::vector<std::uint64_t> fields = qs;
    if (fields.size() < m + 2) fields = {2, 3, 4, 5, 7, 8, 9};
    std::vector<std::string> pv, av;
    for (unsigned i = 0; i <= m + 1; ++i) pv.push_back("x" + std::to_string(i));
    for (unsigned i = 0; i <= m; ++i) av.push_back("x" + std::to_string(i));
    auto fp = interpolate_count_polynomial(
        counts_of(Hypersurface::projective(parse_polynomial("x" + std::to_string(m + 1), pv)), fields), m);
    auto fa = interpolate_count_polynomial(counts_of(Hypersurface::affine(parse_polynomial("x0", av)), fields), m);
    r.add(kTopicEuler, "chi(P^" + std::to_string(m) + ") = " + std::to_string(m + 1),
          fp.polynomial && fp.klass.chi() == m + 1, "q in {" + join(fields) + "}");
    r.add(kTopicEuler, "chi(A^" + std::to_string(m) + ") = 1", fa.polynomial && fa.klass.chi() == 1,
          "q in {" + join(fields) + "}");
  }
  const std::vector<std::uint64_t> cone_q{7, 13, 19, 31};
  auto cone = Hypersurface::projective(parse_polynomial("x^3 + y^3 + z^3", {"x", "y", "z", "w"}));
  auto fit = interpolate_count_polynomial(counts_of(cone, cone_q), 2);
  r.add(kTopicEuler, "elliptic cone V(x^3 + y^3 + z^3) in P^3 is detected as non-polynomial", !fit.polynomial,
        fit.detail);
}

void check_ga_actions(Report& r, const std::optional<std::string>& only) {
  for (const auto& a : builtin_ga_actions()) {
    if (only && a.name != *only) continue;
    auto rep = verify_ga_action(a);
    add_named(r, kTopicGa, rep.checks, a.name + ": ");
  }
}

}  // namespace hypercomp::cli
