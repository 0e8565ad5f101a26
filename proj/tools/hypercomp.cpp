// hypercomp: command-line front end for the verification toolkit.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 resource bound.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "checks.hpp"
#include "hypercomp/poly_io.hpp"

using namespace hypercomp;
using namespace hypercomp::cli;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Globals {
  bool json = false;
  bool timings = false;
  std::uint64_t seed = 0;
  std::uint64_t max_points = kDefaultPointBound;
  std::size_t max_terms = kDefaultTermLimit;

  CountOptions count_options() const {
    CountOptions o;
    o.max_points = max_points;
    return o;
  }
};

CertRoute parse_route(const std::string& s) {
  if (s == "auto") return CertRoute::Auto;
  if (s == "direct") return CertRoute::Direct;
  if (s == "chart") return CertRoute::Chart;
  throw InvalidArgument("route must be auto, direct or chart");
}

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto spec = parse_field_spec(item);
    out.push_back(spec.q());
  }
  if (out.empty()) throw InvalidArgument("empty field list");
  return out;
}

std::vector<std::string> split_semicolons(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(item);
  return out;
}

int emit(const Report& r, const Globals& g) {
  if (g.json)
    std::cout << r.to_json(g.timings).dump(2) << "\n";
  else
    r.write_markdown(std::cout, g.timings);
  return r.ok() ? 0 : kExitFail;
}

nlohmann::ordered_json map_json(const PolynomialMap& m) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : m.components) arr.push_back(to_string(c, m.names));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for hypersurface complements"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Write the report as JSON");
  app.add_flag("--timings", g.timings, "Include wall-clock timings (breaks byte-determinism)");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--max-points", g.max_points, "Enumeration bound for point counts")->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "Ceiling on intermediate polynomial sizes")->capture_default_str();

  // verify-all
  auto* all = app.add_subcommand("verify-all", "Run every verification");
  bool quick = false;
  all->add_flag("--quick", quick, "Smaller parameter ranges");

  // verify-family
  auto* fam = app.add_subcommand("verify-family", "Certify one cylinder-isomorphism family instance");
  std::string family = "z-square", route_text = "auto";
  unsigned d = 4, variant = 0, mutations = 0;
  std::optional<std::size_t> stabilize_to;
  std::optional<std::uint32_t> eval_prime;
  std::uint64_t eval_cap = 200000;
  bool emit_maps = false;
  fam->add_option("--family", family, "z-square, x1-square or open-question")
      ->check(CLI::IsMember({"z-square", "x1-square", "open-question"}))
      ->capture_default_str();
  fam->add_option("--d", d, "Degree")->capture_default_str();
  fam->add_option("--variant", variant, "Data variant for open-question (0 or 1)")->check(CLI::Range(0, 1));
  fam->add_option("--route", route_text, "Certificate route: auto, direct or chart")
      ->check(CLI::IsMember({"auto", "direct", "chart"}))
      ->capture_default_str();
  fam->add_option("--stabilize-to", stabilize_to, "Also certify the stabilization to this many variables");
  fam->add_option("--mutations", mutations, "Number of single-coefficient mutants to test");
  fam->add_option("--eval-prime", eval_prime, "Cross-check the certificate by evaluation over GF(p)");
  fam->add_option("--eval-cap", eval_cap, "Maximum number of points for the evaluation check")->capture_default_str();
  fam->add_flag("--emit-maps", emit_maps, "Include the homogeneous maps in the report");

  // verify-involution-deg8
  auto* inv = app.add_subcommand("verify-involution-deg8", "Certify the degree-8 involution of the nodal cubic");
  std::string inv_route = "direct";
  inv->add_option("--route", inv_route, "Certificate route")
      ->check(CLI::IsMember({"auto", "direct", "chart"}))
      ->capture_default_str();
  inv->add_option("--eval-prime", eval_prime, "Cross-check by evaluation over GF(p)");
  inv->add_option("--mutations", mutations, "Number of single-coefficient mutants to test");

  // count-points
  auto* cnt = app.add_subcommand("count-points", "Count points of a hypersurface over a finite field");
  std::string poly, vars, field = "q=2";
  bool projective = false;
  std::vector<std::string> zero_on, nonzero_on;
  cnt->add_option("--poly", poly, "Defining polynomial")->required();
  cnt->add_option("--vars", vars, "Comma-separated variable names")->required();
  cnt->add_option("--field", field, "Field, e.g. q=9 or p=3,k=2")->capture_default_str();
  cnt->add_flag("--projective", projective, "Projective hypersurface (defining polynomial homogeneous)");
  cnt->add_option("--zero", zero_on, "Restrict to points where this polynomial vanishes");
  cnt->add_option("--nonzero", nonzero_on, "Restrict to points where this polynomial does not vanish");

  // classify-quadric
  auto* cls = app.add_subcommand("classify-quadric", "Classify a quadratic form");
  std::uint64_t characteristic = 0;
  cls->add_option("--poly", poly, "Quadratic form")->required();
  cls->add_option("--vars", vars, "Comma-separated variable names")->required();
  cls->add_option("--char", characteristic, "Characteristic (0, an odd prime, or 2)")->capture_default_str();

  // verify-quadric-counts
  auto* vqc = app.add_subcommand("verify-quadric-counts", "Brute-force quadric counts against the closed forms");
  unsigned nmax = 4;
  std::string qlist = "2,3,4,5,7,8,9";
  bool include_y0 = false;
  vqc->add_option("--nmax", nmax, "Largest ambient index n")->check(CLI::Range(1, 8))->capture_default_str();
  vqc->add_option("--fields", qlist, "Comma-separated field sizes")->capture_default_str();
  vqc->add_flag("--include-y0", include_y0, "Also check the m = 0 Y forms");

  // euler-char
  auto* eul = app.add_subcommand("euler-char", "Interpolate point counts and read off the Euler characteristic");
  std::string record;
  unsigned degree_bound = 2;
  std::string euler_fields = "2,3,5,7,9";
  eul->add_option("--poly", poly, "Defining polynomial");
  eul->add_option("--vars", vars, "Comma-separated variable names");
  eul->add_flag("--projective", projective, "Projective hypersurface");
  eul->add_option("--record", record, "Built-in record, e.g. record:nonnormal-cubic-f5");
  eul->add_option("--fields", euler_fields, "Comma-separated field sizes")->capture_default_str();
  eul->add_option("--degree-bound", degree_bound, "Degree bound for the counting polynomial")->capture_default_str();

  // certify
  auto* cert = app.add_subcommand("certify", "Certify an isomorphism of projective hypersurface complements");
  std::string f_text, g_text, fwd_text, bwd_text, cert_route = "auto";
  cert->add_option("--f", f_text, "Source hypersurface")->required();
  cert->add_option("--g", g_text, "Target hypersurface")->required();
  cert->add_option("--vars", vars, "Comma-separated variable names")->required();
  cert->add_option("--forward", fwd_text, "Forward components separated by ';'")->required();
  cert->add_option("--backward", bwd_text, "Backward components separated by ';' (default: the forward map)");
  cert->add_option("--route", cert_route, "Certificate route")
      ->check(CLI::IsMember({"auto", "direct", "chart"}))
      ->capture_default_str();

  // verify-record
  auto* rec = app.add_subcommand("verify-record", "Check a stratification record against point counts");
  std::string rec_fields = "2,3,5,7";
  bool list_records = false;
  rec->add_option("--record", record, "Record name");
  rec->add_option("--fields", rec_fields, "Comma-separated field sizes")->capture_default_str();
  rec->add_flag("--list", list_records, "List the built-in records");

  // verify-ga-actions
  auto* ga = app.add_subcommand("verify-ga-actions", "Check the additive group action identities");
  std::optional<std::string> ga_name;
  ga->add_option("--name", ga_name, "Only the action with this name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  term_limit() = g.max_terms;
  const CountOptions copts = g.count_options();

  try {
    if (*all) {
      Report r(quick ? "verify-all --quick" : "verify-all", "QQ and finite fields");
      r.inputs()["quick"] = quick;
      r.inputs()["seed"] = g.seed;
      const std::vector<std::uint64_t> qs =
          quick ? std::vector<std::uint64_t>{2, 3, 4, 5} : std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9};
      {
        ScopedTimer t(r, "quadrics");
        auto counts = check_quadric_counts(r, 4, qs, false, copts);
        check_quadric_separation(r, counts);
      }
      std::size_t mutants = 0, caught = 0;
      {
        ScopedTimer t(r, "families");
        const unsigned zmax = quick ? 5 : 8, xmax = quick ? 5 : 8;
        const unsigned trials = 20;
        for (unsigned dd = 4; dd <= zmax; ++dd) {
          std::optional<std::size_t> stab;
          if (dd == 4) stab = 7;
          auto run = check_family(r, family_z_square(dd), CertRoute::Auto, trials, g.seed + dd, stab, std::nullopt, 0);
          mutants += run.mutants;
          caught += run.caught;
        }
        for (unsigned dd = 3; dd <= xmax; ++dd) {
          std::optional<std::size_t> stab;
          if (dd == 3) stab = 7;
          auto run =
              check_family(r, family_x1_square(dd), CertRoute::Auto, trials, g.seed + 100 + dd, stab, std::nullopt, 0);
          mutants += run.mutants;
          caught += run.caught;
        }
      }
      {
        ScopedTimer t(r, "involution");
        auto c = check_involution(r, CertRoute::Direct, std::nullopt, 0);
        if (c) {
          std::size_t miss = 0, n = 0;
          std::string missed;
          for (const auto& m : mutation_test_maps(*c, 20, g.seed, true)) {
            ++n;
            if (!m.caught) {
              ++miss;
              missed += " " + m.target + " " + m.change + ";";
            }
          }
          r.add(kTopicMutation, "degree-8 involution: 20 single-coefficient mutants rejected", miss == 0,
                std::to_string(n - miss) + "/" + std::to_string(n) + " caught" + missed);
        }
      }
      {
        ScopedTimer t(r, "multiplicities");
        check_multiplicities(r, quick ? std::vector<std::uint32_t>{2, 3, 5} : std::vector<std::uint32_t>{2, 3, 5, 7},
                             copts);
      }
      {
        ScopedTimer t(r, "cubic surfaces");
        check_nonnormal_cubics(r, quick ? std::vector<std::uint64_t>{2, 3, 5} : std::vector<std::uint64_t>{2, 3, 5, 7},
                               copts);
        check_euler(r, {2, 3, 5, 7, 9}, copts);
      }
      {
        ScopedTimer t(r, "group actions");
        check_ga_actions(r, std::nullopt);
      }
      r.results()["family mutants caught"] = std::to_string(caught) + "/" + std::to_string(mutants);
      return emit(r, g);
    }

    if (*fam) {
      CertRoute route = parse_route(route_text);
      if (family == "open-question") {
        Report r("verify-family", "QQ");
        r.inputs()["family"] = family;
        r.inputs()["variant"] = variant;
        check_open_question(r, variant);
        return emit(r, g);
      }
      auto data = family == "z-square" ? family_z_square(d) : family_x1_square(d);
      Report r("verify-family", "QQ");
      r.inputs()["family"] = family;
      r.inputs()["d"] = d;
      r.inputs()["route"] = route_text;
      if (stabilize_to) r.inputs()["stabilize-to"] = *stabilize_to;
      if (mutations) r.inputs()["mutations"] = mutations;
      if (eval_prime) r.inputs()["eval-prime"] = *eval_prime;
      r.inputs()["seed"] = g.seed;
      FamilyRun run;
      {
        ScopedTimer t(r, "pipeline");
        run = check_family(r, data, route, mutations, g.seed, stabilize_to, eval_prime, eval_cap);
      }
      if (run.result && run.result->certificate) {
        const auto& c = *run.result->certificate;
        r.results()["f"] = to_string(c.f, data.names);
        r.results()["g"] = to_string(c.g, data.names);
        r.results()["l"] = c.ell;
        r.results()["l'"] = c.ell_prime;
        r.results()["s"] = c.s;
        r.results()["mu"] = c.mu.get_str();
        r.results()["lambda"] = c.lambda.get_str();
        if (emit_maps) {
          r.results()["forward"] = map_json(c.forward);
          r.results()["backward"] = map_json(c.backward);
        }
      }
      return emit(r, g);
    }

    if (*inv) {
      Report r("verify-involution-deg8", "QQ");
      r.inputs()["f"] = "x*y*z + x^3 + y^3";
      r.inputs()["route"] = inv_route;
      std::optional<IsoCertificate> c;
      {
        ScopedTimer t(r, "certificate");
        c = check_involution(r, parse_route(inv_route), eval_prime, eval_cap);
      }
      if (c && mutations > 0) {
        std::size_t n = 0, ok = 0;
        for (const auto& m : mutation_test_maps(*c, mutations, g.seed, true)) {
          ++n;
          ok += m.caught;
        }
        r.add(kTopicMutation, std::to_string(mutations) + " single-coefficient mutants rejected", ok == n,
              std::to_string(ok) + "/" + std::to_string(n) + " caught");
      }
      if (c) {
        r.results()["lambda"] = c->lambda.get_str();
        r.results()["mu"] = c->mu.get_str();
        r.results()["s"] = c->s;
      }
      return emit(r, g);
    }

    if (*cnt) {
      auto names = parse_var_list(vars);
      QPoly f = parse_polynomial(poly, names);
      auto spec = parse_field_spec(field);
      auto F = FiniteField::make(spec);
      std::vector<Condition> conds;
      for (const auto& z : zero_on) conds.push_back({parse_polynomial(z, names), true});
      for (const auto& z : nonzero_on) conds.push_back({parse_polynomial(z, names), false});
      auto h = projective ? Hypersurface::projective(f) : Hypersurface::affine(f);
      auto t0 = std::chrono::steady_clock::now();
      auto pc = count_points(h, F, conds, copts);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      nlohmann::ordered_json j{{"total", pc.total}, {"regular", pc.regular}, {"singular", pc.singular}, {"q", pc.q}};
      if (g.timings) j["runtime_ms"] = ms;
      if (g.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# hypercomp count-points\n\n- polynomial: " << to_string(f, names) << "\n- ambient: "
                  << (projective ? "P^" + std::to_string(names.size() - 1) : "A^" + std::to_string(names.size()))
                  << "\n- field: GF(" << pc.q << ")\n- total: " << pc.total << "\n- regular: " << pc.regular
                  << "\n- singular: " << pc.singular << "\n";
        if (g.timings) std::cout << "- runtime: " << ms << " ms\n";
      }
      return 0;
    }

    if (*cls) {
      auto names = parse_var_list(vars);
      QPoly f = parse_polynomial(poly, names);
      Report r("classify-quadric", characteristic == 0 ? "QQ" : "characteristic " + std::to_string(characteristic));
      r.inputs()["poly"] = to_string(f, names);
      r.inputs()["char"] = characteristic;
      if (characteristic == 2) {
        auto e = classify_quadric_char2(f, {4, 16}, copts);
        std::vector<std::string> m;
        for (const auto& x : e.matches) m.push_back(x.name());
        r.add("Quadric classification", "counts of f = 1 over GF(4), GF(16) match a normal form", !m.empty(),
              m.empty() ? "no normal form matches" : "matches " + m.front());
        r.results()["matches"] = m;
        r.note("Characteristic 2 uses count fingerprints, an empirical classification.");
      } else {
        auto c = classify_quadric(f, characteristic);
        r.add("Quadric classification", "Gram matrix rank computed", true, c.to_string());
        r.results()["rank"] = c.rank;
        r.results()["type"] = c.kind == QuadricKind::X ? "X" : "Y";
        r.results()["m"] = c.m;
        r.results()["reducible"] = c.reducible;
        r.results()["non_reduced"] = c.non_reduced;
      }
      return emit(r, g);
    }

    if (*vqc) {
      auto qs = parse_q_list(qlist);
      Report r("verify-quadric-counts", "finite fields");
      r.inputs()["nmax"] = nmax;
      r.inputs()["fields"] = join(qs);
      auto counts = check_quadric_counts(r, nmax, qs, include_y0, copts);
      check_quadric_separation(r, counts);
      return emit(r, g);
    }

    if (*eul) {
      auto qs = parse_q_list(euler_fields);
      Report r("euler-char", "finite fields");
      r.inputs()["fields"] = join(qs);
      r.inputs()["degree-bound"] = degree_bound;
      std::optional<StratificationRecord> recd;
      std::optional<Hypersurface> h;
      if (!record.empty()) {
        recd = find_record(record);
        r.inputs()["record"] = recd->name;
        if (recd->surface)
          h = recd->projective ? Hypersurface::projective(*recd->surface) : Hypersurface::affine(*recd->surface);
      } else {
        if (poly.empty() || vars.empty()) throw InvalidArgument("euler-char needs --poly and --vars, or --record");
        auto names = parse_var_list(vars);
        QPoly f = parse_polynomial(poly, names);
        r.inputs()["poly"] = to_string(f, names);
        r.inputs()["projective"] = projective;
        h = projective ? Hypersurface::projective(f) : Hypersurface::affine(f);
      }
      if (recd) {
        r.results()["record class"] = recd->klass().to_string();
        r.results()["record chi"] = recd->chi().get_str();
      }
      if (h) {
        std::vector<std::pair<std::uint64_t, mpz_class>> counts;
        auto jc = nlohmann::ordered_json::object();
        for (auto q : qs) {
          auto c = count_points(*h, FiniteField::make_q(q), {}, copts).total;
          counts.emplace_back(q, mpz_class(static_cast<unsigned long>(c)));
          jc[std::to_string(q)] = c;
        }
        r.results()["counts"] = jc;
        auto fit = interpolate_count_polynomial(counts, degree_bound);
        r.add(kTopicEuler, "counts are a polynomial in q of degree <= " + std::to_string(degree_bound), fit.polynomial,
              fit.polynomial ? "" : "NonPolynomialDetected: " + fit.detail);
        if (fit.polynomial) {
          r.results()["class"] = fit.klass.to_string();
          r.results()["chi"] = fit.klass.chi().get_str();
          if (recd) r.add(kTopicEuler, "interpolated class equals the record class", fit.klass == recd->klass());
        }
      } else {
        r.skip(kTopicEuler, "point-count interpolation", "record has no concrete surface");
        r.results()["chi"] = recd->chi().get_str();
      }
      return emit(r, g);
    }

    if (*cert) {
      auto names = parse_var_list(vars);
      QPoly f = parse_polynomial(f_text, names), gg = parse_polynomial(g_text, names);
      PolynomialMap fwd{{}, names, std::nullopt, std::nullopt}, bwd{{}, names, std::nullopt, std::nullopt};
      for (const auto& s : split_semicolons(fwd_text)) fwd.components.push_back(parse_polynomial(s, names));
      if (bwd_text.empty())
        bwd = fwd;
      else
        for (const auto& s : split_semicolons(bwd_text)) bwd.components.push_back(parse_polynomial(s, names));
      if (fwd.components.size() != names.size() || bwd.components.size() != names.size())
        throw InvalidArgument("maps need one component per variable");
      Report r("certify", "QQ");
      r.inputs()["f"] = to_string(f, names);
      r.inputs()["g"] = to_string(gg, names);
      r.inputs()["route"] = cert_route;
      CertifyOptions o;
      o.route = parse_route(cert_route);
      auto c = certify_projective_iso(f, gg, fwd, bwd, o);
      add_named(r, "Certificate", c.checks);
      if (c.valid()) {
        r.results()["l"] = c.ell;
        r.results()["l'"] = c.ell_prime;
        r.results()["s"] = c.s;
        r.results()["mu"] = c.mu.get_str();
        r.results()["mu'"] = c.mu_prime.get_str();
        r.results()["lambda"] = c.lambda.get_str();
        r.results()["lambda'"] = c.lambda_prime.get_str();
        r.results()["route"] = route_name(c.route);
      }
      if (c.irreducibility_assumed) r.note("Irreducibility of f and g is assumed, not checked.");
      return emit(r, g);
    }

    if (*rec) {
      if (list_records) {
        for (const auto& n : builtin_record_names()) std::cout << n << "\n";
        return 0;
      }
      if (record.empty()) throw InvalidArgument("verify-record needs --record or --list");
      auto qs = parse_q_list(rec_fields);
      auto rd = find_record(record);
      Report r("verify-record", "finite fields");
      r.inputs()["record"] = rd.name;
      r.inputs()["fields"] = join(qs);
      r.results()["description"] = rd.description;
      r.results()["class"] = rd.klass().to_string();
      r.results()["chi"] = rd.chi().get_str();
      std::vector<FieldSpec> fs;
      for (auto q : qs) fs.push_back(parse_field_spec(std::to_string(q)));
      auto rep = verify_record(rd, fs, copts);
      r.add("Record", "chart pieces sum to the record class", rep.chart_consistent);
      if (!rd.surface) {
        r.skip("Record", "point counts", rep.note.empty() ? "no concrete surface" : rep.note);
      } else {
        for (const auto& fc : rep.fields) {
          std::string detail = "predicted " + fc.predicted.get_str() + ", observed " + std::to_string(fc.observed);
          if (fc.chart_checked)
            detail += "; charts " + std::to_string(fc.observed_open) + " + " + std::to_string(fc.observed_closed);
          r.add("Record", "q=" + std::to_string(fc.q) + ": counts match", fc.ok(), detail);
        }
      }
      if (!rd.prime_field_strata) r.note("Strata are not all rational over prime fields; counts are not compared.");
      return emit(r, g);
    }

    if (*ga) {
      Report r("verify-ga-actions", "QQ(t)");
      if (ga_name) r.inputs()["name"] = *ga_name;
      check_ga_actions(r, ga_name);
      if (ga_name && r.count(Status::Pass) + r.count(Status::Fail) == 0)
        throw InvalidArgument("no built-in action named '" + *ga_name + "'");
      return emit(r, g);
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource bound reached: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
