// Comparisons against values produced by tests/oracles/generate_oracles.py,
// which uses sympy and plain enumeration only.

#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>

#include "hypercomp/groth_ring.hpp"
#include "hypercomp/iso_engine.hpp"
#include "hypercomp/poly_io.hpp"
#include "hypercomp/quadrics.hpp"

using namespace hypercomp;
using nlohmann::json;

namespace {

const json& oracle() {
  static const json j = [] {
    std::ifstream in(HYPERCOMP_ORACLE_FILE);
    if (!in) throw std::runtime_error("cannot open " HYPERCOMP_ORACLE_FILE);
    return json::parse(in);
  }();
  return j;
}

QuadricNormalForm parse_form_name(const std::string& key) {
  QuadricNormalForm f;
  f.kind = key[0] == 'X' ? QuadricKind::X : QuadricKind::Y;
  auto comma = key.find(',');
  f.m = static_cast<unsigned>(std::stoul(key.substr(3, comma - 3)));
  f.n = static_cast<unsigned>(std::stoul(key.substr(comma + 1)));
  return f;
}

DanielewskiData family_by_label(const std::string& label) {
  unsigned d = static_cast<unsigned>(label.back() - '0');
  return label.rfind("z-square", 0) == 0 ? family_z_square(d) : family_x1_square(d);
}

}  // namespace

TEST(Oracles, QuadricCounts) {
  std::size_t compared = 0;
  for (const auto& [qs, forms] : oracle().at("quadric_counts").items()) {
    auto F = FiniteField::make_q(std::stoull(qs));
    for (const auto& [name, v] : forms.items()) {
      auto form = parse_form_name(name);
      ASSERT_EQ(form.name(), name);
      auto pc = count_points(Hypersurface::affine(form.affine_polynomial()), F);
      EXPECT_EQ(pc.total, v[0].get<std::uint64_t>()) << name << " q=" << qs;
      EXPECT_EQ(pc.regular, v[1].get<std::uint64_t>()) << name << " q=" << qs;
      EXPECT_EQ(pc.singular, v[2].get<std::uint64_t>()) << name << " q=" << qs;
      ++compared;
    }
  }
  EXPECT_GE(compared, 40u);
}

TEST(Oracles, NonNormalCubics) {
  for (const auto& [fname, per_q] : oracle().at("nonnormal_cubics").items()) {
    auto rec = nonnormal_cubic_record(static_cast<unsigned>(fname[1] - '0'));
    std::vector<FieldSpec> fs;
    for (const auto& [qs, v] : per_q.items()) fs.push_back(parse_field_spec("q=" + qs));
    auto rep = verify_record(rec, fs);
    for (const auto& f : rep.fields) {
      const auto& v = per_q.at(std::to_string(f.q));
      EXPECT_EQ(f.observed, v[0].get<std::uint64_t>()) << fname << " q=" << f.q;
      EXPECT_EQ(f.observed_open, v[1].get<std::uint64_t>()) << fname << " q=" << f.q;
      EXPECT_EQ(f.observed_closed, v[2].get<std::uint64_t>()) << fname << " q=" << f.q;
    }
    EXPECT_TRUE(rep.ok()) << fname;
  }
}

TEST(Oracles, EllipticCone) {
  auto h = Hypersurface::projective(parse_polynomial("x^3 + y^3 + z^3", {"x", "y", "z", "w"}));
  for (const auto& [qs, v] : oracle().at("elliptic_cone_p3").items())
    EXPECT_EQ(count_points(h, FiniteField::make_q(std::stoull(qs))).total, v.get<std::uint64_t>()) << qs;
}

TEST(Oracles, Multiplicities) {
  const auto& m = oracle().at("multiplicity");
  const std::vector<std::string> xyzw{"x", "y", "z", "w"};
  for (const auto& [ds, pts] : m.at("cone").items()) {
    unsigned d = static_cast<unsigned>(std::stoul(ds));
    QPoly f = parse_polynomial("x^" + std::to_string(d - 1) + "*y + z^" + ds, xyzw);
    EXPECT_EQ(multiplicity_at(f, true, std::vector<mpq_class>{0, 0, 0, 1}).multiplicity, pts.at("[0:0:0:1]").get<unsigned>());
    EXPECT_EQ(multiplicity_at(f, true, std::vector<mpq_class>{0, 1, 0, 0}).multiplicity, pts.at("[0:1:0:0]").get<unsigned>());
  }
  for (const auto& [ds, v] : m.at("line").items()) {
    unsigned d = static_cast<unsigned>(std::stoul(ds));
    QPoly g = parse_polynomial("x0^" + std::to_string(d - 1) + "*y + z^" + ds + " + " + ds + "*x0^" +
                                   std::to_string(d - 2) + "*x1^2",
                               {"x0", "x1", "y", "z"});
    auto scan = multiplicity_along_line(g, {0, 0, 1, 0}, {0, 1, 0, 0});
    EXPECT_EQ(scan.generic_multiplicity, v.at("generic").get<unsigned>());
    std::map<std::string, unsigned> found(scan.exceptional.begin(), scan.exceptional.end());
    EXPECT_EQ(found.at("0"), v.at("t=0").get<unsigned>());
    EXPECT_EQ(found.at("inf"), v.at("inf").get<unsigned>());
    EXPECT_EQ(multiplicity_at(g, true, std::vector<mpq_class>{0, 1, 1, 0}).multiplicity, v.at("t=1").get<unsigned>());
  }
}

TEST(Oracles, Involution) {
  const auto& o = oracle().at("involution");
  auto phi = nodal_cubic_involution();
  CertifyOptions opts;
  opts.route = CertRoute::Direct;
  auto c = certify_projective_iso(nodal_cubic(), nodal_cubic(), phi, phi, opts);
  ASSERT_TRUE(c.valid());
  EXPECT_EQ(c.t, o.at("t").get<unsigned>());
  EXPECT_EQ(c.mu, mpq_class(o.at("mu").get<std::string>()));
  EXPECT_EQ(c.s, o.at("s")[0].get<unsigned>());
  EXPECT_EQ(c.lambda, mpq_class(o.at("lambda")[0].get<std::string>()));
}

TEST(Oracles, FamilyMaps) {
  for (const auto& [label, v] : oracle().at("families").items()) {
    auto r = run_family(family_by_label(label));
    ASSERT_TRUE(r.certificate) << label;
    const auto& c = *r.certificate;
    EXPECT_EQ(c.ell, v.at("ell").get<unsigned>()) << label;
    EXPECT_EQ(c.ell_prime, v.at("ell_prime").get<unsigned>()) << label;
    EXPECT_TRUE(v.at("pullback_is_power").get<bool>());
    const std::size_t n = c.f.nvars();
    std::vector<mpq_class> pt;
    const long vals[] = {1, 2, 3, 5, 7};
    for (std::size_t i = 0; i < n; ++i) pt.push_back(vals[i]);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(c.forward.components[i].evaluate(pt), mpq_class(v.at("forward_at_point")[i].get<std::string>()))
          << label << " forward " << i;
      EXPECT_EQ(c.backward.components[i].evaluate(pt), mpq_class(v.at("backward_at_point")[i].get<std::string>()))
          << label << " backward " << i;
      EXPECT_EQ(c.forward.components[i].size(), v.at("forward_terms")[i].get<std::size_t>()) << label << " " << i;
    }
  }
}
