#include "hypercomp/groth_ring.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "hypercomp/poly_io.hpp"

namespace hypercomp {

MotivicClass::MotivicClass(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void MotivicClass::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

MotivicClass MotivicClass::constant(long c) { return MotivicClass({mpz_class(c)}); }
MotivicClass MotivicClass::L() { return MotivicClass({0, 1}); }

MotivicClass MotivicClass::affine_space(unsigned m) {
  std::vector<mpz_class> c(m + 1, 0);
  c[m] = 1;
  return MotivicClass(c);
}

MotivicClass MotivicClass::projective_space(unsigned m) { return MotivicClass(std::vector<mpz_class>(m + 1, 1)); }

mpz_class MotivicClass::evaluate(const mpz_class& q) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  return acc;
}

MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return MotivicClass(c);
}

MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) { return a + (-1) * b; }

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  if (a.c_.empty() || b.c_.empty()) return MotivicClass();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return MotivicClass(c);
}

MotivicClass operator*(long k, const MotivicClass& a) {
  std::vector<mpz_class> c = a.c_;
  for (auto& v : c) v *= k;
  return MotivicClass(c);
}

std::string MotivicClass::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& v = c_[i];
    if (v == 0) continue;
    mpz_class a = abs(v);
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "L";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

MotivicClass piece_class(PieceKind kind) {
  switch (kind) {
    case PieceKind::A2:
      return MotivicClass::affine_space(2);
    case PieceKind::A1:
      return MotivicClass::L();
    case PieceKind::Point:
      return MotivicClass::point();
    case PieceKind::P1:
      return MotivicClass::projective_space(1);
    case PieceKind::P1VeeP1:
      return MotivicClass({1, 2});
    case PieceKind::A1xGm:
      return MotivicClass({0, -1, 1});
    case PieceKind::Custom:
      break;
  }
  throw InvalidArgument("custom pieces carry their own class");
}

MotivicClass Piece::klass() const {
  MotivicClass base = kind == PieceKind::Custom ? custom : piece_class(kind);
  return count * base;
}

std::string Piece::to_string() const {
  std::string name;
  switch (kind) {
    case PieceKind::A2: name = "A^2"; break;
    case PieceKind::A1: name = "A^1"; break;
    case PieceKind::Point: name = "pt"; break;
    case PieceKind::P1: name = "P^1"; break;
    case PieceKind::P1VeeP1: name = "P^1 v P^1"; break;
    case PieceKind::A1xGm: name = "A^1 x (A^1 \\ 0)"; break;
    case PieceKind::Custom: name = label; break;
  }
  return count == 1 ? name : std::to_string(count) + " x " + name;
}

MotivicClass sum_class(const std::vector<Piece>& pieces) {
  MotivicClass acc;
  for (const auto& p : pieces) acc = acc + p.klass();
  return acc;
}

MotivicClass tree_class(long r, long s) {
  if (r < 0 || s < 0) throw InvalidArgument("tree counts must be nonnegative");
  if (r < s) throw InvalidArgument("a union of trees has at least as many components as connected components");
  if (s == 0 && r != 0) throw InvalidArgument("nonempty union of trees has at least one connected component");
  return r * MotivicClass::L() + MotivicClass::constant(s);
}

bool RecordReport::ok() const {
  if (!chart_consistent) return false;
  return std::all_of(fields.begin(), fields.end(), [](const RecordFieldCheck& c) { return c.ok(); });
}

RecordReport verify_record(const StratificationRecord& record, const std::vector<FieldSpec>& fields,
                           const CountOptions& opts) {
  RecordReport rep;
  rep.name = record.name;
  rep.klass = record.klass();
  if (record.chart) {
    rep.chart_consistent = sum_class(record.chart->open_part) + sum_class(record.chart->closed_part) == rep.klass;
  }
  if (!record.surface) {
    rep.note = "record only: no concrete surface attached, class and chi checked";
    return rep;
  }
  if (!record.prime_field_strata) {
    rep.note = "strata not defined over the prime field: counts not compared";
    return rep;
  }
  Hypersurface h = record.projective ? Hypersurface::projective(*record.surface) : Hypersurface::affine(*record.surface);
  for (const auto& spec : fields) {
    auto F = FiniteField::make(spec);
    RecordFieldCheck c;
    c.q = F->q();
    c.predicted = rep.klass.predicted_count(c.q);
    c.observed = count_points(h, F, {}, opts).total;
    if (record.chart) {
      QPoly v = QPoly::variable(Rationals(), h.nvars(), record.chart->var);
      c.chart_checked = true;
      c.predicted_open = sum_class(record.chart->open_part).predicted_count(c.q);
      c.predicted_closed = sum_class(record.chart->closed_part).predicted_count(c.q);
      c.observed_open = count_points(h, F, {Condition{v, false}}, opts).total;
      c.observed_closed = count_points(h, F, {Condition{v, true}}, opts).total;
    }
    rep.fields.push_back(c);
  }
  return rep;
}

namespace {

Piece piece(PieceKind k, long n = 1) { return Piece{k, n, {}, {}}; }
Piece custom(const MotivicClass& c, const std::string& label, long n = 1) { return Piece{PieceKind::Custom, n, c, label}; }

const std::vector<std::string> kCubicVars = {"w", "x", "y", "z"};

struct CubicRow {
  const char* poly;
  long n;
  PieceKind open;
  PieceKind closed;
};

const CubicRow kNonNormalCubics[6] = {
    {"x*y*w + x^3 + y^3", 0, PieceKind::A1xGm, PieceKind::P1},
    {"x^2*w + y^3", 1, PieceKind::A2, PieceKind::P1},
    {"x^2*w + y^3 + x*y^2", 1, PieceKind::A2, PieceKind::P1},
    {"x*y*w + y^2*z + x^3", 1, PieceKind::A1xGm, PieceKind::P1VeeP1},
    {"x^2*w + y^2*z", 2, PieceKind::A2, PieceKind::P1VeeP1},
    {"x*y*w + (x^2 + y^2)*z", 2, PieceKind::A2, PieceKind::P1VeeP1},
};

std::vector<Piece> cell_strata(long n) {
  std::vector<Piece> s{piece(PieceKind::A2), piece(PieceKind::Point)};
  if (n > 0) s.push_back(piece(PieceKind::A1, n));
  return s;
}

std::map<std::string, long> parse_params(const std::string& text) {
  std::map<std::string, long> out;
  std::regex kv("([a-z]+)=([0-9]+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kv); it != std::sregex_iterator(); ++it)
    out[(*it)[1]] = std::stol((*it)[2]);
  return out;
}

long require(const std::map<std::string, long>& p, const std::string& key, const std::string& name) {
  auto it = p.find(key);
  if (it == p.end()) throw InvalidArgument("record " + name + " needs parameter " + key);
  return it->second;
}

}  // namespace

StratificationRecord nonnormal_cubic_record(unsigned i) {
  if (i < 1 || i > 6) throw InvalidArgument("non-normal cubic index must be 1..6");
  const auto& row = kNonNormalCubics[i - 1];
  StratificationRecord r;
  r.name = "nonnormal-cubic-f" + std::to_string(i);
  r.description = std::string("V(") + row.poly + ") in P^3, [w:x:y:z], n=" + std::to_string(row.n);
  r.strata = cell_strata(row.n);
  r.chart = ChartSplit{1, {piece(row.open)}, {piece(row.closed)}};
  r.surface = parse_polynomial(row.poly, kCubicVars);
  r.var_names = kCubicVars;
  return r;
}

std::vector<std::string> builtin_record_names() {
  return {"nonnormal-cubic-f1",       "nonnormal-cubic-f2",  "nonnormal-cubic-f3",      "nonnormal-cubic-f4",
          "nonnormal-cubic-f5",       "nonnormal-cubic-f6",  "smooth-cubic",            "normal-cubic:n=N",
          "smooth-rational-surface:n=N", "normal-trees:n=N,r=R", "union-tree:r=R,s=S", "projective-space:m=M",
          "affine-space:m=M",         "projective-plane",    "quadric-surface"};
}

StratificationRecord find_record(const std::string& full) {
  std::string name = full.rfind("record:", 0) == 0 ? full.substr(7) : full;
  std::string base = name.substr(0, name.find(':'));
  auto params = parse_params(name.find(':') == std::string::npos ? "" : name.substr(name.find(':') + 1));
  StratificationRecord r;
  r.name = name;
  if (base.rfind("nonnormal-cubic-f", 0) == 0 && base.size() == 18 && base[17] >= '1' && base[17] <= '6')
    return nonnormal_cubic_record(static_cast<unsigned>(base[17] - '0'));
  if (base == "smooth-cubic") {
    r.description = "smooth cubic surface: A^2, one point and seven copies of A^1";
    r.strata = cell_strata(7);
    r.prime_field_strata = false;
    return r;
  }
  if (base == "normal-cubic") {
    long n = require(params, "n", name);
    if (n < 1 || n > 7) throw InvalidArgument("normal cubic surfaces have 1 <= n <= 7");
    r.description = "normal rational cubic surface with n copies of A^1";
    r.strata = cell_strata(n);
    r.prime_field_strata = false;
    return r;
  }
  if (base == "smooth-rational-surface") {
    long n = require(params, "n", name);
    if (n < 1) throw InvalidArgument("Picard rank is at least 1");
    r.description = "smooth projective rational surface with Picard rank n";
    r.strata = cell_strata(n);
    r.prime_field_strata = false;
    return r;
  }
  if (base == "normal-trees") {
    long n = require(params, "n", name), rr = require(params, "r", name);
    if (n - rr < 1) throw InvalidArgument("normal surface decomposition needs n - r >= 1");
    r.description = "normal rational surface resolved by trees: n - r copies of A^1";
    r.strata = cell_strata(n - rr);
    r.prime_field_strata = false;
    return r;
  }
  if (base == "union-tree") {
    long rr = require(params, "r", name), s = require(params, "s", name);
    MotivicClass c = tree_class(rr, s);
    r.description = "union of trees of smooth rational curves";
    if (rr > 0) r.strata.push_back(piece(PieceKind::A1, rr));
    if (s > 0) r.strata.push_back(piece(PieceKind::Point, s));
    r.prime_field_strata = false;
    return r;
  }
  if (base == "projective-space" || base == "affine-space") {
    long m = require(params, "m", name);
    if (m < 0 || m > 8) throw InvalidArgument("dimension must be in 0..8");
    bool proj = base == "projective-space";
    std::size_t nv = static_cast<std::size_t>(m) + (proj ? 2 : 1);
    r.description = proj ? "hyperplane x_{m+1} = 0 in P^{m+1}" : "hyperplane x_m = 0 in A^{m+1}";
    auto c = proj ? MotivicClass::projective_space(static_cast<unsigned>(m))
                  : MotivicClass::affine_space(static_cast<unsigned>(m));
    r.strata.push_back(custom(c, (proj ? "P^" : "A^") + std::to_string(m)));
    r.surface = QPoly::variable(Rationals(), nv, nv - 1);
    r.projective = proj;
    r.var_names = default_var_names(nv);
    return r;
  }
  if (base == "projective-plane") {
    r.description = "P^2 as the plane w = 0 in P^3 (Picard rank 1)";
    r.strata = cell_strata(1);
    r.surface = parse_polynomial("w", kCubicVars);
    r.var_names = kCubicVars;
    return r;
  }
  if (base == "quadric-surface") {
    r.description = "P^1 x P^1 as V(w*x - y*z) in P^3 (Picard rank 2)";
    r.strata = cell_strata(2);
    r.surface = parse_polynomial("w*x - y*z", kCubicVars);
    r.var_names = kCubicVars;
    return r;
  }
  throw InvalidArgument("unknown record '" + full + "'");
}

InterpolationResult interpolate_count_polynomial(const std::vector<std::pair<std::uint64_t, mpz_class>>& counts,
                                                 unsigned degree_bound) {
  if (counts.size() < degree_bound + 2)
    throw InvalidArgument("interpolation needs at least degree_bound + 2 data points");
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = i + 1; j < counts.size(); ++j)
      if (counts[i].first == counts[j].first) throw InvalidArgument("interpolation points must be distinct");
  const std::size_t k = degree_bound + 1;
  // Newton divided differences on the first k points.
  std::vector<mpq_class> xs(k), dd(k);
  for (std::size_t i = 0; i < k; ++i) {
    xs[i] = mpq_class(mpz_class(static_cast<unsigned long>(counts[i].first)));
    dd[i] = mpq_class(counts[i].second);
  }
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Expand to the monomial basis.
  std::vector<mpq_class> poly(1, dd[k - 1]);
  for (std::size_t i = k - 1; i-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] += poly[e];
      next[e] -= poly[e] * xs[i];
    }
    next[0] += dd[i];
    poly = next;
  }
  InterpolationResult res;
  std::vector<mpz_class> ints;
  for (const auto& c : poly) {
    if (c.get_den() != 1) {
      res.polynomial = false;
      res.detail = "interpolant through the first " + std::to_string(k) + " points has non-integer coefficients";
      res.failing_q = counts[k - 1].first;
      return res;
    }
    ints.push_back(c.get_num());
  }
  MotivicClass cls(ints);
  for (std::size_t i = k; i < counts.size(); ++i) {
    mpz_class pred = cls.evaluate(mpz_class(static_cast<unsigned long>(counts[i].first)));
    if (pred != counts[i].second) {
      res.polynomial = false;
      res.failing_q = counts[i].first;
      res.detail = "degree <= " + std::to_string(degree_bound) + " fit " + cls.to_string() + " predicts " +
                   pred.get_str() + " at q=" + std::to_string(counts[i].first) + ", observed " +
                   counts[i].second.get_str();
      return res;
    }
  }
  res.polynomial = true;
  res.klass = cls;
  res.detail = "fit " + cls.to_string() + " validated on " + std::to_string(counts.size() - k) + " extra points";
  return res;
}

bool curves_piecewise_iso(const CurveRecord& a, const CurveRecord& b) {
  for (const auto* r : {&a, &b})
    for (const auto& l : r->birational_labels)
      if (l.empty()) throw InvalidArgument("curve record " + r->name + " has an unlabeled component");
  auto la = a.birational_labels, lb = b.birational_labels;
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb && a.chi == b.chi;
}

QuarticCountCheck quartic_count_check(const QPoly& f, const QPoly& g, const FieldPtr& F, const CountOptions& opts) {
  if (f.nvars() != 3 || g.nvars() != 3) throw InvalidArgument("quartic example needs f, g in three variables");
  if (homogeneous_degree(f) != 3u || homogeneous_degree(g) != 4u)
    throw InvalidArgument("quartic example needs deg f = 3 and deg g = 4, both homogeneous");
  const std::vector<std::size_t> shift = {1, 2, 3};
  QPoly w = QPoly::variable(Rationals(), 4, 0);
  QPoly X = w * f.rename(shift, 4) - g.rename(shift, 4);
  QuarticCountCheck c;
  c.q = F->q();
  c.quartic = count_points(Hypersurface::projective(X), F, {}, opts).total;
  auto gamma = Hypersurface::projective(f);
  c.curve = count_points(gamma, F, {}, opts).total;
  c.intersection = count_points(gamma, F, {Condition{g, true}}, opts).total;
  c.predicted = ambient_point_count(Ambient::Projective, 3, c.q) - c.curve + 1 + c.q * c.intersection;
  return c;
}

}  // namespace hypercomp
