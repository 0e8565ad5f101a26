#include "hypercomp/quadrics.hpp"

#include <sstream>

namespace hypercomp {

namespace {

std::uint64_t ipow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

template <class D>
unsigned rank_of(std::vector<std::vector<typename D::Elem>> a, const D& dom) {
  const std::size_t n = a.size();
  unsigned rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && dom.is_zero(a[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    auto inv = dom.inv(a[rank][col]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (dom.is_zero(a[r][col])) continue;
      auto factor = dom.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) a[r][c] = dom.sub(a[r][c], dom.mul(factor, a[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool QuadricNormalForm::valid() const {
  if (kind == QuadricKind::X) return m >= 1 && 2 * m - 1 <= n;
  return 2 * m <= n;
}

void QuadricNormalForm::validate() const {
  if (!valid()) throw InvalidArgument("invalid quadric parameters for " + name());
}

std::string QuadricNormalForm::name() const {
  return std::string(kind == QuadricKind::X ? "X" : "Y") + "_{" + std::to_string(m) + "," + std::to_string(n) + "}";
}

QPoly QuadricNormalForm::quadratic_form() const {
  validate();
  Rationals dom;
  const std::size_t nv = n + 1;
  if (nv > kMaxVars) throw InvalidArgument("too many variables");
  QPoly f(dom, nv);
  for (unsigned i = 0; i < m; ++i) f = f + QPoly::variable(dom, nv, 2 * i) * QPoly::variable(dom, nv, 2 * i + 1);
  if (kind == QuadricKind::Y) f = f + QPoly::variable(dom, nv, 2 * m).pow(2);
  return f;
}

QPoly QuadricNormalForm::affine_polynomial() const {
  return quadratic_form() - QPoly::constant(Rationals(), n + 1, 1);
}

CountFormulaResult closed_form_count(const QuadricNormalForm& form, std::uint64_t q) {
  form.validate();
  if (!prime_power(q)) throw InvalidArgument("q must be a prime power");
  const unsigned m = form.m, n = form.n;
  CountFormulaResult r;
  if (form.kind == QuadricKind::X) {
    r.total = r.regular = ipow(q, n - m) * (ipow(q, m) - 1);
  } else if (q % 2 == 1) {
    r.total = r.regular = ipow(q, n - m) * (ipow(q, m) + 1);
  } else {
    r.total = ipow(q, n);
    r.regular = ipow(q, n - 2 * m) * (ipow(q, 2 * m) - 1);
  }
  r.singular = r.total - r.regular;
  return r;
}

std::vector<QuadricNormalForm> normal_forms_up_to(unsigned nmax, bool include_y0) {
  std::vector<QuadricNormalForm> out;
  for (unsigned n = 1; n <= nmax; ++n) {
    for (unsigned m = 1; 2 * m - 1 <= n; ++m) out.push_back({QuadricKind::X, m, n});
    for (unsigned m = include_y0 ? 0 : 1; 2 * m <= n; ++m) out.push_back({QuadricKind::Y, m, n});
  }
  return out;
}

std::vector<QuadricCountCheck> verify_against_bruteforce(const QuadricNormalForm& form,
                                                         const std::vector<FieldSpec>& fields,
                                                         const CountOptions& opts) {
  auto h = Hypersurface::affine(form.affine_polynomial());
  std::vector<QuadricCountCheck> out;
  for (const auto& spec : fields) {
    auto F = FiniteField::make(spec);
    QuadricCountCheck c;
    c.form = form;
    c.q = F->q();
    c.predicted = closed_form_count(form, F->q());
    c.observed = count_points(h, F, {}, opts);
    out.push_back(c);
  }
  return out;
}

std::string QuadricClass::to_string() const {
  std::ostringstream os;
  os << (kind == QuadricKind::X ? "X" : "Y") << "-type, m=" << m << ", rank " << rank;
  if (reducible) os << " (reducible)";
  if (non_reduced) os << " (non-reduced)";
  return os.str();
}

unsigned gram_rank(const QPoly& f, std::uint64_t characteristic) {
  if (characteristic == 2) throw InvalidArgument("Gram matrix is undefined in characteristic 2");
  if (f.is_zero() || homogeneous_degree(f) != 2u) throw InvalidArgument("expected a nonzero quadratic form");
  const std::size_t n = f.nvars();
  std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n, 0));
  for (const auto& [mono, c] : f.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < mono[i]; ++e) idx.push_back(i);
    if (idx[0] == idx[1]) {
      g[idx[0]][idx[0]] += c;
    } else {
      g[idx[0]][idx[1]] += c / 2;
      g[idx[1]][idx[0]] += c / 2;
    }
  }
  if (characteristic == 0) return rank_of(g, Rationals());
  if (!is_prime(characteristic)) throw InvalidArgument("characteristic must be 0 or a prime");
  auto F = FiniteField::make(FieldSpec{static_cast<std::uint32_t>(characteristic), 1, {}});
  GF dom(F);
  std::vector<std::vector<FieldElement>> h(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = embed(*F, g[i][j]);
  return rank_of(h, dom);
}

QuadricClass classify_quadric(const QPoly& f, std::uint64_t characteristic) {
  QuadricClass c;
  c.rank = gram_rank(f, characteristic);
  if (c.rank == 0) throw InvalidArgument("quadratic form vanishes in this characteristic");
  if (c.rank % 2 == 0) {
    c.kind = QuadricKind::X;
    c.m = c.rank / 2;
    c.reducible = c.m == 1;
  } else {
    c.kind = QuadricKind::Y;
    c.m = (c.rank - 1) / 2;
    c.non_reduced = c.rank == 1;
  }
  return c;
}

EmpiricalClass classify_quadric_char2(const QPoly& f, const std::vector<std::uint64_t>& probe_q,
                                      const CountOptions& opts) {
  if (f.is_zero() || homogeneous_degree(f) != 2u) throw InvalidArgument("expected a nonzero quadratic form");
  EmpiricalClass out;
  auto h = Hypersurface::affine(f - QPoly::constant(Rationals(), f.nvars(), 1));
  for (auto q : probe_q) {
    if (q % 2 != 0) throw InvalidArgument("char-2 fingerprinting needs even q");
    out.fingerprint.emplace_back(q, count_points(h, FiniteField::make_q(q), {}, opts));
  }
  const unsigned n = static_cast<unsigned>(f.nvars()) - 1;
  for (const auto& form : normal_forms_up_to(n, true)) {
    if (form.n != n) continue;
    bool ok = true;
    for (const auto& [q, pc] : out.fingerprint) {
      auto pred = closed_form_count(form, q);
      if (pred.total != pc.total || pred.regular != pc.regular) ok = false;
    }
    if (ok) out.matches.push_back(form);
  }
  return out;
}

}  // namespace hypercomp
