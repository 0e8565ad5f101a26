#include "hypercomp/varieties.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace hypercomp {

namespace {

// Polynomial over GF(q) flattened for repeated evaluation.
struct Compiled {
  std::size_t n = 0;
  std::vector<FieldElement> coeff;
  std::vector<std::uint16_t> exps;  // row-major, n per term
  unsigned maxdeg = 0;

  Compiled() = default;
  explicit Compiled(const GFPoly& p) : n(p.nvars()) {
    for (const auto& [m, c] : p.terms()) {
      coeff.push_back(c);
      for (std::size_t i = 0; i < n; ++i) {
        exps.push_back(static_cast<std::uint16_t>(m[i]));
        maxdeg = std::max(maxdeg, m[i]);
      }
    }
  }
};

class Evaluator {
 public:
  Evaluator(const FiniteField& F, unsigned maxdeg) : F_(F), q_(F.q()), maxdeg_(maxdeg) {
    pow_.resize(std::size_t(maxdeg + 1) * q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
      FieldElement acc = F.one();
      for (unsigned e = 0; e <= maxdeg; ++e) {
        pow_[std::size_t(e) * q_ + x] = acc.code;
        acc = F.mul(acc, FieldElement{x});
      }
    }
  }

  bool is_zero_at(const Compiled& c, const std::uint32_t* pt) const {
    FieldElement acc{0};
    const std::uint16_t* e = c.exps.data();
    for (std::size_t t = 0; t < c.coeff.size(); ++t, e += c.n) {
      FieldElement v = c.coeff[t];
      for (std::size_t i = 0; i < c.n && v.code != 0; ++i)
        if (e[i]) v = F_.mul(v, FieldElement{pow_[std::size_t(e[i]) * q_ + pt[i]]});
      acc = F_.add(acc, v);
    }
    return acc.code == 0;
  }

 private:
  const FiniteField& F_;
  std::uint32_t q_;
  unsigned maxdeg_;
  std::vector<std::uint32_t> pow_;
};

std::uint64_t checked_pow(std::uint64_t q, std::size_t n, std::uint64_t bound) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > bound / q + 1) return bound + 1;
    r *= q;
  }
  return r;
}

// Index space of affine points (q^n) or normalized projective representatives.
struct PointSpace {
  std::size_t n;
  std::uint32_t q;
  bool projective;
  std::uint64_t size;
  std::vector<std::uint64_t> block_start;  // projective: start index of lead position i

  PointSpace(std::size_t n_, std::uint32_t q_, bool proj, std::uint64_t bound) : n(n_), q(q_), projective(proj) {
    if (!projective) {
      size = checked_pow(q, n, bound);
    } else {
      size = 0;
      for (std::size_t i = 0; i < n; ++i) {
        block_start.push_back(size);
        size += checked_pow(q, n - 1 - i, bound);
        if (size > bound) break;
      }
    }
    if (size > bound)
      throw ResourceLimit("point enumeration exceeds the bound of " + std::to_string(bound) + " points");
  }

  void decode(std::uint64_t idx, std::uint32_t* pt) const {
    std::size_t start = 0;
    if (projective) {
      std::size_t lead = 0;
      while (lead + 1 < n && block_start[lead + 1] <= idx) ++lead;
      idx -= block_start[lead];
      for (std::size_t i = 0; i < lead; ++i) pt[i] = 0;
      pt[lead] = 1;
      start = lead + 1;
    }
    for (std::size_t i = n; i-- > start;) {
      pt[i] = static_cast<std::uint32_t>(idx % q);
      idx /= q;
    }
  }
};

unsigned thread_count(const CountOptions& opts, std::uint64_t work) {
  unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  if (work < 4096) t = 1;
  return std::min<unsigned>(t, 64);
}

template <class Fn>
void parallel_ranges(std::uint64_t size, unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    fn(0u, std::uint64_t(0), size);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = (size + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = std::min(size, chunk * t), hi = std::min(size, lo + chunk);
    pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

Hypersurface Hypersurface::affine(QPoly defining) {
  if (defining.is_zero()) throw InvalidArgument("defining polynomial must be nonzero");
  if (defining.degree() < 1) throw InvalidArgument("defining polynomial must have degree >= 1");
  return Hypersurface(std::move(defining), Ambient::Affine);
}

Hypersurface Hypersurface::projective(QPoly defining) {
  if (defining.is_zero()) throw InvalidArgument("defining polynomial must be nonzero");
  if (!is_homogeneous(defining)) throw InvalidArgument("projective hypersurface needs a homogeneous polynomial");
  if (defining.degree() < 1) throw InvalidArgument("defining polynomial must have degree >= 1");
  return Hypersurface(std::move(defining), Ambient::Projective);
}

std::uint64_t ambient_point_count(Ambient a, std::size_t nvars, std::uint64_t q) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < nvars; ++i) r *= q;
  return a == Ambient::Affine ? r : (r - 1) / (q - 1);
}

PointCount count_points(const Hypersurface& h, const FieldPtr& F, const std::vector<Condition>& conditions,
                        const CountOptions& opts) {
  const std::size_t n = h.nvars();
  PointSpace space(n, F->q(), h.is_projective(), opts.max_points);
  GFPoly f = to_gf(h.defining(), F);
  Compiled cf(f);
  std::vector<Compiled> partials;
  for (std::size_t i = 0; i < n; ++i) partials.emplace_back(f.derivative(i));
  std::vector<Compiled> conds;
  std::vector<bool> vanish;
  for (const auto& c : conditions) {
    if (c.poly.nvars() != n) throw DomainMismatch("condition polynomial has wrong arity");
    conds.emplace_back(to_gf(c.poly, F));
    vanish.push_back(c.vanish);
  }
  unsigned maxdeg = cf.maxdeg;
  for (const auto& c : conds) maxdeg = std::max(maxdeg, c.maxdeg);
  Evaluator ev(*F, maxdeg);

  unsigned threads = thread_count(opts, space.size);
  std::vector<PointCount> partial(threads);
  parallel_ranges(space.size, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> pt(n);
    PointCount pc;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      space.decode(idx, pt.data());
      bool ok = true;
      for (std::size_t c = 0; c < conds.size() && ok; ++c) ok = ev.is_zero_at(conds[c], pt.data()) == vanish[c];
      if (!ok || !ev.is_zero_at(cf, pt.data())) continue;
      ++pc.total;
      bool sing = true;
      for (const auto& d : partials)
        if (!ev.is_zero_at(d, pt.data())) {
          sing = false;
          break;
        }
      ++(sing ? pc.singular : pc.regular);
    }
    partial[t] = pc;
  });
  PointCount out;
  out.q = F->q();
  for (const auto& pc : partial) {
    out.total += pc.total;
    out.regular += pc.regular;
    out.singular += pc.singular;
  }
  return out;
}

LocusReport max_multiplicity_locus(const Hypersurface& h, const FieldPtr& F, const CountOptions& opts) {
  if (!h.is_projective()) throw InvalidArgument("max multiplicity locus is defined for projective hypersurfaces");
  const std::size_t n = h.nvars();
  const unsigned d = h.degree();
  PointSpace space(n, F->q(), true, opts.max_points);
  GFPoly f = to_gf(h.defining(), F);
  Compiled cf(f);
  std::vector<Compiled> partials;
  for (std::size_t i = 0; i < n; ++i) partials.emplace_back(f.derivative(i));
  Evaluator ev(*F, cf.maxdeg);

  LocusReport rep;
  rep.degree = d;
  std::vector<std::uint32_t> pt(n);
  for (std::uint64_t idx = 0; idx < space.size; ++idx) {
    space.decode(idx, pt.data());
    if (!ev.is_zero_at(cf, pt.data())) continue;
    if (d >= 2) {
      bool sing = true;
      for (const auto& p : partials)
        if (!ev.is_zero_at(p, pt.data())) {
          sing = false;
          break;
        }
      if (!sing) continue;
    }
    std::vector<FieldElement> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = {pt[i]};
    if (multiplicity_at(f, true, point).multiplicity == d) rep.points.push_back(point);
  }

  auto normalize = [&](std::vector<FieldElement> v) {
    for (std::size_t i = 0; i < n; ++i)
      if (v[i].code != 0) {
        FieldElement inv = F->inverse(v[i]);
        for (auto& c : v) c = F->mul(c, inv);
        break;
      }
    return v;
  };
  std::set<std::vector<std::uint32_t>> members;
  for (const auto& p : rep.points) {
    std::vector<std::uint32_t> key;
    for (auto c : p) key.push_back(c.code);
    members.insert(key);
  }
  for (std::size_t a = 0; a < rep.points.size() && rep.linear; ++a) {
    for (std::size_t b = a + 1; b < rep.points.size() && rep.linear; ++b) {
      // Points p_a + t p_b for t in F_q, plus p_b itself.
      for (std::uint32_t t = 0; t < F->q(); ++t) {
        std::vector<FieldElement> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = F->add(rep.points[a][i], F->mul({t}, rep.points[b][i]));
        v = normalize(v);
        std::vector<std::uint32_t> key;
        for (auto c : v) key.push_back(c.code);
        if (!members.count(key)) {
          rep.linear = false;
          rep.detail = "line through points " + std::to_string(a) + " and " + std::to_string(b) + " leaves the locus";
          break;
        }
      }
    }
  }
  return rep;
}

std::vector<mpq_class> rational_roots(std::vector<mpz_class> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<mpq_class> roots;
  if (c.size() <= 1) return roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() <= 1) return roots;
  auto divisors = [](mpz_class v) {
    v = abs(v);
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 40) throw ResourceLimit("rational root search: coefficient too large");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    return out;
  };
  std::set<mpq_class> cand;
  for (const auto& p : divisors(c.front()))
    for (const auto& q : divisors(c.back())) {
      mpq_class r(p, q);
      r.canonicalize();
      cand.insert(r);
      cand.insert(-r);
    }
  for (const auto& r : cand) {
    mpq_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
    if (acc == 0) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

template <class D>
struct LineSetup {
  std::vector<typename D::Elem> a, b;  // point(t) = a + t b, with a[lead] = 1, b[lead] = 0
  std::size_t lead = 0;
  // Coefficient polynomials (in t, variable index n) of the x-degree-m part.
  std::vector<Polynomial<D>> lowest;
  unsigned generic = 0;
};

template <class D>
LineSetup<D> setup_line(const Polynomial<D>& f, std::vector<typename D::Elem> p0, std::vector<typename D::Elem> p1) {
  const D& dom = f.domain();
  const std::size_t n = f.nvars();
  if (p0.size() != n || p1.size() != n) throw DomainMismatch("line points have wrong length");
  if (!is_homogeneous(f)) throw InvalidArgument("line scan needs a homogeneous polynomial");
  LineSetup<D> s;
  s.lead = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!dom.is_zero(p0[i])) {
      s.lead = i;
      break;
    }
  if (s.lead == n) throw InvalidArgument("first line point is the zero vector");
  auto inv = dom.inv(p0[s.lead]);
  auto ratio = dom.mul(p1[s.lead], inv);
  s.a.resize(n);
  s.b.resize(n);
  bool b_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    s.a[i] = dom.mul(p0[i], inv);
    s.b[i] = dom.mul(dom.sub(p1[i], dom.mul(ratio, p0[i])), inv);
    if (!dom.is_zero(s.b[i])) b_zero = false;
  }
  if (b_zero) throw InvalidArgument("line points coincide");
  // Ring with x_0..x_{n-1} and t = x_n.
  const std::size_t m = n + 1;
  using P = Polynomial<D>;
  P t = P::variable(dom, m, n);
  std::vector<P> subs;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == s.lead)
      subs.push_back(P::constant(dom, m, dom.one()));
    else
      subs.push_back(P::variable(dom, m, i) + P::constant(dom, m, s.a[i]) + t.scale(s.b[i]));
  }
  P g = compose(f.with_nvars(m), [&] {
    auto v = subs;
    v.push_back(t);
    return v;
  }());
  // Group by monomial in x (t stripped).
  std::map<unsigned, std::map<std::vector<unsigned>, std::vector<typename P::Term>>> by_deg;
  for (const auto& [mono, c] : g.terms()) {
    unsigned xdeg = mono.degree() - mono[n];
    std::vector<unsigned> key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = mono[i];
    by_deg[xdeg][key].emplace_back(Monomial::var(n, mono[n]), c);
  }
  if (by_deg.count(0)) throw InvalidArgument("line is not contained in the hypersurface");
  if (by_deg.empty()) throw InvalidArgument("zero polynomial");
  s.generic = by_deg.begin()->first;
  for (auto& [key, terms] : by_deg.begin()->second) s.lowest.push_back(P::from_terms(dom, m, terms));
  return s;
}

template <class D>
std::vector<typename D::Elem> point_at(const D& dom, const LineSetup<D>& s, const typename D::Elem& t) {
  std::vector<typename D::Elem> v(s.a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = dom.add(s.a[i], dom.mul(t, s.b[i]));
  return v;
}

template <class D>
bool lowest_vanishes_at(const D& dom, const LineSetup<D>& s, const typename D::Elem& t) {
  const std::size_t m = s.a.size() + 1;
  std::vector<typename D::Elem> pt(m, dom.zero());
  pt[m - 1] = t;
  for (const auto& c : s.lowest)
    if (!dom.is_zero(c.evaluate(pt))) return false;
  return true;
}

template <class D>
void finish(const Polynomial<D>& f, const LineSetup<D>& s, LineScanReport& rep) {
  rep.generic_multiplicity = s.generic;
  rep.degree = static_cast<unsigned>(f.degree());
  rep.max_multiplicity = s.generic;
  // The point at t = infinity is [b].
  rep.exceptional.emplace_back("inf", multiplicity_at(f, true, s.b).multiplicity);
  for (const auto& e : rep.exceptional) rep.max_multiplicity = std::max(rep.max_multiplicity, e.second);
}

}  // namespace

LineScanReport multiplicity_along_line(const QPoly& f, const std::vector<mpq_class>& p0,
                                       const std::vector<mpq_class>& p1) {
  Rationals dom;
  auto s = setup_line(f, p0, p1);
  LineScanReport rep;
  // Candidates: rational roots of the first nonconstant lowest coefficient.
  std::vector<mpq_class> cands;
  bool constant_found = false;
  for (const auto& c : s.lowest)
    if (c.is_constant()) constant_found = true;
  if (!constant_found) {
    const QPoly& c = s.lowest.front();
    const std::size_t tvar = f.nvars();
    std::vector<mpq_class> coeffs(c.degree_in(tvar) + 1, 0);
    for (const auto& [mono, v] : c.terms()) coeffs[mono[tvar]] = v;
    mpz_class lcm = 1;
    for (const auto& v : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& v : coeffs) ints.push_back(mpz_class(v * lcm));
    cands = rational_roots(ints);
  }
  for (const auto& t : cands) {
    if (!lowest_vanishes_at(dom, s, t)) continue;
    rep.exceptional.emplace_back(t.get_str(), multiplicity_at(f, true, point_at(dom, s, t)).multiplicity);
  }
  rep.limitation = "exceptional parameters searched among rational numbers only";
  finish(f, s, rep);
  return rep;
}

LineScanReport multiplicity_along_line(const GFPoly& f, const std::vector<FieldElement>& p0,
                                       const std::vector<FieldElement>& p1) {
  const GF& dom = f.domain();
  auto s = setup_line(f, p0, p1);
  LineScanReport rep;
  for (auto t : dom.field->elements()) {
    if (!lowest_vanishes_at(dom, s, t)) continue;
    rep.exceptional.emplace_back(dom.to_string(t), multiplicity_at(f, true, point_at(dom, s, t)).multiplicity);
  }
  finish(f, s, rep);
  return rep;
}

}  // namespace hypercomp
