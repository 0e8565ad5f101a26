#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hypercomp/polynomial.hpp"

namespace hypercomp {

// Substitutes subs[i] for variable i of target. V is any commutative ring value
// type with + and * (Polynomial, LaurentAtX0, ...); lift embeds coefficients.
// Evaluation is Horner-like along the last variable with cached powers.
template <class D, class V, class Lift>
V compose_generic(const Polynomial<D>& target, const std::vector<V>& subs, Lift&& lift, const V& zero) {
  const std::size_t n = target.nvars();
  if (subs.size() != n) throw DomainMismatch("compose: substitution count differs from target arity");
  if (target.is_zero()) return zero;
  const auto& terms = target.terms();
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t v = n; v-- > 0;) {
      unsigned ea = terms[a].first[v], eb = terms[b].first[v];
      if (ea != eb) return ea < eb;
    }
    return false;
  });
  std::vector<std::vector<V>> powers(n);
  auto power = [&](std::size_t v, unsigned e) -> const V& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(subs[v]);
    while (pw.size() < e) pw.push_back(pw.back() * subs[v]);
    return pw[e - 1];
  };
  std::function<V(std::size_t, std::size_t, std::size_t)> eval = [&](std::size_t lo, std::size_t hi,
                                                                       std::size_t v) -> V {
    // Terms in [lo, hi) agree on exponents of variables >= v.
    if (v == 0) return lift(terms[order[lo]].second);
    const std::size_t var = v - 1;
    V acc = zero;
    bool have = false;
    std::size_t i = lo;
    while (i < hi) {
      unsigned e = terms[order[i]].first[var];
      std::size_t j = i;
      while (j < hi && terms[order[j]].first[var] == e) ++j;
      V part = eval(i, j, var);
      if (e > 0) part = part * power(var, e);
      acc = have ? acc + part : part;
      have = true;
      i = j;
    }
    return acc;
  };
  return eval(0, order.size(), n);
}

// compose(target, subs) for polynomial substitutions.
template <class D>
Polynomial<D> compose(const Polynomial<D>& target, const std::vector<Polynomial<D>>& subs) {
  if (subs.size() != target.nvars()) throw DomainMismatch("compose: substitution count differs from target arity");
  if (subs.empty()) return target;
  const std::size_t m = subs.front().nvars();
  for (const auto& s : subs) {
    if (s.nvars() != m) throw DomainMismatch("compose: substitutions have different arity");
    if (!s.domain().same(target.domain())) throw DomainMismatch("compose: coefficient domain mismatch");
  }
  const D& dom = target.domain();
  return compose_generic(
      target, subs, [&](const typename D::Elem& c) { return Polynomial<D>::constant(dom, m, c); },
      Polynomial<D>(dom, m));
}

template <class D>
std::vector<Polynomial<D>> identity_map(const D& dom, std::size_t n) {
  std::vector<Polynomial<D>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Polynomial<D>::variable(dom, n, i));
  return out;
}

// Returns q with a = b*q, or nullopt. Leading-term reduction under grlex: if b
// divides a exactly, every intermediate remainder is a multiple of b and its
// leading monomial is divisible by that of b, so the first failure is final.
template <class D>
std::optional<Polynomial<D>> divide_exact(const Polynomial<D>& a, const Polynomial<D>& b) {
  a.check_compatible(b);
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const D& dom = a.domain();
  if (a.is_zero()) return Polynomial<D>(dom, a.nvars());
  const auto& [lm, lc] = b.leading();
  auto lc_inv = dom.inv(lc);
  if (b.size() == 1) {
    std::vector<typename Polynomial<D>::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lm.divides(t.first)) return std::nullopt;
      out.emplace_back(lm.quotient_of(t.first), dom.mul(t.second, lc_inv));
    }
    return Polynomial<D>::from_sorted(dom, a.nvars(), std::move(out));
  }
  std::map<Monomial, typename D::Elem, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.first, t.second);
  std::vector<typename Polynomial<D>::Term> quot;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lm.divides(top->first)) return std::nullopt;
    Monomial qm = lm.quotient_of(top->first);
    auto qc = dom.mul(top->second, lc_inv);
    rem.erase(top);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const auto& t = b.terms()[i];
      Monomial m = t.first * qm;
      auto delta = dom.neg(dom.mul(t.second, qc));
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(m, std::move(delta));
      } else {
        dom.add_to(it->second, delta);
        if (dom.is_zero(it->second)) rem.erase(it);
      }
    }
    quot.emplace_back(qm, std::move(qc));
    if ((quot.size() & 0xFFFF) == 0) check_term_limit(quot.size() + rem.size());
  }
  return Polynomial<D>::from_sorted(dom, a.nvars(), std::move(quot));
}

// Repeatedly divides a by f while exact. Returns (a / f^k, k) with k <= max_times.
template <class D>
std::pair<Polynomial<D>, unsigned> divide_out(const Polynomial<D>& a, const Polynomial<D>& f, unsigned max_times) {
  Polynomial<D> cur = a;
  unsigned k = 0;
  while (k < max_times && !cur.is_zero()) {
    auto q = divide_exact(cur, f);
    if (!q) break;
    cur = std::move(*q);
    ++k;
  }
  return {cur, k};
}

template <class D>
struct DivisionResult {
  Polynomial<D> quotient;
  Polynomial<D> remainder;
};

// Division with remainder along one variable by a divisor whose leading
// coefficient in that variable is a nonzero constant.
template <class D>
DivisionResult<D> divide_monic_in_var(const Polynomial<D>& a, const Polynomial<D>& divisor, std::size_t var) {
  a.check_compatible(divisor);
  if (var >= a.nvars()) throw InvalidArgument("division variable out of range");
  if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const D& dom = a.domain();
  const unsigned deg = divisor.degree_in(var);
  const Monomial lead_mono = Monomial::var(var, deg);
  std::optional<typename D::Elem> lc;
  for (const auto& t : divisor.terms()) {
    if (t.first[var] != deg) continue;
    if (!(t.first == lead_mono) || lc) throw InvalidArgument("leading coefficient in the division variable is not a unit");
    lc = t.second;
  }
  auto lc_inv = dom.inv(*lc);
  auto cmp = [var](const Monomial& x, const Monomial& y) {
    if (x[var] != y[var]) return x[var] > y[var];
    return grlex_less(y, x);
  };
  std::map<Monomial, typename D::Elem, decltype(cmp)> rem(cmp);
  for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
  std::vector<typename Polynomial<D>::Term> quot;
  while (!rem.empty() && rem.begin()->first[var] >= deg) {
    auto top = rem.begin();
    Monomial qm = lead_mono.quotient_of(top->first);
    auto qc = dom.mul(top->second, lc_inv);
    rem.erase(top);
    for (const auto& t : divisor.terms()) {
      if (t.first == lead_mono) continue;
      Monomial m = t.first * qm;
      auto delta = dom.neg(dom.mul(t.second, qc));
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(m, std::move(delta));
      } else {
        dom.add_to(it->second, delta);
        if (dom.is_zero(it->second)) rem.erase(it);
      }
    }
    quot.emplace_back(qm, std::move(qc));
  }
  std::vector<typename Polynomial<D>::Term> r(rem.begin(), rem.end());
  return {Polynomial<D>::from_terms(dom, a.nvars(), std::move(quot)),
          Polynomial<D>::from_terms(dom, a.nvars(), std::move(r))};
}

// Drops every term whose exponent of var is >= power; zero iff a lies in (var^power).
template <class D>
Polynomial<D> truncate_mod_x0(const Polynomial<D>& a, unsigned power, std::size_t var = 0) {
  std::vector<typename Polynomial<D>::Term> out;
  for (const auto& t : a.terms())
    if (t.first[var] < power) out.push_back(t);
  return Polynomial<D>::from_sorted(a.domain(), a.nvars(), std::move(out));
}

// Exponent of the largest power of var dividing a (0 for a = 0).
template <class D>
unsigned var_order(const Polynomial<D>& a, std::size_t var) {
  if (a.is_zero()) return 0;
  unsigned k = ~0u;
  for (const auto& t : a.terms()) k = std::min(k, t.first[var]);
  return k;
}

// a / var^k; requires var^k | a.
template <class D>
Polynomial<D> divide_by_var_power(const Polynomial<D>& a, std::size_t var, unsigned k) {
  if (k == 0) return a;
  Monomial m = Monomial::var(var, k);
  std::vector<typename Polynomial<D>::Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    if (t.first[var] < k) throw InvalidArgument("not divisible by the requested variable power");
    out.emplace_back(m.quotient_of(t.first), t.second);
  }
  return Polynomial<D>::from_sorted(a.domain(), a.nvars(), std::move(out));
}

template <class D>
std::map<unsigned, Polynomial<D>> homogeneous_components(const Polynomial<D>& a) {
  std::map<unsigned, std::vector<typename Polynomial<D>::Term>> buckets;
  for (const auto& t : a.terms()) buckets[t.first.degree()].push_back(t);
  std::map<unsigned, Polynomial<D>> out;
  for (auto& [deg, terms] : buckets) out.emplace(deg, Polynomial<D>::from_sorted(a.domain(), a.nvars(), std::move(terms)));
  return out;
}

// Degree of a if homogeneous (the zero polynomial is not).
template <class D>
std::optional<unsigned> homogeneous_degree(const Polynomial<D>& a) {
  if (a.is_zero()) return std::nullopt;
  unsigned d = a.terms().front().first.degree();
  for (const auto& t : a.terms())
    if (t.first.degree() != d) return std::nullopt;
  return d;
}

template <class D>
bool is_homogeneous(const Polynomial<D>& a) {
  return homogeneous_degree(a).has_value();
}

template <class D>
std::set<unsigned> degree_residues_mod(const Polynomial<D>& a, unsigned d) {
  if (d == 0) throw InvalidArgument("modulus must be positive");
  std::set<unsigned> out;
  for (const auto& t : a.terms()) out.insert(t.first.degree() % d);
  return out;
}

// a(x + point).
template <class D>
Polynomial<D> taylor_shift(const Polynomial<D>& a, const std::vector<typename D::Elem>& point) {
  if (point.size() != a.nvars()) throw DomainMismatch("shift point has wrong length");
  std::vector<Polynomial<D>> subs;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    subs.push_back(Polynomial<D>::variable(a.domain(), a.nvars(), i) +
                   Polynomial<D>::constant(a.domain(), a.nvars(), point[i]));
  return compose(a, subs);
}

}  // namespace hypercomp
