#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypercomp/domains.hpp"
#include "hypercomp/error.hpp"
#include "hypercomp/monomial.hpp"

namespace hypercomp {

inline constexpr std::size_t kDefaultTermLimit = 10'000'000;

// Global ceiling on the size of any intermediate polynomial.
inline std::atomic<std::size_t>& term_limit() {
  static std::atomic<std::size_t> limit{kDefaultTermLimit};
  return limit;
}

inline void check_term_limit(std::size_t n) {
  if (n > term_limit().load(std::memory_order_relaxed))
    throw ResourceLimit("term count " + std::to_string(n) + " exceeds ceiling " +
                        std::to_string(term_limit().load()));
}

// Immutable sparse polynomial. Terms are kept sorted by decreasing grlex order
// and never carry a zero coefficient.
template <class D>
class Polynomial {
 public:
  using Domain = D;
  using Elem = typename D::Elem;
  using Term = std::pair<Monomial, Elem>;

  Polynomial() = default;
  Polynomial(D dom, std::size_t nvars) : dom_(std::move(dom)), nvars_(nvars) {
    if (nvars > kMaxVars) throw InvalidArgument("at most 16 variables are supported");
  }

  static Polynomial constant(const D& dom, std::size_t nvars, const Elem& c) {
    Polynomial p(dom, nvars);
    if (!dom.is_zero(c)) p.terms_.emplace_back(Monomial(), c);
    return p;
  }
  static Polynomial constant(const D& dom, std::size_t nvars, long c) { return constant(dom, nvars, dom.from_int(c)); }
  static Polynomial variable(const D& dom, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw InvalidArgument("variable index out of range");
    Polynomial p(dom, nvars);
    p.terms_.emplace_back(Monomial::var(i), dom.one());
    return p;
  }
  static Polynomial monomial(const D& dom, std::size_t nvars, const Monomial& m, const Elem& c) {
    Polynomial p(dom, nvars);
    if (!dom.is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  // Builds from arbitrary terms: merges duplicates and drops zeros.
  static Polynomial from_terms(const D& dom, std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(dom, nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        dom.add_to(p.terms_.back().second, t.second);
      else
        p.terms_.push_back(std::move(t));
    }
    p.drop_zeros();
    return p;
  }
  // Terms already strictly decreasing and nonzero.
  static Polynomial from_sorted(const D& dom, std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(dom, nvars);
    p.terms_ = std::move(terms);
    return p;
  }

  const D& domain() const { return dom_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree()); }
  const Term& leading() const { return terms_.front(); }
  Elem constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return dom_.zero();
  }
  Elem coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grlex_less(x, t.first); });
    if (it != terms_.end() && it->first == m) return it->second;
    return dom_.zero();
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first[var]);
    return d;
  }
  unsigned min_degree() const {
    unsigned d = ~0u;
    for (const auto& t : terms_) d = std::min(d, t.first.degree());
    return terms_.empty() ? 0 : d;
  }
  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.first[var] != 0) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial r(dom_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, dom_.neg(t.second));
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.dom_, a.nvars_);
    if (a.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    if (b.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    const D& dom = a.dom_;
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Monomial m = ta.first * tb.first;
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(m, dom.mul(ta.second, tb.second));
          if ((acc.size() & 0xFFFF) == 0) check_term_limit(acc.size());
        } else {
          dom.add_product_to(it->second, ta.second, tb.second);
        }
      }
    }
    Polynomial r(dom, a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& kv : acc)
      if (!dom.is_zero(kv.second)) r.terms_.emplace_back(kv.first, std::move(kv.second));
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
    check_term_limit(r.terms_.size());
    return r;
  }

  Polynomial scale(const Elem& c) const {
    if (dom_.is_zero(c)) return Polynomial(dom_, nvars_);
    Polynomial r(dom_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, dom_.mul(t.second, c));
    return r;
  }

  // Multiplication by c * m; order is preserved since grlex is a monomial order.
  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    Polynomial r(dom_, nvars_);
    if (dom_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Elem v = dom_.mul(t.second, c);
      if (!dom_.is_zero(v)) r.terms_.emplace_back(t.first * m, std::move(v));
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(dom_, nvars_, dom_.one());
    if (e == 0) return result;
    Polynomial base = *this;
    bool first = true;
    while (e > 0) {
      if (e & 1) {
        result = first ? base : result * base;
        first = false;
      }
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first)) return false;
      if (!a.dom_.eq(a.terms_[i].second, b.terms_[i].second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (point.size() != nvars_) throw DomainMismatch("evaluation point has wrong length");
    Elem acc = dom_.zero();
    std::vector<std::vector<Elem>> powers(nvars_);
    for (const auto& t : terms_) {
      Elem v = t.second;
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned e = t.first[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(dom_.one());
        while (pw.size() <= e) pw.push_back(dom_.mul(pw.back(), point[i]));
        v = dom_.mul(v, pw[e]);
      }
      dom_.add_to(acc, v);
    }
    return acc;
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.first[var];
      if (e == 0) continue;
      Elem c = dom_.mul(t.second, dom_.from_int(e));
      if (dom_.is_zero(c)) continue;
      Monomial m = t.first;
      m.set(var, e - 1);
      out.emplace_back(m, std::move(c));
    }
    return from_terms(dom_, nvars_, std::move(out));
  }

  // Same polynomial viewed in a ring with n >= nvars() variables.
  Polynomial with_nvars(std::size_t n) const {
    if (n < nvars_) {
      for (std::size_t i = n; i < nvars_; ++i)
        if (involves(i)) throw DomainMismatch("cannot drop a variable that occurs");
    }
    Polynomial r = *this;
    r.nvars_ = n;
    return r;
  }

  // Renames variable i to mapping[i] in a ring with n variables.
  Polynomial rename(const std::vector<std::size_t>& mapping, std::size_t n) const {
    if (mapping.size() != nvars_) throw DomainMismatch("rename mapping has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.first[i]) m.set(mapping[i], m[mapping[i]] + t.first[i]);
      out.emplace_back(m, t.second);
    }
    return from_terms(dom_, n, std::move(out));
  }

  template <class D2, class F>
  Polynomial<D2> map_coefficients(const D2& dom2, F&& f) const {
    std::vector<typename Polynomial<D2>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto c = f(t.second);
      if (!dom2.is_zero(c)) out.emplace_back(t.first, std::move(c));
    }
    return Polynomial<D2>::from_sorted(dom2, nvars_, std::move(out));
  }

  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DomainMismatch("variable count mismatch");
    if (!dom_.same(o.dom_)) throw DomainMismatch("coefficient domain mismatch");
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_compatible(b);
    const D& dom = a.dom_;
    Polynomial r(dom, a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && grlex_less(b.terms_[j].first, a.terms_[i].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || grlex_less(a.terms_[i].first, b.terms_[j].first)) {
        const auto& t = b.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? dom.neg(t.second) : t.second);
      } else {
        Elem c = subtract ? dom.sub(a.terms_[i].second, b.terms_[j].second) : dom.add(a.terms_[i].second, b.terms_[j].second);
        if (!dom.is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    check_term_limit(r.terms_.size());
    return r;
  }

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [this](const Term& t) { return dom_.is_zero(t.second); }),
                 terms_.end());
  }

  D dom_{};
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using QPoly = Polynomial<Rationals>;
using GFPoly = Polynomial<GF>;

// Reduces rational coefficients into GF(p^k).
inline GFPoly to_gf(const QPoly& p, const FieldPtr& F) {
  GF dom(F);
  return p.map_coefficients(dom, [&](const mpq_class& c) { return embed(*F, c); });
}

}  // namespace hypercomp
