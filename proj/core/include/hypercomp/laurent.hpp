#pragma once

#include <algorithm>

#include "hypercomp/poly_ops.hpp"

namespace hypercomp {

// Element numerator / x^power of the localization at one variable x (x0 unless
// chosen otherwise). Canonical: x does not divide the numerator when power > 0.
template <class D>
class LaurentAtX0 {
 public:
  LaurentAtX0() = default;
  explicit LaurentAtX0(Polynomial<D> num, unsigned power = 0, std::size_t var = 0)
      : num_(std::move(num)), power_(power), var_(var) {
    normalize();
  }

  static LaurentAtX0 constant(const D& dom, std::size_t nvars, const typename D::Elem& c, std::size_t var = 0) {
    return LaurentAtX0(Polynomial<D>::constant(dom, nvars, c), 0, var);
  }
  // x^e for any integer e.
  static LaurentAtX0 var_power(const D& dom, std::size_t nvars, std::size_t var, long e) {
    if (e >= 0)
      return LaurentAtX0(Polynomial<D>::monomial(dom, nvars, Monomial::var(var, static_cast<unsigned>(e)), dom.one()), 0, var);
    return LaurentAtX0(Polynomial<D>::constant(dom, nvars, dom.one()), static_cast<unsigned>(-e), var);
  }

  const Polynomial<D>& numerator() const { return num_; }
  unsigned x0_power() const { return power_; }
  std::size_t var() const { return var_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return power_ == 0; }
  Polynomial<D> to_polynomial() const {
    if (power_ != 0) throw InvalidArgument("Laurent element has a pole at the localized variable");
    return num_;
  }
  std::size_t size() const { return num_.size(); }

  friend LaurentAtX0 operator+(const LaurentAtX0& a, const LaurentAtX0& b) {
    a.check(b);
    unsigned k = std::max(a.power_, b.power_);
    return LaurentAtX0(a.lift_to(k) + b.lift_to(k), k, a.var_);
  }
  friend LaurentAtX0 operator-(const LaurentAtX0& a, const LaurentAtX0& b) {
    a.check(b);
    unsigned k = std::max(a.power_, b.power_);
    return LaurentAtX0(a.lift_to(k) - b.lift_to(k), k, a.var_);
  }
  LaurentAtX0 operator-() const { return LaurentAtX0(-num_, power_, var_); }
  friend LaurentAtX0 operator*(const LaurentAtX0& a, const LaurentAtX0& b) {
    a.check(b);
    return LaurentAtX0(a.num_ * b.num_, a.power_ + b.power_, a.var_);
  }
  friend bool operator==(const LaurentAtX0& a, const LaurentAtX0& b) {
    return a.var_ == b.var_ && a.power_ == b.power_ && a.num_ == b.num_;
  }
  friend bool operator!=(const LaurentAtX0& a, const LaurentAtX0& b) { return !(a == b); }

  // Multiplication by x^e for an integer e.
  LaurentAtX0 shift(long e) const {
    if (e >= 0) {
      unsigned u = static_cast<unsigned>(e);
      if (u <= power_) return LaurentAtX0(num_, power_ - u, var_);
      return LaurentAtX0(num_.mul_term(Monomial::var(var_, u - power_), num_.domain().one()), 0, var_);
    }
    return LaurentAtX0(num_, power_ + static_cast<unsigned>(-e), var_);
  }

  // True when this is c * x^e (a unit of the localized ring); reports e.
  std::optional<long> unit_exponent() const {
    if (num_.size() != 1) return std::nullopt;
    const Monomial& m = num_.terms()[0].first;
    if (m.degree() != m[var_]) return std::nullopt;
    return static_cast<long>(m[var_]) - static_cast<long>(power_);
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      power_ = 0;
      return;
    }
    unsigned k = std::min(power_, var_order(num_, var_));
    if (k > 0) {
      num_ = divide_by_var_power(num_, var_, k);
      power_ -= k;
    }
  }
  Polynomial<D> lift_to(unsigned k) const {
    if (k == power_) return num_;
    return num_.mul_term(Monomial::var(var_, k - power_), num_.domain().one());
  }
  void check(const LaurentAtX0& o) const {
    if (var_ != o.var_) throw DomainMismatch("Laurent elements localized at different variables");
  }

  Polynomial<D> num_;
  unsigned power_ = 0;
  std::size_t var_ = 0;
};

// Composition of a polynomial with Laurent substitutions.
template <class D>
LaurentAtX0<D> compose_laurent(const Polynomial<D>& target, const std::vector<LaurentAtX0<D>>& subs, std::size_t nvars,
                               std::size_t var) {
  const D& dom = target.domain();
  return compose_generic(
      target, subs, [&](const typename D::Elem& c) { return LaurentAtX0<D>::constant(dom, nvars, c, var); },
      LaurentAtX0<D>(Polynomial<D>(dom, nvars), 0, var));
}

}  // namespace hypercomp
