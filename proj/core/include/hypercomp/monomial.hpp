#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "hypercomp/error.hpp"

namespace hypercomp {

inline constexpr std::size_t kMaxVars = 16;

// Dense exponent vector over at most kMaxVars variables. Absent variables have
// exponent zero, so the sparse "no stored zero" invariant holds trivially.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(std::size_t i, unsigned e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVars) throw InvalidArgument("variable index out of range");
    if (e > 0xFFFFu) throw ResourceLimit("exponent exceeds 65535");
    deg_ = deg_ - e_[i] + e;
    e_[i] = static_cast<std::uint16_t>(e);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(e_[i]) + o.e_[i];
      if (s > 0xFFFFu) throw ResourceLimit("exponent exceeds 65535");
      r.e_[i] = static_cast<std::uint16_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Requires divides(o) on the right-hand side: o / *this.
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = o.e_[i] - e_[i];
    r.deg_ = o.deg_ - deg_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  // Graded lexicographic order with x0 > x1 > ... .
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : e_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Strict weak ordering placing larger monomials first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

}  // namespace hypercomp
