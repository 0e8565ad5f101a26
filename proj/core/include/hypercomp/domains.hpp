#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hypercomp/error.hpp"
#include "hypercomp/finite_field.hpp"

namespace hypercomp {

// Exact rationals backed by GMP.
struct Rationals {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw InvalidArgument("inverse of zero");
    return 1 / a;
  }
  void add_to(Elem& acc, const Elem& a) const { acc += a; }
  void add_product_to(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }
  bool same(const Rationals&) const { return true; }
};

// GF(p^k) adaptor holding a shared field context.
struct GF {
  using Elem = FieldElement;
  FieldPtr field;

  GF() = default;
  explicit GF(FieldPtr f) : field(std::move(f)) {}

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(std::int64_t v) const { return field->from_int(v); }
  bool is_zero(Elem a) const { return a.code == 0; }
  bool eq(Elem a, Elem b) const { return a.code == b.code; }
  Elem add(Elem a, Elem b) const { return field->add(a, b); }
  Elem sub(Elem a, Elem b) const { return field->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return field->mul(a, b); }
  Elem neg(Elem a) const { return field->neg(a); }
  Elem inv(Elem a) const { return field->inverse(a); }
  void add_to(Elem& acc, Elem a) const { acc = field->add(acc, a); }
  void add_product_to(Elem& acc, Elem a, Elem b) const { acc = field->add(acc, field->mul(a, b)); }
  std::string to_string(Elem a) const { return field->to_string(a); }
  std::uint64_t characteristic() const { return field->p(); }
  std::string name() const { return field->spec().to_string(); }
  bool same(const GF& o) const { return field == o.field || field->spec().to_string() == o.field->spec().to_string(); }
};

// Image of a rational in GF(p^k); throws NotEmbeddable when p divides the denominator.
inline FieldElement embed(const FiniteField& F, const mpq_class& v) {
  mpz_class p = F.p();
  mpz_class den = v.get_den() % p;
  if (den == 0) throw NotEmbeddable("coefficient " + v.get_str() + " has denominator divisible by " + p.get_str());
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  FieldElement n = F.from_int(num.get_si()), d = F.from_int(den.get_si());
  return F.div(n, d);
}

}  // namespace hypercomp
