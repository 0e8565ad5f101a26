#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hypercomp {

inline constexpr std::uint32_t kDefaultEnumerationBound = 1u << 14;

// Element of GF(p^k) stored by its code sum_i c_i p^i, where c_i are the
// coordinates in the power basis 1, u, ..., u^{k-1}. Code order is the
// lexicographic order on (c_{k-1}, ..., c_0).
struct FieldElement {
  std::uint32_t code = 0;
  friend bool operator==(FieldElement a, FieldElement b) { return a.code == b.code; }
  friend bool operator<(FieldElement a, FieldElement b) { return a.code < b.code; }
};

struct FieldSpec {
  std::uint32_t p = 2;
  unsigned k = 1;
  // Monic modulus, coefficients from u^0 to u^k. Empty means built-in.
  std::vector<std::uint32_t> modulus;

  std::uint64_t q() const;
  std::string to_string() const;
};

// Accepts "q=9", "9", "p=3,k=2" or "p=3,k=2,mod=u^2+1".
FieldSpec parse_field_spec(const std::string& text);

bool is_prime(std::uint64_t n);
// Returns (p, k) when n = p^k with p prime, k >= 1.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t n);

// Univariate helpers over GF(p); coefficient vectors from low to high degree.
namespace gfp_poly {
std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a);
std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                  const std::vector<std::uint32_t>& m, std::uint32_t p);
std::vector<std::uint32_t> rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m, std::uint32_t p);
std::vector<std::uint32_t> gcd(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b, std::uint32_t p);
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);
// Smallest monic irreducible of degree k by code of its lower coefficients.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k);
}  // namespace gfp_poly

class FiniteField {
 public:
  static std::shared_ptr<const FiniteField> make(const FieldSpec& spec,
                                                 std::uint32_t enumeration_bound = kDefaultEnumerationBound);
  static std::shared_ptr<const FiniteField> make_q(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  FieldSpec spec() const { return FieldSpec{p_, k_, mod_}; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // The class of u in GF(p)[u]/(modulus); equals p as a code when k > 1.
  FieldElement u() const { return k_ == 1 ? FieldElement{0} : FieldElement{p_}; }
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_code(std::uint32_t c) const;
  std::vector<std::uint32_t> coords(FieldElement a) const;
  FieldElement from_coords(const std::vector<std::uint32_t>& c) const;

  bool is_zero(FieldElement a) const { return a.code == 0; }
  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return {0};
    std::uint32_t s = log_[a.code] + log_[b.code];
    if (s >= q_ - 1) s -= q_ - 1;
    return {exp_[s]};
  }
  // Extended Euclid on the modulus; throws InvalidArgument on zero.
  FieldElement inverse(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inverse(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement frobenius(FieldElement a) const { return pow(a, p_); }
  FieldElement primitive_element() const { return {prim_}; }

  // All q elements in code order.
  std::vector<FieldElement> elements() const;
  std::string to_string(FieldElement a) const;

 private:
  FiniteField() = default;
  std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> mod_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> neg_;
  std::uint32_t prim_ = 1;
  std::vector<std::uint16_t> add_table_;  // q*q entries when q <= 256
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace hypercomp
