#pragma once

#include <string>
#include <vector>

#include "hypercomp/polynomial.hpp"

namespace hypercomp {

// Splits "w,x,y,z" into names; rejects duplicates and more than 16 entries.
std::vector<std::string> parse_var_list(const std::string& text);

// Grammar: sums of signed terms; a term is a product of factors; a factor is
// an integer, a rational literal a/b, a declared variable, or a parenthesized
// expression, optionally raised to a nonnegative integer power with ^.
QPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

namespace detail {
struct CoeffText {
  bool negative;
  bool is_one;
  std::string magnitude;
};
CoeffText coeff_text(const Rationals&, const mpq_class& c);
CoeffText coeff_text(const GF& dom, FieldElement c);
std::string monomial_text(const Monomial& m, const std::vector<std::string>& names);
}  // namespace detail

// Inverse of parse_polynomial for rational polynomials (terms in grlex order).
template <class D>
std::string to_string(const Polynomial<D>& p, const std::vector<std::string>& names) {
  if (names.size() < p.nvars()) throw InvalidArgument("not enough variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    auto ct = detail::coeff_text(p.domain(), c);
    if (first)
      out += ct.negative ? "-" : "";
    else
      out += ct.negative ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += ct.magnitude;
    } else {
      if (!ct.is_one) out += ct.magnitude + "*";
      out += detail::monomial_text(m, names);
    }
  }
  return out;
}

// Default names x0, x1, ...
std::vector<std::string> default_var_names(std::size_t n);

}  // namespace hypercomp
