#include "hypercomp/poly_io.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace hypercomp {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {
    dom_ = Rationals();
    n_ = vars.size();
  }

  QPoly parse() {
    QPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  QPoly expr() {
    QPoly acc(dom_, n_);
    bool first = true;
    for (;;) {
      int sign = 1;
      if (accept('-'))
        sign = -1;
      else if (accept('+'))
        sign = 1;
      else if (!first)
        break;
      QPoly t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  QPoly factor() {
    QPoly base = primary();
    if (accept('^')) {
      if (!peek_digit()) fail("expected exponent");
      mpz_class e = integer();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  QPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v(integer());
      std::size_t save = pos_;
      if (accept('/')) {
        if (!peek_digit()) {
          pos_ = save;
          fail("'/' must be followed by an integer denominator");
        }
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        v = mpq_class(v.get_num(), den);
        v.canonicalize();
      }
      return QPoly::constant(dom_, n_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return QPoly::variable(dom_, n_, i);
      pos_ = start;
      fail("undeclared variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  Rationals dom_;
  std::size_t n_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> parse_var_list(const std::string& text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string name;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    if (name.empty()) throw ParseError("empty variable name in list");
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw ParseError("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw ParseError("duplicate variable '" + name + "'");
    out.push_back(name);
  }
  if (out.empty()) throw ParseError("empty variable list");
  if (out.size() > kMaxVars) throw InvalidArgument("at most 16 variables are supported");
  return out;
}

QPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  if (vars.size() > kMaxVars) throw InvalidArgument("at most 16 variables are supported");
  return Parser(text, vars).parse();
}

std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

namespace detail {

CoeffText coeff_text(const Rationals&, const mpq_class& c) {
  mpq_class a = abs(c);
  return {sgn(c) < 0, a == 1, a.get_str()};
}

CoeffText coeff_text(const GF& dom, FieldElement c) { return {false, c.code == 1, dom.to_string(c)}; }

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size() && i < kMaxVars; ++i) {
    unsigned e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace detail

}  // namespace hypercomp
