#include "hypercomp/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hypercomp/error.hpp"

namespace hypercomp {

namespace {

std::uint32_t modp(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inv_modp(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  return modp(t, p);
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::string trim_ws(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

// Parses a univariate polynomial in u with integer coefficients, e.g. "u^2+u+1".
std::vector<std::int64_t> parse_u_poly(const std::string& text) {
  std::string s = trim_ws(text);
  if (s.empty()) throw ParseError("empty modulus");
  std::vector<std::int64_t> c;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coef = 1;
    bool have_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coef = coef * 10 + (s[i++] - '0');
      have_num = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    unsigned e = 0;
    if (i < s.size() && s[i] == 'u') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = 0;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad exponent in modulus");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
      }
    } else if (!have_num) {
      throw ParseError("unexpected character in modulus: " + s.substr(i));
    }
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] += sign * coef;
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw ParseError("unexpected character in modulus: " + s.substr(i));
  }
  return c;
}

}  // namespace

std::uint64_t FieldSpec::q() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "GF(" << q() << ")";
  if (k > 1 && !modulus.empty()) {
    os << " mod ";
    bool first = true;
    for (std::size_t e = modulus.size(); e-- > 0;) {
      if (modulus[e] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (modulus[e] != 1 || e == 0) os << modulus[e];
      if (e > 0) os << (modulus[e] != 1 ? "*" : "") << "u" << (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = prime_factors(n);
  if (f.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (n % f[0] == 0) {
    n /= f[0];
    ++k;
  }
  return std::make_pair(f[0], k);
}

FieldSpec parse_field_spec(const std::string& text) {
  std::string s = trim_ws(text);
  FieldSpec spec;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> k;
  std::string mod;
  std::stringstream ss(s);
  std::string item;
  auto to_uint = [](const std::string& v) -> std::uint64_t {
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected a positive integer, got '" + v + "'");
    return std::stoull(v);
  };
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      q = to_uint(item);
      continue;
    }
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "q")
      q = to_uint(val);
    else if (key == "p")
      p = to_uint(val);
    else if (key == "k")
      k = static_cast<unsigned>(to_uint(val));
    else if (key == "mod")
      mod = val;
    else
      throw ParseError("unknown field key '" + key + "'");
  }
  if (q) {
    auto pk = prime_power(*q);
    if (!pk) throw InvalidArgument("q=" + std::to_string(*q) + " is not a prime power");
    if (p && *p != pk->first) throw InvalidArgument("p does not match q");
    if (k && *k != pk->second) throw InvalidArgument("k does not match q");
    spec.p = pk->first;
    spec.k = pk->second;
  } else {
    if (!p) throw ParseError("field spec needs q or p");
    spec.p = static_cast<std::uint32_t>(*p);
    spec.k = k.value_or(1);
  }
  if (!mod.empty()) {
    auto c = parse_u_poly(mod);
    spec.modulus.clear();
    for (auto v : c) spec.modulus.push_back(modp(v, spec.p));
  }
  return spec;
}

namespace gfp_poly {

std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<std::uint32_t> rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m, std::uint32_t p) {
  a = trim(std::move(a));
  auto mm = trim(m);
  if (mm.empty()) throw InvalidArgument("division by zero polynomial");
  std::uint32_t lead_inv = inv_modp(mm.back(), p);
  while (a.size() >= mm.size()) {
    std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * mm[i] % p) % p);
    a = trim(std::move(a));
  }
  return a;
}

std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                  const std::vector<std::uint32_t>& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return rem(std::move(r), m, p);
}

std::vector<std::uint32_t> gcd(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b, std::uint32_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {
// u^(p^e) mod m by repeated p-th powering.
std::vector<std::uint32_t> frobenius_power(const std::vector<std::uint32_t>& m, std::uint32_t p, unsigned e) {
  std::vector<std::uint32_t> x = rem({0, 1}, m, p);
  for (unsigned i = 0; i < e; ++i) {
    std::vector<std::uint32_t> base = x, acc = {1};
    for (std::uint32_t n = p; n > 0; n >>= 1) {
      if (n & 1) acc = mulmod(acc, base, m, p);
      base = mulmod(base, base, m, p);
    }
    x = acc;
  }
  return x;
}

std::vector<std::uint32_t> sub_u(std::vector<std::uint32_t> a, std::uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  return trim(std::move(a));
}
}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  auto m = trim(monic);
  if (m.size() < 2) return false;
  unsigned k = static_cast<unsigned>(m.size() - 1);
  if (k == 1) return true;
  if (k <= 3) {
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = m.size(); i-- > 0;) v = (v * x + m[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Rabin: u^(p^k) = u mod m, and gcd(u^(p^(k/r)) - u, m) = 1 for primes r | k.
  if (!trim(sub_u(frobenius_power(m, p, k), p)).empty()) return false;
  for (auto r : prime_factors(k)) {
    auto g = gcd(m, sub_u(frobenius_power(m, p, k / r), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k) {
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < k; ++i) limit *= p;
  for (std::uint64_t code = 0; code < limit; ++code) {
    std::vector<std::uint32_t> m(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw InvalidArgument("no irreducible polynomial found");
}

}  // namespace gfp_poly

std::vector<std::uint32_t> FiniteField::coords(FieldElement a) const {
  std::vector<std::uint32_t> c(k_, 0);
  std::uint32_t v = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElement FiniteField::from_coords(const std::vector<std::uint32_t>& c) const {
  std::uint32_t code = 0;
  for (std::size_t i = std::min<std::size_t>(c.size(), k_); i-- > 0;) code = code * p_ + c[i] % p_;
  return {code};
}

std::vector<std::uint32_t> FiniteField::slow_mul(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) const {
  auto r = gfp_poly::mulmod(a, b, mod_, p_);
  r.resize(k_, 0);
  return r;
}

std::shared_ptr<const FiniteField> FiniteField::make(const FieldSpec& spec, std::uint32_t enumeration_bound) {
  if (spec.p > (1u << 16)) throw InvalidArgument("characteristic above 2^16 is not supported");
  if (!is_prime(spec.p)) throw InvalidArgument("p=" + std::to_string(spec.p) + " is not prime");
  if (spec.k < 1) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t q = spec.q();
  if (q > enumeration_bound) throw ResourceLimit("field size " + std::to_string(q) + " exceeds enumeration bound");

  std::shared_ptr<FiniteField> F(new FiniteField());
  F->p_ = spec.p;
  F->k_ = spec.k;
  F->q_ = static_cast<std::uint32_t>(q);
  if (spec.modulus.empty()) {
    F->mod_ = spec.k == 1 ? std::vector<std::uint32_t>{0, 1} : gfp_poly::default_modulus(spec.p, spec.k);
  } else {
    auto m = gfp_poly::trim(spec.modulus);
    if (m.size() != spec.k + 1 || m.back() != 1) throw InvalidArgument("modulus must be monic of degree k");
    if (!gfp_poly::is_irreducible(m, spec.p)) throw InvalidArgument("modulus is not irreducible");
    F->mod_ = m;
  }

  const std::uint32_t p = F->p_;
  F->neg_.resize(q);
  for (std::uint32_t c = 0; c < q; ++c) {
    auto v = F->coords({c});
    for (auto& x : v) x = (p - x) % p;
    F->neg_[c] = F->from_coords(v).code;
  }

  // Search a primitive element, then fill log/exp tables.
  auto factors = prime_factors(q - 1);
  auto power = [&](std::uint32_t g, std::uint64_t e) {
    std::vector<std::uint32_t> base = F->coords({g}), acc(F->k_, 0);
    acc[0] = 1;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = F->slow_mul(acc, base);
      base = F->slow_mul(base, base);
    }
    return F->from_coords(acc).code;
  };
  std::uint32_t prim = 1;
  if (q > 2) {
    for (std::uint32_t g = 2; g < q; ++g) {
      bool ok = true;
      for (auto r : factors)
        if (power(g, (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        prim = g;
        break;
      }
    }
  }
  F->prim_ = prim;
  F->exp_.assign(q - 1, 0);
  F->log_.assign(q, 0);
  std::vector<std::uint32_t> cur(F->k_, 0), g = F->coords({prim});
  cur[0] = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    std::uint32_t code = F->from_coords(cur).code;
    F->exp_[i] = code;
    F->log_[code] = i;
    cur = F->slow_mul(cur, g);
  }

  if (q <= 256 && F->k_ > 1) {
    F->add_table_.resize(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      auto ca = F->coords({a});
      for (std::uint32_t b = 0; b < q; ++b) {
        auto cb = F->coords({b});
        std::vector<std::uint32_t> s(F->k_);
        for (unsigned i = 0; i < F->k_; ++i) s[i] = (ca[i] + cb[i]) % p;
        F->add_table_[std::size_t(a) * q + b] = static_cast<std::uint16_t>(F->from_coords(s).code);
      }
    }
  }
  return F;
}

std::shared_ptr<const FiniteField> FiniteField::make_q(std::uint64_t q) {
  return make(parse_field_spec("q=" + std::to_string(q)));
}

FieldElement FiniteField::from_int(std::int64_t v) const { return {modp(v, p_)}; }

FieldElement FiniteField::from_code(std::uint32_t c) const {
  if (c >= q_) throw InvalidArgument("field element code out of range");
  return {c};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (k_ == 1) {
    std::uint32_t s = a.code + b.code;
    return {s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return {a.code ^ b.code};
  if (!add_table_.empty()) return {add_table_[std::size_t(a.code) * q_ + b.code]};
  std::uint32_t r = 0, mul = 1, x = a.code, y = b.code;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * mul;
    x /= p_;
    y /= p_;
    mul *= p_;
  }
  return {r};
}

FieldElement FiniteField::neg(FieldElement a) const { return {neg_[a.code]}; }

FieldElement FiniteField::inverse(FieldElement a) const {
  if (a.code == 0) throw InvalidArgument("inverse of zero");
  if (k_ == 1) return {inv_modp(a.code, p_)};
  // Extended Euclid in GF(p)[u]: s*a + t*m = g with g a nonzero constant.
  using V = std::vector<std::uint32_t>;
  auto sub_mul = [&](const V& x, const V& qv, const V& y) {
    // x - qv*y
    V prod(qv.size() + y.size(), 0);
    for (std::size_t i = 0; i < qv.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(qv[i]) * y[j]) % p_);
    V r(std::max(x.size(), prod.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint32_t xv = i < x.size() ? x[i] : 0, pv = i < prod.size() ? prod[i] : 0;
      r[i] = (xv + p_ - pv) % p_;
    }
    return gfp_poly::trim(r);
  };
  auto divmod = [&](V x, const V& y) {
    V qv(x.size() >= y.size() ? x.size() - y.size() + 1 : 0, 0);
    std::uint32_t li = inv_modp(y.back(), p_);
    while (x.size() >= y.size()) {
      std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(x.back()) * li % p_);
      std::size_t shift = x.size() - y.size();
      qv[shift] = c;
      for (std::size_t i = 0; i < y.size(); ++i)
        x[shift + i] = static_cast<std::uint32_t>((x[shift + i] + p_ - std::uint64_t(c) * y[i] % p_) % p_);
      x = gfp_poly::trim(std::move(x));
    }
    return std::make_pair(gfp_poly::trim(qv), x);
  };
  V r0 = mod_, r1 = gfp_poly::trim(coords(a));
  V s0 = {}, s1 = {1};
  while (r1.size() > 1) {
    auto [qv, r2] = divmod(r0, r1);
    V s2 = sub_mul(s0, qv, s1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  std::uint32_t ci = inv_modp(r1[0], p_);
  for (auto& v : s1) v = static_cast<std::uint32_t>(std::uint64_t(v) * ci % p_);
  s1.resize(k_, 0);
  return from_coords(s1);
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  std::uint64_t l = (std::uint64_t(log_[a.code]) * (e % (q_ - 1))) % (q_ - 1);
  return {exp_[l]};
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out[c] = {c};
  return out;
}

std::string FiniteField::to_string(FieldElement a) const {
  if (k_ == 1) return std::to_string(a.code);
  auto c = coords(a);
  std::string s;
  for (std::size_t e = c.size(); e-- > 0;) {
    if (c[e] == 0) continue;
    if (!s.empty()) s += "+";
    if (e == 0 || c[e] != 1) s += std::to_string(c[e]);
    if (e > 0) s += (c[e] != 1 ? "*u" : "u") + (e > 1 ? "^" + std::to_string(e) : std::string());
  }
  return s.empty() ? "0" : "(" + s + ")";
}

}  // namespace hypercomp
