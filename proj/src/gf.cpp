// Exact arithmetic in GF(p^k) with a deterministically chosen modulus.

#include "cayley/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cayley::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, index = degree

int degree(const Poly& f) {
  for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
    if (f[d] != 0) return d;
  return -1;
}

// f mod g over GF(p), g monic
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const int dg = degree(g);
  for (int df = degree(f); df >= dg && dg >= 0; df = degree(f)) {
    const std::uint32_t c = f[df];
    for (int i = 0; i <= dg; ++i) {
      const std::uint64_t t = static_cast<std::uint64_t>(g[i]) * c;
      const std::uint32_t r = static_cast<std::uint32_t>(t % p);
      f[df - dg + i] = (f[df - dg + i] + p - r) % p;
    }
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
  return degree(poly_mod(f, g, p)) < 0;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t deg, std::uint32_t p,
                    bool monic) {
  Poly f(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[deg] = monic ? 1 : 0;
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2 suffices at
// this scale (q <= 2^20).
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int df = degree(f);
  if (df <= 0) return false;
  if (df == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  for (int d = 1; d <= df / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (divides(poly_from_code(code, d, p, true), f, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t k = 0;
  std::uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " is not a prime power");
  return {static_cast<std::uint32_t>(p), k};
}

Field::Field(std::uint32_t p, std::uint32_t k, std::uint64_t order_cap)
    : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > order_cap)
      throw std::runtime_error("field order exceeds configured cap");
  }
  q_ = static_cast<std::uint32_t>(q);
  key_ = (p_ << 6) | k_;

  // smallest monic irreducible of degree k; for k = 1 this is x itself
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t code = 0;; ++code) {
      if (code >= q_) throw std::runtime_error("no irreducible modulus found");
      Poly f = poly_from_code(code, k_, p_, true);
      if (is_irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
  }

  // reduction vectors for x^(k+i)
  xk_red_.resize(k_);
  {
    Poly x(k_ + k_ + 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::fill(x.begin(), x.end(), 0);
      x[k_ + i] = 1;
      Poly r = poly_mod(x, modulus_, p_);
      r.resize(k_);
      xk_red_[i] = r;
    }
  }

  if (q_ <= 512) {
    tables_ = true;
    add_tab_.resize(static_cast<std::size_t>(q_) * q_);
    mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t s = 0, pw = 1;
        std::uint32_t aa = a, bb = b;
        for (std::uint32_t i = 0; i < k_; ++i) {
          s += ((aa % p_ + bb % p_) % p_) * pw;
          aa /= p_;
          bb /= p_;
          pw *= p_;
        }
        add_tab_[static_cast<std::size_t>(a) * q_ + b] = s;
        mul_tab_[static_cast<std::size_t>(a) * q_ + b] = mul_generic(a, b);
      }
  }

  // smallest generator of the multiplicative group
  const auto factors = prime_factors(q_ - 1);
  for (std::uint32_t c = 1; c < q_; ++c) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (powc(c, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok || q_ == 2) {
      primitive_ = c;
      break;
    }
  }
}

Elem Field::from_code(std::uint32_t code) const {
  if (code >= q_) throw std::invalid_argument("element code out of range");
  return {code, key_};
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("too many coefficients");
  std::uint32_t code = 0, pw = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t c = i < coeffs.size() ? coeffs[i] : 0;
    if (c >= p_) throw std::invalid_argument("coefficient out of range");
    code += c * pw;
    pw *= p_;
  }
  return {code, key_};
}

std::vector<std::uint32_t> Field::coeffs(const Elem& a) const {
  check(a, "coeffs");
  std::vector<std::uint32_t> out(k_);
  std::uint32_t c = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), key_};
}

void Field::check(const Elem& a, const char* op) const {
  if (a.field_key != key_)
    throw std::invalid_argument(std::string("mixed-field operands in ") + op);
}

std::uint32_t Field::addc(std::uint32_t a, std::uint32_t b) const {
  if (tables_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
  std::uint32_t s = 0, pw = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    s += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return s;
}

std::uint32_t Field::negc(std::uint32_t a) const {
  std::uint32_t s = 0, pw = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    s += ((p_ - a % p_) % p_) * pw;
    a /= p_;
    pw *= p_;
  }
  return s;
}

std::uint32_t Field::subc(std::uint32_t a, std::uint32_t b) const {
  return addc(a, negc(b));
}

std::uint32_t Field::mul_generic(std::uint32_t a, std::uint32_t b) const {
  // schoolbook product then reduce the high part through xk_red_
  std::vector<std::uint32_t> prod(2 * k_, 0);
  std::uint32_t av = a;
  for (std::uint32_t i = 0; i < k_; ++i, av /= p_) {
    const std::uint32_t ai = av % p_;
    if (ai == 0) continue;
    std::uint32_t bv = b;
    for (std::uint32_t j = 0; j < k_; ++j, bv /= p_) {
      const std::uint32_t bj = bv % p_;
      if (bj == 0) continue;
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ai) * bj) % p_);
    }
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t hi = prod[k_ + i];
    if (hi == 0) continue;
    const auto& red = xk_red_[i];
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[j] = static_cast<std::uint32_t>(
          (prod[j] + static_cast<std::uint64_t>(hi) * red[j]) % p_);
    }
  }
  std::uint32_t code = 0, pw = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    code += prod[i] * pw;
    pw *= p_;
  }
  return code;
}

std::uint32_t Field::mulc(std::uint32_t a, std::uint32_t b) const {
  if (tables_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
  return mul_generic(a, b);
}

std::uint32_t Field::powc(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % q_;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) r = mulc(r, base);
    base = mulc(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::invc(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return powc(a, q_ - 2);
}

Elem Field::add(Elem a, Elem b) const {
  check(a, "add");
  check(b, "add");
  return {addc(a.code, b.code), key_};
}
Elem Field::sub(Elem a, Elem b) const {
  check(a, "sub");
  check(b, "sub");
  return {subc(a.code, b.code), key_};
}
Elem Field::neg(Elem a) const {
  check(a, "neg");
  return {negc(a.code), key_};
}
Elem Field::mul(Elem a, Elem b) const {
  check(a, "mul");
  check(b, "mul");
  return {mulc(a.code, b.code), key_};
}
Elem Field::inv(Elem a) const {
  check(a, "inv");
  return {invc(a.code), key_};
}
Elem Field::pow(Elem a, std::uint64_t e) const {
  check(a, "pow");
  return {powc(a.code, e), key_};
}
Elem Field::frobenius(Elem a) const {
  check(a, "frobenius");
  return {powc(a.code, p_), key_};
}

std::uint64_t Field::mult_order(Elem a) const {
  check(a, "mult_order");
  if (a.code == 0) throw std::invalid_argument("order of zero");
  std::uint64_t n = 1;
  std::uint32_t x = a.code;
  while (x != 1 % q_) {
    x = mulc(x, a.code);
    ++n;
    if (n > q_) throw std::runtime_error("order search overran field size");
  }
  return n;
}

void Field::append_digits(std::uint32_t code, std::string& out) const {
  if (p_ <= 256) {
    for (std::uint32_t i = 0; i < k_; ++i) {
      out.push_back(static_cast<char>(code % p_));
      code /= p_;
    }
  } else {
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t d = code % p_;
      code /= p_;
      for (int b = 0; b < 4; ++b) {
        out.push_back(static_cast<char>(d & 0xff));
        d >>= 8;
      }
    }
  }
}

std::string Field::literal(const Elem& a) const {
  check(a, "literal");
  std::ostringstream os;
  os << "GF(" << p_ << "^" << k_ << "):";
  const auto cs = coeffs(a);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (i) os << ",";
    os << cs[i];
  }
  return os.str();
}

Elem Field::parse_element(const std::string& text) const {
  const auto colon = text.find(':');
  std::string coeff_part = text;
  if (text.rfind("GF(", 0) == 0) {
    if (colon == std::string::npos)
      throw std::invalid_argument("malformed field literal: " + text);
    const std::string head = text.substr(3, text.find(')') - 3);
    const auto caret = head.find('^');
    const std::uint32_t p = std::stoul(head.substr(0, caret));
    const std::uint32_t k =
        caret == std::string::npos ? 1 : std::stoul(head.substr(caret + 1));
    if (p != p_ || k != k_)
      throw std::invalid_argument("field literal " + text +
                                  " does not match this field");
    coeff_part = text.substr(colon + 1);
  }
  std::vector<std::uint32_t> cs;
  std::stringstream ss(coeff_part);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    cs.push_back(std::stoul(tok));
  }
  return from_coeffs(cs);
}

}  // namespace cayley::gf
