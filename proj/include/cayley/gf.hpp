#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayley::gf {

// Element of GF(p^k), stored as the canonical code sum(c_i * p^i) of its
// reduced polynomial coefficients. The field key ties the element to the
// (p, k) it was created from; mixing fields is an error.
struct Elem {
  std::uint32_t code = 0;
  std::uint32_t field_key = 0;
  friend bool operator==(const Elem&, const Elem&) = default;
};

// GF(p^k) arithmetic context. The modulus is the monic irreducible of
// degree k whose non-leading coefficient tuple is smallest (read from the
// highest degree down), so every downstream output is reproducible.
class Field {
 public:
  static constexpr std::uint64_t default_order_cap = 1u << 20;

  Field(std::uint32_t p, std::uint32_t k,
        std::uint64_t order_cap = default_order_cap);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t key() const { return key_; }
  // modulus coefficients c0..ck with ck = 1
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return {0, key_}; }
  Elem one() const { return {1 % q_, key_}; }
  Elem from_code(std::uint32_t code) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(const Elem& a) const;
  Elem from_int(std::int64_t n) const;  // image of an integer (e.g. -1)

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const;  // a -> a^p

  // generator of the multiplicative group, smallest in code order
  Elem primitive() const { return {primitive_, key_}; }
  std::uint64_t mult_order(Elem a) const;

  // unchecked code-level ops for the matrix kernels
  std::uint32_t addc(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t subc(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t negc(std::uint32_t a) const;
  std::uint32_t mulc(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t invc(std::uint32_t a) const;
  std::uint32_t powc(std::uint32_t a, std::uint64_t e) const;

  // canonical serialization: base-p digits, little-endian
  std::size_t digit_bytes() const { return k_ * (p_ <= 256 ? 1 : 4); }
  void append_digits(std::uint32_t code, std::string& out) const;

  // textual literal GF(p^k):c0,c1,...
  std::string literal(const Elem& a) const;
  Elem parse_element(const std::string& text) const;

 private:
  void check(const Elem& a, const char* op) const;
  std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_, k_, q_, key_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t primitive_ = 0;
  // reduction of x^(k+i) mod modulus, i in [0, k)
  std::vector<std::vector<std::uint32_t>> xk_red_;
  // dense op tables for small fields
  bool tables_ = false;
  std::vector<std::uint32_t> add_tab_, mul_tab_;
};

bool is_prime(std::uint64_t n);

// Splits a prime power q = p^k; throws if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

}  // namespace cayley::gf
