#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayley {

// Exact nonnegative ratio; boundary/size ratios are never floated.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  // exact comparison by cross-multiplication
  bool leq(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <=
           static_cast<__int128>(o.num) * den;
  }
  bool lt(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <
           static_cast<__int128>(o.num) * den;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace cayley
