#pragma once

// Exact arithmetic helpers used by the oracle paths: nonnegative rationals
// with 64-bit parts (conductances, volume fractions) and dyadic rationals
// m * 2^e (truncated weights and level sums).

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace specsparse {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int128 lhs = static_cast<int128>(a.num) * b.den;
    const int128 rhs = static_cast<int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Exact comparison of x against a double. Every finite double is a dyadic
// rational, so the comparison is decided without rounding.
std::strong_ordering compare_exact(const Rational& x, double d);

// m * 2^exp with a 128-bit mantissa. Operations throw std::overflow_error
// rather than lose bits.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(int128 mantissa, int exponent) : mant_(mantissa), exp_(exponent) {}

  // Exact conversion from a finite double.
  static Dyadic from_double(double d);

  int128 mantissa() const { return mant_; }
  int exponent() const { return exp_; }

  double to_double() const;

  Dyadic operator+(const Dyadic& other) const;
  Dyadic scaled_pow2(int k) const { return Dyadic(mant_, exp_ + k); }
  Dyadic times_int(std::int64_t k) const;

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  int128 mant_ = 0;
  int exp_ = 0;
};

}  // namespace specsparse
