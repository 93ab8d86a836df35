#include "specsparse/exact.h"

#include <bit>
#include <limits>

namespace specsparse {
namespace {

int128 abs128(int128 x) { return x < 0 ? -x : x; }

int bit_length(int128 x) {
  auto u = static_cast<uint128>(abs128(x));
  const auto hi = static_cast<std::uint64_t>(u >> 64);
  const auto lo = static_cast<std::uint64_t>(u);
  if (hi != 0) return 128 - std::countl_zero(hi);
  return 64 - std::countl_zero(lo);
}

int128 shift_left_checked(int128 x, int k) {
  if (x == 0) return 0;
  if (k < 0 || bit_length(x) + k > 126) throw std::overflow_error("dyadic mantissa overflow");
  return x * (static_cast<int128>(1) << k);
}

Dyadic normalized(int128 m, int e) {
  if (m == 0) return Dyadic(0, 0);
  while ((m & 1) == 0) {
    m /= 2;
    ++e;
  }
  return Dyadic(m, e);
}

}  // namespace

Dyadic Dyadic::from_double(double d) {
  if (!std::isfinite(d)) throw std::domain_error("non-finite value has no dyadic form");
  if (d == 0.0) return Dyadic(0, 0);
  int e = 0;
  const double frac = std::frexp(d, &e);
  const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
  return normalized(mant, e - 53);
}

double Dyadic::to_double() const {
  return std::ldexp(static_cast<double>(mant_), exp_);
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
  if (mant_ == 0) return other;
  if (other.mant_ == 0) return *this;
  const int e = std::min(exp_, other.exp_);
  const int128 a = shift_left_checked(mant_, exp_ - e);
  const int128 b = shift_left_checked(other.mant_, other.exp_ - e);
  const int128 sum = a + b;
  return normalized(sum, e);
}

Dyadic Dyadic::times_int(std::int64_t k) const {
  if (k == 0 || mant_ == 0) return Dyadic(0, 0);
  if (bit_length(mant_) + bit_length(k) > 126) throw std::overflow_error("dyadic mantissa overflow");
  return normalized(mant_ * k, exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int sa = (a.mant_ > 0) - (a.mant_ < 0);
  const int sb = (b.mant_ > 0) - (b.mant_ < 0);
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same sign: compare magnitudes by leading bit position first.
  const int ta = bit_length(a.mant_) + a.exp_;
  const int tb = bit_length(b.mant_) + b.exp_;
  std::strong_ordering mag = std::strong_ordering::equal;
  if (ta != tb) {
    mag = ta <=> tb;
  } else {
    const int e = std::min(a.exp_, b.exp_);
    const int128 ma = abs128(a.mant_) << (a.exp_ - e);
    const int128 mb = abs128(b.mant_) << (b.exp_ - e);
    mag = ma < mb ? std::strong_ordering::less
                  : (ma > mb ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  if (sa > 0) return mag;
  return 0 <=> mag;
}

std::strong_ordering compare_exact(const Rational& x, double d) {
  if (std::isnan(d)) throw std::domain_error("compare_exact: NaN");
  if (std::isinf(d)) return d > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  // x.num / x.den  vs  d   <=>   x.num  vs  d * x.den   (den > 0)
  return Dyadic(x.num, 0) <=> Dyadic::from_double(d).times_int(x.den);
}

}  // namespace specsparse
