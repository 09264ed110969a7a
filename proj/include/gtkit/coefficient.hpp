/*
   Copyright 2026 The gtkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Polynomial coefficient: a reduced fraction of machine integers that falls
// back to a shared GMP rational once it no longer fits.

#ifndef GTKIT_COEFFICIENT_HPP
#define GTKIT_COEFFICIENT_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>

#include "rational.hpp"

namespace gtkit {

class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long v) : num_(v) {  // NOLINT(google-explicit-constructor)
    if (v == std::numeric_limits<long>::min()) set_big(Rational(v));
  }
  Coefficient(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Coefficient(const Rational& q) {  // NOLINT(google-explicit-constructor)
    if (fits(q.get_num()) && fits(q.get_den())) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
    } else {
      set_big(q);
    }
  }

  Rational rational() const {
    if (big_) return *big_;
    Rational r;
    mpz_set_si(r.get_num_mpz_t(), num_);
    mpz_set_si(r.get_den_mpz_t(), den_);
    return r;
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  Coefficient operator-() const {
    if (big_) return Coefficient(Rational(-*big_));
    Coefficient r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b) { return add(a, b, 1); }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return add(a, b, -1); }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.big_ || b.big_) return Coefficient(Rational(a.rational() * b.rational()));
    if (a.num_ == 0 || b.num_ == 0) return {};
    const std::int64_t g1 = gcd64(a.num_, b.den_), g2 = gcd64(b.num_, a.den_);
    const __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    const __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    return from_reduced(n, d);
  }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    if (b.is_zero()) throw std::domain_error("coefficient division by zero");
    return a * b.inverse();
  }
  Coefficient& operator+=(const Coefficient& b) { return *this = *this + b; }
  Coefficient& operator-=(const Coefficient& b) { return *this = *this - b; }
  Coefficient& operator*=(const Coefficient& b) { return *this = *this * b; }
  Coefficient& operator/=(const Coefficient& b) { return *this = *this / b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;  // small values are never stored big
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
    if (a.big_ || b.big_) {
      const int c = cmp(a.rational(), b.rational());
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  static bool fits(const Integer& z) {
    return z.fits_slong_p() && z != std::numeric_limits<long>::min();
  }
  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = static_cast<std::uint64_t>(b);
    while (y != 0) {
      const std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return static_cast<std::int64_t>(x == 0 ? 1 : x);
  }
  static unsigned __int128 gcd128(unsigned __int128 x, unsigned __int128 y) {
    while (y != 0 && ((x >> 64) != 0 || (y >> 64) != 0)) {
      const unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    if (y == 0) return x;
    std::uint64_t a = static_cast<std::uint64_t>(x), b = static_cast<std::uint64_t>(y);
    while (b != 0) {
      const std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Integer to_integer(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(m >> 64)), lo(static_cast<unsigned long>(m & ~std::uint64_t{0}));
    Integer r = hi * Integer("18446744073709551616") + lo;
    return neg ? Integer(-r) : r;
  }
  static bool small(__int128 v) {
    return v <= std::numeric_limits<std::int64_t>::max() && v > std::numeric_limits<std::int64_t>::min();
  }
  // n/d with gcd(n, d) = 1 and d > 0.
  static Coefficient from_reduced(__int128 n, __int128 d) {
    if (small(n) && small(d)) {
      Coefficient c;
      c.num_ = static_cast<std::int64_t>(n);
      c.den_ = static_cast<std::int64_t>(d);
      return c;
    }
    Rational q;
    q.get_num() = to_integer(n);
    q.get_den() = to_integer(d);
    return Coefficient(q);
  }
  static Coefficient add(const Coefficient& a, const Coefficient& b, int s) {
    if (a.big_ || b.big_) return Coefficient(s > 0 ? Rational(a.rational() + b.rational()) : Rational(a.rational() - b.rational()));
    if (a.den_ == 1 && b.den_ == 1) {
      const __int128 n = static_cast<__int128>(a.num_) + s * static_cast<__int128>(b.num_);
      return from_reduced(n, 1);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + s * static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    if (n == 0) return {};
    const unsigned __int128 g = gcd128(n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n),
                                       static_cast<unsigned __int128>(d));
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
    return from_reduced(n, d);
  }
  Coefficient inverse() const {
    if (big_) return Coefficient(Rational(1 / *big_));
    Coefficient r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }
  void set_big(const Rational& q) { big_ = std::make_shared<const Rational>(q); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Rational> big_;  // set only when the value does not fit
};

}  // namespace gtkit

#endif  // GTKIT_COEFFICIENT_HPP
