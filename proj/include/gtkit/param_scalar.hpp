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

#ifndef GTKIT_PARAM_SCALAR_HPP
#define GTKIT_PARAM_SCALAR_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "variables.hpp"

namespace gtkit {

namespace detail {
inline std::strong_ordering cmp_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}
}  // namespace detail

/// Exact model of a complex number: q + sum_j c_j t_j with q, c_j rational and
/// t_1..t_s formal, Z-linearly independent transcendentals. Index j is stored
/// 0-based (t_{j+1}).
class ParamScalar {
 public:
  ParamScalar() = default;
  ParamScalar(const Rational& q) : rational_(q) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(long q) : rational_(q) {}             // NOLINT(google-explicit-constructor)
  ParamScalar(int q) : rational_(q) {}              // NOLINT(google-explicit-constructor)

  /// t_{idx+1} + q.
  static ParamScalar transcendental(int idx, const Rational& q = 0) {
    ParamScalar s(q);
    s.symbolic_.emplace_back(idx, Rational(1));
    return s;
  }

  static ParamScalar from_parts(const Rational& q, std::vector<std::pair<int, Rational>> sym) {
    ParamScalar s(q);
    std::sort(sym.begin(), sym.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [j, c] : sym) {
      if (j < 0 || j >= kMaxVars) throw std::invalid_argument("transcendental index out of range");
      if (!s.symbolic_.empty() && s.symbolic_.back().first == j)
        s.symbolic_.back().second += c;
      else
        s.symbolic_.emplace_back(j, c);
    }
    std::erase_if(s.symbolic_, [](const auto& p) { return p.second == 0; });
    return s;
  }

  const Rational& rational_part() const { return rational_; }
  const std::vector<std::pair<int, Rational>>& transcendental_part() const { return symbolic_; }
  bool is_rational() const { return symbolic_.empty(); }
  bool is_zero() const { return symbolic_.empty() && rational_ == 0; }

  Rational coefficient(int idx) const {
    for (const auto& [j, c] : symbolic_)
      if (j == idx) return c;
    return 0;
  }

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) { return combine(a, b, 1); }
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return combine(a, b, -1); }
  ParamScalar operator-() const { return ParamScalar{} - *this; }
  friend ParamScalar operator*(const ParamScalar& a, const Rational& c) {
    if (c == 0) return {};
    ParamScalar r = a;
    r.rational_ *= c;
    for (auto& p : r.symbolic_) p.second *= c;
    return r;
  }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.rational_ == b.rational_ && a.symbolic_ == b.symbolic_;
  }
  friend std::strong_ordering operator<=>(const ParamScalar& a, const ParamScalar& b) {
    const std::size_t n = std::min(a.symbolic_.size(), b.symbolic_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.symbolic_[i].first <=> b.symbolic_[i].first; c != 0) return c;
      if (auto c = detail::cmp_rational(a.symbolic_[i].second, b.symbolic_[i].second); c != 0) return c;
    }
    if (auto c = a.symbolic_.size() <=> b.symbolic_.size(); c != 0) return c;
    return detail::cmp_rational(a.rational_, b.rational_);
  }

  /// The value as a degree <= 1 polynomial in the transcendentals.
  Polynomial as_polynomial() const {
    Polynomial p(rational_);
    for (const auto& [j, c] : symbolic_) p += Polynomial::variable(j) * c;
    return p;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [j, c] : symbolic_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const Rational a = abs(c);
      if (a != 1) s += format_rational(a) + "*";
      s += transcendental_name(j);
    }
    if (s.empty()) return format_rational(rational_);
    if (rational_ != 0) s += (rational_ < 0 ? " - " : " + ") + format_rational(abs(rational_));
    return s;
  }

 private:
  static ParamScalar combine(const ParamScalar& a, const ParamScalar& b, int sign) {
    ParamScalar r(a.rational_ + sign * b.rational_);
    std::size_t i = 0, j = 0;
    while (i < a.symbolic_.size() || j < b.symbolic_.size()) {
      if (j == b.symbolic_.size() || (i < a.symbolic_.size() && a.symbolic_[i].first < b.symbolic_[j].first)) {
        r.symbolic_.push_back(a.symbolic_[i++]);
      } else if (i == a.symbolic_.size() || b.symbolic_[j].first < a.symbolic_[i].first) {
        r.symbolic_.emplace_back(b.symbolic_[j].first, sign * b.symbolic_[j].second);
        ++j;
      } else {
        Rational c = a.symbolic_[i].second + sign * b.symbolic_[j].second;
        if (c != 0) r.symbolic_.emplace_back(a.symbolic_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  Rational rational_;
  std::vector<std::pair<int, Rational>> symbolic_;  // sorted by index, no zeros
};

/// a - b is an integer: equal transcendental parts and integral rational difference.
inline bool integral_difference(const ParamScalar& a, const ParamScalar& b) {
  return a.transcendental_part() == b.transcendental_part() && is_integer(a.rational_part() - b.rational_part());
}

/// Exact value of a rational function of the entries: a polynomial in the
/// transcendentals over a product of affine forms, each normalized so that
/// its lowest-index transcendental has coefficient 1. No denominator factor
/// divides the numerator, which makes the representation canonical.
class ParamFraction {
 public:
  ParamFraction() = default;
  ParamFraction(const Rational& q) : numerator_(q) {}       // NOLINT(google-explicit-constructor)
  ParamFraction(long q) : numerator_(Rational(q)) {}        // NOLINT(google-explicit-constructor)
  ParamFraction(int q) : numerator_(Rational(q)) {}         // NOLINT(google-explicit-constructor)
  ParamFraction(Polynomial p) : numerator_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  ParamFraction(const ParamScalar& s) : numerator_(s.as_polynomial()) {}  // NOLINT(google-explicit-constructor)

  /// p / prod(den); `den` entries must be non-constant affine forms.
  static ParamFraction make(Polynomial p, std::vector<ParamScalar> den) {
    ParamFraction f(std::move(p));
    for (auto& d : den) f.divide_by(d);
    f.reduce();
    return f;
  }

  const Polynomial& numerator() const { return numerator_; }
  const std::vector<ParamScalar>& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }
  bool is_polynomial() const { return denominator_.empty(); }

  friend bool operator==(const ParamFraction& a, const ParamFraction& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }
  friend std::strong_ordering operator<=>(const ParamFraction& a, const ParamFraction& b) {
    if (auto c = a.numerator_ <=> b.numerator_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.denominator_.begin(), a.denominator_.end(),
                                                  b.denominator_.begin(), b.denominator_.end());
  }

  ParamFraction operator-() const {
    ParamFraction r = *this;
    r.numerator_ = -r.numerator_;
    return r;
  }

  friend ParamFraction operator+(const ParamFraction& a, const ParamFraction& b) { return add(a, b, false); }
  friend ParamFraction operator-(const ParamFraction& a, const ParamFraction& b) { return add(a, b, true); }
  friend ParamFraction operator*(const ParamFraction& a, const ParamFraction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ParamFraction r;
    r.numerator_ = a.numerator_ * b.numerator_;
    r.denominator_.reserve(a.denominator_.size() + b.denominator_.size());
    std::merge(a.denominator_.begin(), a.denominator_.end(), b.denominator_.begin(), b.denominator_.end(),
               std::back_inserter(r.denominator_));
    if (!r.denominator_.empty()) r.reduce();
    return r;
  }
  ParamFraction& operator+=(const ParamFraction& b) { return *this = *this + b; }
  ParamFraction& operator-=(const ParamFraction& b) { return *this = *this - b; }
  ParamFraction& operator*=(const ParamFraction& b) { return *this = *this * b; }

  /// Divides by a nonzero value.
  ParamFraction divided_by(const ParamScalar& d) const {
    ParamFraction r = *this;
    r.divide_by(d);
    r.reduce();
    return r;
  }

  std::string to_string() const {
    std::string s = numerator_.to_string(transcendental_name);
    if (denominator_.empty()) return s;
    s = "(" + s + ")/(";
    for (std::size_t i = 0; i < denominator_.size(); ++i) {
      if (i != 0) s += "*";
      s += "(" + denominator_[i].to_string() + ")";
    }
    return s + ")";
  }

 private:
  // Appends d (normalized) to the denominator and rescales the numerator.
  void divide_by(const ParamScalar& d) {
    if (d.is_zero()) throw std::domain_error("division by zero in ParamFraction");
    if (d.is_rational()) {
      numerator_ = numerator_ / d.rational_part();
      return;
    }
    const Rational lead = d.transcendental_part().front().second;
    ParamScalar monic = d * (Rational(1) / lead);
    numerator_ = numerator_ / lead;
    denominator_.insert(std::upper_bound(denominator_.begin(), denominator_.end(), monic), std::move(monic));
  }

  void reduce() {
    if (numerator_.is_zero()) {
      denominator_.clear();
      return;
    }
    std::vector<ParamScalar> kept;
    for (auto& f : denominator_) {
      // f = t_j + rest, so the numerator is divisible iff it vanishes at t_j = -rest.
      const int j = f.transcendental_part().front().first;
      Polynomial rest = -(f - ParamScalar::transcendental(j)).as_polynomial();
      if (auto q = numerator_.divide_linear(j, rest)) numerator_ = std::move(*q);
      else kept.push_back(std::move(f));
    }
    denominator_ = std::move(kept);
  }

  static ParamFraction add(const ParamFraction& a, const ParamFraction& b, bool subtract) {
    if (a.denominator_ == b.denominator_) {
      ParamFraction r;
      r.numerator_ = subtract ? a.numerator_ - b.numerator_ : a.numerator_ + b.numerator_;
      r.denominator_ = a.denominator_;
      if (!r.denominator_.empty()) r.reduce();
      return r;
    }
    // common denominator = multiset union with maximal multiplicities
    std::vector<ParamScalar> common, extra_a, extra_b;
    std::size_t i = 0, j = 0;
    while (i < a.denominator_.size() || j < b.denominator_.size()) {
      if (j == b.denominator_.size() || (i < a.denominator_.size() && a.denominator_[i] < b.denominator_[j])) {
        common.push_back(a.denominator_[i]);
        extra_b.push_back(a.denominator_[i++]);
      } else if (i == a.denominator_.size() || b.denominator_[j] < a.denominator_[i]) {
        common.push_back(b.denominator_[j]);
        extra_a.push_back(b.denominator_[j++]);
      } else {
        common.push_back(a.denominator_[i]);
        ++i;
        ++j;
      }
    }
    Polynomial na = a.numerator_, nb = b.numerator_;
    for (const auto& f : extra_a) na *= f.as_polynomial();
    for (const auto& f : extra_b) nb *= f.as_polynomial();
    ParamFraction r;
    r.numerator_ = subtract ? na - nb : na + nb;
    r.denominator_ = std::move(common);
    r.reduce();
    return r;
  }

  Polynomial numerator_;
  std::vector<ParamScalar> denominator_;  // sorted multiset of monic affine forms
};

}  // namespace gtkit

#endif  // GTKIT_PARAM_SCALAR_HPP
