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

#ifndef GTKIT_RATIONAL_FUNCTION_HPP
#define GTKIT_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "param_scalar.hpp"
#include "polynomial.hpp"
#include "symcomb.hpp"
#include "variables.hpp"

namespace gtkit {

/// x_first - x_second - shift, always stored with first < second.
struct LinearFactor {
  int first = 0;
  int second = 1;
  int shift = 0;

  Polynomial as_polynomial() const {
    return Polynomial::variable(first) - Polynomial::variable(second) - Polynomial(Rational(shift));
  }

  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
  friend auto operator<=>(const LinearFactor&, const LinearFactor&) = default;

  std::string to_string() const {
    std::string s = var_name(first) + " - " + var_name(second);
    if (shift > 0) s += " - " + std::to_string(shift);
    if (shift < 0) s += " + " + std::to_string(-shift);
    return s;
  }
};

/// Element of Q(x) whose denominator is a product of factors x_a - x_b - m.
/// Always reduced: no denominator factor divides the numerator. Together
/// with the canonical orientation of the factors this makes the stored form
/// unique, so operator== is structural.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial p) : numerator_(std::move(p)) {}      // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : numerator_(c) {}            // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : numerator_(Rational(c)) {}             // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : numerator_(Rational(c)) {}              // NOLINT(google-explicit-constructor)

  /// p / ((x_a - x_b - m) ...). Factors may be given in either orientation;
  /// a == b is rejected.
  static RationalFunction make(Polynomial p, const std::vector<std::array<int, 3>>& factors) {
    RationalFunction f(std::move(p));
    for (const auto& [a, b, m] : factors) f.append_factor(a, b, m);
    f.reduce();
    return f;
  }

  /// 1 / (x_a - x_b - m).
  static RationalFunction reciprocal(int a, int b, int m) { return make(Polynomial(1), {{a, b, m}}); }

  const Polynomial& numerator() const { return numerator_; }
  const std::vector<LinearFactor>& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }
  bool is_polynomial() const { return denominator_.empty(); }
  const Polynomial& as_polynomial() const {
    if (!is_polynomial()) throw InternalError("rational function has a nontrivial denominator: " + to_string());
    return numerator_;
  }

  Polynomial denominator_polynomial() const {
    Polynomial d(1);
    for (const auto& f : denominator_) d *= f.as_polynomial();
    return d;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = a.denominator_ <=> b.denominator_; c != 0) return c;
    return a.numerator_ <=> b.numerator_;
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.numerator_ = -r.numerator_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b, false); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, b, true); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFunction r;
    r.numerator_ = a.numerator_ * b.numerator_;
    if (a.denominator_.empty() && b.denominator_.empty()) return r;
    r.denominator_.reserve(a.denominator_.size() + b.denominator_.size());
    std::merge(a.denominator_.begin(), a.denominator_.end(), b.denominator_.begin(), b.denominator_.end(),
               std::back_inserter(r.denominator_));
    // Only a factor of one operand can cancel against the other's numerator.
    if (!a.denominator_.empty() && !b.numerator_.is_constant()) r.reduce();
    else if (!b.denominator_.empty() && !a.numerator_.is_constant()) r.reduce();
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const Rational& c) {
    RationalFunction r = a;
    r.numerator_ = r.numerator_ * c;
    if (c == 0) r.denominator_.clear();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const Rational& c) {
    RationalFunction r = a;
    r.numerator_ = r.numerator_ / c;
    return r;
  }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  /// Divides by x_a - x_b - m (either orientation).
  RationalFunction divided_by_factor(int a, int b, int m) const {
    RationalFunction r = *this;
    if (r.is_zero()) return r;
    r.append_factor(a, b, m);
    r.reduce();
    return r;
  }

  /// Exact cross-multiplied comparison, independent of the canonical form.
  friend bool equal_cross_multiplied(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator_ * b.denominator_polynomial() == b.numerator_ * a.denominator_polynomial();
  }

  std::string to_string() const {
    std::string s = numerator_.to_string(var_name);
    if (denominator_.empty()) return s;
    s = "(" + s + ")/(";
    for (std::size_t i = 0; i < denominator_.size(); ++i) {
      if (i) s += "*";
      s += "(" + denominator_[i].to_string() + ")";
    }
    return s + ")";
  }

  /// Internal constructor for operations that map factors bijectively
  /// (shift, permutation); `den` may be unsorted and unoriented.
  static RationalFunction from_parts_unreduced(Polynomial num, std::vector<LinearFactor> den) {
    RationalFunction r(std::move(num));
    for (auto& f : den) r.append_factor(f.first, f.second, f.shift);
    return r;
  }

  /// Sum over a common denominator with a single final reduction.
  static RationalFunction sum(const std::vector<RationalFunction>& terms) {
    std::vector<LinearFactor> common;
    for (const auto& t : terms) {
      if (t.is_zero()) continue;
      std::vector<LinearFactor> merged;
      std::size_t i = 0, j = 0;
      const auto& d = t.denominator_;
      while (i < common.size() || j < d.size()) {
        if (j == d.size() || (i < common.size() && common[i] < d[j])) merged.push_back(common[i++]);
        else if (i == common.size() || d[j] < common[i]) merged.push_back(d[j++]);
        else {
          merged.push_back(common[i]);
          ++i;
          ++j;
        }
      }
      common = std::move(merged);
    }
    std::vector<Term> acc;
    for (const auto& t : terms) {
      if (t.is_zero()) continue;
      Polynomial scaled = t.numerator_;
      std::size_t j = 0;
      for (const auto& f : common) {
        if (j < t.denominator_.size() && t.denominator_[j] == f) ++j;
        else scaled *= f.as_polynomial();
      }
      for (const auto& term : scaled.terms()) acc.push_back(term);
    }
    RationalFunction r(Polynomial::from_terms(std::move(acc)));
    r.denominator_ = std::move(common);
    r.reduce();
    return r;
  }

  /// Cancels common factors. Idempotent.
  void reduce() {
    if (numerator_.is_zero()) {
      denominator_.clear();
      return;
    }
    if (denominator_.empty() || numerator_.is_constant()) return;
    std::vector<LinearFactor> kept;
    kept.reserve(denominator_.size());
    for (const auto& f : denominator_) {
      // x_first - (x_second + shift)
      auto q = numerator_.divide_linear(f.first, Polynomial::variable(f.second) + Polynomial(Rational(f.shift)));
      if (q) numerator_ = std::move(*q);
      else kept.push_back(f);
    }
    denominator_ = std::move(kept);
  }

 private:
  void append_factor(int a, int b, int m) {
    if (a == b) throw std::invalid_argument("linear factor needs two distinct variables");
    LinearFactor f{a, b, m};
    if (a > b) {
      f = {b, a, -m};
      numerator_ = -numerator_;
    }
    denominator_.insert(std::upper_bound(denominator_.begin(), denominator_.end(), f), f);
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    RationalFunction r;
    if (a.denominator_ == b.denominator_) {
      r.numerator_ = subtract ? a.numerator_ - b.numerator_ : a.numerator_ + b.numerator_;
      r.denominator_ = a.denominator_;
      r.reduce();
      return r;
    }
    std::vector<LinearFactor> common;
    Polynomial scale_a(1), scale_b(1);
    std::size_t i = 0, j = 0;
    while (i < a.denominator_.size() || j < b.denominator_.size()) {
      if (j == b.denominator_.size() || (i < a.denominator_.size() && a.denominator_[i] < b.denominator_[j])) {
        common.push_back(a.denominator_[i]);
        scale_b *= a.denominator_[i++].as_polynomial();
      } else if (i == a.denominator_.size() || b.denominator_[j] < a.denominator_[i]) {
        common.push_back(b.denominator_[j]);
        scale_a *= b.denominator_[j++].as_polynomial();
      } else {
        common.push_back(a.denominator_[i]);
        ++i;
        ++j;
      }
    }
    Polynomial na = a.numerator_ * scale_a, nb = b.numerator_ * scale_b;
    r.numerator_ = subtract ? na - nb : na + nb;
    r.denominator_ = std::move(common);
    r.reduce();
    return r;
  }

  Polynomial numerator_;
  std::vector<LinearFactor> denominator_;  // sorted multiset
};

/// f(x + z): x_a -> x_a + z_a for every a < z.size().
inline RationalFunction shift(const RationalFunction& f, std::span<const int> z) {
  Polynomial num = f.numerator();
  for (int a = 0; a < static_cast<int>(z.size()); ++a)
    if (z[static_cast<std::size_t>(a)] != 0) num = num.translate(a, Rational(z[static_cast<std::size_t>(a)]));
  std::vector<LinearFactor> den;
  den.reserve(f.denominator().size());
  auto zv = [&](int a) { return a < static_cast<int>(z.size()) ? z[static_cast<std::size_t>(a)] : 0; };
  for (const auto& d : f.denominator())
    // x_a + z_a - x_b - z_b - m = x_a - x_b - (m - z_a + z_b)
    den.push_back({d.first, d.second, d.shift - zv(d.first) + zv(d.second)});
  return RationalFunction::from_parts_unreduced(std::move(num), std::move(den));
}

inline RationalFunction shift(const RationalFunction& f, const IntegralPoint& z) {
  const std::vector<int> v = z.flat();
  return shift(f, std::span<const int>(v));
}

inline Polynomial act_perm(const Permutation& s, const Polynomial& p) {
  const auto table = s.image_table();
  return p.rename(table);
}

/// s(f): x_a -> x_{s(a)}.
inline RationalFunction act_perm(const Permutation& s, const RationalFunction& f) {
  std::vector<LinearFactor> den;
  den.reserve(f.denominator().size());
  for (const auto& d : f.denominator()) den.push_back({s(d.first), s(d.second), d.shift});
  return RationalFunction::from_parts_unreduced(act_perm(s, f.numerator()), std::move(den));
}

/// f lies in B_eta: each denominator factor either has a nonzero shift or
/// joins two different eta-blocks.
inline bool in_B_eta(const RationalFunction& f, const Refinement& eta) {
  for (const auto& d : f.denominator())
    if (d.shift == 0 && eta.same_block(d.first, d.second)) return false;
  return true;
}

/// pi_v(f) = f(v) for a point given entry by entry (flat order).
inline ParamFraction evaluate(const RationalFunction& f, std::span<const ParamScalar> v) {
  std::vector<Polynomial> images;
  images.reserve(v.size());
  for (const auto& s : v) images.push_back(s.as_polynomial());
  std::vector<ParamScalar> den;
  for (const auto& d : f.denominator()) {
    if (d.second >= static_cast<int>(v.size())) throw std::invalid_argument("evaluate: point has too few entries");
    ParamScalar val = v[static_cast<std::size_t>(d.first)] - v[static_cast<std::size_t>(d.second)] - ParamScalar(d.shift);
    if (val.is_zero()) throw DenominatorVanishes("denominator factor " + d.to_string() + " vanishes at the point");
    den.push_back(std::move(val));
  }
  if (f.numerator().max_variable() >= static_cast<int>(v.size()))
    throw std::invalid_argument("evaluate: point has too few entries");
  return ParamFraction::make(f.numerator().substitute(images), std::move(den));
}

inline ParamFraction evaluate(const Polynomial& p, std::span<const ParamScalar> v) {
  return evaluate(RationalFunction(p), v);
}

}  // namespace gtkit

#endif  // GTKIT_RATIONAL_FUNCTION_HPP
