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

#ifndef GTKIT_POLYNOMIAL_HPP
#define GTKIT_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "rational.hpp"

namespace gtkit {

/// Hard cap on the number of variables of a polynomial ring (enough for gl(5)).
inline constexpr int kMaxVars = 16;

/// Exponent vector packed one byte per variable. Variable 0 sits in the most
/// significant byte of the high word, so comparing the words compares
/// exponent vectors lexicographically with x_0 > x_1 > ... .
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial variable(int var, unsigned exponent = 1) {
    Monomial m;
    m.set_exponent(var, exponent);
    return m;
  }

  unsigned exponent(int var) const {
    const std::uint64_t w = var < 8 ? hi_ : lo_;
    return static_cast<unsigned>((w >> shift_of(var)) & 0xffu);
  }

  void set_exponent(int var, unsigned e) {
    if (var < 0 || var >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    const unsigned old = exponent(var);
    std::uint64_t& w = var < 8 ? hi_ : lo_;
    w &= ~(std::uint64_t{0xff} << shift_of(var));
    w |= std::uint64_t{e} << shift_of(var);
    degree_ = static_cast<std::uint16_t>(degree_ - old + e);
  }

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Highest variable index with a nonzero exponent, or -1.
  int max_variable() const {
    for (int v = kMaxVars - 1; v >= 0; --v)
      if (exponent(v) != 0) return v;
    return -1;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    // Bytes never carry: every caller keeps exponents below 256.
    m.hi_ = a.hi_ + b.hi_;
    m.lo_ = a.lo_ + b.lo_;
    m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(hi_ * 0x9E3779B97F4A7C15ull ^ (lo_ + degree_));
  }

 private:
  static int shift_of(int var) { return (7 - (var & 7)) * 8; }

  std::uint64_t hi_ = 0;
  std::uint64_t lo_ = 0;
  std::uint16_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  Coefficient coefficient;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
/// decreasing graded lexicographic order with no zero coefficients, so the
/// representation is canonical and operator== is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial{}, c});
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Polynomial variable(int var) { return monomial(Monomial::variable(var), 1); }

  static Polynomial monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a polynomial from arbitrary terms (any order, repeats allowed).
  static Polynomial from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Rational constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coefficient.rational();
  }
  /// Coefficient of the constant monomial.
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient.rational();
    return 0;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree()); }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
  }

  int max_variable() const {
    int v = -1;
    for (const auto& t : terms_) v = std::max(v, t.monomial.max_variable());
    return v;
  }

  bool uses_variable(int var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial.exponent(var) != 0; });
  }

  unsigned degree_in(int var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
    return d;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
        return false;
    return true;
  }

  /// Total order on canonical forms; used for deterministic containers.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.terms_[i].monomial <=> b.terms_[i].monomial; c != 0) return c;
      if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    // Short factor: merging sorted partial products beats sorting all of them.
    if (std::min(a.terms_.size(), b.terms_.size()) <= 4) {
      const Polynomial& longer = a.terms_.size() >= b.terms_.size() ? a : b;
      const Polynomial& shorter = a.terms_.size() >= b.terms_.size() ? b : a;
      Polynomial r = longer.times_term(shorter.terms_[0]);
      for (std::size_t i = 1; i < shorter.terms_.size(); ++i) r = r + longer.times_term(shorter.terms_[i]);
      return r;
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    return from_terms(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c == 0) return {};
    Polynomial r = a;
    const Coefficient cc(c);
    for (auto& t : r.terms_) t.coefficient *= cc;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }
  friend Polynomial operator/(const Polynomial& a, const Rational& c) {
    if (c == 0) throw std::domain_error("polynomial division by zero");
    Polynomial r = a;
    const Coefficient cc(c);
    for (auto& t : r.terms_) t.coefficient /= cc;
    return r;
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Renames variables: x_v becomes x_{image[v]}. `image` must be injective on
  /// the variables that occur.
  Polynomial rename(std::span<const int> image) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (int v = 0; v < kMaxVars; ++v) {
        const unsigned e = t.monomial.exponent(v);
        if (e != 0) m.set_exponent(image[static_cast<std::size_t>(v)], e);
      }
      out.push_back({m, t.coefficient});
    }
    return from_terms(std::move(out));
  }

  /// p(x + c e_var).
  Polynomial translate(int var, const Rational& c) const {
    if (c == 0 || !uses_variable(var)) return *this;
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const unsigned e = t.monomial.exponent(var);
      if (e == 0) {
        out.push_back(t);
        continue;
      }
      Monomial base = t.monomial;
      base.set_exponent(var, 0);
      Integer binom = 1;
      Rational cpow = 1;
      // sum_j C(e,j) c^(e-j) x^j, j from e down to 0
      for (unsigned j = e + 1; j-- > 0;) {
        Monomial m = base;
        m.set_exponent(var, j);
        out.push_back({m, t.coefficient * Coefficient(Rational(Rational(binom) * cpow))});
        binom = binom * (j) / (e - j + 1);
        cpow *= c;
      }
    }
    return from_terms(std::move(out));
  }

  /// Substitutes x_v -> images[v] for every variable v < images.size().
  /// Variables beyond the span are left untouched.
  Polynomial substitute(std::span<const Polynomial> images) const {
    const int nv = static_cast<int>(images.size());
    // Fold constant images into the coefficients first; what is left is
    // expanded once per distinct monomial.
    std::vector<std::vector<Rational>> const_powers(static_cast<std::size_t>(nv));
    std::vector<Term> folded;
    folded.reserve(terms_.size());
    for (const auto& t : terms_) {
      Rational c = t.coefficient.rational();
      Monomial m = t.monomial;
      for (int v = 0; v < nv; ++v) {
        const unsigned e = m.exponent(v);
        if (e == 0 || !images[static_cast<std::size_t>(v)].is_constant()) continue;
        auto& pw = const_powers[static_cast<std::size_t>(v)];
        if (pw.empty()) pw.push_back(Rational(1));
        while (pw.size() <= e) pw.push_back(pw.back() * images[static_cast<std::size_t>(v)].constant_value());
        c *= pw[e];
        m.set_exponent(v, 0);
      }
      if (c != 0) folded.push_back({m, c});
    }
    const Polynomial reduced = from_terms(std::move(folded));

    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(nv));
    std::vector<Term> pending;
    for (const auto& t : reduced.terms_) {
      Polynomial prod(t.coefficient.rational());
      Monomial rest;
      for (int v = 0; v < kMaxVars; ++v) {
        const unsigned e = t.monomial.exponent(v);
        if (e == 0) continue;
        if (v >= nv) {
          rest.set_exponent(v, e);
          continue;
        }
        auto& pw = powers[static_cast<std::size_t>(v)];
        if (pw.empty()) pw.push_back(Polynomial(1));
        while (pw.size() <= e) pw.push_back(pw.back() * images[static_cast<std::size_t>(v)]);
        prod *= pw[e];
      }
      if (!rest.is_one()) prod = prod * monomial(rest, 1);
      for (auto& pt : prod.terms_) pending.push_back(std::move(pt));
    }
    return from_terms(std::move(pending));
  }

  /// Evaluates at a rational point (values[v] for x_v).
  Rational evaluate(std::span<const Rational> values) const {
    Rational acc = 0;
    for (const auto& t : terms_) {
      Rational p = t.coefficient.rational();
      for (int v = 0; v < kMaxVars; ++v) {
        const unsigned e = t.monomial.exponent(v);
        if (e == 0) continue;
        Rational base = values[static_cast<std::size_t>(v)];
        Rational pw = 1;
        for (unsigned i = 0; i < e; ++i) pw *= base;
        p *= pw;
      }
      acc += p;
    }
    return acc;
  }

  /// Splits p = sum_d c_d x_var^d; returns c_0..c_D.
  std::vector<Polynomial> coefficients_in(int var) const {
    std::vector<std::vector<Term>> parts(degree_in(var) + 1);
    for (const auto& t : terms_) {
      const unsigned e = t.monomial.exponent(var);
      Monomial m = t.monomial;
      m.set_exponent(var, 0);
      parts[e].push_back({m, t.coefficient});
    }
    // Stripping the same power of x_var keeps graded-lex order, so no sort.
    std::vector<Polynomial> out(parts.size());
    for (std::size_t e = 0; e < parts.size(); ++e) out[e].terms_ = std::move(parts[e]);
    return out;
  }

  /// Exact division by (x_var - r) where r does not involve x_var.
  /// Returns nullopt when the division leaves a remainder.
  std::optional<Polynomial> divide_linear(int var, const Polynomial& r) const {
    if (is_zero()) return Polynomial{};
    const unsigned deg = degree_in(var);
    if (deg == 0) return std::nullopt;
    std::vector<Polynomial> c = coefficients_in(var);
    // q_{d-1} = c_d + r q_d, remainder = c_0 + r q_0
    std::vector<Polynomial> q(deg);
    q[deg - 1] = c[deg];
    for (unsigned d = deg - 1; d >= 1; --d) q[d - 1] = c[d] + r * q[d];
    if (!(c[0] + r * q[0]).is_zero()) return std::nullopt;
    Polynomial out;
    for (unsigned d = 0; d < deg; ++d) {
      for (auto& t : q[d].terms_) t.monomial.set_exponent(var, d);
      out = out.is_zero() ? std::move(q[d]) : out + q[d];
    }
    return out;
  }

  /// True iff p vanishes identically after x_var := r.
  bool vanishes_at(int var, const Polynomial& r) const {
    if (!uses_variable(var)) return is_zero();
    std::vector<Polynomial> c = coefficients_in(var);
    Polynomial acc = c.back();
    for (std::size_t d = c.size() - 1; d-- > 0;) acc = acc * r + c[d];
    return acc.is_zero();
  }

  /// Human-readable form; `name(v)` names variable v.
  std::string to_string(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coefficient.rational();
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      if (c < 0) c = -c;
      first = false;
      const bool unit = c == 1 && !t.monomial.is_one();
      if (!unit) s += format_rational(c);
      bool need_star = !unit;
      for (int v = 0; v < kMaxVars; ++v) {
        const unsigned e = t.monomial.exponent(v);
        if (e == 0) continue;
        if (need_star) s += "*";
        s += name(v);
        if (e > 1) s += "^" + std::to_string(e);
        need_star = true;
      }
    }
    return s;
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      std::size_t s = r + 1;
      if (w != r) terms_[w] = std::move(terms_[r]);
      while (s < terms_.size() && terms_[s].monomial == terms_[w].monomial) {
        terms_[w].coefficient += terms_[s].coefficient;
        ++s;
      }
      if (!terms_[w].coefficient.is_zero()) ++w;
      r = s;
    }
    terms_.resize(w);
  }

  Polynomial times_term(const Term& t) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& s : terms_) r.terms_.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    return r;  // monomial orders are multiplicative, so the order is preserved
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].monomial > b.terms_[j].monomial)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].monomial > a.terms_[i].monomial) {
        r.terms_.push_back({b.terms_[j].monomial, subtract ? -b.terms_[j].coefficient : b.terms_[j].coefficient});
        ++j;
      } else {
        Coefficient c = subtract ? a.terms_[i].coefficient - b.terms_[j].coefficient
                                 : a.terms_[i].coefficient + b.terms_[j].coefficient;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

}  // namespace gtkit

#endif  // GTKIT_POLYNOMIAL_HPP
