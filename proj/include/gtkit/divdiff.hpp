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

// Divided differences, symmetrized divided differences and the dual basis
// of a polynomial ring over its S_eta-invariants.

#ifndef GTKIT_DIVDIFF_HPP
#define GTKIT_DIVDIFF_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational_function.hpp"
#include "symcomb.hpp"

namespace gtkit {

/// Default cap on eta! for dual-basis construction.
inline constexpr long kDefaultMaxFactorial = 24;

/// Delta_eta: product over eta-blocks of (x_i - x_j), i < j in the block.
inline Polynomial delta(const Refinement& eta) {
  Polynomial d(1);
  for (const auto& b : eta.blocks())
    for (int i = b.start; i < b.start + b.size; ++i)
      for (int j = i + 1; j < b.start + b.size; ++j) d *= Polynomial::variable(i) - Polynomial::variable(j);
  return d;
}

/// Delta_eta as a list of denominator factors.
inline std::vector<std::array<int, 3>> delta_factors(const Refinement& eta) {
  std::vector<std::array<int, 3>> f;
  for (const auto& b : eta.blocks())
    for (int i = b.start; i < b.start + b.size; ++i)
      for (int j = i + 1; j < b.start + b.size; ++j) f.push_back({i, j, 0});
  return f;
}

namespace detail {
inline void append_terms(std::vector<Term>& acc, const Polynomial& p) {
  acc.insert(acc.end(), p.terms().begin(), p.terms().end());
}

inline Polynomial swap_vars(const Polynomial& p, int a) {
  std::array<int, kMaxVars> t{};
  for (int i = 0; i < kMaxVars; ++i) t[static_cast<std::size_t>(i)] = i;
  std::swap(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(a + 1)]);
  return p.rename(t);
}
}  // namespace detail

/// partial_a p = (p - s_a p) / (x_a - x_{a+1}) for a polynomial.
inline Polynomial dd_apply(int a, const Polynomial& p) {
  if (!p.uses_variable(a) && !p.uses_variable(a + 1)) return {};
  const Polynomial diff = p - detail::swap_vars(p, a);
  if (diff.is_zero()) return {};
  auto q = diff.divide_linear(a, Polynomial::variable(a + 1));
  if (!q) throw InternalError("divided difference of a polynomial left a remainder: a=" + std::to_string(a) + " p=" + p.to_string(var_name));
  return *q;
}

/// partial_a f = (f - s_a f) / (x_a - x_{a+1}) for a rational function.
inline RationalFunction dd_apply(int a, const RationalFunction& f) {
  if (f.is_polynomial()) return RationalFunction(dd_apply(a, f.numerator()));
  std::array<int, kMaxVars> t{};
  for (int i = 0; i < kMaxVars; ++i) t[static_cast<std::size_t>(i)] = i;
  std::swap(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(a + 1)]);
  std::vector<LinearFactor> den;
  for (const auto& d : f.denominator()) den.push_back({t[static_cast<std::size_t>(d.first)], t[static_cast<std::size_t>(d.second)], d.shift});
  RationalFunction swapped = RationalFunction::from_parts_unreduced(f.numerator().rename(t), std::move(den));
  RationalFunction diff = RationalFunction::sum({f, -swapped});
  return diff.divided_by_factor(a, a + 1, 0);
}

inline RationalFunction dd_apply(const Permutation& simple, const RationalFunction& f) {
  if (simple.length() != 1) throw std::invalid_argument("dd_apply expects a simple transposition");
  int a = 0;
  while (simple(a) == a) ++a;
  return dd_apply(a, f);
}

/// partial_sigma along a given word w_1 ... w_l (rightmost letter applied first).
template <class T>
T dd_word(const std::vector<int>& word, T f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    f = dd_apply(*it, f);
    if (f.is_zero()) break;
  }
  return f;
}

/// partial_sigma via the lexicographically smallest reduced word.
inline Polynomial dd_sigma(const Permutation& sigma, const Polynomial& p) { return dd_word(reduced_word(sigma), p); }
inline RationalFunction dd_sigma(const Permutation& sigma, const RationalFunction& f) {
  return dd_word(reduced_word(sigma), f);
}

/// sym_eta f = (1/eta!) sum_tau tau(f). Per block of size k the sum over S_k
/// is built from the one over S_{k-1} and the k coset transpositions.
inline Polynomial sym(const Refinement& eta, const Polynomial& p) {
  Polynomial h = p;
  for (const auto& b : eta.blocks()) {
    for (int m = 1; m < b.size; ++m) {
      const int last = b.start + m;
      std::vector<Term> acc(h.terms().begin(), h.terms().end());
      for (int j = b.start; j < last; ++j) {
        std::array<int, kMaxVars> t{};
        for (int i = 0; i < kMaxVars; ++i) t[static_cast<std::size_t>(i)] = i;
        std::swap(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(last)]);
        detail::append_terms(acc, h.rename(t));
      }
      h = Polynomial::from_terms(std::move(acc));
    }
  }
  return h / eta.factorial();
}
inline RationalFunction sym(const Refinement& eta, const RationalFunction& f) {
  if (f.is_polynomial()) return RationalFunction(sym(eta, f.numerator()));
  std::vector<RationalFunction> images;
  for (const auto& tau : group_elements(eta)) images.push_back(act_perm(tau, f));
  return RationalFunction::sum(images) / eta.factorial();
}

/// asym_eta f = (1/eta!) sum_tau sg(tau) tau(f).
inline RationalFunction asym(const Refinement& eta, const RationalFunction& f) {
  std::vector<RationalFunction> images;
  for (const auto& tau : group_elements(eta)) images.push_back(act_perm(tau, f) * Rational(tau.sign()));
  return RationalFunction::sum(images) / eta.factorial();
}

/// D^eta_sigma = sym_eta o partial_sigma.
inline Polynomial sdd(const Refinement& eta, const Permutation& sigma, const Polynomial& p) {
  return sym(eta, dd_sigma(sigma, p));
}
inline RationalFunction sdd(const Refinement& eta, const Permutation& sigma, const RationalFunction& f) {
  return sym(eta, dd_sigma(sigma, f));
}

/// g lies in the ideal p_eta generated by same-block differences: setting
/// every variable of a block equal to one variable of that block kills g.
inline bool in_p_eta(const Polynomial& g, const Refinement& eta) {
  std::vector<Polynomial> images;
  for (int a = 0; a < eta.num_entries(); ++a) {
    const auto& b = eta.blocks()[static_cast<std::size_t>(eta.block_of(a))];
    images.push_back(Polynomial::variable(b.start));
  }
  return g.substitute(images).is_zero();
}

/// s(g) = g for every simple transposition of S_eta.
inline bool is_invariant(const Polynomial& g, const Refinement& eta) {
  for (const auto& b : eta.blocks())
    for (int a = b.start; a + 1 < b.start + b.size; ++a)
      if (detail::swap_vars(g, a) != g) return false;
  return true;
}
inline bool is_invariant(const RationalFunction& f, const Refinement& eta) {
  for (const auto& b : eta.blocks())
    for (int a = b.start; a + 1 < b.start + b.size; ++a)
      if (act_perm(Permutation::simple(eta, a), f) != f) return false;
  return true;
}

/// Element sum_sigma f_sigma sigma of the smash product F # S_eta, with
/// (f sigma)(g tau) = f sigma(g) sigma tau.
class OperatorElement {
 public:
  OperatorElement() = default;
  explicit OperatorElement(const Permutation& sigma, RationalFunction coefficient = RationalFunction(1)) {
    if (!coefficient.is_zero()) terms_.emplace(sigma, std::move(coefficient));
  }

  /// The divided difference (1/(x_a - x_{a+1}))(id - s_a).
  static OperatorElement divided_difference(const Refinement& eta, int a) {
    const RationalFunction inv = RationalFunction::reciprocal(a, a + 1, 0);
    OperatorElement r(Permutation::identity(eta), inv);
    r.terms_.emplace(Permutation::simple(eta, a), -inv);
    return r;
  }
  /// partial_sigma as a product along the lex-smallest reduced word.
  static OperatorElement divided_difference(const Refinement& eta, const Permutation& sigma) {
    OperatorElement r(Permutation::identity(eta));
    for (int a : reduced_word(sigma)) r = r * divided_difference(eta, a);
    return r;
  }
  static OperatorElement sym(const Refinement& eta) {
    OperatorElement r;
    const Rational c = Rational(1) / eta.factorial();
    for (const auto& tau : group_elements(eta)) r.terms_.emplace(tau, RationalFunction(c));
    return r;
  }
  static OperatorElement asym(const Refinement& eta) {
    OperatorElement r;
    const Rational c = Rational(1) / eta.factorial();
    for (const auto& tau : group_elements(eta)) r.terms_.emplace(tau, RationalFunction(c * tau.sign()));
    return r;
  }
  /// Multiplication by f, i.e. f * id.
  static OperatorElement multiplication(const Refinement& eta, RationalFunction f) {
    return OperatorElement(Permutation::identity(eta), std::move(f));
  }

  const std::map<Permutation, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend OperatorElement operator+(const OperatorElement& a, const OperatorElement& b) {
    OperatorElement r = a;
    for (const auto& [s, f] : b.terms_) r.accumulate(s, f);
    return r;
  }
  friend OperatorElement operator-(const OperatorElement& a, const OperatorElement& b) {
    OperatorElement r = a;
    for (const auto& [s, f] : b.terms_) r.accumulate(s, -f);
    return r;
  }
  friend OperatorElement operator*(const OperatorElement& a, const OperatorElement& b) {
    std::map<Permutation, std::vector<RationalFunction>> parts;
    for (const auto& [s, f] : a.terms_)
      for (const auto& [t, g] : b.terms_) parts[s * t].push_back(f * act_perm(s, g));
    OperatorElement r;
    for (auto& [p, fs] : parts) {
      RationalFunction c = RationalFunction::sum(fs);
      if (!c.is_zero()) r.terms_.emplace(p, std::move(c));
    }
    return r;
  }
  friend OperatorElement operator*(const OperatorElement& a, const Rational& c) {
    OperatorElement r;
    if (c == 0) return r;
    for (const auto& [s, f] : a.terms_) r.terms_.emplace(s, f * c);
    return r;
  }
  friend bool operator==(const OperatorElement&, const OperatorElement&) = default;

  /// (sum f_sigma sigma)(g) = sum f_sigma sigma(g).
  RationalFunction apply(const RationalFunction& g) const {
    std::vector<RationalFunction> parts;
    for (const auto& [s, f] : terms_) parts.push_back(f * act_perm(s, g));
    return RationalFunction::sum(parts);
  }

 private:
  void accumulate(const Permutation& s, const RationalFunction& f) {
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      if (!f.is_zero()) terms_.emplace(s, f);
      return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Permutation, RationalFunction> terms_;
};

/// Dense square matrix indexed by the elements of S_eta in their total order.
template <class T>
struct GroupMatrix {
  std::size_t dim = 0;
  std::vector<T> entries;
  GroupMatrix() = default;
  explicit GroupMatrix(std::size_t d) : dim(d), entries(d * d) {}
  T& operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
};

/// The polynomials (partial_sigma Delta_eta)^* together with the matrices
/// they come from. X^sigma_tau = tau(partial_sigma Delta / (eta! Delta)),
/// Y^rho_nu = rho(partial_{nu w} Delta) / eta!, U = XY (a polynomial matrix)
/// and X^{-1} = Y U^{-1}.
class DualBasisTable {
 public:
  const Refinement& refinement() const { return eta_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t index_of(const Permutation& s) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == s) return i;
    throw std::invalid_argument("permutation is not an element of S_eta");
  }

  /// (partial_sigma Delta)^*.
  const Polynomial& dual(const Permutation& sigma) const { return dual_[index_of(sigma)]; }
  const std::vector<Polynomial>& duals() const { return dual_; }

  /// partial_sigma Delta_eta.
  const Polynomial& dd_delta(const Permutation& sigma) const { return dd_delta_[index_of(sigma)]; }

  /// X^sigma_tau as a rational function.
  RationalFunction x_entry(std::size_t sigma, std::size_t tau) const {
    const Permutation& t = elements_[tau];
    return RationalFunction::make(act_perm(t, dd_delta_[sigma]) * (Rational(1) / eta_.factorial()),
                                  act_factors(t));
  }
  const GroupMatrix<Polynomial>& y() const { return y_; }
  const GroupMatrix<Polynomial>& u() const { return u_; }
  const GroupMatrix<Polynomial>& u_inverse() const { return u_inv_; }
  const GroupMatrix<Polynomial>& x_inverse() const { return x_inv_; }

  static DualBasisTable build(const Refinement& eta, long max_factorial = kDefaultMaxFactorial) {
    if (eta.factorial() > max_factorial)
      throw BoundExceeded("eta! = " + format_rational(eta.factorial()) + " exceeds the bound " +
                          std::to_string(max_factorial));
    DualBasisTable t;
    t.eta_ = eta;
    t.elements_ = group_elements(eta);
    const std::size_t m = t.elements_.size();
    const Polynomial d = delta(eta);
    const Permutation w = longest_word(eta);
    const Rational fact = eta.factorial();
    for (const auto& s : t.elements_) t.dd_delta_.push_back(dd_sigma(s, d));

    // Y^rho_nu = rho(partial_{nu w} Delta) / eta!
    t.y_ = GroupMatrix<Polynomial>(m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        t.y_(r, c) = act_perm(t.elements_[r], t.dd_delta_[t.index_of(t.elements_[c] * w)]) / fact;

    // U = XY: U^sigma_nu = (1/(eta! Delta)) sum_tau sg(tau) tau(partial_sigma Delta) Y^tau_nu.
    t.u_ = GroupMatrix<Polynomial>(m);
    const auto dfac = delta_factors(eta);
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<Polynomial> images;
      for (std::size_t tau = 0; tau < m; ++tau)
        images.push_back(act_perm(t.elements_[tau], t.dd_delta_[s]) * Rational(t.elements_[tau].sign()));
      for (std::size_t nu = 0; nu < m; ++nu) {
        std::vector<Term> acc;
        for (std::size_t tau = 0; tau < m; ++tau)
          detail::append_terms(acc, images[tau] * t.y_(tau, nu));
        Polynomial num = Polynomial::from_terms(std::move(acc)) / fact;
        for (const auto& [a, b, sh] : dfac) {
          auto q = num.divide_linear(a, Polynomial::variable(b));
          if (!q) throw InternalError("XY is not a polynomial matrix");
          num = std::move(*q);
        }
        t.u_(s, nu) = std::move(num);
      }
    }

    t.u_inv_ = invert_unimodular(t.u_);
    t.x_inv_ = multiply(t.y_, t.u_inv_);
    const std::size_t id = 0;  // identity is first in the total order
    for (const auto& s : t.elements_) t.dual_.push_back(t.x_inv_(id, t.index_of(s.inverse())));
    return t;
  }

  /// Gauss-Jordan inversion of a polynomial matrix whose pivots can all be
  /// chosen among nonzero constants (true for U, which is unitriangular
  /// with respect to the length order). Throws InternalError otherwise.
  static GroupMatrix<Polynomial> invert_unimodular(GroupMatrix<Polynomial> a) {
    const std::size_t m = a.dim;
    GroupMatrix<Polynomial> inv(m);
    for (std::size_t i = 0; i < m; ++i) inv(i, i) = Polynomial(1);
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t piv = m;
      for (std::size_t r = col; r < m; ++r)
        if (a(r, col).is_constant() && !a(r, col).is_zero()) {
          piv = r;
          break;
        }
      if (piv == m) throw InternalError("no constant pivot while inverting U");
      if (piv != col)
        for (std::size_t c = 0; c < m; ++c) {
          std::swap(a(piv, c), a(col, c));
          std::swap(inv(piv, c), inv(col, c));
        }
      const Rational p = a(col, col).constant_value();
      for (std::size_t c = 0; c < m; ++c) {
        a(col, c) = a(col, c) / p;
        inv(col, c) = inv(col, c) / p;
      }
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        const Polynomial factor = a(r, col);
        for (std::size_t c = 0; c < m; ++c) {
          if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
          if (!inv(col, c).is_zero()) inv(r, c) -= factor * inv(col, c);
        }
      }
    }
    return inv;
  }

  static GroupMatrix<Polynomial> multiply(const GroupMatrix<Polynomial>& a, const GroupMatrix<Polynomial>& b) {
    GroupMatrix<Polynomial> c(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) {
        std::vector<Term> acc;
        for (std::size_t k = 0; k < a.dim; ++k) {
          if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
          detail::append_terms(acc, a(i, k) * b(k, j));
        }
        c(i, j) = Polynomial::from_terms(std::move(acc));
      }
    return c;
  }

 private:
  std::vector<std::array<int, 3>> act_factors(const Permutation& t) const {
    std::vector<std::array<int, 3>> f;
    for (const auto& [a, b, m] : delta_factors(eta_)) f.push_back({t(a), t(b), m});
    return f;
  }

  Refinement eta_;
  std::vector<Permutation> elements_;
  std::vector<Polynomial> dd_delta_;
  GroupMatrix<Polynomial> y_, u_, u_inv_, x_inv_;
  std::vector<Polynomial> dual_;
};

/// Outcome of the built-in certification of a dual-basis table.
struct DualBasisCertificate {
  bool polynomial_and_homogeneous = true;
  bool identity_is_one = true;
  bool x_times_inverse_is_identity = true;
  bool inverse_entries_match_duals = true;
  bool congruence_mod_ideal = true;
  std::string first_failure;
  bool ok() const {
    return polynomial_and_homogeneous && identity_is_one && x_times_inverse_is_identity && inverse_entries_match_duals &&
           congruence_mod_ideal;
  }
};

/// Certifies every structural claim about the table:
///  - each (partial_sigma Delta)^* is homogeneous of degree l(sigma), and the identity's is 1;
///  - X X^{-1} = I, checked on numerators over the common denominator eta! Delta;
///  - (X^{-1})^tau_{sigma^{-1}} = tau((partial_sigma Delta)^*);
///  - (partial_sigma Delta)^* - (1/eta!) partial_{sigma^{-1} w} Delta lies in the ideal
///    generated by p_eta^{S_eta}, witnessed by U^{-1} - I having S_eta-invariant
///    entries in p_eta.
inline DualBasisCertificate certify(const DualBasisTable& t) {
  DualBasisCertificate cert;
  const auto& els = t.elements();
  const std::size_t m = els.size();
  const Refinement& eta = t.refinement();
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (cert.first_failure.empty()) cert.first_failure = why;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const Polynomial& d = t.duals()[i];
    if (d.is_zero() || !d.is_homogeneous() || d.degree() != els[i].length())
      fail(cert.polynomial_and_homogeneous, "dual of " + els[i].to_cycle_notation() + " is not homogeneous of degree l(sigma)");
  }
  if (t.duals()[0] != Polynomial(1)) fail(cert.identity_is_one, "dual of the identity is not 1");

  // sum_tau sg(tau) tau(partial_sigma Delta) (X^{-1})^tau_nu = delta_{sigma,nu} eta! Delta
  const Polynomial scaled_delta = delta(eta) * eta.factorial();
  for (std::size_t s = 0; s < m && cert.x_times_inverse_is_identity; ++s) {
    std::vector<Polynomial> images;
    for (std::size_t tau = 0; tau < m; ++tau)
      images.push_back(act_perm(els[tau], t.dd_delta(els[s])) * Rational(els[tau].sign()));
    for (std::size_t nu = 0; nu < m; ++nu) {
      std::vector<Term> acc;
      for (std::size_t tau = 0; tau < m; ++tau)
        detail::append_terms(acc, images[tau] * t.x_inverse()(tau, nu));
      const Polynomial lhs = Polynomial::from_terms(std::move(acc));
      if (lhs != (s == nu ? scaled_delta : Polynomial())) {
        fail(cert.x_times_inverse_is_identity, "X X^-1 differs from I at (" + els[s].to_cycle_notation() + ", " +
                                                   els[nu].to_cycle_notation() + ")");
        break;
      }
    }
  }

  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t col = t.index_of(els[s].inverse());
    for (std::size_t tau = 0; tau < m; ++tau)
      if (t.x_inverse()(tau, col) != act_perm(els[tau], t.duals()[s])) {
        fail(cert.inverse_entries_match_duals, "(X^-1)^tau_{sigma^-1} != tau(dual) for sigma = " + els[s].to_cycle_notation());
        break;
      }
  }

  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Polynomial e = t.u_inverse()(r, c) - Polynomial(r == c ? 1 : 0);
      if (e.is_zero()) continue;
      if (!is_invariant(e, eta) || !in_p_eta(e, eta))
        fail(cert.congruence_mod_ideal, "U^-1 - I has an entry outside p_eta^{S_eta}");
    }
  const Permutation w = longest_word(eta);
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t col = t.index_of(els[s].inverse());
    // dual - Y^id_{sigma^-1} = sum_rho Y^id_rho (U^-1 - I)^rho_{sigma^-1}
    Polynomial rhs;
    for (std::size_t rho = 0; rho < m; ++rho) {
      Polynomial e = t.u_inverse()(rho, col) - Polynomial(rho == col ? 1 : 0);
      if (!e.is_zero()) rhs += t.y()(0, rho) * e;
    }
    const Polynomial y_entry = t.dd_delta(els[s].inverse() * w) / eta.factorial();
    if (t.y()(0, col) != y_entry || t.duals()[s] - y_entry != rhs)
      fail(cert.congruence_mod_ideal, "congruence certificate fails for sigma = " + els[s].to_cycle_notation());
  }
  return cert;
}

/// f = g / Q with Q an S_eta-invariant product of linear factors and g a
/// polynomial. D_sigma is linear over invariants, so D_sigma(f) = D_sigma(g) / Q.
struct InvariantDenominator {
  Polynomial numerator;
  std::vector<std::array<int, 3>> factors;
};

/// Clears the S_eta-orbit of f's denominator. Returns nullopt when that orbit
/// product is only anti-invariant (a same-block factor with zero shift).
inline std::optional<InvariantDenominator> clear_invariant_denominator(const RationalFunction& f,
                                                                      const Refinement& eta) {
  std::vector<LinearFactor> common;
  for (const auto& tau : group_elements(eta)) {
    std::vector<LinearFactor> img;
    for (const auto& d : f.denominator()) {
      LinearFactor g{tau(d.first), tau(d.second), d.shift};
      if (g.first > g.second) g = {g.second, g.first, -g.shift};
      img.push_back(g);
    }
    std::sort(img.begin(), img.end());
    std::vector<LinearFactor> merged;
    std::size_t i = 0, j = 0;
    while (i < common.size() || j < img.size()) {
      if (j == img.size() || (i < common.size() && common[i] < img[j])) merged.push_back(common[i++]);
      else if (i == common.size() || img[j] < common[i]) merged.push_back(img[j++]);
      else {
        merged.push_back(common[i++]);
        ++j;
      }
    }
    common = std::move(merged);
  }
  for (const auto& b : eta.blocks())
    for (int a = b.start; a + 1 < b.start + b.size; ++a) {
      const auto flips = std::count_if(common.begin(), common.end(),
                                       [&](const LinearFactor& d) { return d.first == a && d.second == a + 1; });
      if (flips % 2) return std::nullopt;
    }
  InvariantDenominator out{f.numerator(), {}};
  std::size_t j = 0;
  for (const auto& d : common) {
    out.factors.push_back({d.first, d.second, d.shift});
    if (j < f.denominator().size() && f.denominator()[j] == d) ++j;
    else out.numerator *= d.as_polynomial();
  }
  return out;
}

/// partial_sigma p for every sigma in `elements` (sorted by length), sharing
/// prefixes: partial_sigma = partial_a partial_{s_a sigma} for the first letter a.
inline std::vector<Polynomial> dd_all(const std::vector<Permutation>& elements, const Polynomial& p) {
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  std::map<Permutation, std::size_t> index;
  for (const auto& s : elements) {
    if (s.is_identity()) {
      out.push_back(p);
    } else {
      const int a = reduced_word(s).front();
      const auto it = index.find(Permutation::simple(s.tag(), a) * s);
      out.push_back(it == index.end() ? dd_sigma(s, p) : dd_apply(a, out[it->second]));
    }
    index.emplace(s, out.size() - 1);
  }
  return out;
}

/// sigma -> D^eta_sigma(f), the coordinates of f in the dual basis.
inline std::vector<RationalFunction> decompose(const DualBasisTable& t, const RationalFunction& f) {
  std::vector<RationalFunction> out;
  const Refinement& eta = t.refinement();
  if (!f.is_polynomial())
    if (auto cleared = clear_invariant_denominator(f, eta)) {
      for (const auto& d : dd_all(t.elements(), cleared->numerator))
        out.push_back(RationalFunction::make(sym(eta, d), cleared->factors));
      return out;
    }
  for (const auto& s : t.elements()) out.push_back(sdd(eta, s, f));
  return out;
}

/// Checks f = sum_sigma D_sigma(f) (partial_sigma Delta)^* with the invariant
/// denominator cleared, together with invariance of every coefficient.
inline bool verify_reconstruction(const DualBasisTable& t, const RationalFunction& f) {
  const Refinement& eta = t.refinement();
  auto cleared = clear_invariant_denominator(f, eta);
  if (!cleared) {
    const auto c = decompose(t, f);
    for (const auto& ci : c)
      if (!is_invariant(ci, eta)) return false;
    std::vector<RationalFunction> parts;
    for (std::size_t i = 0; i < c.size(); ++i) parts.push_back(c[i] * RationalFunction(t.duals()[i]));
    return RationalFunction::sum(parts) == f;
  }
  std::vector<Term> acc;
  const auto dds = dd_all(t.elements(), cleared->numerator);
  for (std::size_t i = 0; i < t.elements().size(); ++i) {
    const Polynomial c = sym(eta, dds[i]);
    if (!is_invariant(c, eta)) return false;
    if (!c.is_zero()) detail::append_terms(acc, c * t.duals()[i]);
  }
  return Polynomial::from_terms(std::move(acc)) == cleared->numerator;
}

/// sum_sigma coeffs[sigma] (partial_sigma Delta)^*.
inline RationalFunction reconstruct(const DualBasisTable& t, const std::vector<RationalFunction>& coeffs) {
  std::vector<RationalFunction> parts;
  for (std::size_t i = 0; i < coeffs.size(); ++i) parts.push_back(coeffs[i] * RationalFunction(t.duals()[i]));
  return RationalFunction::sum(parts);
}

/// d^nu_{sigma,tau} = D^eta_nu((partial_sigma Delta)^* (partial_tau Delta)^*).
inline Polynomial d_coeff(const DualBasisTable& t, const Permutation& sigma, const Permutation& tau,
                          const Permutation& nu) {
  return sdd(t.refinement(), nu, t.dual(sigma) * t.dual(tau));
}

/// Shared, lazily built dual-basis tables keyed by refinement.
class DualBasisCache {
 public:
  explicit DualBasisCache(long max_factorial = kDefaultMaxFactorial) : max_factorial_(max_factorial) {}
  const DualBasisTable& get(const Refinement& eta) {
    for (const auto& [key, table] : tables_)
      if (key == eta) return *table;
    tables_.emplace_back(eta, std::make_shared<DualBasisTable>(DualBasisTable::build(eta, max_factorial_)));
    return *tables_.back().second;
  }
  long max_factorial() const { return max_factorial_; }

 private:
  long max_factorial_;
  std::vector<std::pair<Refinement, std::shared_ptr<const DualBasisTable>>> tables_;
};

/// Reads GTKIT_MAX_FACT, falling back to the default bound.
inline long max_factorial_from_env() {
  if (const char* v = std::getenv("GTKIT_MAX_FACT")) {
    char* end = nullptr;
    const long b = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && b >= 1) return b;
    throw std::invalid_argument("GTKIT_MAX_FACT must be a positive integer");
  }
  return kDefaultMaxFactorial;
}

}  // namespace gtkit

#endif  // GTKIT_DIVDIFF_HPP
