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

// Randomized and exhaustive checks of the divided-difference calculus.

#ifndef GTKIT_IDENTITIES_HPP
#define GTKIT_IDENTITIES_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "divdiff.hpp"
#include "random.hpp"

namespace gtkit {

struct IdentityReport {
  std::string name;
  std::string refinement;
  long trials = 0;
  long passed = 0;
  std::string counterexample;  // first failure, empty if none
  bool ok() const { return passed == trials; }
};

/// Refinements of rank <= max_rank whose group order is at most `bound`,
/// in a fixed order (rank, then rows lexicographically).
inline std::vector<Refinement> refinements_up_to(int max_rank, long bound, bool include_trivial = true) {
  std::vector<Refinement> out;
  auto compositions = [](int k) {
    std::vector<std::vector<int>> res;
    for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
      std::vector<int> parts{1};
      for (int j = 0; j < k - 1; ++j) {
        if (mask & (1 << j)) parts.push_back(1);
        else ++parts.back();
      }
      res.push_back(parts);
    }
    std::sort(res.begin(), res.end());
    return res;
  };
  for (int n = 1; n <= max_rank; ++n) {
    std::vector<std::vector<std::vector<int>>> acc{{}};
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<std::vector<int>>> next;
      for (const auto& prefix : acc)
        for (const auto& c : compositions(k)) {
          auto r = prefix;
          r.push_back(c);
          next.push_back(std::move(r));
        }
      acc = std::move(next);
    }
    for (auto& rows : acc) {
      Refinement eta(rows);
      if (eta.factorial() > bound) continue;
      if (!include_trivial && eta.is_trivial()) continue;
      out.push_back(std::move(eta));
    }
  }
  return out;
}

/// A representative parabolic for each multiset of block sizes with
/// eta! <= 24, embedded in the smallest rank that holds it.
inline std::vector<Refinement> representative_parabolics() {
  return {
      Refinement({{1}, {2}}),
      Refinement({{1}, {1, 1}, {3}}),
      Refinement({{1}, {1, 1}, {1, 1, 1}, {4}}),
      Refinement({{1}, {2}, {2, 1}}),
      Refinement({{1}, {2}, {3}}),
      Refinement({{1}, {2}, {2, 1}, {1, 2, 1}}),
      Refinement({{1}, {2}, {2, 1}, {3, 1}}),
      Refinement({{1}, {2}, {2, 1}, {2, 2}, {1, 1, 1, 1, 1}}),
  };
}

/// All reduced words of sigma (brute force over left descents).
inline std::vector<std::vector<int>> all_reduced_words(const Permutation& sigma) {
  if (sigma.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int a = 0; a + 1 < sigma.size(); ++a) {
    if (!sigma.has_left_descent(a)) continue;
    if (sigma.tag().block[static_cast<std::size_t>(a)] != sigma.tag().block[static_cast<std::size_t>(a + 1)]) continue;
    for (auto w : all_reduced_words(Permutation::simple(sigma.tag(), a) * sigma)) {
      w.insert(w.begin(), a);
      out.push_back(std::move(w));
    }
  }
  return out;
}

namespace detail {

inline std::string show(const Polynomial& p) { return p.to_string(var_name); }

class IdentityRunner {
 public:
  IdentityRunner(std::string name, const Refinement& eta) {
    report_.name = std::move(name);
    report_.refinement = eta.to_string();
  }
  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.trials;
    if (ok) ++report_.passed;
    else if (report_.counterexample.empty()) report_.counterexample = describe();
  }
  IdentityReport done() { return std::move(report_); }

 private:
  IdentityReport report_;
};

inline std::vector<int> simple_positions(const Refinement& eta) {
  std::vector<int> out;
  for (const auto& b : eta.blocks())
    for (int a = b.start; a + 1 < b.start + b.size; ++a) out.push_back(a);
  return out;
}

}  // namespace detail

/// Runs every divided-difference identity on `trials` random polynomials
/// per identity for the refinement eta.
inline std::vector<IdentityReport> verify_identities(const Refinement& eta, Rng& rng, int trials,
                                                     const DualBasisTable* table = nullptr) {
  using detail::show;
  std::vector<IdentityReport> out;
  const auto simples = detail::simple_positions(eta);
  const auto vars = active_variables(eta);
  const auto elements = group_elements(eta);
  const Permutation w = longest_word(eta);
  RandomPolynomialOptions opt;
  opt.max_degree = eta.longest_length() + 2;
  auto rand_poly = [&] { return random_polynomial(rng, vars, opt); };
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  {
    detail::IdentityRunner r("dd_square_zero", eta);
    for (int t = 0; t < trials && !simples.empty(); ++t) {
      const int a = simples[pick(simples.size())];
      const Polynomial f = rand_poly();
      r.check(dd_apply(a, dd_apply(a, f)).is_zero(), [&] { return "a=" + std::to_string(a) + " f=" + show(f); });
    }
    out.push_back(r.done());
  }
  {
    detail::IdentityRunner r("dd_braid", eta);
    std::vector<int> braid;
    for (int a : simples)
      if (eta.same_block(a, a + 2) && a + 2 < eta.num_entries()) braid.push_back(a);
    for (int t = 0; t < trials && !braid.empty(); ++t) {
      const int a = braid[pick(braid.size())];
      const Polynomial f = rand_poly();
      r.check(dd_word({a, a + 1, a}, f) == dd_word({a + 1, a, a + 1}, f),
              [&] { return "a=" + std::to_string(a) + " f=" + show(f); });
    }
    out.push_back(r.done());
  }
  {
    detail::IdentityRunner r("dd_distant_commutation", eta);
    std::vector<std::pair<int, int>> pairs;
    for (int a : simples)
      for (int b : simples)
        if (b > a + 1) pairs.emplace_back(a, b);
    for (int t = 0; t < trials && !pairs.empty(); ++t) {
      const auto [a, b] = pairs[pick(pairs.size())];
      const Polynomial f = rand_poly();
      r.check(dd_word({a, b}, f) == dd_word({b, a}, f),
              [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " f=" + show(f); });
    }
    out.push_back(r.done());
  }
  {
    // partial_a (f g) = s_a(f) partial_a(g) + partial_a(f) g
    detail::IdentityRunner r("dd_twisted_leibniz", eta);
    for (int t = 0; t < trials && !simples.empty(); ++t) {
      const int a = simples[pick(simples.size())];
      const Polynomial f = rand_poly(), g = rand_poly();
      const Polynomial rhs = act_perm(Permutation::simple(eta, a), f) * dd_apply(a, g) + dd_apply(a, f) * g;
      r.check(dd_apply(a, f * g) == rhs, [&] { return "a=" + std::to_string(a) + " f=" + show(f) + " g=" + show(g); });
    }
    out.push_back(r.done());
  }
  {
    // partial_sigma partial_tau = partial_{sigma tau} if lengths add, else 0; every pair
    detail::IdentityRunner r("dd_composition_law", eta);
    const Polynomial f = rand_poly() + random_polynomial(rng, vars, {opt.max_degree, 3, 5});
    std::vector<Polynomial> images;
    for (const auto& s : elements) images.push_back(dd_sigma(s, f));
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const Permutation st = elements[i] * elements[j];
        const Polynomial lhs = dd_sigma(elements[i], images[j]);
        const bool adds = elements[i].length() + elements[j].length() == st.length();
        std::size_t k = 0;
        while (elements[k] != st) ++k;
        r.check(lhs == (adds ? images[k] : Polynomial()), [&] {
          return "sigma=" + elements[i].to_cycle_notation() + " tau=" + elements[j].to_cycle_notation() + " f=" + show(f);
        });
      }
    out.push_back(r.done());
  }
  {
    // partial_w (f partial_sigma(g)) = partial_w (partial_{sigma^-1}(f) g)
    detail::IdentityRunner r("dd_longest_adjoint", eta);
    for (int t = 0; t < trials; ++t) {
      const Permutation& s = elements[pick(elements.size())];
      const Polynomial f = rand_poly(), g = rand_poly();
      r.check(dd_sigma(w, f * dd_sigma(s, g)) == dd_sigma(w, dd_sigma(s.inverse(), f) * g), [&] {
        return "sigma=" + s.to_cycle_notation() + " f=" + show(f) + " g=" + show(g);
      });
    }
    out.push_back(r.done());
  }
  {
    // (1/eta!) partial_w = (1/Delta) asym, applied
    detail::IdentityRunner r("dd_longest_is_antisymmetrizer", eta);
    const RationalFunction inv_delta = RationalFunction::make(Polynomial(1), delta_factors(eta));
    for (int t = 0; t < trials; ++t) {
      const Polynomial f = rand_poly();
      const RationalFunction lhs(dd_sigma(w, f) / eta.factorial());
      r.check(lhs == inv_delta * asym(eta, RationalFunction(f)), [&] { return "f=" + show(f); });
    }
    out.push_back(r.done());
  }
  {
    // the same as an equality in the smash product
    detail::IdentityRunner r("dd_longest_is_antisymmetrizer_operator", eta);
    const OperatorElement lhs = OperatorElement::divided_difference(eta, w) * (Rational(1) / eta.factorial());
    const OperatorElement rhs =
        OperatorElement::multiplication(eta, RationalFunction::make(Polynomial(1), delta_factors(eta))) *
        OperatorElement::asym(eta);
    r.check(lhs == rhs, [] { return std::string("operator mismatch"); });
    out.push_back(r.done());
  }
  {
    detail::IdentityRunner r("dd_reduced_word_independence", eta);
    const Polynomial f = rand_poly();
    for (const auto& s : elements) {
      if (s.length() > 4) continue;
      const Polynomial ref = dd_sigma(s, f);
      for (const auto& word : all_reduced_words(s))
        r.check(dd_word(word, f) == ref, [&] { return "sigma=" + s.to_cycle_notation() + " f=" + show(f); });
    }
    out.push_back(r.done());
  }
  if (table) {
    detail::IdentityRunner r("decompose_reconstruct", eta);
    for (int t = 0; t < trials; ++t) {
      const RationalFunction f = random_B_eta(rng, eta);
      r.check(verify_reconstruction(*table, f), [&] { return "f=" + f.to_string(); });
    }
    out.push_back(r.done());
  }
  return out;
}

/// d^nu_{sigma,tau}: d^nu_{nu,id} = d^nu_{id,nu} = 1, and by lengths
/// l(sigma) + l(tau) < l(nu) gives 0, > gives an element of p_eta, = gives a
/// constant. Exhaustive over all triples when eta! <= exhaustive_bound,
/// otherwise on `samples` random triples.
inline IdentityReport verify_d_coefficients(const DualBasisTable& t, Rng& rng, long samples,
                                            long exhaustive_bound = 6) {
  const Refinement& eta = t.refinement();
  const auto& els = t.elements();
  const Permutation id = Permutation::identity(eta);
  detail::IdentityRunner r("d_coefficient_degrees", eta);
  for (const auto& nu : els) {
    r.check(d_coeff(t, nu, id, nu) == Polynomial(1) && d_coeff(t, id, nu, nu) == Polynomial(1),
            [&] { return "unit fails at nu=" + nu.to_cycle_notation(); });
  }
  auto triple = [&](const Permutation& s, const Permutation& tau, const Permutation& nu) {
    const Polynomial d = d_coeff(t, s, tau, nu);
    const int ls = s.length() + tau.length(), ln = nu.length();
    const bool ok = ls < ln ? d.is_zero() : ls > ln ? in_p_eta(d, eta) : d.degree() <= 0;
    r.check(ok, [&] {
      return "sigma=" + s.to_cycle_notation() + " tau=" + tau.to_cycle_notation() + " nu=" + nu.to_cycle_notation() +
             " d=" + detail::show(d);
    });
  };
  if (eta.factorial() <= exhaustive_bound) {
    for (const auto& s : els)
      for (const auto& tau : els)
        for (const auto& nu : els) triple(s, tau, nu);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (long i = 0; i < samples; ++i) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      triple(els[a], els[b], els[c]);
    }
  }
  return r.done();
}

}  // namespace gtkit

#endif  // GTKIT_IDENTITIES_HPP
