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

// Seeded generators for randomized identity checks.

#ifndef GTKIT_RANDOM_HPP
#define GTKIT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rational_function.hpp"
#include "symcomb.hpp"

namespace gtkit {

using Rng = std::mt19937_64;

struct RandomPolynomialOptions {
  int max_degree = 4;
  int max_terms = 6;
  int coefficient_bound = 5;  // numerators in [-bound, bound], denominators in [1, 3]
};

inline Rational random_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random polynomial in the given variables.
inline Polynomial random_polynomial(Rng& rng, const std::vector<int>& vars, const RandomPolynomialOptions& opt = {}) {
  std::uniform_int_distribution<int> nterms(1, opt.max_terms), deg(0, opt.max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
  std::vector<Term> terms;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m;
    if (!vars.empty()) {
      const int d = deg(rng);
      for (int j = 0; j < d; ++j) {
        const int v = vars[pick(rng)];
        m.set_exponent(v, m.exponent(v) + 1);
      }
    }
    Rational c = random_rational(rng, opt.coefficient_bound);
    if (c == 0) c = 1;
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// All flat indices 0..N-1 of a refinement's ambient tableau.
inline std::vector<int> all_variables(const Refinement& eta) {
  std::vector<int> v(static_cast<std::size_t>(eta.num_entries()));
  for (int a = 0; a < eta.num_entries(); ++a) v[static_cast<std::size_t>(a)] = a;
  return v;
}

/// Variables that lie in a nontrivial eta-block, plus one spectator variable
/// when available.
inline std::vector<int> active_variables(const Refinement& eta) {
  std::vector<int> v;
  int spectator = -1;
  for (const auto& b : eta.blocks()) {
    if (b.size > 1)
      for (int j = 0; j < b.size; ++j) v.push_back(b.start + j);
    else if (spectator < 0)
      spectator = b.start;
  }
  if (spectator >= 0) v.push_back(spectator);
  return v;
}

/// Random element of B_eta: a random polynomial over up to two random
/// admissible denominator factors (same-row pairs with nonzero shift, or
/// different eta-blocks with any shift).
inline RationalFunction random_B_eta(Rng& rng, const Refinement& eta, const RandomPolynomialOptions& opt = {}) {
  const std::vector<int> vars = active_variables(eta);
  Polynomial p = random_polynomial(rng, vars, opt);
  std::vector<std::array<int, 3>> factors;
  std::uniform_int_distribution<int> nf(0, 2), shift(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  const int count = nf(rng);
  for (int attempt = 0; attempt < 20 && static_cast<int>(factors.size()) < count; ++attempt) {
    const int a = vars[pick(rng)], b = vars[pick(rng)];
    if (a == b || VarIndex::from_flat(a).k != VarIndex::from_flat(b).k) continue;
    const int m = shift(rng);
    if (m == 0 && eta.same_block(a, b)) continue;
    factors.push_back({a, b, m});
  }
  return RationalFunction::make(std::move(p), factors);
}

}  // namespace gtkit

#endif  // GTKIT_RANDOM_HPP
