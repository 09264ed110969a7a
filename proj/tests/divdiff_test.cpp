// Copyright 2026 The gtkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <vector>

#include "printers.hpp"
#include "gtkit/divdiff.hpp"
#include "gtkit/identities.hpp"
#include "gtkit/random.hpp"

namespace gtkit {
namespace {

Polynomial X(int v) { return Polynomial::variable(v); }

// Rank 2 with one block {x21, x22} at flat positions 1, 2.
const Refinement kPair({{1}, {2}});

TEST(Delta, Antisymmetric) {
  EXPECT_EQ(delta(kPair), X(1) - X(2));
  EXPECT_EQ(delta(Refinement::trivial(3)), Polynomial(1));
  const Refinement eta({{1}, {2}, {3}});
  const Polynomial d = delta(eta);
  for (int a : {1, 3, 4}) EXPECT_EQ(act_perm(Permutation::simple(eta, a), d), -d);
}

TEST(DividedDifference, SmallCases) {
  EXPECT_EQ(dd_apply(1, X(1)), Polynomial(1));
  EXPECT_EQ(dd_apply(1, X(1) * X(1)), X(1) + X(2));
  EXPECT_TRUE(dd_apply(1, X(1) * X(2) + X(0)).is_zero());
  // on a rational function: partial(1/(x1 - x2 - 1)) computed by hand
  const RationalFunction f = RationalFunction::reciprocal(1, 2, 1);
  const RationalFunction expected = RationalFunction::make(Polynomial(2), {{1, 2, 1}, {1, 2, -1}});
  EXPECT_EQ(dd_apply(1, f), expected);
  EXPECT_EQ(dd_apply(1, RationalFunction(X(1))), RationalFunction(1));
}

TEST(DividedDifference, LongestOnDelta) {
  for (const auto& eta : representative_parabolics()) {
    const Polynomial d = delta(eta);
    EXPECT_EQ(dd_sigma(longest_word(eta), d), Polynomial(eta.factorial())) << eta.to_string();
    for (const auto& s : group_elements(eta))
      if (s.length() < eta.longest_length()) {
        EXPECT_TRUE(in_p_eta(dd_sigma(s, d), eta));
      }
  }
}

TEST(SymmetrizedDividedDifference, Basics) {
  const Permutation s = Permutation::simple(kPair, 1);
  EXPECT_EQ(sdd(kPair, s, X(1)), Polynomial(1));
  EXPECT_EQ(sdd(kPair, Permutation::identity(kPair), X(1)), (X(1) + X(2)) / Rational(2));
  Rng rng(3);
  const Refinement eta({{1}, {1, 1}, {3}});
  for (int t = 0; t < 20; ++t) {
    const RationalFunction f = random_B_eta(rng, eta);
    for (const auto& sg : group_elements(eta)) {
      const RationalFunction g = sdd(eta, sg, f);
      EXPECT_TRUE(is_invariant(g, eta));
      EXPECT_TRUE(in_B_eta(g, eta)) << f.to_string();
    }
  }
}

TEST(DualBasis, PairByHand) {
  const auto t = DualBasisTable::build(kPair);
  EXPECT_EQ(t.dual(Permutation::identity(kPair)), Polynomial(1));
  EXPECT_EQ(t.dual(Permutation::simple(kPair, 1)), (X(1) - X(2)) / Rational(2));
  // X = [[1/2, 1/2], [1/D, -1/D]], X^-1 = [[1, D/2], [1, -D/2]]
  const Polynomial d = delta(kPair);
  EXPECT_EQ(t.x_entry(0, 0), RationalFunction(Rational(1, 2)));
  EXPECT_EQ(t.x_entry(1, 1), RationalFunction::reciprocal(2, 1, 0));
  EXPECT_EQ(t.x_inverse()(0, 0), Polynomial(1));
  EXPECT_EQ(t.x_inverse()(0, 1), d / Rational(2));
  EXPECT_EQ(t.x_inverse()(1, 1), -d / Rational(2));
  EXPECT_TRUE(certify(t).ok());
}

TEST(DualBasis, TrivialRefinement) {
  const auto t = DualBasisTable::build(Refinement::trivial(3));
  ASSERT_EQ(t.duals().size(), 1u);
  EXPECT_EQ(t.duals()[0], Polynomial(1));
}

TEST(DualBasis, BoundExceeded) {
  EXPECT_THROW(DualBasisTable::build(Refinement({{1}, {1, 1}, {3}, {4}}), 24), BoundExceeded);
  EXPECT_THROW(DualBasisTable::build(Refinement({{1}, {1, 1}, {3}}), 5), BoundExceeded);
}

// Independent oracle: specialize X at a rational point, invert the rational
// matrix by plain Gaussian elimination and compare with the specialized X^-1.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = a[c][c];
    for (std::size_t j = 0; j < m; ++j) a[c][j] /= piv, inv[c][j] /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < m; ++j) a[r][j] -= f * a[c][j], inv[r][j] -= f * inv[c][j];
    }
  }
  return inv;
}

TEST(DualBasis, MatchesNumericInverse) {
  for (const auto& eta : {Refinement({{1}, {2}, {3}}), Refinement({{1}, {1, 1}, {3}}), Refinement({{1}, {2}, {2, 1}})}) {
    const auto t = DualBasisTable::build(eta);
    const std::size_t m = t.elements().size();
    std::vector<ParamScalar> pt;
    std::vector<Rational> rpt;
    for (int a = 0; a < kMaxVars; ++a) {
      const Rational q(a * a + 3 * a + 1, a + 2);
      pt.emplace_back(q);
      rpt.push_back(q);
    }
    std::vector<std::vector<Rational>> x(m, std::vector<Rational>(m));
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t tau = 0; tau < m; ++tau) {
        const ParamFraction v = evaluate(t.x_entry(s, tau), pt);
        ASSERT_TRUE(v.is_polynomial());
        x[s][tau] = v.numerator().constant_value();
      }
    const auto inv = invert(x);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(inv[i][j], t.x_inverse()(i, j).evaluate(rpt)) << eta.to_string();
  }
}

TEST(DualBasis, CertifiedForEveryParabolicUpTo24) {
  for (const auto& eta : representative_parabolics()) {
    const auto t = DualBasisTable::build(eta);
    const auto cert = certify(t);
    EXPECT_TRUE(cert.ok()) << eta.to_string() << ": " << cert.first_failure;
  }
}

TEST(Decompose, HandExamples) {
  const auto t = DualBasisTable::build(kPair);
  const auto c = decompose(t, RationalFunction(X(1)));
  EXPECT_EQ(c[0], RationalFunction((X(1) + X(2)) / Rational(2)));
  EXPECT_EQ(c[1], RationalFunction(1));
  EXPECT_EQ(reconstruct(t, c), RationalFunction(X(1)));
  const Refinement eta({{1}, {1, 1}, {3}});
  const auto t3 = DualBasisTable::build(eta);
  const auto cd = decompose(t3, RationalFunction(delta(eta)));
  // D_w(Delta) = sym(partial_w Delta) = eta!
  EXPECT_EQ(cd.back(), RationalFunction(eta.factorial()));
  EXPECT_EQ(reconstruct(t3, cd), RationalFunction(delta(eta)));
  const Polynomial inv = X(3) + X(4) + X(5);
  const auto ci = decompose(t3, RationalFunction(inv * X(0)));
  EXPECT_EQ(ci[0], RationalFunction(inv * X(0)));
  for (std::size_t i = 1; i < ci.size(); ++i) EXPECT_TRUE(ci[i].is_zero());
}

TEST(DCoeff, UnitAndVanishing) {
  const Refinement eta({{1}, {1, 1}, {3}});
  const auto t = DualBasisTable::build(eta);
  const auto id = Permutation::identity(eta);
  for (const auto& nu : t.elements()) {
    EXPECT_EQ(d_coeff(t, nu, id, nu), Polynomial(1));
    EXPECT_EQ(d_coeff(t, id, nu, nu), Polynomial(1));
    for (const auto& s : t.elements())
      for (const auto& tau : t.elements()) {
        const Polynomial d = d_coeff(t, s, tau, nu);
        if (s.length() + tau.length() < nu.length()) {
          EXPECT_TRUE(d.is_zero());
        }
        if (s.length() + tau.length() > nu.length()) {
          EXPECT_TRUE(in_p_eta(d, eta));
        }
      }
  }
}

TEST(DCoeff, DegreeRuleExhaustiveAndSampled) {
  Rng rng(11);
  const auto t3 = DualBasisTable::build(Refinement({{1}, {1, 1}, {3}}));
  const auto exhaustive = verify_d_coefficients(t3, rng, 0);
  EXPECT_TRUE(exhaustive.ok()) << exhaustive.counterexample;
  EXPECT_EQ(exhaustive.trials, 6 + 6 * 6 * 6);
  const auto t4 = DualBasisTable::build(Refinement({{1}, {2}, {1, 2}}));
  const auto sampled = verify_d_coefficients(t4, rng, 30, 1);
  EXPECT_TRUE(sampled.ok()) << sampled.counterexample;
  EXPECT_EQ(sampled.trials, 4 + 30);
}

TEST(Decompose, ClearedDenominatorMatchesDirect) {
  Rng rng(5);
  const Refinement eta({{1}, {1, 1}, {3}});
  const auto t = DualBasisTable::build(eta);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalFunction f = random_B_eta(rng, eta);
    const auto fast = decompose(t, f);
    for (std::size_t i = 0; i < fast.size(); ++i) EXPECT_EQ(fast[i], sdd(eta, t.elements()[i], f));
    EXPECT_EQ(reconstruct(t, fast), f);
    EXPECT_TRUE(verify_reconstruction(t, f));
  }
}

TEST(Identities, AllPassOnRepresentatives) {
  Rng rng(2026);
  for (const auto& eta : representative_parabolics()) {
    const auto table = DualBasisTable::build(eta);
    for (const auto& rep : verify_identities(eta, rng, 20, &table))
      EXPECT_TRUE(rep.ok()) << rep.name << " " << rep.refinement << ": " << rep.counterexample;
  }
}

TEST(Identities, ReducedWordsEnumerated) {
  const Refinement eta({{1}, {1, 1}, {3}});
  EXPECT_EQ(all_reduced_words(longest_word(eta)).size(), 2u);
  const Refinement s4({{1}, {1, 1}, {1, 1, 1}, {4}});
  EXPECT_EQ(all_reduced_words(longest_word(s4)).size(), 16u);
}

TEST(Identities, RefinementEnumeration) {
  const auto all = refinements_up_to(3, 24);
  EXPECT_EQ(all.size(), 11u);  // 1 + 2 + 8 compositions of ranks 1..3
  // rank 4 has 64 refinements, 12 of them with eta! > 24
  EXPECT_EQ(refinements_up_to(4, 24, false).size(), 1u + 2u + 8u + 52u - 4u);
}

}  // namespace
}  // namespace gtkit
