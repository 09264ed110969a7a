// Copyright 2026 The gtkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "printers.hpp"
#include "gtkit/symcomb.hpp"

namespace gtkit {
namespace {

// Row 3 of a rank-3 tableau has flat indices 3, 4, 5.
constexpr int kRow3 = 3;

std::vector<std::string> names(const std::vector<Permutation>& ps, int base) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_cycle_notation(base));
  return out;
}

TEST(Refinement, Basics) {
  const Refinement eta({{1}, {2}, {1, 2}});
  EXPECT_EQ(eta.rank(), 3);
  EXPECT_EQ(eta.num_entries(), 6);
  EXPECT_EQ(eta.factorial(), Rational(4));
  EXPECT_EQ(eta.longest_length(), 2);
  EXPECT_TRUE(eta.same_block(1, 2));
  EXPECT_FALSE(eta.same_block(3, 4));
  EXPECT_TRUE(eta.same_block(4, 5));
  EXPECT_TRUE(eta.refines(Refinement::mu(3)));
  EXPECT_FALSE(Refinement::mu(3).refines(eta));
  EXPECT_EQ(eta.to_string(), "((1),(2),(1,2))");
  EXPECT_THROW(Refinement({{1}, {1}}), std::invalid_argument);
}

TEST(Permutation, GroupAxioms) {
  const Refinement eta({{1}, {2}, {3}});
  const auto els = group_elements(eta);
  ASSERT_EQ(els.size(), 12u);
  EXPECT_TRUE(els.front().is_identity());
  for (const auto& a : els) {
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.sign() * a.inverse().sign(), 1);
    for (const auto& b : els) {
      EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
      EXPECT_EQ((a * b)(0), a(b(0)));
    }
  }
  EXPECT_TRUE(std::is_sorted(els.begin(), els.end()));
}

TEST(Permutation, ReducedWordsAreReducedAndLexMinimal) {
  const Refinement eta({{1}, {1, 1}, {3}, {2, 2}});
  for (const auto& s : group_elements(eta)) {
    const auto w = reduced_word(s);
    EXPECT_EQ(static_cast<int>(w.size()), s.length());
    EXPECT_EQ(Permutation::from_word(eta.tag(), w), s);
  }
  // w_0 of S_3 at positions 3..5 is s_3 s_4 s_3 in lex-smallest form
  const Refinement r({{1}, {2}, {3}});
  const auto w0 = longest_word(r);
  EXPECT_EQ(w0.length(), 4);
  EXPECT_EQ(reduced_word(Permutation::from_one_line(r, {0, 2, 1, 5, 4, 3})), (std::vector<int>{1, 3, 4, 3}));
}

TEST(Shuffles, TableForS3) {
  const Refinement eta({{1}, {1, 1}, {3}});
  EXPECT_EQ(names(shuffles(eta, Refinement({{1}, {1, 1}, {2, 1}})), kRow3),
            (std::vector<std::string>{"id", "(23)", "(123)"}));
  EXPECT_EQ(names(shuffles(eta, Refinement({{1}, {1, 1}, {1, 2}})), kRow3),
            (std::vector<std::string>{"id", "(12)", "(132)"}));
  EXPECT_EQ(shuffles(eta, Refinement({{1}, {1, 1}, {3}})).size(), 1u);
  EXPECT_EQ(shuffles(eta, Refinement::trivial(3)).size(), 6u);
}

TEST(Shuffles, CosetRepresentativesBruteForce) {
  const Refinement eta({{1}, {2}, {3}});
  const std::vector<Refinement> epss{Refinement({{1}, {1, 1}, {2, 1}}), Refinement({{1}, {2}, {1, 2}}),
                                     Refinement({{1}, {2}, {1, 1, 1}}), Refinement({{1}, {1, 1}, {3}})};
  for (const auto& eps : epss) {
    const auto sh = shuffles(eta, eps);
    const auto sub = group_elements(eps);
    std::set<Permutation> covered;
    for (const auto& s : sh)
      for (const auto& t : sub) {
        const Permutation p = s * t.retag(eta.tag());
        EXPECT_TRUE(covered.insert(p).second);
        EXPECT_GE(p.length(), s.length());
      }
    EXPECT_EQ(covered.size(), group_elements(eta).size());
  }
}

TEST(IntegralPoint, ActionAndNormalForm) {
  const Refinement eta({{1}, {2}, {3}});
  const auto z = IntegralPoint::from_flat(3, {0, -1, 2, 0, 0, 0});
  const auto nf = normal_form(z, eta);
  EXPECT_EQ(nf.rep, IntegralPoint::from_flat(3, {0, 2, -1, 0, 0, 0}));
  EXPECT_EQ(act(nf.sigma, nf.rep), z);
  EXPECT_TRUE(in_normal_form(nf.rep, eta));
  EXPECT_FALSE(in_normal_form(z, eta));
  EXPECT_THROW(stabilizer_refinement(z, eta), NotInNormalForm);
  EXPECT_EQ(stabilizer_refinement(nf.rep, eta), Refinement({{1}, {1, 1}, {3}}));
  EXPECT_THROW(IntegralPoint::from_flat(3, {0, 0, 0, 1, 0, 0}), std::invalid_argument);
}

TEST(IntegralPoint, NormalFormIsMinimalLength) {
  const Refinement eta({{1}, {1, 1}, {3}});
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        const auto z = IntegralPoint::from_flat(3, {a, b, c, 0, 0, 0});
        const auto nf = normal_form(z, eta);
        int best = 100;
        for (const auto& s : group_elements(eta))
          if (act(s, nf.rep) == z) best = std::min(best, s.length());
        EXPECT_EQ(nf.sigma.length(), best);
      }
}

}  // namespace
}  // namespace gtkit
