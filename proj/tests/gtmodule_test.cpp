// Copyright 2026 The gtkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "printers.hpp"
#include "gtkit/gtmodule.hpp"

namespace gtkit {
namespace {

// Weyl dimension formula: prod_{i<j} (l_i - l_j + j - i) / (j - i).
long weyl_dimension(const std::vector<int>& lambda) {
  Rational d = 1;
  const int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= Rational(lambda[i] - lambda[j] + j - i) / (j - i);
  return d.get_num().get_si();
}

const std::vector<std::vector<int>> kWeights = {
    {0}, {3}, {1, 0}, {4, -1}, {0, 0, 0}, {1, 0, 0}, {2, 1, 0}, {3, 1, -2}, {1, 0, 0, 0}, {2, 1, 1, 0}, {2, 1, 0, -1}};

TEST(Tableaux, DimensionMatchesWeylFormula) {
  for (const auto& l : kWeights) EXPECT_EQ(static_cast<long>(standard_tableaux(l).size()), weyl_dimension(l)) << l.size();
}

TEST(Tableaux, AllStandardAndDescending) {
  const auto b = standard_tableaux({2, 1, 0});
  for (const auto& v : b) EXPECT_TRUE(Tableau::from_integers(3, v).is_standard());
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    // compare from row n-1 downwards, entries left to right
    std::vector<int> p, q;
    for (int k = 2; k >= 1; --k)
      for (int j = 1; j <= k; ++j) {
        p.push_back(b[i][static_cast<std::size_t>(VarIndex{k, j}.flat())]);
        q.push_back(b[i + 1][static_cast<std::size_t>(VarIndex{k, j}.flat())]);
      }
    EXPECT_GT(p, q);
  }
  // gl(2), lambda = (1, 0): top row (1, -1), middle entry 1 or 0.
  EXPECT_EQ(standard_tableaux({1, 0}), (std::vector<std::vector<int>>{{1, 1, -1}, {0, 1, -1}}));
}

TEST(Tableaux, NonDominantRejected) {
  EXPECT_THROW(standard_tableaux({0, 1}), NotDominant);
  EXPECT_FALSE(Tableau::from_integers(2, {2, 1, -1}).is_standard());
  EXPECT_FALSE(Tableau::from_integers(2, {-1, 1, -1}).is_standard());
}

TEST(Tableaux, NoTwoInOneOrbit) {
  // Distinct standard tableaux have distinct row multisets.
  for (const auto& l : kWeights) {
    const int n = static_cast<int>(l.size());
    std::set<std::vector<int>> seen;
    for (auto v : standard_tableaux(l)) {
      for (int k = 1; k <= n; ++k) std::sort(v.begin() + row_start(k), v.begin() + row_start(k) + k);
      EXPECT_TRUE(seen.insert(v).second);
    }
  }
}

TEST(FinDim, GlTwoFundamental) {
  const FinDimModule m = FinDimModule::build({1, 0});
  ASSERT_EQ(m.dimension(), 2u);
  // basis {v11 = 1, v11 = 0}: E12 sends the second to the first
  Matrix<Rational> e12(2, 2), e21(2, 2);
  e12(0, 1) = 1;
  e21(1, 0) = 1;
  EXPECT_EQ(m.E(1, 2), e12);
  EXPECT_EQ(m.E(2, 1), e21);
  EXPECT_TRUE(m.E(1, 1).is_diagonal());
  EXPECT_EQ(m.E(1, 1)(0, 0), 1);
  EXPECT_EQ(m.E(1, 1)(1, 1), 0);
}

TEST(FinDim, AllCommutationRelations) {
  for (const auto& l : kWeights) {
    const FinDimModule m = FinDimModule::build(l);
    for (const auto& r : verify_findim_relations(m)) EXPECT_TRUE(r.ok) << r.relation;
  }
}

TEST(FinDim, StandardRepresentationHasRankOneCorner) {
  const FinDimModule m = FinDimModule::build({1, 0, 0});
  ASSERT_EQ(m.dimension(), 3u);
  long nonzero = 0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) nonzero += m.E(1, 3)(r, c) != 0;
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(m.E(1, 3) * m.E(1, 3), Matrix<Rational>(3, 3));
}

TEST(Gamma, HandValues) {
  EXPECT_EQ(gamma_poly(1, 1), x(1, 1));
  EXPECT_EQ(gamma_poly(2, 1), x(2, 1) + x(2, 2) + Polynomial(1));
  EXPECT_THROW(gamma_poly(2, 3), std::invalid_argument);
}

TEST(Gamma, CentralElementsActByGamma) {
  for (const auto& l : kWeights) {
    const FinDimModule m = FinDimModule::build(l);
    const int n = m.rank();
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= k; ++i) {
        const Matrix<Rational> c = m.central_element(k, i);
        ASSERT_TRUE(c.is_diagonal()) << k << "," << i;
        const Polynomial g = gamma_poly(k, i);
        for (std::size_t s = 0; s < m.dimension(); ++s) {
          std::vector<Rational> pt(m.basis()[s].begin(), m.basis()[s].end());
          EXPECT_EQ(c(s, s), g.evaluate(pt)) << k << "," << i;
        }
      }
  }
}

TEST(Gamma, TopCentralElementIsScalar) {
  const FinDimModule m = FinDimModule::build({2, 1, 0});
  for (int i = 1; i <= 3; ++i) {
    const Matrix<Rational> c = m.central_element(3, i);
    EXPECT_EQ(c, Matrix<Rational>::identity(m.dimension()) * c(0, 0));
  }
  EXPECT_EQ(m.central_element(3, 1)(0, 0), 3);  // trace of the weight
}

TEST(GtFunctions, HandValues) {
  // e^+_{1,1} = (x11 - x21)(x11 - x22), e^-_{1,1} = 1
  EXPECT_EQ(e_plus(2, 1, 1), RationalFunction((x(1, 1) - x(2, 1)) * (x(1, 1) - x(2, 2))));
  EXPECT_EQ(e_minus(2, 1, 1), RationalFunction(1));
  EXPECT_EQ(e_minus(3, 2, 1), RationalFunction::make(x(2, 1) - x(1, 1), {{VarIndex{2, 1}.flat(), VarIndex{2, 2}.flat(), 0}}));
  EXPECT_THROW(e_plus(2, 2, 1), std::invalid_argument);
}

TEST(BigModule, RelationsOnZero) {
  for (int n = 1; n <= 3; ++n) {
    const BigModule m(n);
    const auto checks = verify_u_relations(m, TableauVector::basis(IntegralPoint::from_flat(n, std::vector<int>(num_entries(n)))));
    for (const auto& r : checks) EXPECT_TRUE(r.ok) << n << " " << r.relation;
  }
}

TEST(BigModule, RelationsOnShiftedPoint) {
  const BigModule m(3);
  const IntegralPoint z = IntegralPoint::from_flat(3, {1, -1, 2, 0, 0, 0});
  const TableauVector probe = TableauVector::basis(z) + TableauVector::basis(IntegralPoint(3), RationalFunction(x(2, 1)));
  for (const auto& r : verify_u_relations(m, probe)) EXPECT_TRUE(r.ok) << r.relation;
}

TEST(BigModule, DetectsBrokenAction) {
  // Dropping the sign of E12 breaks [E12, E21] = E11 - E22.
  const BigModule m(2);
  const TableauVector t = TableauVector::basis(IntegralPoint::from_flat(2, {0, 0, 0}));
  auto up = [&](const TableauVector& v) { return RationalFunction(-1) * m.act(Generator::raising(1), v); };
  auto down = [&](const TableauVector& v) { return m.act(Generator::lowering(1), v); };
  const TableauVector lhs = up(down(t)) - down(up(t));
  const TableauVector rhs = m.act(Generator::diagonal(1), t) - m.act(Generator::diagonal(2), t);
  EXPECT_NE(lhs, rhs);
}

TEST(BigModule, Equivariance) {
  const BigModule m(3);
  for (const auto& z : {IntegralPoint::from_flat(3, {0, 0, 0, 0, 0, 0}), IntegralPoint::from_flat(3, {2, 1, -1, 0, 0, 0})})
    for (const auto& r : verify_equivariance(m, z)) EXPECT_TRUE(r.ok) << r.relation;
}

TEST(Generators, Parse) {
  EXPECT_EQ(parse_generator("E12"), (Generator{1, 2}));
  EXPECT_EQ(parse_generator("E_{3,2}"), (Generator{3, 2}));
  EXPECT_THROW(parse_generator("F12"), std::invalid_argument);
}

}  // namespace
}  // namespace gtkit
