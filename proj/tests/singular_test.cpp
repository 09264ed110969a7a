// Copyright 2026 The gtkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "printers.hpp"
#include "gtkit/singular.hpp"

namespace gtkit {
namespace {

ParamScalar t(int j, int q = 0) { return ParamScalar::transcendental(j - 1, Rational(q)); }

// Rows listed top (row n) first, as drawn.
Tableau rows_top_down(std::vector<std::vector<ParamScalar>> rows) {
  const int n = static_cast<int>(rows.size());
  Tableau v{n, std::vector<ParamScalar>(static_cast<std::size_t>(num_entries(n)))};
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i)
      v.entries[static_cast<std::size_t>(VarIndex{k, i}.flat())] = rows[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)];
  return v;
}

// a..f = t1..t6, top row t7..t11.
std::vector<ParamScalar> top5() { return {t(7), t(8), t(9), t(10), t(11)}; }

Tableau five_v() {
  return rows_top_down({top5(), {t(1), t(2, -1), t(2), t(1, 1)}, {t(3), t(3, 1), t(4)}, {t(5), t(5)}, {t(6)}});
}

const Refinement kEta3({{1}, {2}, {1, 1, 1}});
const Refinement kEta4({{1}, {1, 1}, {3}, {1, 1, 1, 1}});

// Fully critical points with singularity kEta3 / kEta4; rational top rows.
Tableau crit3() { return rows_top_down({{3, 1, -2}, {t(2), t(2)}, {t(1)}}); }
Tableau crit4() { return rows_top_down({{2, 1, 0, -1}, {t(3), t(3), t(3)}, {t(1), t(2)}, {t(4)}}); }

TEST(Singularity, FiveByFiveExample) {
  const Tableau v = five_v();
  EXPECT_EQ(singularity(v).eta, Refinement({{1}, {2}, {2, 1}, {2, 2}, {1, 1, 1, 1, 1}}));
  EXPECT_FALSE(is_normal_form(v));
  const Tableau v1 = rows_top_down({top5(), {t(1, 1), t(1), t(2), t(2, -1)}, {t(3, 1), t(3), t(4)}, {t(5), t(5)}, {t(6)}});
  const Tableau v2 = rows_top_down({top5(), {t(2), t(2, -1), t(1, 1), t(1)}, {t(3, 1), t(3), t(4)}, {t(5), t(5)}, {t(6)}});
  EXPECT_TRUE(is_normal_form(v1));
  EXPECT_TRUE(is_normal_form(v2));
  for (const auto& w : {v, v1, v2}) EXPECT_FALSE(is_fully_critical(w));
  // c to the left of c+1 alone breaks normal form
  const Tableau v3 = rows_top_down({top5(), {t(1, 1), t(1), t(2), t(2, -1)}, {t(3), t(3, 1), t(4)}, {t(5), t(5)}, {t(6)}});
  EXPECT_FALSE(is_normal_form(v3));
}

TEST(Singularity, TrivialCases) {
  const Tableau generic = rows_top_down({{t(4), t(5), t(6)}, {t(2), t(3)}, {t(1)}});
  EXPECT_EQ(singularity(generic).eta, Refinement::trivial(3));
  EXPECT_TRUE(is_fully_critical(generic));
  const Tableau full = rows_top_down({{0, 0, 0, 0}, {t(1), t(1), t(1)}, {t(2), t(3)}, {t(4)}});
  EXPECT_EQ(singularity(full).eta, kEta4);
  EXPECT_TRUE(is_fully_critical(full));
  EXPECT_FALSE(is_fully_critical(rows_top_down({{0, 0, 0}, {t(1, 1), t(1)}, {t(2)}})));
  // non-contiguous block is not normal
  EXPECT_FALSE(is_normal_form(rows_top_down({{0, 0, 0, 0}, {t(1), t(2), t(1)}, {t(2), t(3)}, {t(4)}})));
}

TEST(Singularity, OrbitInvariant) {
  const Tableau v = five_v();
  const Refinement eta = singularity(v).eta;
  for (const auto& s : {std::vector<int>{0, 2, 1, 5, 4, 3, 9, 7, 6, 8, 10, 11, 12, 13, 14}})
    EXPECT_EQ(singularity(act(Permutation::from_one_line(Refinement::mu(5), s), v)).eta, eta);
}

TEST(Normalize, FiveByFiveExample) {
  const Normalization nz = normalize(five_v());
  EXPECT_TRUE(is_normal_form(nz.normal));
  EXPECT_TRUE(is_fully_critical(nz.critical));
  EXPECT_EQ(singularity(nz.critical).eta, singularity(five_v()).eta);
  // row 3 (c, c+1, d) needs one swap; row 4 (a, b-1, b, a+1) is rearranged minimally
  EXPECT_EQ(nz.normal.at(3, 1), t(3, 1));
  EXPECT_EQ(nz.normal.at(3, 2), t(3));
  int row4 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) row4 += nz.sigma(6 + i) > nz.sigma(6 + j);
  // both (a+1, a, b, b-1) and (b, b-1, a+1, a) have length 4; the one-line tie-break picks the first
  EXPECT_EQ(row4, 4);
  EXPECT_EQ(nz.normal.at(4, 1), t(1, 1));
  EXPECT_EQ(nz.normal.at(4, 3), t(2));
}

TEST(Normalize, FullyCriticalIsFixed) {
  const Normalization nz = normalize(crit4());
  EXPECT_TRUE(nz.sigma.is_identity());
  EXPECT_EQ(nz.shift, IntegralPoint(4));
  EXPECT_EQ(nz.critical.entries, crit4().entries);
}

TEST(DerivedBasis, ExampleTable) {
  struct Row {
    std::vector<int> z3;
    std::set<std::string> shuffles;
  };
  const std::vector<Row> table = {
      {{1, 0, -1}, {"id", "(12)", "(23)", "(123)", "(132)", "(13)"}},
      {{0, 0, -1}, {"id", "(23)", "(123)"}},
      {{1, 0, 0}, {"id", "(12)", "(132)"}},
      {{0, 0, 0}, {"id"}},
  };
  const DualBasisTable dual = DualBasisTable::build(kEta4);
  const Lattice lat(kEta4, dual);
  for (const auto& row : table) {
    IntegralPoint z(4);
    for (int i = 1; i <= 3; ++i) z.set(3, i, row.z3[static_cast<std::size_t>(i - 1)]);
    std::set<std::string> got;
    for (const auto& d : derived_tableaux(kEta4, z)) got.insert(d.nu.to_cycle_notation(row_start(3)));
    EXPECT_EQ(got, row.shuffles);
    // D_sigma T(z) vanishes exactly off the shuffles
    for (const auto& s : group_elements(kEta4)) {
      const bool zero = derived_direct(kEta4, z, s).is_zero();
      EXPECT_EQ(zero, !row.shuffles.count(s.to_cycle_notation(row_start(3)))) << s.to_cycle_notation(row_start(3));
    }
  }
}

TEST(DerivedBasis, WindowCounts) {
  // row 1 and both row-2 entries free, row 3 a descending triple from {-1,0,1}
  EXPECT_EQ(normal_points(kEta4, 1).size(), 3u * 9u * 10u);
  EXPECT_EQ(derived_basis_window(kEta4, 1).size(), 27u * 27u);
  for (const auto& z : normal_points(kEta3, 1)) EXPECT_TRUE(in_normal_form(z, kEta3));
}

TEST(Lattice, ExpandMatchesOperators) {
  for (const auto& eta : {kEta3, kEta4}) {
    const DualBasisTable dual = DualBasisTable::build(eta);
    const Lattice lat(eta, dual);
    for (const auto& z : normal_points(eta, 1)) {
      if (z.max_abs() > 1 || z[0] != 0) continue;
      for (const auto& s : group_elements(eta))
        EXPECT_EQ(lat.expand(DerivedTableau{z, s}), derived_direct(eta, z, s)) << z.to_string() << " " << s.to_cycle_notation();
    }
  }
}

TEST(Lattice, SimpleExpansionByHand) {
  // size-2 block: D_s T(z) = (2/(x21 - x22)) (T(z) - T(s z)) / 2! for z with distinct block entries
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  const IntegralPoint z = IntegralPoint::from_flat(3, {0, 1, 0, 0, 0, 0});
  const Permutation s = Permutation::simple(kEta3, 1);
  TableauVector expected = TableauVector::basis(z, RationalFunction::reciprocal(1, 2, 0));
  expected = expected - TableauVector::basis(act(s, z), RationalFunction::reciprocal(1, 2, 0));
  EXPECT_EQ(lat.expand(DerivedTableau{z, s}), expected);
  // z = 0: the two terms cancel
  EXPECT_TRUE(lat.expand(DerivedTableau{IntegralPoint(3), s}).is_zero());
}

TEST(Lattice, ContractRoundTrip) {
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  for (const auto& d : derived_basis_window(kEta3, 1)) EXPECT_EQ(lat.contract(lat.expand(d)), DerivedVector::basis(d));
  // T(z) with trivial stabilizer: coefficients are the dual polynomials
  const IntegralPoint z = IntegralPoint::from_flat(3, {0, 1, -1, 0, 0, 0});
  const DerivedVector c = lat.contract(TableauVector::basis(z));
  for (const auto& s : dual.elements()) EXPECT_EQ(c.coefficient({z, s}), RationalFunction(dual.dual(s)));
  // antisymmetrized orbit sum round-trips through the basis
  const Permutation s = Permutation::simple(kEta3, 1);
  const TableauVector anti = TableauVector::basis(z) - TableauVector::basis(act(s, z));
  EXPECT_EQ(lat.expand(lat.contract(anti)), anti);
}

TEST(Lattice, DiagonalActsByEigenvalue) {
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  for (const auto& d : derived_basis_window(kEta3, 1))
    for (int k = 1; k <= 3; ++k) {
      const RationalFunction ev = shift(RationalFunction(diagonal_weight(k)), d.z);
      EXPECT_EQ(lat.act(Generator::diagonal(k), d), DerivedVector::basis(d, ev));
    }
}

TEST(Lattice, ActionMatchesExpansion) {
  // E D_nu T(z) computed in derived coordinates expands to E applied in V_K.
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  for (const auto& d : derived_basis_window(kEta3, 1)) {
    if (d.z.max_abs() > 1 || d.z[0] != 0) continue;
    for (const auto& g : Lattice::canonical_generators(3))
      EXPECT_EQ(lat.expand(lat.act(g, d)), lat.big_module().act(g, lat.expand(d))) << g.to_string() << d.to_string();
  }
}

TEST(Lattice, ClosureRankThree) {
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  const ClosureReport rep = lat.certify(1);
  EXPECT_TRUE(rep.ok()) << rep.first_violation;
  EXPECT_GT(rep.coefficients, 0);
  EXPECT_TRUE(lat.delta_eps_contains(IntegralPoint(3)));
  const ClosureReport split = certify_closure(kEta3, dual, 1, 3);
  EXPECT_EQ(split.applications, rep.applications);
  EXPECT_EQ(split.coefficients, rep.coefficients);
  EXPECT_EQ(split.violations, 0);
}

TEST(Lattice, ClosureRankFourAtOrigin) {
  const DualBasisTable dual = DualBasisTable::build(kEta4);
  const Lattice lat(kEta4, dual);
  const ClosureReport rep = lat.certify(0);
  EXPECT_TRUE(rep.ok()) << rep.first_violation;
  EXPECT_EQ(rep.applications, 10);
}

TEST(Evaluated, RelationsOnWindow) {
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  const EvaluatedModule m(lat, crit3());
  for (const auto& d : derived_basis_window(kEta3, 1))
    for (const auto& r : verify_relations(m, EvaluatedVector::basis(d))) EXPECT_TRUE(r.ok) << d.to_string() << " " << r.relation;
}

TEST(Evaluated, RejectsNonCriticalPoint) {
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  EXPECT_THROW(EvaluatedModule(lat, rows_top_down({{0, 0, 0}, {t(2, 1), t(2)}, {t(1)}})), NotInNormalForm);
  EXPECT_THROW(EvaluatedModule(lat, rows_top_down({{0, 0, 0}, {t(2), t(3)}, {t(1)}})), std::invalid_argument);
}

TEST(Evaluated, GenericDegeneration) {
  const Refinement eta = Refinement::trivial(3);
  const DualBasisTable dual = DualBasisTable::build(eta);
  const Lattice lat(eta, dual);
  const EvaluatedModule m(lat, rows_top_down({{t(4), t(5), t(6)}, {t(2), t(3)}, {t(1)}}));
  const DegenerationReport rep = compare_with_generic(m, 1);
  EXPECT_TRUE(rep.ok()) << rep.first_mismatch;
  EXPECT_EQ(rep.compared, 27 * 7);
}

TEST(Gamma, FormulaMatchesModuleAction) {
  const DualBasisTable dual = DualBasisTable::build(kEta3);
  const Lattice lat(kEta3, dual);
  const EvaluatedModule m(lat, crit3());
  const GammaEngine engine(dual);
  for (const auto& z : {IntegralPoint(3), IntegralPoint::from_flat(3, {0, 1, -1, 0, 0, 0}), IntegralPoint::from_flat(3, {1, 0, 0, 0, 0, 0})})
    for (int k = 1; k <= 3; ++k)
      for (int i = 1; i <= k; ++i) {
        const GammaAction ga = engine.action(k, i, crit3(), z);
        for (std::size_t col = 0; col < ga.basis.size(); ++col) {
          EvaluatedVector expected;
          for (std::size_t row = 0; row < ga.basis.size(); ++row) expected.add({z, ga.basis[row]}, ga.matrix(row, col));
          EXPECT_EQ(m.central(k, i, EvaluatedVector::basis({z, ga.basis[col]})), expected) << k << i << z.to_string();
        }
        EXPECT_TRUE(ga.nilpotent_within_bound);
        // nu = id is an eigenvector
        EXPECT_EQ(ga.min_exponent[0], 1);
      }
}

TEST(Gamma, RankFourThreeByThree) {
  const DualBasisTable dual = DualBasisTable::build(kEta4);
  const GammaEngine engine(dual);
  IntegralPoint z(4);
  z.set(3, 1, 1);
  z.set(3, 2, 1);
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= k; ++i) {
      const GammaAction ga = engine.action(k, i, crit4(), z);
      ASSERT_EQ(ga.basis.size(), 3u);
      EXPECT_TRUE(ga.nilpotent_within_bound);
      Matrix<ParamFraction> nil = ga.matrix;
      for (std::size_t j = 0; j < 3; ++j) nil(j, j) -= ga.eigenvalue;
      EXPECT_TRUE((nil * nil * nil).is_zero());
    }
  // c_{3,1} sees row 3 only through its sum, so on this z it is the scalar
  const GammaAction c31 = engine.action(3, 1, crit4(), z);
  EXPECT_EQ(c31.min_exponent, (std::vector<int>{1, 1, 1}));
  // c_{3,2} does not act by a scalar there
  const GammaAction c32 = engine.action(3, 2, crit4(), z);
  EXPECT_GT(*std::max_element(c32.min_exponent.begin(), c32.min_exponent.end()), 1);
}

TEST(Support, Multiplicities) {
  const SupportReport rep = support_window(crit4(), 1);
  EXPECT_TRUE(rep.ok());
  for (const auto& e : rep.entries) {
    std::set<int> row3{e.z.at(3, 1), e.z.at(3, 2), e.z.at(3, 3)};
    EXPECT_EQ(e.multiplicity, row3.size() == 3 ? 6 : row3.size() == 2 ? 3 : 1);
  }
  const SupportReport generic = support_window(rows_top_down({{t(4), t(5), t(6)}, {t(2), t(3)}, {t(1)}}), 1);
  for (const auto& e : generic.entries) EXPECT_EQ(e.multiplicity, 1);
  EXPECT_TRUE(generic.fingerprints_distinct);
}

}  // namespace
}  // namespace gtkit
