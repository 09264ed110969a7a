// Copyright 2026 The gtkit Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
// Exit status is 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gtkit/gtkit.hpp"

namespace {

using namespace gtkit;

struct Outcome {
  bool pass = true;
  std::string detail;  // first failure, or a short summary
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

ParamScalar t(int j, int q = 0) { return ParamScalar::transcendental(j - 1, Rational(q)); }

// Rows listed top (row n) first.
Tableau rows_top_down(std::vector<std::vector<ParamScalar>> rows) {
  const int n = static_cast<int>(rows.size());
  Tableau v{n, std::vector<ParamScalar>(static_cast<std::size_t>(num_entries(n)))};
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i)
      v.entries[static_cast<std::size_t>(VarIndex{k, i}.flat())] = rows[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(i - 1)];
  return v;
}

const Refinement kEta3({{1}, {2}, {1, 1, 1}});
const Refinement kEta4({{1}, {1, 1}, {3}, {1, 1, 1, 1}});

Tableau crit3() { return rows_top_down({{3, 1, -2}, {t(2), t(2)}, {t(1)}}); }
Tableau crit4() { return rows_top_down({{2, 1, 0, -1}, {t(3), t(3), t(3)}, {t(1), t(2)}, {t(4)}}); }
Tableau generic3() { return rows_top_down({{t(4), t(5), t(6)}, {t(2), t(3)}, {t(1)}}); }

// Hook-content formula: dim V(lambda) = prod over cells (n + c - r) / hook(r, c).
Rational hook_content_dimension(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> shape;
  for (int l : lambda) shape.push_back(l - lambda.back());
  Rational d = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) {
      int below = 0;
      for (int r2 = r + 1; r2 < n && shape[static_cast<std::size_t>(r2)] > c; ++r2) ++below;
      const int hook = shape[static_cast<std::size_t>(r)] - c - 1 + below + 1;
      d *= Rational(n + c - r) / hook;
    }
  return d;
}

// ---------------------------------------------------------------------------

Outcome finite_dimensional() {
  std::vector<std::vector<int>> weights;
  for (int a = 0; a <= 3; ++a) weights.push_back({a, 0});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b) weights.push_back({a, b, 0});
  weights.push_back({2, 1, 0, 0});
  Outcome out;
  long relations = 0;
  for (const auto& lambda : weights) {
    const auto m = FinDimModule::build(lambda);
    const int n = m.rank();
    std::string name = "(";
    for (std::size_t j = 0; j < lambda.size(); ++j) name += (j ? "," : "") + std::to_string(lambda[j]);
    name += ")";
    if (Rational(static_cast<long>(m.dimension())) != hook_content_dimension(lambda)) out.fail("dimension of V" + name);
    for (const auto& r : verify_findim_relations(m)) {
      ++relations;
      if (!r.ok) out.fail(r.relation + " on V" + name);
    }
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= k; ++i) {
        const auto c = m.central_element(k, i);
        if (!c.is_diagonal()) out.fail("c" + std::to_string(k) + std::to_string(i) + " not diagonal on V" + name);
        const Polynomial gamma = gamma_poly(k, i);
        for (std::size_t j = 0; j < m.dimension(); ++j)
          if (!(evaluate(gamma, Tableau::from_integers(n, m.basis()[j]).entries) == ParamFraction(c(j, j))))
            out.fail("c" + std::to_string(k) + std::to_string(i) + " eigenvalue on V" + name);
      }
  }
  if (out.pass) out.detail = std::to_string(weights.size()) + " weights, " + std::to_string(relations) + " commutators";
  return out;
}

Outcome identity_suite() {
  Outcome out;
  Rng rng(20261018);
  // These draw one random polynomial per trial; the others are exhaustive
  // over the group, symbolic, or vacuous for small refinements.
  const std::set<std::string> sampled = {"dd_square_zero", "dd_twisted_leibniz", "dd_longest_adjoint",
                                         "dd_longest_is_antisymmetrizer"};
  std::map<std::string, long> per_identity;
  long trials = 0;
  for (const auto& eta : representative_parabolics())
    for (const auto& r : verify_identities(eta, rng, 100)) {
      trials += r.trials;
      per_identity[r.name] += r.trials;
      if (sampled.count(r.name) && r.trials < 100) out.fail(r.name + " ran only " + std::to_string(r.trials));
      if (!r.ok()) out.fail(r.name + " " + r.refinement + ": " + r.counterexample);
    }
  for (const auto& [name, n] : per_identity)
    if (n == 0) out.fail(name + " was never exercised");
  if (out.pass) out.detail = std::to_string(per_identity.size()) + " identities, " + std::to_string(trials) + " checks";
  return out;
}

Outcome dual_basis() {
  Outcome out;
  Rng rng(7);
  for (const auto& eta : representative_parabolics()) {
    const auto table = DualBasisTable::build(eta);
    const auto cert = certify(table);
    if (!cert.ok()) out.fail(eta.to_string() + ": " + cert.first_failure);
    for (int trial = 0; trial < 100; ++trial) {
      const RationalFunction f = random_B_eta(rng, eta);
      if (!verify_reconstruction(table, f)) out.fail(eta.to_string() + ": reconstruction of " + f.to_string());
    }
  }
  if (out.pass) out.detail = std::to_string(representative_parabolics().size()) + " refinements, 100 reconstructions each";
  return out;
}

Outcome d_coefficients() {
  Outcome out;
  Rng rng(11);
  long checks = 0;
  std::set<std::string> seen;
  auto run = [&](const Refinement& eta, long samples) {
    if (!seen.insert(eta.to_string()).second) return;
    const auto table = DualBasisTable::build(eta);
    const auto r = verify_d_coefficients(table, rng, samples);
    checks += r.trials;
    if (!r.ok()) out.fail(r.refinement + ": " + r.counterexample);
  };
  for (const auto& eta : refinements_up_to(4, 6, false)) run(eta, 0);
  for (const auto& eta : representative_parabolics())
    if (eta.factorial() > 6) run(eta, 300);
  if (out.pass) out.detail = std::to_string(seen.size()) + " refinements, " + std::to_string(checks) + " checks";
  return out;
}

Outcome big_module() {
  Outcome out;
  long checks = 0;
  for (int n : {2, 3}) {
    const BigModule m(n);
    for (const auto& r : verify_u_relations(m, TableauVector::basis(IntegralPoint(n)))) {
      ++checks;
      if (!r.ok) out.fail("n=" + std::to_string(n) + " " + r.relation);
    }
    IntegralPoint z(n);
    z.set(n - 1, 1, 2);
    if (n > 2) z.set(1, 1, -1);
    for (const auto& p : {IntegralPoint(n), z})
      for (const auto& r : verify_equivariance(m, p)) {
        ++checks;
        if (!r.ok) out.fail("n=" + std::to_string(n) + " equivariance " + r.relation + " at " + p.to_string());
      }
  }
  if (out.pass) out.detail = std::to_string(checks) + " relations";
  return out;
}

Outcome lattice_closure() {
  Outcome out;
  std::string summary;
  for (const auto& eta : {kEta3, kEta4}) {
    const auto table = DualBasisTable::build(eta);
    const auto rep = certify_closure(eta, table, 1, 1);
    if (!rep.ok()) out.fail(eta.to_string() + ": " + rep.first_violation);
    summary += (summary.empty() ? "" : ", ") + std::to_string(rep.applications) + " applications on " + eta.to_string();
  }
  if (out.pass) out.detail = summary;
  return out;
}

Outcome example_table() {
  struct Row {
    std::vector<int> z3;
    std::set<std::string> shuffles;
  };
  const std::vector<Row> rows = {
      {{1, 0, -1}, {"id", "(12)", "(23)", "(123)", "(132)", "(13)"}},
      {{0, 0, -1}, {"id", "(23)", "(123)"}},
      {{1, 0, 0}, {"id", "(12)", "(132)"}},
      {{0, 0, 0}, {"id"}},
  };
  Outcome out;
  std::string counts;
  for (const auto& row : rows) {
    IntegralPoint z(4);
    for (int i = 1; i <= 3; ++i) z.set(3, i, row.z3[static_cast<std::size_t>(i - 1)]);
    std::set<std::string> nonzero;
    for (const auto& s : group_elements(kEta4))
      if (!derived_direct(kEta4, z, s).is_zero()) nonzero.insert(s.to_cycle_notation(row_start(3)));
    std::set<std::string> basis;
    for (const auto& d : derived_tableaux(kEta4, z)) basis.insert(d.nu.to_cycle_notation(row_start(3)));
    if (nonzero != row.shuffles) out.fail("nonzero D_sigma T(z) differ from the table at row 3 = " + z.to_string());
    if (basis != row.shuffles) out.fail("shuffle basis differs from the table at " + z.to_string());
    counts += (counts.empty() ? "" : " / ") + std::to_string(nonzero.size());
  }
  if (out.pass) out.detail = "counts " + counts;
  return out;
}

Outcome gamma_and_support() {
  Outcome out;
  std::string summary;
  for (const auto& [eta, v] : {std::pair{kEta3, crit3()}, std::pair{kEta4, crit4()}}) {
    const auto table = DualBasisTable::build(eta);
    const GammaEngine engine(table);
    const int n = eta.rank();
    int max_exp = 0;
    std::unique_ptr<Lattice> lat;
    std::unique_ptr<EvaluatedModule> module;
    if (n == 3) {
      lat = std::make_unique<Lattice>(eta, table);
      module = std::make_unique<EvaluatedModule>(*lat, v);
    }
    for (const auto& z : normal_points(eta, 1))
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) {
          const GammaAction ga = engine.action(k, i, v, z);
          for (int e : ga.min_exponent) max_exp = std::max(max_exp, e);
          const std::string where = "c" + std::to_string(k) + std::to_string(i) + " at z = " + z.to_string();
          if (!ga.nilpotent_within_bound) out.fail("nilpotency bound fails for " + where);
          if (!module) continue;
          // the matrix must agree with c_{k,i} applied through the module action
          for (std::size_t col = 0; col < ga.basis.size(); ++col) {
            EvaluatedVector expected;
            for (std::size_t row = 0; row < ga.basis.size(); ++row) expected.add({z, ga.basis[row]}, ga.matrix(row, col));
            if (!(module->central(k, i, EvaluatedVector::basis({z, ga.basis[col]})) == expected))
              out.fail("module action of " + where + " differs from the formula");
          }
        }
    const SupportReport s = support_window(v, 2);
    if (!s.multiplicities_consistent) out.fail(eta.to_string() + ": multiplicity differs from eta!/eps!");
    if (!s.fingerprints_distinct) out.fail(eta.to_string() + ": two window points share a character");
    summary += (summary.empty() ? "" : "; ") + eta.to_string() + " max exponent " + std::to_string(max_exp) + ", " +
               std::to_string(s.entries.size()) + " characters";
  }
  if (out.pass) out.detail = summary;
  return out;
}

Outcome generic_degeneration() {
  Outcome out;
  const Tableau v = generic3();
  const Refinement eta = singularity(v).eta;
  if (!eta.is_trivial()) {
    out.fail("the generic point has a nontrivial singularity");
    return out;
  }
  const auto table = DualBasisTable::build(eta);
  const Lattice lat(eta, table);
  const EvaluatedModule m(lat, v);
  const DegenerationReport rep = compare_with_generic(m, 1);
  if (!rep.ok()) out.fail("generic and singular actions differ at " + rep.first_mismatch);
  const GammaEngine engine(table);
  for (const auto& z : normal_points(eta, 1))
    for (int k = 1; k <= 3; ++k)
      for (int i = 1; i <= k; ++i) {
        const GammaAction ga = engine.action(k, i, v, z);
        if (ga.basis.size() != 1 || ga.min_exponent[0] != 1)
          out.fail("T" + z.to_string() + " is not a Gamma-eigenvector for c" + std::to_string(k) + std::to_string(i));
      }
  const SupportReport s = support_window(v, 1);
  for (const auto& e : s.entries)
    if (e.multiplicity != 1) out.fail("multiplicity " + std::to_string(e.multiplicity) + " at " + e.z.to_string());
  if (!s.fingerprints_distinct) out.fail("two window tableaux share a character");
  if (out.pass) out.detail = std::to_string(rep.compared) + " actions compared, " + std::to_string(s.entries.size()) + " characters";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"finite-dimensional V(lambda)", finite_dimensional},
      {"divided-difference identities", identity_suite},
      {"dual-basis certification", dual_basis},
      {"d-coefficient degrees", d_coefficients},
      {"big module relations and equivariance", big_module},
      {"lattice closure", lattice_closure},
      {"derived-tableau table for n = 4", example_table},
      {"Gamma nilpotency, multiplicities, characters", gamma_and_support},
      {"generic degeneration", generic_degeneration},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%.1f s): %s\n", c + 1, o.pass ? "PASS" : "FAIL", criteria[c].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
