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

// Singular Gelfand-Tsetlin modules: the singularity of a point, normal forms,
// derived tableaux, the lattice L_eta and its evaluation V(T(v)).

#ifndef GTKIT_SINGULAR_HPP
#define GTKIT_SINGULAR_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "divdiff.hpp"
#include "gtmodule.hpp"
#include "parallel.hpp"

namespace gtkit {

// ---------------------------------------------------------------------------
// Singularity and normal form

struct SingularityProfile {
  Tableau point;
  Refinement eta;
  /// Per row k (index k-1): the components of the integer-difference graph as
  /// 1-based column lists, largest first, ties by first column.
  std::vector<std::vector<std::vector<int>>> components;
};

namespace detail {

inline std::vector<std::vector<int>> row_components(const std::vector<ParamScalar>& row) {
  const int k = static_cast<int>(row.size());
  std::vector<int> comp(static_cast<std::size_t>(k), -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < k; ++i) {
    if (comp[static_cast<std::size_t>(i)] >= 0) continue;
    comp[static_cast<std::size_t>(i)] = static_cast<int>(out.size());
    out.push_back({i + 1});
    for (int j = i + 1; j < k; ++j)
      if (comp[static_cast<std::size_t>(j)] < 0 && integral_difference(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)])) {
        comp[static_cast<std::size_t>(j)] = comp[static_cast<std::size_t>(i)];
        out.back().push_back(j + 1);
      }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

inline std::vector<ParamScalar> row_of(const Tableau& v, int k) {
  return {v.entries.begin() + row_start(k), v.entries.begin() + row_start(k) + k};
}

// Contiguous segments of the given sizes, each a full component and weakly
// descending; with `equal`, constant instead.
inline bool row_in_normal_form(const std::vector<ParamScalar>& row, bool equal) {
  const auto comps = row_components(row);
  std::vector<int> segment(row.size());
  int pos = 0, id = 0;
  for (const auto& c : comps) {
    for (std::size_t j = 0; j < c.size(); ++j) segment[static_cast<std::size_t>(pos++)] = id;
    ++id;
  }
  for (std::size_t i = 0; i < row.size(); ++i)
    for (std::size_t j = i + 1; j < row.size(); ++j) {
      const bool same = segment[i] == segment[j];
      if (integral_difference(row[i], row[j]) != same) return false;
      if (!same) continue;
      const Rational d = (row[i] - row[j]).rational_part();
      if (equal ? d != 0 : d < 0) return false;
    }
  return true;
}

}  // namespace detail

/// eta(v): per row k < n the component sizes of the integer-difference graph
/// in descending order; the top row is always 1^n.
inline SingularityProfile singularity(const Tableau& v) {
  check_rank(v.n);
  if (static_cast<int>(v.entries.size()) != num_entries(v.n)) throw std::invalid_argument("point has the wrong number of entries");
  SingularityProfile p{v, {}, {}};
  std::vector<std::vector<int>> rows;
  for (int k = 1; k <= v.n; ++k) {
    std::vector<std::vector<int>> comps;
    if (k < v.n) comps = detail::row_components(detail::row_of(v, k));
    else
      for (int i = 1; i <= k; ++i) comps.push_back({i});
    std::vector<int> sizes;
    for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
    rows.push_back(std::move(sizes));
    p.components.push_back(std::move(comps));
  }
  p.eta = Refinement(std::move(rows));
  return p;
}

/// Integer-related entries of each row k < n form contiguous eta(v)-blocks
/// (largest first), each weakly descending.
inline bool is_normal_form(const Tableau& v) {
  for (int k = 1; k < v.n; ++k)
    if (!detail::row_in_normal_form(detail::row_of(v, k), false)) return false;
  return true;
}

/// Normal form with every eta(v)-block constant, so st(v) = S_eta.
inline bool is_fully_critical(const Tableau& v) {
  for (int k = 1; k < v.n; ++k)
    if (!detail::row_in_normal_form(detail::row_of(v, k), true)) return false;
  return true;
}

/// s(v)_{s(a)} = v_a.
inline Tableau act(const Permutation& s, const Tableau& v) {
  Tableau r = v;
  for (int a = 0; a < s.size(); ++a) r.entries[static_cast<std::size_t>(s(a))] = v.entries[static_cast<std::size_t>(a)];
  return r;
}

/// v + z.
inline Tableau shifted(const Tableau& v, const IntegralPoint& z) {
  if (z.rank() != v.n) throw std::invalid_argument("shifted: rank mismatch");
  Tableau r = v;
  for (int a = 0; a < z.num_entries(); ++a) r.entries[static_cast<std::size_t>(a)] = r.entries[static_cast<std::size_t>(a)] + ParamScalar(z[a]);
  return r;
}

struct Normalization {
  Permutation sigma;   // in S_mu; sigma(v) is in normal form
  Tableau normal;      // sigma(v)
  IntegralPoint shift; // normal + shift is fully critical
  Tableau critical;
};

/// The minimal-length sigma in S_mu (ties: lexicographic one-line) with
/// sigma(v) in normal form, and the shift equalizing every block to its
/// first entry. The top row is left in place.
inline Normalization normalize(const Tableau& v) {
  const int n = v.n;
  check_rank(n);
  std::vector<int> one_line(static_cast<std::size_t>(num_entries(n)));
  std::iota(one_line.begin(), one_line.end(), 0);
  for (int k = 1; k < n; ++k) {
    const auto row = detail::row_of(v, k);
    std::vector<int> p(static_cast<std::size_t>(k)), best;
    std::iota(p.begin(), p.end(), 0);
    int best_len = -1;
    do {
      std::vector<ParamScalar> arranged(row.size());
      for (int i = 0; i < k; ++i) arranged[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = row[static_cast<std::size_t>(i)];
      if (!detail::row_in_normal_form(arranged, false)) continue;
      int len = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) len += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
      if (best_len < 0 || len < best_len) {
        best_len = len;
        best = p;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    if (best_len < 0) throw InternalError("no normal form found for row " + std::to_string(k));
    for (int i = 0; i < k; ++i) one_line[static_cast<std::size_t>(row_start(k) + i)] = row_start(k) + best[static_cast<std::size_t>(i)];
  }
  Normalization out;
  out.sigma = Permutation::from_one_line(Refinement::mu(n), one_line);
  out.normal = act(out.sigma, v);
  out.shift = IntegralPoint(n);
  const SingularityProfile prof = singularity(out.normal);
  for (const auto& b : prof.eta.blocks()) {
    if (b.row == n) continue;
    const ParamScalar& first = out.normal.entries[static_cast<std::size_t>(b.start)];
    for (int a = b.start; a < b.start + b.size; ++a) {
      const Rational d = (first - out.normal.entries[static_cast<std::size_t>(a)]).rational_part();
      const VarIndex vi = VarIndex::from_flat(a);
      out.shift.set(vi.k, vi.i, static_cast<int>(d.get_num().get_si()));
    }
  }
  out.critical = shifted(out.normal, out.shift);
  return out;
}

// ---------------------------------------------------------------------------
// Derived tableaux

/// D^eta_nu T(z) with z in N_eta and nu an eps(z)-shuffle.
struct DerivedTableau {
  IntegralPoint z;
  Permutation nu;

  friend bool operator==(const DerivedTableau&, const DerivedTableau&) = default;
  friend std::strong_ordering operator<=>(const DerivedTableau& a, const DerivedTableau& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    if (a.nu < b.nu) return std::strong_ordering::less;
    if (b.nu < a.nu) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  std::string to_string() const { return "D" + nu.to_cycle_notation() + "T" + z.to_string(); }
};

using DerivedVector = LinearCombination<RationalFunction, DerivedTableau>;
using EvaluatedVector = LinearCombination<ParamFraction, DerivedTableau>;

/// Points of N_eta (blockwise weakly descending, zero top row) with all
/// entries in [-radius, radius].
inline std::vector<IntegralPoint> normal_points(const Refinement& eta, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  const int n = eta.rank();
  const int free = row_start(n);  // entries below the top row
  std::vector<IntegralPoint> out;
  std::vector<int> vals(static_cast<std::size_t>(num_entries(n)), 0);
  std::function<void(int)> rec = [&](int a) {
    if (a == free) {
      out.push_back(IntegralPoint::from_flat(n, vals));
      return;
    }
    const int hi = a > 0 && eta.same_block(a - 1, a) ? vals[static_cast<std::size_t>(a - 1)] : radius;
    for (int x = hi; x >= -radius; --x) {
      vals[static_cast<std::size_t>(a)] = x;
      rec(a + 1);
    }
    vals[static_cast<std::size_t>(a)] = 0;
  };
  rec(0);
  return out;
}

/// The derived tableaux of T(z): one per eps(z)-shuffle.
inline std::vector<DerivedTableau> derived_tableaux(const Refinement& eta, const IntegralPoint& z) {
  std::vector<DerivedTableau> out;
  for (auto& nu : shuffles(eta, stabilizer_refinement(z, eta))) out.push_back({z, std::move(nu)});
  return out;
}

/// All derived tableaux with base in the radius-r window.
inline std::vector<DerivedTableau> derived_basis_window(const Refinement& eta, int radius) {
  std::vector<DerivedTableau> out;
  for (const auto& z : normal_points(eta, radius))
    for (auto& d : derived_tableaux(eta, z)) out.push_back(std::move(d));
  return out;
}

// Operators of the smash product acting on V_K.

/// partial_a w = (w - s_a w) / (x_a - x_{a+1}).
inline TableauVector dd_apply(const Refinement& eta, int a, const TableauVector& w) {
  const Permutation s = Permutation::simple(eta, a);
  const RationalFunction inv = RationalFunction::reciprocal(a, a + 1, 0);
  return inv * (w - act_perm(s, w));
}

/// (1/eta!) sum_tau tau(w).
inline TableauVector sym(const Refinement& eta, const TableauVector& w) {
  std::map<IntegralPoint, std::vector<RationalFunction>> parts;
  for (const auto& tau : group_elements(eta))
    for (const auto& [z, c] : w.terms()) parts[act(tau, z)].push_back(act_perm(tau, c));
  TableauVector r;
  const RationalFunction scale(Rational(1) / eta.factorial());
  for (auto& [z, cs] : parts) r.add(z, scale * RationalFunction::sum(cs));
  return r;
}

/// sym(partial_nu T(z)) by direct application of the operators.
inline TableauVector derived_direct(const Refinement& eta, const IntegralPoint& z, const Permutation& nu) {
  TableauVector w = TableauVector::basis(z);
  const auto word = reduced_word(nu);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = dd_apply(eta, *it, w);
  return sym(eta, w);
}

// ---------------------------------------------------------------------------
// The lattice L_eta

/// Outcome of sweeping the lattice action over a window.
struct ClosureReport {
  long applications = 0;
  long coefficients = 0;
  long violations = 0;
  std::string first_violation;
  bool ok() const { return violations == 0; }
};

/// L_eta with its derived-tableau basis and the U-action computed through
/// contraction of E T(z).
class Lattice {
 public:
  Lattice(const Refinement& eta, const DualBasisTable& table) : eta_(eta), table_(&table), big_(eta.rank()) {
    if (!(table.refinement() == eta)) throw std::invalid_argument("dual-basis table belongs to another refinement");
    for (const auto& b : eta.blocks())
      if (b.row == eta.rank() && b.size != 1) throw std::invalid_argument("the top row of eta must be trivial");
  }

  int rank() const { return eta_.rank(); }
  const Refinement& refinement() const { return eta_; }
  const DualBasisTable& table() const { return *table_; }
  const BigModule& big_module() const { return big_; }

  /// D_nu T(z) = (1/eta!) sum_tau tau(partial_{nu^-1} Delta / Delta) T(tau(z)).
  TableauVector expand(const DerivedTableau& d) const {
    const RationalFunction base =
        RationalFunction::make(table_->dd_delta(d.nu.inverse()), delta_factors(eta_)) * (Rational(1) / eta_.factorial());
    std::map<IntegralPoint, std::vector<RationalFunction>> parts;
    for (const auto& tau : table_->elements()) parts[gtkit::act(tau, d.z)].push_back(act_perm(tau, base));
    TableauVector r;
    for (auto& [z, cs] : parts) r.add(z, RationalFunction::sum(cs));
    return r;
  }

  TableauVector expand(const DerivedVector& w) const {
    TableauVector r;
    for (const auto& [d, c] : w.terms()) r = r + c * expand(d);
    return r;
  }

  /// Coordinates in the derived basis: T(sigma(z)) = sum_tau sigma(dual_tau) D_tau T(z).
  DerivedVector contract(const TableauVector& w) const {
    std::map<DerivedTableau, std::vector<RationalFunction>> parts;
    for (const auto& [y, c] : w.terms()) {
      const NormalForm nf = normal_form(y, eta_);
      for (const auto& d : derived_tableaux(eta_, nf.rep))
        parts[d].push_back(c * RationalFunction(act_perm(nf.sigma, table_->dual(d.nu))));
    }
    DerivedVector r;
    for (auto& [d, cs] : parts) r.add(d, RationalFunction::sum(cs));
    return r;
  }

  /// E D_nu T(z) = sum D_nu(g_{sigma,w}) D_sigma T(w) where E T(z) = sum g_{sigma,w} D_sigma T(w).
  /// Throws LatticeViolation if a coefficient falls outside B_eta.
  DerivedVector act(Generator g, const DerivedTableau& d) const {
    const auto& expansion = coordinates(g, d.z);
    const std::size_t nu = table_->index_of(d.nu);
    DerivedVector r;
    for (const auto& [target, coeffs] : expansion) {
      const RationalFunction& c = coeffs[nu];
      if (!in_B_eta(c, eta_))
        throw LatticeViolation(g.to_string() + " " + d.to_string() + " -> " + target.to_string() + ": " + c.to_string());
      r.add(target, c);
    }
    return r;
  }

  DerivedVector act(Generator g, const DerivedVector& w) const {
    DerivedVector r;
    for (const auto& [d, c] : w.terms()) r = r + c * act(g, d);
    return r;
  }

  /// Sweeps every canonical generator over every derived tableau of the window.
  ClosureReport certify(int radius) const {
    ClosureReport rep;
    for (const auto& d : derived_basis_window(eta_, radius))
      for (const auto& g : canonical_generators(rank())) {
        ++rep.applications;
        try {
          rep.coefficients += static_cast<long>(act(g, d).size());
        } catch (const LatticeViolation& e) {
          if (rep.violations++ == 0) rep.first_violation = e.what();
        }
      }
    return rep;
  }

  /// Diagnostic: Delta_eps e^pm_{k,i}(x+z) lies in B_eta for every k < n, i.
  bool delta_eps_contains(const IntegralPoint& z) const {
    const RationalFunction de(delta(stabilizer_refinement(z, eta_)));
    for (int k = 1; k < rank(); ++k)
      for (int i = 1; i <= k; ++i)
        if (!in_B_eta(de * shift(big_.plus(k, i), z), eta_) || !in_B_eta(de * shift(big_.minus(k, i), z), eta_))
          return false;
    return true;
  }

  /// Drops memoized coordinates; bounds memory in long sweeps.
  void clear_cache() const { cache_.clear(); }

  static std::vector<Generator> canonical_generators(int n) {
    std::vector<Generator> gens;
    for (int k = 1; k < n; ++k) {
      gens.push_back(Generator::raising(k));
      gens.push_back(Generator::lowering(k));
    }
    for (int k = 1; k <= n; ++k) gens.push_back(Generator::diagonal(k));
    return gens;
  }

 private:
  using Coordinates = std::vector<std::pair<DerivedTableau, std::vector<RationalFunction>>>;

  // target -> (D_nu(g_target) for every nu in S_eta), cached per (g, z).
  const Coordinates& coordinates(Generator g, const IntegralPoint& z) const {
    auto key = std::make_pair(g, z);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Coordinates out;
    TableauVector ez;
    for (const auto& [f, target] : big_.act_on_basis(g, z)) ez.add(target, f);
    const DerivedVector coords = contract(ez);
    for (const auto& [target, c] : coords.terms()) out.emplace_back(target, decompose(*table_, c));
    return cache_.emplace(key, std::move(out)).first->second;
  }

  Refinement eta_;
  const DualBasisTable* table_;
  BigModule big_;
  mutable std::map<std::pair<Generator, IntegralPoint>, Coordinates> cache_;
};

/// Lattice::certify split over `jobs` workers, each with its own Lattice.
/// Work is divided by window point z; the report equals the sequential one.
inline ClosureReport certify_closure(const Refinement& eta, const DualBasisTable& table, int radius, int jobs) {
  const auto points = normal_points(eta, radius);
  const auto gens = Lattice::canonical_generators(eta.rank());
  std::vector<ClosureReport> parts(points.size());
  std::vector<std::unique_ptr<Lattice>> lattices(static_cast<std::size_t>(std::max(jobs, 1)));
  parallel_for(jobs, points.size(), [&](int w, std::size_t i) {
    auto& lattice = lattices[static_cast<std::size_t>(w)];
    if (!lattice) lattice = std::make_unique<Lattice>(eta, table);
    ClosureReport& rep = parts[i];
    for (const auto& d : derived_tableaux(eta, points[i]))
      for (const auto& g : gens) {
        ++rep.applications;
        try {
          rep.coefficients += static_cast<long>(lattice->act(g, d).size());
        } catch (const LatticeViolation& e) {
          if (rep.violations++ == 0) rep.first_violation = e.what();
        }
      }
  });
  ClosureReport total;
  for (const auto& r : parts) {
    total.applications += r.applications;
    total.coefficients += r.coefficients;
    if (total.violations == 0 && r.violations != 0) total.first_violation = r.first_violation;
    total.violations += r.violations;
  }
  return total;
}

// ---------------------------------------------------------------------------
// V(T(v)) = C_v (x)_{B_eta} L_eta

/// The U-module V(T(v)) in the basis of evaluated derived tableaux.
class EvaluatedModule {
 public:
  EvaluatedModule(const Lattice& lattice, Tableau v) : lattice_(&lattice), v_(std::move(v)) {
    if (!is_fully_critical(v_)) throw NotInNormalForm("point " + v_.to_string() + " is not fully critical");
    if (!(singularity(v_).eta == lattice.refinement()))
      throw std::invalid_argument("point singularity " + singularity(v_).eta.to_string() + " differs from the lattice's " +
                                  lattice.refinement().to_string());
  }

  int rank() const { return lattice_->rank(); }
  const Tableau& point() const { return v_; }
  const Lattice& lattice() const { return *lattice_; }

  /// Drops memoized actions (the lattice's cache is separate).
  void clear_cache() const { cache_.clear(); }

  /// pi_v(f) = f(v).
  ParamFraction evaluate_at_v(const RationalFunction& f) const {
    try {
      return evaluate(f, v_.entries);
    } catch (const DenominatorVanishes& e) {
      throw InternalError(std::string("evaluation at a fully critical point failed: ") + e.what());
    }
  }

  EvaluatedVector act(Generator g, const DerivedTableau& d) const {
    auto key = std::make_pair(g, d);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    EvaluatedVector r;
    const DerivedVector image = lattice_->act(g, d);
    for (const auto& [t, c] : image.terms()) r.add(t, evaluate_at_v(c));
    return cache_.emplace(key, std::move(r)).first->second;
  }

  EvaluatedVector act(Generator g, const EvaluatedVector& w) const {
    EvaluatedVector r;
    for (const auto& [d, c] : w.terms()) r = r + c * act(g, d);
    return r;
  }

  /// E_{a,b} for any a, b via E_{a,b} = [E_{a,a+1}, E_{a+1,b}] (a < b) and
  /// [E_{a,a-1}, E_{a-1,b}] (a > b).
  EvaluatedVector act_any(int a, int b, const EvaluatedVector& w) const {
    if (a == b || a - b == 1 || b - a == 1) return act(Generator{a, b}, w);
    const Generator first = a < b ? Generator::raising(a) : Generator::lowering(a - 1);
    const int c = a < b ? a + 1 : a - 1;
    return act(first, act_any(c, b, w)) - act_any(c, b, act(first, w));
  }

  /// c_{k,i} = sum over (r_1..r_i) in [k]^i of E_{r1 r2} ... E_{ri r1}, applied through the module action.
  EvaluatedVector central(int k, int i, const EvaluatedVector& w) const {
    EvaluatedVector total;
    for (int r1 = 1; r1 <= k; ++r1) {
      if (i == 1) {
        total = total + act_any(r1, r1, w);
        continue;
      }
      // cur[r] = sum over the inner indices of E_{r r_{j+1}} ... E_{ri r1} w
      std::vector<EvaluatedVector> cur;
      for (int r = 1; r <= k; ++r) cur.push_back(act_any(r, r1, w));
      for (int step = 2; step < i; ++step) {
        std::vector<EvaluatedVector> next;
        for (int r = 1; r <= k; ++r) {
          EvaluatedVector acc;
          for (int s = 1; s <= k; ++s) acc = acc + act_any(r, s, cur[static_cast<std::size_t>(s - 1)]);
          next.push_back(std::move(acc));
        }
        cur = std::move(next);
      }
      for (int s = 1; s <= k; ++s) total = total + act_any(r1, s, cur[static_cast<std::size_t>(s - 1)]);
    }
    return total;
  }

 private:
  const Lattice* lattice_;
  Tableau v_;
  mutable std::map<std::pair<Generator, DerivedTableau>, EvaluatedVector> cache_;
};

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin subalgebra action

/// The matrix of c_{k,i} on span{D_nu(v+z)}, nu over the eps(z)-shuffles.
struct GammaAction {
  int k = 1, i = 1;
  IntegralPoint z;
  std::vector<Permutation> basis;      // the shuffles, sorted
  Matrix<ParamFraction> matrix;        // column nu: c D_nu in the basis
  ParamFraction eigenvalue;            // gamma_{k,i}(v+z)
  std::vector<int> min_exponent;       // least m with (c - gamma)^m D_nu = 0
  bool nilpotent_within_bound = true;  // min_exponent[nu] <= l(nu) + 1
};

/// Precomputes d^nu_{sigma,tau} for one refinement.
class GammaEngine {
 public:
  explicit GammaEngine(const DualBasisTable& t) : table_(&t) {
    const auto& el = t.elements();
    const std::size_t m = el.size();
    d_.assign(m * m, {});
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u) {
        std::vector<Polynomial> row;
        for (const auto& p : dd_all(el, t.duals()[s] * t.duals()[u])) row.push_back(sym(t.refinement(), p));
        d_[s * m + u] = std::move(row);
      }
  }

  /// d^nu_{sigma,tau}.
  const Polynomial& d(std::size_t sigma, std::size_t tau, std::size_t nu) const {
    return d_[sigma * table_->elements().size() + tau][nu];
  }

  /// c D_nu T(z) = sum_{sigma,tau} d^nu_{sigma,tau} D_sigma(gamma(x+z)) D_tau T(z), evaluated at v.
  GammaAction action(int k, int i, const Tableau& v, const IntegralPoint& z) const {
    const Refinement& eta = table_->refinement();
    GammaAction out;
    out.k = k;
    out.i = i;
    out.z = z;
    out.basis = shuffles(eta, stabilizer_refinement(z, eta));
    const Polynomial gamma = gamma_poly(k, i);
    const Polynomial gz = shift(RationalFunction(gamma), z).numerator();
    std::vector<ParamFraction> dsig;
    for (const auto& p : dd_all(table_->elements(), gz)) dsig.push_back(evaluate(sym(eta, p), v.entries));
    const std::size_t b = out.basis.size(), m = table_->elements().size();
    out.matrix = Matrix<ParamFraction>(b, b);
    for (std::size_t col = 0; col < b; ++col) {
      const std::size_t nu = table_->index_of(out.basis[col]);
      for (std::size_t row = 0; row < b; ++row) {
        const std::size_t tau = table_->index_of(out.basis[row]);
        ParamFraction acc;
        for (std::size_t s = 0; s < m; ++s) {
          const Polynomial& dc = d(s, tau, nu);
          if (dc.is_zero() || dsig[s].is_zero()) continue;
          acc += evaluate(dc, v.entries) * dsig[s];
        }
        out.matrix(row, col) = acc;
      }
    }
    out.eigenvalue = evaluate(gamma, shifted(v, z).entries);
    Matrix<ParamFraction> nil = out.matrix;
    for (std::size_t j = 0; j < b; ++j) nil(j, j) -= out.eigenvalue;
    for (std::size_t col = 0; col < b; ++col) {
      Matrix<ParamFraction> e(b, 1);
      e(col, 0) = 1;
      int m_exp = 0;
      while (!e.is_zero() && m_exp <= static_cast<int>(b) + 1) {
        e = nil * e;
        ++m_exp;
      }
      out.min_exponent.push_back(m_exp);
      if (m_exp > out.basis[col].length() + 1) out.nilpotent_within_bound = false;
    }
    return out;
  }

 private:
  const DualBasisTable* table_;
  std::vector<std::vector<Polynomial>> d_;
};

/// The tuple gamma_{k,i}(v+z) over 1 <= i <= k <= n, in (k,i) order.
inline std::vector<ParamFraction> character_fingerprint(const Tableau& vz) {
  std::vector<ParamFraction> out;
  for (int k = 1; k <= vz.n; ++k)
    for (int i = 1; i <= k; ++i) out.push_back(evaluate(gamma_poly(k, i), vz.entries));
  return out;
}

struct SupportEntry {
  IntegralPoint z;
  Refinement eps;
  long multiplicity = 0;   // eta!/eps!
  long derived_count = 0;  // number of eps-shuffles
  std::vector<ParamFraction> fingerprint;
};

struct SupportReport {
  Refinement eta;
  std::vector<SupportEntry> entries;
  bool fingerprints_distinct = true;
  bool multiplicities_consistent = true;
  bool ok() const { return fingerprints_distinct && multiplicities_consistent; }
};

/// Characters chi_{v+z}, z in N_eta within the window, with multiplicities.
inline SupportReport support_window(const Tableau& v, int radius) {
  if (!is_fully_critical(v)) throw NotInNormalForm("point " + v.to_string() + " is not fully critical");
  SupportReport rep;
  rep.eta = singularity(v).eta;
  std::set<std::vector<ParamFraction>> seen;
  for (const auto& z : normal_points(rep.eta, radius)) {
    SupportEntry e{z, stabilizer_refinement(z, rep.eta), 0, 0, character_fingerprint(shifted(v, z))};
    const Rational mult = rep.eta.factorial() / e.eps.factorial();
    e.multiplicity = mult.get_num().get_si();
    e.derived_count = static_cast<long>(shuffles(rep.eta, e.eps).size());
    if (e.multiplicity != e.derived_count) rep.multiplicities_consistent = false;
    if (!seen.insert(e.fingerprint).second) rep.fingerprints_distinct = false;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

/// Coefficient-by-coefficient comparison of the evaluated lattice action with
/// the generic construction (big-module coefficients evaluated at v).
struct DegenerationReport {
  long compared = 0;
  long mismatches = 0;
  std::string first_mismatch;
  bool ok() const { return mismatches == 0; }
};

inline DegenerationReport compare_with_generic(const EvaluatedModule& m, int radius) {
  const Refinement& eta = m.lattice().refinement();
  if (!eta.is_trivial()) throw std::invalid_argument("the generic comparison needs a trivial singularity");
  DegenerationReport rep;
  const Permutation id = Permutation::identity(eta);
  for (const auto& z : normal_points(eta, radius))
    for (const auto& g : Lattice::canonical_generators(m.rank())) {
      EvaluatedVector generic;
      for (const auto& [f, w] : m.lattice().big_module().act_on_basis(g, z))
        generic.add({w, id}, evaluate(f, m.point().entries));
      const EvaluatedVector singular = m.act(g, DerivedTableau{z, id});
      ++rep.compared;
      if (!(singular == generic) && rep.mismatches++ == 0) rep.first_mismatch = g.to_string() + " T" + z.to_string();
    }
  return rep;
}

}  // namespace gtkit

#endif  // GTKIT_SINGULAR_HPP
