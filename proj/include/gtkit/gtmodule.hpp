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

// Gelfand-Tsetlin tableaux, the finite-dimensional modules V(lambda), the
// Gelfand-Tsetlin functions and the formal module V_K spanned by T(z).

#ifndef GTKIT_GTMODULE_HPP
#define GTKIT_GTMODULE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "param_scalar.hpp"
#include "rational_function.hpp"
#include "symcomb.hpp"

namespace gtkit {

/// E_{a,b}, 1-based.
struct Generator {
  int a = 1;
  int b = 1;
  static Generator raising(int k) { return {k, k + 1}; }
  static Generator lowering(int k) { return {k + 1, k}; }
  static Generator diagonal(int k) { return {k, k}; }
  bool is_canonical() const { return a == b || a - b == 1 || b - a == 1; }
  std::string to_string() const { return "E" + std::to_string(a) + std::to_string(b); }
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Parses "E12" (or "E_{1,2}", "E1,2").
inline Generator parse_generator(const std::string& text) {
  std::vector<int> digits;
  std::string cur;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) cur += ch;
    else if (!cur.empty()) {
      digits.push_back(std::stoi(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) digits.push_back(std::stoi(cur));
  if (digits.size() == 1 && digits[0] >= 11 && digits[0] <= 99) digits = {digits[0] / 10, digits[0] % 10};
  if (text.empty() || (text[0] != 'E' && text[0] != 'e') || digits.size() != 2)
    throw std::invalid_argument("malformed generator '" + text + "'");
  return {digits[0], digits[1]};
}

/// A Gelfand-Tsetlin tableau: entries v_{k,i} for 1 <= i <= k <= n.
struct Tableau {
  int n = 1;
  std::vector<ParamScalar> entries;  // flat order

  static Tableau from_integers(int n, const std::vector<int>& flat) {
    Tableau t{n, {}};
    for (int v : flat) t.entries.emplace_back(v);
    return t;
  }
  const ParamScalar& at(int k, int i) const { return entries[static_cast<std::size_t>(VarIndex{k, i}.flat())]; }

  /// v_{k,i} - v_{k-1,i} in Z_{>=0} and v_{k-1,i} - v_{k,i+1} in Z_{>0}.
  bool is_standard() const {
    for (int k = 2; k <= n; ++k)
      for (int i = 1; i < k; ++i) {
        const ParamScalar d1 = at(k, i) - at(k - 1, i), d2 = at(k - 1, i) - at(k, i + 1);
        if (!d1.is_rational() || !is_integer(d1.rational_part()) || d1.rational_part() < 0) return false;
        if (!d2.is_rational() || !is_integer(d2.rational_part()) || d2.rational_part() <= 0) return false;
      }
    return true;
  }
  std::string to_string() const {
    std::string s;
    for (int k = n; k >= 1; --k) {
      s += "[";
      for (int i = 1; i <= k; ++i) s += (i > 1 ? "," : "") + at(k, i).to_string();
      s += "]";
    }
    return s;
  }
};

/// lambda_i - lambda_{i+1} >= 0 for all i.
inline bool is_dominant(const std::vector<int>& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return !lambda.empty();
}

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
inline Integer weyl_dimension(const std::vector<int>& lambda) {
  Rational d = 1;
  const int n = static_cast<int>(lambda.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      d *= Rational(lambda[static_cast<std::size_t>(i - 1)] - lambda[static_cast<std::size_t>(j - 1)] + j - i) / (j - i);
  return d.get_num();
}

/// All standard integral tableaux (flat entries) with top row
/// lambda - (0, 1, ..., n-1), lexicographically descending from row n-1 down.
inline std::vector<std::vector<int>> standard_tableaux(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  check_rank(n);
  if (!is_dominant(lambda)) throw NotDominant("weight is not dominant integral");
  std::vector<int> v(static_cast<std::size_t>(num_entries(n)));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(VarIndex{n, i}.flat())] = lambda[static_cast<std::size_t>(i - 1)] - (i - 1);
  std::vector<std::vector<int>> out;
  // Fill row k, entry i, given rows > k.
  std::function<void(int, int)> fill = [&](int k, int i) {
    if (k == 0) {
      out.push_back(v);
      return;
    }
    if (i > k) {
      fill(k - 1, 1);
      return;
    }
    const int hi = v[static_cast<std::size_t>(VarIndex{k + 1, i}.flat())];
    const int lo = v[static_cast<std::size_t>(VarIndex{k + 1, i + 1}.flat())] + 1;
    for (int x = hi; x >= lo; --x) {
      v[static_cast<std::size_t>(VarIndex{k, i}.flat())] = x;
      fill(k, i + 1);
    }
  };
  fill(n - 1, 1);
  return out;
}

/// gamma_{k,i} = sum_j (x_{k,j} + k - 1)^i prod_{m != j} (1 - 1/(x_{k,j} - x_{k,m})), reduced to a polynomial.
inline Polynomial gamma_poly(int k, int i) {
  if (k < 1 || i < 1 || i > k || k > kMaxRank) throw std::invalid_argument("gamma_{k,i} needs 1 <= i <= k");
  std::vector<RationalFunction> parts;
  for (int j = 1; j <= k; ++j) {
    const int xj = VarIndex{k, j}.flat();
    Polynomial num = (Polynomial::variable(xj) + Polynomial(k - 1)).pow(static_cast<unsigned>(i));
    std::vector<std::array<int, 3>> den;
    for (int m = 1; m <= k; ++m) {
      if (m == j) continue;
      const int xm = VarIndex{k, m}.flat();
      num *= Polynomial::variable(xj) - Polynomial::variable(xm) - Polynomial(1);
      den.push_back({xj, xm, 0});
    }
    parts.push_back(RationalFunction::make(num, den));
  }
  const RationalFunction g = RationalFunction::sum(parts);
  if (!g.is_polynomial()) throw InternalError("gamma_{k,i} did not reduce to a polynomial");
  return g.numerator();
}

/// The module V(lambda) with exact matrices in the standard tableau basis.
class FinDimModule {
 public:
  static FinDimModule build(const std::vector<int>& lambda) {
    FinDimModule m;
    m.lambda_ = lambda;
    m.n_ = static_cast<int>(lambda.size());
    m.basis_ = standard_tableaux(lambda);
    for (std::size_t i = 0; i < m.basis_.size(); ++i) m.index_.emplace(m.basis_[i], i);
    const int n = m.n_;
    m.e_.assign(static_cast<std::size_t>(n * n), Matrix<Rational>());
    for (int k = 1; k <= n; ++k) m.e(k, k) = m.generator_matrix(Generator::diagonal(k));
    for (int k = 1; k < n; ++k) {
      m.e(k, k + 1) = m.generator_matrix(Generator::raising(k));
      m.e(k + 1, k) = m.generator_matrix(Generator::lowering(k));
    }
    // E_{a,c} = [E_{a,a+1}, E_{a+1,c}] above the diagonal, [E_{a,a-1}, E_{a-1,c}] below.
    for (int d = 2; d < n; ++d)
      for (int a = 1; a + d <= n; ++a) {
        m.e(a, a + d) = commutator(m.e(a, a + 1), m.e(a + 1, a + d));
        m.e(a + d, a) = commutator(m.e(a + d, a + d - 1), m.e(a + d - 1, a));
      }
    return m;
  }

  int rank() const { return n_; }
  const std::vector<int>& weight() const { return lambda_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const std::vector<int>& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// E_{a,b} for any 1 <= a, b <= n.
  const Matrix<Rational>& E(int a, int b) const {
    if (a < 1 || b < 1 || a > n_ || b > n_) throw std::invalid_argument("E_{a,b} index out of range");
    return e_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))];
  }

  /// The canonical generators straight from the tableau formulas; terms that
  /// leave the standard set are dropped.
  Matrix<Rational> generator_matrix(Generator g) const {
    if (!g.is_canonical() || g.a < 1 || g.b < 1 || g.a > n_ || g.b > n_)
      throw std::invalid_argument("not a canonical generator of gl(" + std::to_string(n_) + ")");
    const std::size_t dim = basis_.size();
    Matrix<Rational> m(dim, dim);
    auto val = [](const std::vector<int>& v, int k, int i) { return v[static_cast<std::size_t>(VarIndex{k, i}.flat())]; };
    for (std::size_t s = 0; s < dim; ++s) {
      const auto& v = basis_[s];
      if (g.a == g.b) {
        const int k = g.a;
        Rational d = k - 1;
        for (int j = 1; j <= k; ++j) d += val(v, k, j);
        for (int j = 1; j < k; ++j) d -= val(v, k - 1, j);
        m(s, s) = d;
        continue;
      }
      const bool raise = g.b == g.a + 1;
      const int k = raise ? g.a : g.b;
      for (int i = 1; i <= k; ++i) {
        std::vector<int> w = v;
        w[static_cast<std::size_t>(VarIndex{k, i}.flat())] += raise ? 1 : -1;
        auto t = index_of(w);
        if (!t) continue;
        Rational num = 1, den = 1;
        if (raise)
          for (int j = 1; j <= k + 1; ++j) num *= val(v, k, i) - val(v, k + 1, j);
        else
          for (int j = 1; j < k; ++j) num *= val(v, k, i) - val(v, k - 1, j);
        for (int j = 1; j <= k; ++j)
          if (j != i) den *= val(v, k, i) - val(v, k, j);
        m(*t, s) += raise ? Rational(-num / den) : Rational(num / den);
      }
    }
    return m;
  }

  /// c_{k,i} = sum over (r_1..r_i) in [k]^i of E_{r1 r2} E_{r2 r3} ... E_{ri r1}.
  Matrix<Rational> central_element(int k, int i) const {
    if (k < 1 || k > n_ || i < 1 || i > k) throw std::invalid_argument("c_{k,i} needs 1 <= i <= k <= n");
    // paths[r1][r] = sum over words r1 -> ... -> r of the ordered products
    std::vector<std::vector<Matrix<Rational>>> paths(static_cast<std::size_t>(k));
    for (int r1 = 1; r1 <= k; ++r1)
      for (int r = 1; r <= k; ++r) paths[static_cast<std::size_t>(r1 - 1)].push_back(E(r1, r));
    for (int step = 2; step <= i; ++step)
      for (int r1 = 1; r1 <= k; ++r1) {
        std::vector<Matrix<Rational>> next;
        for (int r = 1; r <= k; ++r) {
          Matrix<Rational> acc(dimension(), dimension());
          for (int s = 1; s <= k; ++s) acc += paths[static_cast<std::size_t>(r1 - 1)][static_cast<std::size_t>(s - 1)] * E(s, r);
          next.push_back(std::move(acc));
        }
        paths[static_cast<std::size_t>(r1 - 1)] = std::move(next);
      }
    Matrix<Rational> c(dimension(), dimension());
    for (int r1 = 1; r1 <= k; ++r1) c += paths[static_cast<std::size_t>(r1 - 1)][static_cast<std::size_t>(r1 - 1)];
    return c;
  }

 private:
  Matrix<Rational>& e(int a, int b) { return e_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))]; }

  int n_ = 0;
  std::vector<int> lambda_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<Matrix<Rational>> e_;
};

/// Outcome of one relation check.
struct RelationCheck {
  std::string relation;
  bool ok = true;
};

/// Every relation [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb on V(lambda).
inline std::vector<RelationCheck> verify_findim_relations(const FinDimModule& m) {
  std::vector<RelationCheck> out;
  const int n = m.rank();
  const Matrix<Rational> zero(m.dimension(), m.dimension());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          Matrix<Rational> rhs = zero;
          if (b == c) rhs += m.E(a, d);
          if (d == a) rhs = rhs - m.E(c, b);
          const std::string name = "[" + Generator{a, b}.to_string() + "," + Generator{c, d}.to_string() + "]";
          out.push_back({name, commutator(m.E(a, b), m.E(c, d)) == rhs});
        }
  return out;
}

/// e^+_{k,i} = prod_{j<=k+1}(x_{k,i} - x_{k+1,j}) / prod_{j != i}(x_{k,i} - x_{k,j}).
inline RationalFunction e_plus(int n, int k, int i) {
  if (k < 1 || k >= n || i < 1 || i > k) throw std::invalid_argument("e^+_{k,i} needs 1 <= i <= k < n");
  const int xi = VarIndex{k, i}.flat();
  Polynomial num(1);
  for (int j = 1; j <= k + 1; ++j) num *= Polynomial::variable(xi) - Polynomial::variable(VarIndex{k + 1, j}.flat());
  std::vector<std::array<int, 3>> den;
  for (int j = 1; j <= k; ++j)
    if (j != i) den.push_back({xi, VarIndex{k, j}.flat(), 0});
  return RationalFunction::make(num, den);
}

/// e^-_{k,i} = prod_{j<k}(x_{k,i} - x_{k-1,j}) / prod_{j != i}(x_{k,i} - x_{k,j}).
inline RationalFunction e_minus(int n, int k, int i) {
  if (k < 1 || k >= n || i < 1 || i > k) throw std::invalid_argument("e^-_{k,i} needs 1 <= i <= k < n");
  const int xi = VarIndex{k, i}.flat();
  Polynomial num(1);
  for (int j = 1; j < k; ++j) num *= Polynomial::variable(xi) - Polynomial::variable(VarIndex{k - 1, j}.flat());
  std::vector<std::array<int, 3>> den;
  for (int j = 1; j <= k; ++j)
    if (j != i) den.push_back({xi, VarIndex{k, j}.flat(), 0});
  return RationalFunction::make(num, den);
}

/// The affine function by which E_{k,k} acts on T(z), at the formal point x.
inline Polynomial diagonal_weight(int k) {
  Polynomial d(k - 1);
  for (int j = 1; j <= k; ++j) d += Polynomial::variable(VarIndex{k, j}.flat());
  for (int j = 1; j < k; ++j) d -= Polynomial::variable(VarIndex{k - 1, j}.flat());
  return d;
}

/// Finitely supported combination sum_z c_z T(z); zero coefficients are never stored.
template <class C, class Key = IntegralPoint>
class LinearCombination {
 public:
  using scalar_type = C;
  using key_type = Key;

  LinearCombination() = default;
  static LinearCombination basis(const Key& z, C c = C(1)) {
    LinearCombination v;
    v.add(z, c);
    return v;
  }

  const std::map<Key, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  C coefficient(const Key& z) const {
    auto it = terms_.find(z);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add(const Key& z, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(z, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    for (const auto& [z, c] : b.terms_) a.add(z, c);
    return a;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    for (const auto& [z, c] : b.terms_) a.add(z, C(0) - c);
    return a;
  }
  friend LinearCombination operator*(const C& s, const LinearCombination& a) {
    LinearCombination r;
    if (s.is_zero()) return r;
    for (const auto& [z, c] : a.terms_) r.add(z, s * c);
    return r;
  }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  std::map<Key, C> terms_;
};

using TableauVector = LinearCombination<RationalFunction>;

/// Generators of U(gl(n)) acting on V_K = K (x) span{T(z)}.
class BigModule {
 public:
  explicit BigModule(int n) : n_(n) {
    check_rank(n);
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i) {
        plus_.push_back(e_plus(n, k, i));
        minus_.push_back(e_minus(n, k, i));
      }
  }
  int rank() const { return n_; }

  const RationalFunction& plus(int k, int i) const { return plus_[static_cast<std::size_t>(VarIndex{k, i}.flat())]; }
  const RationalFunction& minus(int k, int i) const { return minus_[static_cast<std::size_t>(VarIndex{k, i}.flat())]; }

  /// The terms of g T(z): coefficient (in K) and target point.
  std::vector<std::pair<RationalFunction, IntegralPoint>> act_on_basis(Generator g, const IntegralPoint& z) const {
    check(g);
    std::vector<std::pair<RationalFunction, IntegralPoint>> out;
    if (g.a == g.b) {
      out.emplace_back(RationalFunction(shift(RationalFunction(diagonal_weight(g.a)), z)), z);
      return out;
    }
    const bool raise = g.b == g.a + 1;
    const int k = raise ? g.a : g.b;
    for (int i = 1; i <= k; ++i) {
      const IntegralPoint d = IntegralPoint::delta(n_, k, i);
      if (raise) out.emplace_back(-shift(plus(k, i), z), z + d);
      else out.emplace_back(shift(minus(k, i), z), z - d);
    }
    return out;
  }

  TableauVector act(Generator g, const TableauVector& w) const {
    TableauVector r;
    for (const auto& [z, c] : w.terms())
      for (const auto& [f, target] : act_on_basis(g, z)) r.add(target, c * f);
    return r;
  }

  /// Applies a word g_1 g_2 ... g_m (rightmost first).
  TableauVector act_word(const std::vector<Generator>& word, TableauVector w) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = act(*it, w);
    return w;
  }

 private:
  void check(Generator g) const {
    if (!g.is_canonical() || g.a < 1 || g.b < 1 || g.a > n_ || g.b > n_)
      throw std::invalid_argument(g.to_string() + " is not a canonical generator of gl(" + std::to_string(n_) + ")");
  }

  int n_;
  std::vector<RationalFunction> plus_, minus_;
};

/// sigma (f T(z)) = sigma(f) T(sigma(z)) for sigma in S_mu.
inline TableauVector act_perm(const Permutation& sigma, const TableauVector& w) {
  TableauVector r;
  for (const auto& [z, c] : w.terms()) r.add(act(sigma, z), act_perm(sigma, c));
  return r;
}

/// Chevalley-Serre relations of gl(n) among the canonical generators,
/// checked on `probe`. M provides rank() and act(Generator, const V&).
template <class M, class V>
std::vector<RelationCheck> verify_relations(const M& m, const V& probe) {
  using C = typename V::scalar_type;
  std::vector<RelationCheck> out;
  const int n = m.rank();
  auto app = [&](Generator g, const V& v) { return m.act(g, v); };
  auto br = [&](Generator g, Generator h, const V& v) { return app(g, app(h, v)) - app(h, app(g, v)); };
  auto scaled = [](int s, const V& v) { return s == 0 ? V() : C(s) * v; };
  auto name2 = [](Generator g, Generator h) { return "[" + g.to_string() + "," + h.to_string() + "]"; };

  std::vector<V> diag, up, down;
  for (int k = 1; k <= n; ++k) diag.push_back(app(Generator::diagonal(k), probe));
  for (int k = 1; k < n; ++k) {
    up.push_back(app(Generator::raising(k), probe));
    down.push_back(app(Generator::lowering(k), probe));
  }
  auto at = [](const std::vector<V>& vs, int k) -> const V& { return vs[static_cast<std::size_t>(k - 1)]; };
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      const Generator a = Generator::diagonal(k), b = Generator::diagonal(l);
      out.push_back({name2(a, b) + "=0", app(a, at(diag, l)) == app(b, at(diag, k))});
    }
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l < n; ++l) {
      const int s = (k == l) - (k == l + 1);
      const Generator h = Generator::diagonal(k);
      out.push_back({name2(h, Generator::raising(l)),
                     app(h, at(up, l)) - app(Generator::raising(l), at(diag, k)) == scaled(s, at(up, l))});
      out.push_back({name2(h, Generator::lowering(l)),
                     app(h, at(down, l)) - app(Generator::lowering(l), at(diag, k)) == scaled(-s, at(down, l))});
    }
  for (int k = 1; k < n; ++k)
    for (int l = 1; l < n; ++l) {
      const V rhs = k == l ? at(diag, k) - at(diag, k + 1) : V();
      out.push_back({name2(Generator::raising(k), Generator::lowering(l)),
                     app(Generator::raising(k), at(down, l)) - app(Generator::lowering(l), at(up, k)) == rhs});
    }
  for (int k = 1; k < n; ++k)
    for (int l = 1; l < n; ++l) {
      if (k == l) continue;
      for (bool raise : {true, false}) {
        const Generator g = raise ? Generator::raising(k) : Generator::lowering(k);
        const Generator h = raise ? Generator::raising(l) : Generator::lowering(l);
        if (std::abs(k - l) > 1) {
          if (k < l) out.push_back({name2(g, h) + "=0", br(g, h, probe).is_zero()});
          continue;
        }
        // [g, [g, h]] = g g h - 2 g h g + h g g
        const V& gv = raise ? at(up, k) : at(down, k);
        const V& hv = raise ? at(up, l) : at(down, l);
        const V ggh = app(g, app(g, hv));
        const V ghg = app(g, app(h, gv));
        const V hgg = app(h, app(g, gv));
        out.push_back({"[" + g.to_string() + "," + name2(g, h) + "]=0", (ggh - C(2) * ghg + hgg).is_zero()});
      }
    }
  return out;
}

inline std::vector<RelationCheck> verify_u_relations(const BigModule& m, const TableauVector& probe) {
  return verify_relations(m, probe);
}

/// sigma(g T(z)) = g sigma(T(z)) for every canonical generator g and simple sigma in S_mu.
inline std::vector<RelationCheck> verify_equivariance(const BigModule& m, const IntegralPoint& z) {
  std::vector<RelationCheck> out;
  const int n = m.rank();
  const Refinement mu = Refinement::mu(n);
  std::vector<Generator> gens;
  for (int k = 1; k <= n; ++k) gens.push_back(Generator::diagonal(k));
  for (int k = 1; k < n; ++k) {
    gens.push_back(Generator::raising(k));
    gens.push_back(Generator::lowering(k));
  }
  const TableauVector t = TableauVector::basis(z);
  for (const auto& b : mu.blocks())
    for (int a = b.start; a + 1 < b.start + b.size; ++a) {
      const Permutation s = Permutation::simple(mu, a);
      for (const auto& g : gens)
        out.push_back({"s" + std::to_string(a) + "." + g.to_string(), act_perm(s, m.act(g, t)) == m.act(g, act_perm(s, t))});
    }
  return out;
}

}  // namespace gtkit

#endif  // GTKIT_GTMODULE_HPP
