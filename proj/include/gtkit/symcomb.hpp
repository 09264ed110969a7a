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

// Compositions, refinements of mu = (1,2,...,n), parabolic subgroups S_eta
// acting on the flat index set of a tableau, and integral points.

#ifndef GTKIT_SYMCOMB_HPP
#define GTKIT_SYMCOMB_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "variables.hpp"

namespace gtkit {

/// Composition (mu_1, ..., mu_r) of a positive integer.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("composition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](int k) const { return parts_[static_cast<std::size_t>(k)]; }

  /// First element of the k-th block (0-based k, 1-based result).
  int alpha(int k) const { return std::accumulate(parts_.begin(), parts_.begin() + k, 0) + 1; }
  /// Last element of the k-th block (0-based k, 1-based result).
  int beta(int k) const { return std::accumulate(parts_.begin(), parts_.begin() + k + 1, 0); }

  Rational factorial() const {
    Rational f = 1;
    for (int p : parts_) f *= gtkit::factorial(p);
    return f;
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Block membership of each flat position; two permutations can only be
/// composed when their tags agree.
struct BlockTag {
  int size = 0;
  std::array<std::uint8_t, kMaxVars> block{};
  friend bool operator==(const BlockTag&, const BlockTag&) = default;
};

/// A refinement of mu = (1, 2, ..., n): one composition of k per row k.
/// Blocks are contiguous intervals of flat indices, listed row by row.
class Refinement {
 public:
  struct Block {
    int row;    // 1-based row k
    int start;  // first flat index
    int size;
  };

  Refinement() = default;
  explicit Refinement(std::vector<std::vector<int>> rows) {
    if (rows.empty()) throw std::invalid_argument("refinement needs at least one row");
    check_rank(static_cast<int>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Composition c(rows[k]);
      if (c.total() != static_cast<int>(k + 1))
        throw std::invalid_argument("row " + std::to_string(k + 1) + " of a refinement must be a composition of " +
                                    std::to_string(k + 1));
      rows_.push_back(std::move(c));
    }
    build();
  }

  /// mu itself: every row is a single block.
  static Refinement mu(int n) {
    std::vector<std::vector<int>> r;
    for (int k = 1; k <= n; ++k) r.push_back({k});
    return Refinement(std::move(r));
  }
  /// The finest refinement: S_eta trivial.
  static Refinement trivial(int n) {
    std::vector<std::vector<int>> r;
    for (int k = 1; k <= n; ++k) r.push_back(std::vector<int>(static_cast<std::size_t>(k), 1));
    return Refinement(std::move(r));
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int num_entries() const { return gtkit::num_entries(rank()); }
  const std::vector<Composition>& rows() const { return rows_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_of(int flat) const { return tag_.block[static_cast<std::size_t>(flat)]; }
  const BlockTag& tag() const { return tag_; }
  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  /// eta! = #S_eta.
  Rational factorial() const {
    Rational f = 1;
    for (const auto& b : blocks_) f *= gtkit::factorial(b.size);
    return f;
  }
  long order() const { return factorial().get_num().get_si(); }

  /// Sum over blocks of b(b-1)/2, the length of the longest element.
  int longest_length() const {
    int l = 0;
    for (const auto& b : blocks_) l += b.size * (b.size - 1) / 2;
    return l;
  }

  bool is_trivial() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size == 1; });
  }

  /// True iff *this refines `coarser` (every block of *this inside a block of coarser).
  bool refines(const Refinement& coarser) const {
    if (coarser.rank() != rank()) return false;
    for (const auto& b : blocks_)
      for (int a = b.start; a < b.start + b.size; ++a)
        if (coarser.block_of(a) != coarser.block_of(b.start)) return false;
    return true;
  }

  std::vector<std::vector<int>> to_vectors() const {
    std::vector<std::vector<int>> r;
    for (const auto& c : rows_) r.push_back(c.parts());
    return r;
  }

  /// e.g. ((1),(2),(2,1),(1,1,1,1))
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k) s += ",";
      s += "(";
      for (std::size_t j = 0; j < rows_[k].parts().size(); ++j) {
        if (j) s += ",";
        s += std::to_string(rows_[k].parts()[j]);
      }
      s += ")";
    }
    return s + ")";
  }

  friend bool operator==(const Refinement& a, const Refinement& b) { return a.rows_ == b.rows_; }

 private:
  void build() {
    int flat = 0, id = 0;
    tag_.size = gtkit::num_entries(rank());
    for (int k = 1; k <= rank(); ++k)
      for (int p : rows_[static_cast<std::size_t>(k - 1)].parts()) {
        blocks_.push_back({k, flat, p});
        for (int j = 0; j < p; ++j) tag_.block[static_cast<std::size_t>(flat + j)] = static_cast<std::uint8_t>(id);
        flat += p;
        ++id;
      }
  }

  std::vector<Composition> rows_;
  std::vector<Block> blocks_;
  BlockTag tag_;
};

/// Permutation of the flat index set, tagged with the parabolic subgroup it
/// lives in. Composition is (s * t)(a) = s(t(a)); it acts on points by
/// s(v)_{s(a)} = v_a and on polynomials by x_a -> x_{s(a)}.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(const BlockTag& tag) {
    Permutation p;
    p.tag_ = tag;
    for (int a = 0; a < tag.size; ++a) p.image_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(a);
    return p;
  }
  static Permutation identity(const Refinement& eta) { return identity(eta.tag()); }

  /// The simple transposition swapping flat positions a and a+1.
  static Permutation simple(const BlockTag& tag, int a) {
    if (a < 0 || a + 1 >= tag.size || tag.block[static_cast<std::size_t>(a)] != tag.block[static_cast<std::size_t>(a + 1)])
      throw std::invalid_argument("simple transposition s_" + std::to_string(a) + " is not in the parabolic subgroup");
    Permutation p = identity(tag);
    std::swap(p.image_[static_cast<std::size_t>(a)], p.image_[static_cast<std::size_t>(a + 1)]);
    return p;
  }
  static Permutation simple(const Refinement& eta, int a) { return simple(eta.tag(), a); }

  /// From 0-based one-line notation; checks bijectivity and block membership.
  static Permutation from_one_line(const BlockTag& tag, const std::vector<int>& one_line) {
    if (static_cast<int>(one_line.size()) != tag.size) throw std::invalid_argument("one-line notation has wrong length");
    Permutation p;
    p.tag_ = tag;
    std::array<bool, kMaxVars> seen{};
    for (int a = 0; a < tag.size; ++a) {
      const int b = one_line[static_cast<std::size_t>(a)];
      if (b < 0 || b >= tag.size || seen[static_cast<std::size_t>(b)])
        throw std::invalid_argument("one-line notation is not a permutation");
      if (tag.block[static_cast<std::size_t>(a)] != tag.block[static_cast<std::size_t>(b)])
        throw std::invalid_argument("permutation does not preserve the blocks of its parabolic subgroup");
      seen[static_cast<std::size_t>(b)] = true;
      p.image_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    }
    return p;
  }
  static Permutation from_one_line(const Refinement& eta, const std::vector<int>& one_line) {
    return from_one_line(eta.tag(), one_line);
  }

  /// s_{w_1} s_{w_2} ... s_{w_l}.
  static Permutation from_word(const BlockTag& tag, const std::vector<int>& word) {
    Permutation p = identity(tag);
    for (int a : word) p = p * simple(tag, a);
    return p;
  }

  int size() const { return tag_.size; }
  const BlockTag& tag() const { return tag_; }
  int operator()(int a) const { return image_[static_cast<std::size_t>(a)]; }

  std::vector<int> one_line() const {
    std::vector<int> r(static_cast<std::size_t>(size()));
    for (int a = 0; a < size(); ++a) r[static_cast<std::size_t>(a)] = image_[static_cast<std::size_t>(a)];
    return r;
  }

  /// Image as a table usable for Polynomial::rename.
  std::array<int, kMaxVars> image_table() const {
    std::array<int, kMaxVars> t{};
    for (int a = 0; a < kMaxVars; ++a) t[static_cast<std::size_t>(a)] = a < size() ? image_[static_cast<std::size_t>(a)] : a;
    return t;
  }

  friend Permutation operator*(const Permutation& s, const Permutation& t) {
    if (!(s.tag_ == t.tag_)) throw std::invalid_argument("cannot compose permutations from different parabolic subgroups");
    Permutation r;
    r.tag_ = s.tag_;
    for (int a = 0; a < s.size(); ++a)
      r.image_[static_cast<std::size_t>(a)] = s.image_[t.image_[static_cast<std::size_t>(a)]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.tag_ = tag_;
    for (int a = 0; a < size(); ++a) r.image_[image_[static_cast<std::size_t>(a)]] = static_cast<std::uint8_t>(a);
    return r;
  }

  /// Number of inversions.
  int length() const {
    int l = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (image_[static_cast<std::size_t>(a)] > image_[static_cast<std::size_t>(b)]) ++l;
    return l;
  }
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  bool is_identity() const { return length() == 0; }

  /// s_a is a left descent iff l(s_a * this) < l(this).
  bool has_left_descent(int a) const {
    const Permutation inv = inverse();
    return inv(a) > inv(a + 1);
  }
  /// s_a is a right descent iff l(this * s_a) < l(this).
  bool has_right_descent(int a) const { return (*this)(a) > (*this)(a + 1); }

  /// Re-tags into a coarser parabolic; throws if not a member.
  Permutation retag(const BlockTag& coarser) const { return from_one_line(coarser, one_line()); }

  /// Cycle notation with entries printed as (a - base + 1), e.g. "(123)"; the
  /// identity prints as "id".
  std::string to_cycle_notation(int base = 0) const {
    std::string s;
    std::array<bool, kMaxVars> seen{};
    for (int a = 0; a < size(); ++a) {
      if (seen[static_cast<std::size_t>(a)] || (*this)(a) == a) continue;
      s += "(";
      for (int b = a; !seen[static_cast<std::size_t>(b)]; b = (*this)(b)) {
        seen[static_cast<std::size_t>(b)] = true;
        s += std::to_string(b - base + 1);
      }
      s += ")";
    }
    return s.empty() ? "id" : s;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.tag_ == b.tag_ && std::equal(a.image_.begin(), a.image_.begin() + a.size(), b.image_.begin());
  }

  /// The fixed total order: by length, then lexicographically by one-line notation.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    for (int i = 0; i < std::min(a.size(), b.size()); ++i)
      if (auto c = a.image_[static_cast<std::size_t>(i)] <=> b.image_[static_cast<std::size_t>(i)]; c != 0) return c;
    return a.size() <=> b.size();
  }

 private:
  std::array<std::uint8_t, kMaxVars> image_{};
  BlockTag tag_;
};

/// Lexicographically smallest reduced word (flat positions a of s_a) with
/// sigma = s_{w_1} ... s_{w_l}.
inline std::vector<int> reduced_word(Permutation sigma) {
  std::vector<int> word;
  while (!sigma.is_identity()) {
    int a = 0;
    while (!sigma.has_left_descent(a)) ++a;
    word.push_back(a);
    sigma = Permutation::simple(sigma.tag(), a) * sigma;
  }
  return word;
}

/// Every element of S_eta, sorted by the fixed total order.
inline std::vector<Permutation> group_elements(const Refinement& eta) {
  std::vector<Permutation> out{Permutation::identity(eta)};
  for (const auto& b : eta.blocks()) {
    if (b.size == 1) continue;
    std::vector<int> local(static_cast<std::size_t>(b.size));
    std::iota(local.begin(), local.end(), b.start);
    std::vector<Permutation> next;
    do {
      for (const auto& p : out) {
        std::vector<int> ol = p.one_line();
        for (int j = 0; j < b.size; ++j) ol[static_cast<std::size_t>(b.start + j)] = local[static_cast<std::size_t>(j)];
        next.push_back(Permutation::from_one_line(eta, ol));
      }
    } while (std::next_permutation(local.begin(), local.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// w_eta: reverses every block.
inline Permutation longest_word(const Refinement& eta) {
  std::vector<int> ol(static_cast<std::size_t>(eta.num_entries()));
  for (const auto& b : eta.blocks())
    for (int j = 0; j < b.size; ++j) ol[static_cast<std::size_t>(b.start + j)] = b.start + b.size - 1 - j;
  return Permutation::from_one_line(eta, ol);
}

/// Shuffle^eta_eps: elements of S_eta increasing on each eps-block, i.e. the
/// minimal-length representatives of S_eta / S_eps. Sorted by the total order.
inline std::vector<Permutation> shuffles(const Refinement& eta, const Refinement& eps) {
  if (!eps.refines(eta)) throw std::invalid_argument("shuffles: eps must refine eta");
  std::vector<Permutation> out;
  for (const auto& s : group_elements(eta)) {
    bool ok = true;
    for (int a = 0; a + 1 < eta.num_entries() && ok; ++a)
      if (eps.same_block(a, a + 1) && s(a) > s(a + 1)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

/// True iff s is increasing on every eps-block.
inline bool is_shuffle(const Permutation& s, const Refinement& eps) {
  for (int a = 0; a + 1 < s.size(); ++a)
    if (eps.same_block(a, a + 1) && s(a) > s(a + 1)) return false;
  return true;
}

/// Integral mu-point with the top row identically zero (an element of Z^mu_0).
class IntegralPoint {
 public:
  IntegralPoint() = default;
  explicit IntegralPoint(int n) : n_(n) { check_rank(n); }

  /// From all entries row by row; the top row must be zero.
  static IntegralPoint from_flat(int n, const std::vector<int>& entries) {
    IntegralPoint z(n);
    if (static_cast<int>(entries.size()) != gtkit::num_entries(n))
      throw std::invalid_argument("integral point has wrong number of entries");
    for (int a = 0; a < gtkit::num_entries(n); ++a) z.values_[static_cast<std::size_t>(a)] = entries[static_cast<std::size_t>(a)];
    for (int i = 1; i <= n; ++i)
      if (z.at(n, i) != 0) throw std::invalid_argument("integral points must have a zero top row");
    return z;
  }

  /// delta^{k,i}; k < n.
  static IntegralPoint delta(int n, int k, int i) {
    if (k >= n) throw std::invalid_argument("delta^{k,i} needs k < n");
    IntegralPoint z(n);
    z.values_[static_cast<std::size_t>(VarIndex{k, i}.flat())] = 1;
    return z;
  }

  int rank() const { return n_; }
  int num_entries() const { return gtkit::num_entries(n_); }
  int operator[](int flat) const { return values_[static_cast<std::size_t>(flat)]; }
  int at(int k, int i) const { return values_[static_cast<std::size_t>(VarIndex{k, i}.flat())]; }
  void set(int k, int i, int value) {
    if (k == n_ && value != 0) throw std::invalid_argument("integral points must have a zero top row");
    values_[static_cast<std::size_t>(VarIndex{k, i}.flat())] = value;
  }

  std::vector<int> flat() const { return {values_.begin(), values_.begin() + num_entries()}; }

  int max_abs() const {
    int m = 0;
    for (int a = 0; a < num_entries(); ++a) m = std::max(m, std::abs(values_[static_cast<std::size_t>(a)]));
    return m;
  }

  friend IntegralPoint operator+(IntegralPoint a, const IntegralPoint& b) {
    for (int f = 0; f < a.num_entries(); ++f) a.values_[static_cast<std::size_t>(f)] += b.values_[static_cast<std::size_t>(f)];
    return a;
  }
  friend IntegralPoint operator-(IntegralPoint a, const IntegralPoint& b) {
    for (int f = 0; f < a.num_entries(); ++f) a.values_[static_cast<std::size_t>(f)] -= b.values_[static_cast<std::size_t>(f)];
    return a;
  }
  IntegralPoint operator-() const { return IntegralPoint(n_) - *this; }

  friend bool operator==(const IntegralPoint&, const IntegralPoint&) = default;
  friend auto operator<=>(const IntegralPoint&, const IntegralPoint&) = default;

  std::string to_string() const {
    std::string s;
    for (int k = n_; k >= 1; --k) {
      s += "[";
      for (int i = 1; i <= k; ++i) s += (i > 1 ? "," : "") + std::to_string(at(k, i));
      s += "]";
    }
    return s;
  }

 private:
  int n_ = 1;
  std::array<int, kMaxVars> values_{};
};

/// s(z): s(z)_{s(a)} = z_a.
inline IntegralPoint act(const Permutation& s, const IntegralPoint& z) {
  std::vector<int> out(static_cast<std::size_t>(z.num_entries()));
  for (int a = 0; a < z.num_entries(); ++a) out[static_cast<std::size_t>(s(a))] = z[a];
  return IntegralPoint::from_flat(z.rank(), out);
}

/// z lies in N_eta: every eta-block is weakly descending.
inline bool in_normal_form(const IntegralPoint& z, const Refinement& eta) {
  for (int a = 0; a + 1 < z.num_entries(); ++a)
    if (eta.same_block(a, a + 1) && z[a] < z[a + 1]) return false;
  return true;
}

struct NormalForm {
  IntegralPoint rep;
  Permutation sigma;  // sigma(rep) = z
};

/// The unique N_eta point in the S_eta-orbit of z and the minimal-length sigma
/// with sigma(rep) = z (ties in z keep their relative order).
inline NormalForm normal_form(const IntegralPoint& z, const Refinement& eta) {
  if (eta.rank() != z.rank()) throw std::invalid_argument("normal_form: rank mismatch");
  std::vector<int> rep(static_cast<std::size_t>(z.num_entries()));
  std::vector<int> sigma(rep.size());
  for (const auto& b : eta.blocks()) {
    std::vector<int> pos(static_cast<std::size_t>(b.size));
    std::iota(pos.begin(), pos.end(), b.start);
    std::stable_sort(pos.begin(), pos.end(), [&](int p, int q) { return z[p] > z[q]; });
    for (int j = 0; j < b.size; ++j) {
      rep[static_cast<std::size_t>(b.start + j)] = z[pos[static_cast<std::size_t>(j)]];
      sigma[static_cast<std::size_t>(b.start + j)] = pos[static_cast<std::size_t>(j)];
    }
  }
  return {IntegralPoint::from_flat(z.rank(), rep), Permutation::from_one_line(eta, sigma)};
}

/// eps(z): maximal runs of equal entries inside each eta-block, so that
/// st(z) = S_eps. Requires z in N_eta.
inline Refinement stabilizer_refinement(const IntegralPoint& z, const Refinement& eta) {
  if (!in_normal_form(z, eta)) throw NotInNormalForm("stabilizer_refinement: " + z.to_string() + " is not in N_eta");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(eta.rank()));
  for (const auto& b : eta.blocks()) {
    auto& row = rows[static_cast<std::size_t>(b.row - 1)];
    int run = 1;
    for (int j = 1; j < b.size; ++j) {
      if (z[b.start + j] == z[b.start + j - 1]) ++run;
      else {
        row.push_back(run);
        run = 1;
      }
    }
    row.push_back(run);
  }
  return Refinement(std::move(rows));
}

}  // namespace gtkit

#endif  // GTKIT_SYMCOMB_HPP
