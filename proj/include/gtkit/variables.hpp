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

#ifndef GTKIT_VARIABLES_HPP
#define GTKIT_VARIABLES_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include "polynomial.hpp"

namespace gtkit {

/// Largest rank supported by the packed variable encoding: n(n+1)/2 <= kMaxVars.
inline constexpr int kMaxRank = 5;

/// Index (k,i), 1 <= i <= k, of the tableau entry x_{k,i}. Rows are stored
/// consecutively, so the flat index is k(k-1)/2 + i - 1 and the flat order is
/// the lexicographic order on (k,i).
struct VarIndex {
  int k = 1;
  int i = 1;

  constexpr int flat() const { return k * (k - 1) / 2 + (i - 1); }

  static VarIndex from_flat(int f) {
    int k = 1;
    while ((k * (k + 1)) / 2 <= f) ++k;
    return {k, f - k * (k - 1) / 2 + 1};
  }

  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

constexpr int num_entries(int n) { return n * (n + 1) / 2; }
constexpr int row_start(int k) { return k * (k - 1) / 2; }

inline void check_rank(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank n must lie in 1.." + std::to_string(kMaxRank));
}

/// The variable x_{k,i} as a polynomial.
inline Polynomial x(int k, int i) { return Polynomial::variable(VarIndex{k, i}.flat()); }

inline std::string var_name(int flat) {
  const VarIndex v = VarIndex::from_flat(flat);
  return "x" + std::to_string(v.k) + std::to_string(v.i);
}

inline std::string transcendental_name(int idx) { return "t" + std::to_string(idx + 1); }

}  // namespace gtkit

#endif  // GTKIT_VARIABLES_HPP
