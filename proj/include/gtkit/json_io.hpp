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

// Canonical JSON forms of the library's values. Every number is an exact
// string ("p/q"); reading back what was written gives an identical value.
// Needs nlohmann/json (vendor/json.hpp) on the include path.

#ifndef GTKIT_JSON_IO_HPP
#define GTKIT_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "gtmodule.hpp"
#include "param_scalar.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"
#include "symcomb.hpp"

namespace gtkit {

/// Malformed or ill-typed JSON input.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error("InputError", what) {}
};

namespace io {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "expected an exact rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline int int_from(const Json& j) {
  require(j.is_number_integer(), "expected an integer, got " + j.dump());
  return j.get<int>();
}

inline int transcendental_index(const std::string& name) {
  require(name.size() >= 2 && name[0] == 't', "transcendental names are t1, t2, ...; got '" + name + "'");
  int idx = 0;
  for (std::size_t c = 1; c < name.size(); ++c) {
    require(name[c] >= '0' && name[c] <= '9', "bad transcendental name '" + name + "'");
    idx = idx * 10 + (name[c] - '0');
    require(idx <= kMaxVars, "transcendental index out of range in '" + name + "'");
  }
  require(idx >= 1, "transcendental indices start at 1");
  return idx - 1;
}

// Rows of a triangular array, accepted top row first or bottom row first.
inline std::vector<Json> rows_bottom_up(const Json& j) {
  const Json& rows = j.is_object() && j.contains("rows") ? j.at("rows") : j;
  require(rows.is_array() && !rows.empty(), "expected a non-empty array of rows");
  const int n = static_cast<int>(rows.size());
  require(n <= kMaxRank, "rank exceeds " + std::to_string(kMaxRank));
  std::vector<Json> out(rows.begin(), rows.end());
  if (n > 1 && out.front().is_array() && static_cast<int>(out.front().size()) == n) std::reverse(out.begin(), out.end());
  for (int k = 1; k <= n; ++k)
    require(out[static_cast<std::size_t>(k - 1)].is_array() && static_cast<int>(out[static_cast<std::size_t>(k - 1)].size()) == k,
            "row lengths must be 1, ..., n (in either order)");
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars

inline Json to_json(const Rational& q) { return format_rational(q); }

/// {"rat":"p/q","sym":{"t1":"c1",...}}.
inline Json to_json(const ParamScalar& s) {
  Json sym = Json::object();
  for (const auto& [j, c] : s.transcendental_part()) sym[transcendental_name(j)] = format_rational(c);
  return Json{{"rat", format_rational(s.rational_part())}, {"sym", sym}};
}

/// Also accepts a bare "p/q" string or an integer for rational entries.
inline ParamScalar scalar_from_json(const Json& j) {
  if (!j.is_object()) return ParamScalar(detail::rational_from(j));
  for (const auto& [key, value] : j.items())
    detail::require(key == "rat" || key == "sym", "unknown key '" + key + "' in a scalar");
  const Rational q = j.contains("rat") ? detail::rational_from(j.at("rat")) : Rational(0);
  std::vector<std::pair<int, Rational>> sym;
  if (j.contains("sym")) {
    detail::require(j.at("sym").is_object(), "\"sym\" must be an object");
    for (const auto& [name, c] : j.at("sym").items()) sym.emplace_back(detail::transcendental_index(name), detail::rational_from(c));
  }
  return ParamScalar::from_parts(q, std::move(sym));
}

// ---------------------------------------------------------------------------
// Polynomials and fractions

/// [[exponent vector, "coefficient"], ...] in the polynomial's term order.
/// Exponent vectors have length max_variable() + 1.
inline Json to_json(const Polynomial& p) {
  Json out = Json::array();
  const int nv = p.max_variable() + 1;
  for (const auto& t : p.terms()) {
    Json e = Json::array();
    for (int v = 0; v < nv; ++v) e.push_back(t.monomial.exponent(v));
    out.push_back(Json::array({e, format_rational(t.coefficient.rational())}));
  }
  return out;
}

inline Polynomial polynomial_from_json(const Json& j) {
  detail::require(j.is_array(), "a polynomial is an array of [exponents, coefficient] pairs");
  std::vector<Term> terms;
  for (const auto& t : j) {
    detail::require(t.is_array() && t.size() == 2 && t[0].is_array(), "bad polynomial term " + t.dump());
    detail::require(t[0].size() <= static_cast<std::size_t>(kMaxVars), "too many variables in " + t.dump());
    Monomial m;
    for (std::size_t v = 0; v < t[0].size(); ++v) {
      const int e = detail::int_from(t[0][v]);
      detail::require(e >= 0 && e <= 255, "exponent out of range in " + t.dump());
      m.set_exponent(static_cast<int>(v), static_cast<unsigned>(e));
    }
    terms.push_back({m, detail::rational_from(t[1])});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// {"num": polynomial, "den": [[k,i,k',i',m], ...]} for the factors
/// x_{k,i} - x_{k',i'} - m.
inline Json to_json(const RationalFunction& f) {
  Json den = Json::array();
  for (const auto& d : f.denominator()) {
    const VarIndex a = VarIndex::from_flat(d.first), b = VarIndex::from_flat(d.second);
    den.push_back(Json::array({a.k, a.i, b.k, b.i, d.shift}));
  }
  return Json{{"num", to_json(f.numerator())}, {"den", den}};
}

inline RationalFunction rational_function_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("num") && j.contains("den"), "a rational function needs \"num\" and \"den\"");
  std::vector<std::array<int, 3>> factors;
  for (const auto& d : j.at("den")) {
    detail::require(d.is_array() && d.size() == 5, "denominator factors are [k,i,k',i',m]");
    const int k = detail::int_from(d[0]), i = detail::int_from(d[1]), k2 = detail::int_from(d[2]), i2 = detail::int_from(d[3]);
    detail::require(k >= 1 && i >= 1 && i <= k && k2 >= 1 && i2 >= 1 && i2 <= k2 && VarIndex{k, i}.flat() < kMaxVars &&
                        VarIndex{k2, i2}.flat() < kMaxVars,
                    "bad variable in factor " + d.dump());
    factors.push_back({VarIndex{k, i}.flat(), VarIndex{k2, i2}.flat(), detail::int_from(d[4])});
  }
  try {
    return RationalFunction::make(polynomial_from_json(j.at("num")), factors);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

/// {"num": polynomial in the transcendentals, "den": [scalar, ...]}.
inline Json to_json(const ParamFraction& f) {
  Json den = Json::array();
  for (const auto& d : f.denominator()) den.push_back(to_json(d));
  return Json{{"num", to_json(f.numerator())}, {"den", den}};
}

inline ParamFraction param_fraction_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("num") && j.contains("den"), "a fraction needs \"num\" and \"den\"");
  std::vector<ParamScalar> den;
  for (const auto& d : j.at("den")) den.push_back(scalar_from_json(d));
  return ParamFraction::make(polynomial_from_json(j.at("num")), std::move(den));
}

// ---------------------------------------------------------------------------
// Combinatorial data

/// Compositions per row, row 1 first.
inline Json to_json(const Refinement& eta) { return eta.to_vectors(); }

inline Refinement refinement_from_json(const Json& j) {
  detail::require(j.is_array(), "a refinement is an array of compositions");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) {
    detail::require(r.is_array(), "a refinement is an array of compositions");
    std::vector<int> row;
    for (const auto& c : r) row.push_back(detail::int_from(c));
    rows.push_back(std::move(row));
  }
  try {
    return Refinement(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

/// One-line notation on the flat entry indices, 1-based.
inline Json to_json(const Permutation& s) {
  Json out = Json::array();
  for (int b : s.one_line()) out.push_back(b + 1);
  return out;
}

inline Json to_json(const IntegralPoint& z) {
  Json rows = Json::array();
  for (int k = z.rank(); k >= 1; --k) {
    Json row = Json::array();
    for (int i = 1; i <= k; ++i) row.push_back(z.at(k, i));
    rows.push_back(row);
  }
  return rows;
}

/// Rows of integers (either orientation, optionally under "rows"); the top row must be zero.
inline IntegralPoint integral_point_from_json(const Json& j) {
  const auto rows = detail::rows_bottom_up(j);
  const int n = static_cast<int>(rows.size());
  IntegralPoint z(n);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      const int value = detail::int_from(rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)]);
      detail::require(k < n || value == 0, "integral points have a zero top row");
      z.set(k, i, value);
    }
  return z;
}

/// {"rows": [[top row], ..., [v11]]}.
inline Json to_json(const Tableau& v) {
  Json rows = Json::array();
  for (int k = v.n; k >= 1; --k) {
    Json row = Json::array();
    for (int i = 1; i <= k; ++i) row.push_back(to_json(v.at(k, i)));
    rows.push_back(row);
  }
  return Json{{"rows", rows}};
}

inline Tableau tableau_from_json(const Json& j) {
  const auto rows = detail::rows_bottom_up(j);
  Tableau v{static_cast<int>(rows.size()), {}};
  for (const auto& row : rows)
    for (const auto& e : row) v.entries.push_back(scalar_from_json(e));
  return v;
}

/// Parses JSON text, reporting syntax errors as InputError.
inline Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

}  // namespace io
}  // namespace gtkit

#endif  // GTKIT_JSON_IO_HPP
