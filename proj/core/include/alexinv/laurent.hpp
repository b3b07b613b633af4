/* Copyright 2026 The alexinv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef ALEXINV_LAURENT_HPP
#define ALEXINV_LAURENT_HPP

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alexinv/rational.hpp"

namespace alexinv {

// Exponent vector of a (Laurent) monomial in 2g commuting variables.
using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic order on exponent vectors: total degree first, then
// lex. Gives every polynomial a canonical term order and the filtration
// computations a deterministic pivot order.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Element of the rational group algebra of Z^{2g}: an exact-rational Laurent
// polynomial in x_1..x_{2g}. Terms are stored canonically (no zero
// coefficients, no duplicate monomials, grlex order). Pure value type.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexLess>;

  explicit LaurentPoly(int genus);
  static LaurentPoly constant(int genus, const Rational& c);
  static LaurentPoly monomial(int genus, const ExpVec& exp, const Rational& c);
  // x_j^power, index 1..2g
  static LaurentPoly variable(int genus, int index, int power = 1);

  int genus() const { return genus_; }
  int nvars() const { return 2 * genus_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& p);
  LaurentPoly& operator-=(const LaurentPoly& p);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(const ExpVec& exp, const Rational& c);

  int genus_;
  TermMap terms_;
};

// Sum of coefficients: evaluation at all x_i = 1. Ring homomorphism onto Q;
// its kernel is the augmentation ideal J.
Rational augmentation(const LaurentPoly& p);

// Truncated expansion in the shifted coordinates y_i = x_i - 1: a polynomial
// with nonnegative exponents, all total degrees < bound. The coordinates
// identify J^n/J^{n+1} with the degree-n symmetric power, which is what makes
// least-degree-of-expansion a J-adic valuation.
class ShiftedTruncation {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexLess>;

  ShiftedTruncation(int genus, int bound);
  static ShiftedTruncation monomial(int genus, int bound, const ExpVec& exp,
                                    const Rational& c);

  int genus() const { return genus_; }
  int bound() const { return bound_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ShiftedTruncation& operator+=(const ShiftedTruncation& q);
  friend ShiftedTruncation operator+(ShiftedTruncation a,
                                     const ShiftedTruncation& b);
  friend ShiftedTruncation operator*(const ShiftedTruncation& a,
                                     const ShiftedTruncation& b);
  friend ShiftedTruncation operator*(const Rational& c, ShiftedTruncation p);
  friend bool operator==(const ShiftedTruncation&,
                         const ShiftedTruncation&) = default;

  // Least total degree of a nonzero term, or bound() if none.
  int min_degree() const;

 private:
  void add_term(const ExpVec& exp, const Rational& c);

  int genus_;
  int bound_;
  TermMap terms_;
};

// Expansion of p in the coordinates y_i = x_i - 1, truncated below degree
// `bound`; inverse generators expand as truncated geometric series. Additive
// and multiplicative modulo degree `bound`.
ShiftedTruncation shifted_expand(const LaurentPoly& p, int bound);

// Largest n <= bound with p in J^n, i.e. the least total degree of a nonzero
// term of shifted_expand(p, bound), with `bound` meaning ">= bound".
int j_valuation(const LaurentPoly& p, int bound);

// Exact division of p by (1 - x_index); empty when not divisible. Division
// by this binomial is how multiples of the relator vector are recognized.
std::optional<LaurentPoly> divide_by_one_minus(const LaurentPoly& p,
                                               int index);

// Substitute x_index = 1.
LaurentPoly evaluate_at_one(const LaurentPoly& p, int index);

// Polynomial expression syntax for the CLI and tests, e.g.
//   (x1-1)*(x2-1)*x3^-1 + 2
// with aliases a<i>, b<i> as in the word syntax and rational literals p/q.
LaurentPoly parse_poly(int genus, std::string_view text);
std::string to_string(const LaurentPoly& p);
std::string to_string(const ShiftedTruncation& p);

}  // namespace alexinv

#endif  // ALEXINV_LAURENT_HPP
