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

#ifndef ALEXINV_MAGNUS_HPP
#define ALEXINV_MAGNUS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "alexinv/rational.hpp"
#include "alexinv/words.hpp"

namespace alexinv {

// Noncommutative monomial in X_1..X_{2g}: the sequence of letter indices.
using NcWord = std::vector<std::uint8_t>;

// Degree first, then lex: the leading term of a series under this order is
// its lowest-degree monomial.
struct NcWordLess {
  bool operator()(const NcWord& a, const NcWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Exact-rational noncommutative polynomial in X_1..X_{2g}, truncated below
// the degree bound. Carrier for Magnus expansions and graded Lie
// computations.
class TruncatedSeries {
 public:
  using TermMap = std::map<NcWord, Rational, NcWordLess>;

  TruncatedSeries(int genus, int bound);
  static TruncatedSeries one(int genus, int bound);
  static TruncatedSeries letter(int genus, int bound, int index);  // X_index
  static TruncatedSeries monomial(int genus, int bound, const NcWord& w,
                                  const Rational& c);

  int genus() const { return genus_; }
  int bound() const { return bound_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TruncatedSeries& operator+=(const TruncatedSeries& q);
  TruncatedSeries& operator-=(const TruncatedSeries& q);
  friend TruncatedSeries operator+(TruncatedSeries a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s);
  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

  TruncatedSeries degree_component(int d) const;
  // Least degree of a nonzero term, or bound() if none.
  int min_degree() const;

 private:
  void add_term(const NcWord& w, const Rational& c);

  int genus_;
  int bound_;
  TermMap terms_;
};

// a*b - b*a
TruncatedSeries bracket(const TruncatedSeries& a, const TruncatedSeries& b);

// Magnus expansion mu(w) truncated below degree `bound`: multiplicative,
// with mu(x_i) = 1 + X_i and mu(x_i^-1) the truncated geometric series.
TruncatedSeries magnus_expand(const FreeWord& w, int bound);

// Depth of w in the lower central series of the free group, capped at
// `bound`: the least degree of a nonzero term of mu(w) - 1, or `bound` if
// none (Magnus's theorem).
int free_lcs_depth(const FreeWord& w, int bound);

// Reduction data for the surface group at a fixed genus and degree bound:
// the span of the truncated two-sided ideal generated by the Magnus
// expansion of the surface relator minus one (whose lowest-degree part is
// the symplectic tensor omega = sum_i [X_i, X_{g+i}]), in echelon form by
// graded leading monomial. reduce() is the canonical linear projection along
// that ideal; a word maps to 1 in the pro-unipotent surface group iff its
// expansion reduces to 1.
class SurfaceAlgebra {
 public:
  SurfaceAlgebra(int genus, int bound);

  int genus() const { return genus_; }
  int bound() const { return bound_; }

  TruncatedSeries reduce(const TruncatedSeries& s) const;
  // Least degree of a nonzero term of reduce(mu(w) - 1), or bound() if none.
  int depth(const FreeWord& w) const;
  // Number of echelon pivots whose leading monomial has each degree
  // 0..bound-1. Comparing (2g)^d minus these counts against the coefficients
  // of 1/(1 - 2g t + t^2) certifies that the ideal has the expected graded
  // ranks through the truncation, which is what makes depth decisions
  // faithful.
  std::vector<int> pivot_counts_by_degree() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  int genus_;
  int bound_;
};

// Shared per-(genus, bound) reduction data; built once, then reused.
const SurfaceAlgebra& surface_algebra(int genus, int bound);

// Canonical representative modulo the surface relation ideal. Idempotent
// linear projection commuting with the degree filtration.
TruncatedSeries surface_reduce(const TruncatedSeries& s);

// Depth of w in the lower central series of the surface group, capped at
// `bound`; rational detection is faithful because the lower central
// quotients are torsion-free.
int surface_lcs_depth(const FreeWord& w, int bound);

// dim of the degree-n part of the graded Lie algebra of the surface group
// (tensored with Q) for n = 1..max_degree, computed as the Lyndon-basis
// dimension of the free Lie algebra minus the rank of the Lie ideal
// generated by omega.
std::vector<long> graded_lie_dims(int genus, int max_degree);

// Independent oracle for the same dimensions, derived from the Poincare
// series 1/(1 - 2g t + t^2) of the enveloping algebra by the standard
// infinite-product inversion.
std::vector<long> lie_dims_from_series(int genus, int max_degree);

// Lyndon words over an alphabet {1..alphabet} of exact length `length`,
// in lexicographic order (Duval's algorithm).
std::vector<std::vector<int>> lyndon_words(int alphabet, int length);

// Johnson homomorphism value of e at filtration level n: for each generator
// x, the degree-(n+1) component of the reduced expansion of e(x) x^-1.
// Requires e to fix homology and bound >= n+2. The value is meaningful when
// johnson_depth(e) >= n.
std::map<int, TruncatedSeries> johnson_tau(const EndoImages& e, int n,
                                           int bound);

// Largest n < bound such that every generator x has
// surface_lcs_depth(e(x) x^-1) >= n+1; the Johnson filtration level of e,
// capped at bound-1.
int johnson_depth(const EndoImages& e, int bound);

std::string to_string(const TruncatedSeries& s);

}  // namespace alexinv

#endif  // ALEXINV_MAGNUS_HPP
