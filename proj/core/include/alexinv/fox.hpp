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

#ifndef ALEXINV_FOX_HPP
#define ALEXINV_FOX_HPP

#include <optional>
#include <vector>

#include "alexinv/laurent.hpp"
#include "alexinv/words.hpp"

namespace alexinv {

// Coordinate vector in the free module (QH)^{2g} against the standard basis
// e_1..e_{2g}. Vectors produced by alexander_class satisfy the kernel
// condition sum_j entry_j * (x_j - 1) = 0 and are considered modulo the
// relator vector Theta.
class AlexVector {
 public:
  explicit AlexVector(int genus);
  AlexVector(int genus, std::vector<LaurentPoly> entries);

  int genus() const { return genus_; }
  const LaurentPoly& entry(int index) const;  // index 1..2g
  const std::vector<LaurentPoly>& entries() const { return entries_; }
  bool is_zero() const;

  AlexVector& operator+=(const AlexVector& v);
  AlexVector& operator-=(const AlexVector& v);
  friend AlexVector operator+(AlexVector a, const AlexVector& b);
  friend AlexVector operator-(AlexVector a, const AlexVector& b);
  AlexVector operator-() const;
  friend bool operator==(const AlexVector&, const AlexVector&) = default;

 private:
  int genus_;
  std::vector<LaurentPoly> entries_;
};

// Fox derivative D_j(w), defined by D_i(x_j) = delta_ij and the twisted
// product rule D_i(uv) = D_i(u) + phi(u) D_i(v); the inverse rule
// D_j(x^-1) = -phi(x)^-1 D_j(x) follows from applying the product rule to
// x x^-1 = 1.
LaurentPoly fox_derivative(int index, const FreeWord& w);

// The full row (D_1(w), ..., D_{2g}(w)). Satisfies the fundamental identity
// sum_j D_j(w) (x_j - 1) = phi(w) - 1.
AlexVector fox_vector(const FreeWord& w);

// The monomial x^{abelianize(w)}.
LaurentPoly abelianization_monomial(const FreeWord& w);

// The relator vector: entries (1 - x_{g+j}) at position j and -(1 - x_j) at
// position g+j, for j = 1..g. Equals fox_vector(surface_relator(g)).
AlexVector theta_relator(int genus);

// Class of w in the Alexander module: fox_vector(w), to be read modulo
// Theta. Requires abelianize(w) = 0; throws std::invalid_argument otherwise.
AlexVector alexander_class(const FreeWord& w);

// Witness r with v = r * Theta, or empty if v is not a multiple of Theta.
// Decided by exact division of entry 1 by (1 - x_{g+1}) followed by
// verification against all entries.
std::optional<LaurentPoly> theta_multiple_witness(const AlexVector& v);
bool is_multiple_of_theta(const AlexVector& v);

// True iff u == v modulo the submodule generated by Theta.
bool equal_mod_theta(const AlexVector& u, const AlexVector& v);

// Canonical representative of v modulo Theta: the unique v - r*Theta whose
// first entry does not involve x_{g+1}.
AlexVector theta_normal_form(const AlexVector& v);

// Module action of QH: entrywise multiplication.
AlexVector module_scalar(const LaurentPoly& p, const AlexVector& v);

// The (2g choose 2) vectors fox_vector([x_i, x_j]), i < j. They generate the
// kernel submodule realizing the Alexander module, because the elements
// x_1 - 1, ..., x_{2g} - 1 form a regular sequence in the Laurent ring.
std::vector<AlexVector> koszul_generators(int genus);

// dim over Q of J^n A / J^{n+1} A computed by exact linear algebra on
// shifted-truncated expansions at bound m (requires m >= n + 2). The result
// is computed at both m and m+1 and must agree; otherwise
// TruncationUnstable is thrown. Silent undertruncation is impossible.
int graded_dimension(int genus, int n, int m);

// Largest n <= max_n with v in the truncated span of J^n A (plus Theta
// multiples), max_n meaning ">= max_n". Certified at m and m+1 like
// graded_dimension. Throws std::invalid_argument if v is not even in the
// truncated module span.
int a_valuation(const AlexVector& v, int max_n, int m);

// Membership of v in the truncated span of J^n A + (Theta) at bound m.
// Single-truncation query; the certified entry points above are preferred.
bool in_jadic_span(const AlexVector& v, int n, int m);

// Rank added by adjoining the given vectors to the truncated span of
// J^n A + (Theta) at bound m: how much of the collection sticks out of the
// n-th filtration layer.
int added_rank_over_jadic(const std::vector<AlexVector>& vs, int n, int m);

// Default truncation bound for degree-n questions.
inline int default_truncation(int n) { return n + 3; }

}  // namespace alexinv

#endif  // ALEXINV_FOX_HPP
