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

#ifndef ALEXINV_SYMREP_HPP
#define ALEXINV_SYMREP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alexinv/fox.hpp"
#include "alexinv/rational.hpp"

namespace alexinv {

// Dominant weight for the rank-g symplectic Lie algebra, stored as
// nonnegative coefficients of the fundamental weights lambda_1..lambda_g
// with lambda_i = e_1 + ... + e_i. The coordinate form is weakly decreasing
// and nonnegative exactly when the coefficients are nonnegative.
struct DominantWeight {
  int genus;
  std::vector<int> fund;  // length g

  std::vector<int> coords() const;
  bool dominant() const;
  std::string to_string() const;  // e.g. "2*l1+l2"
  friend bool operator==(const DominantWeight&,
                         const DominantWeight&) = default;
};

DominantWeight fundamental_weight(int genus, int k, int coefficient = 1);
DominantWeight weight_sum(const DominantWeight& a, const DominantWeight& b);

// dim V(lambda) by the Weyl dimension formula: the product over the positive
// roots {e_i - e_j, e_i + e_j (i < j), 2 e_i} of <lambda+rho, alpha> /
// <rho, alpha>, with rho = (g, g-1, ..., 1). Exact integer.
long weyl_dim(const DominantWeight& lambda);

// Basis letters of H: a_i has id i-1, b_i has id g+i-1, matching the
// variable indexing of LaurentPoly. Weight of a_i is +e_i, of b_i is -e_i.
// A tensor is an exact-rational element of Sym^n(H) (x) Lambda^2 H in the
// canonical monomial basis: symmetric exponent vector plus an ordered wedge
// pair with antisymmetry normalized.
class TensorElement {
 public:
  // sym exponent over the 2g letters (sum = sym_degree), wedge pair p < q.
  struct Key {
    ExpVec sym;
    int p;
    int q;
    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using TermMap = std::map<Key, Rational>;

  TensorElement(int genus, int sym_degree);
  static TensorElement basis(int genus, const ExpVec& sym, int p, int q,
                             const Rational& c = 1);

  int genus() const { return genus_; }
  int sym_degree() const { return sym_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& t);
  TensorElement& operator-=(const TensorElement& t);
  friend TensorElement operator+(TensorElement a, const TensorElement& b);
  friend TensorElement operator-(TensorElement a, const TensorElement& b);
  friend TensorElement operator*(const Rational& c, TensorElement t);
  friend bool operator==(const TensorElement&,
                         const TensorElement&) = default;

  // Multiply the symmetric factor by the letter with the given id.
  TensorElement sym_multiply(int letter) const;

  void add_term(const ExpVec& sym, int p, int q, const Rational& c);

 private:
  int genus_;
  int sym_degree_;
  TermMap terms_;
};

// 1 (x) theta with theta = sum_i a_i ^ b_i, the symplectic form.
TensorElement symplectic_form_tensor(int genus);

// Chevalley-style generators: Cartan h_i, simple raisings X_i (root
// e_i - e_{i+1} for i < g, root 2e_g for i = g), and the opposite lowerings.
// Sign conventions on the b-letters are fixed by the infinitesimal
// invariance of the symplectic form, omega(Xu, v) + omega(u, Xv) = 0.
enum class SpGenKind { cartan, raise, lower };

struct SpGenerator {
  SpGenKind kind;
  int index;  // 1..g
};

// Derivation extension of the defining action to Sym^n (x) Lambda^2.
TensorElement sp_act(const SpGenerator& x, const TensorElement& t);

// True iff t is nonzero, has weight lambda under every Cartan generator, and
// is annihilated by all g simple raisings. Throws on zero input.
bool verify_highest_weight(const TensorElement& t,
                           const DominantWeight& lambda);

struct Summand {
  DominantWeight weight;
  int multiplicity;
  long dim;
};

struct DecompositionReport {
  std::vector<Summand> summands;
  long total = 0;
  long ambient = 0;
  bool pass = false;
};

// The highest weight decomposition of Sym^n(H) (x) Lambda^2 H, checked by
// the dimension identity sum mult*dim = C(2g+n-1, n) * g(2g-1).
DecompositionReport decomposition_check(int genus, int n);

// The classical catalog of highest weight vectors in Sym^n(H) (x) Lambda^2 H
// (those whose formulas make sense for the given g and n), paired with their
// weights. The first entry is always a_1^n (x) a_1 ^ a_2.
std::vector<std::pair<TensorElement, DominantWeight>> highest_weight_catalog(
    int genus, int n);

// The grading map into the Alexander module: the linear extension of
//   monomial (x) y^z  |->  prod_i (x_i - 1)^{n_i} * class([y, z]).
AlexVector grading_map(const TensorElement& t);

std::string to_string(const TensorElement& t);

}  // namespace alexinv

#endif  // ALEXINV_SYMREP_HPP
