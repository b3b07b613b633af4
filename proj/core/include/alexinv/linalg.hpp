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

#ifndef ALEXINV_LINALG_HPP
#define ALEXINV_LINALG_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "alexinv/rational.hpp"

namespace alexinv {

// Incremental exact Gaussian elimination over Q on sparse rows indexed by an
// ordered key type. The leading entry of a row is its smallest key, so with a
// graded key order the leading entry is the lowest-degree term; that is what
// the filtration computations rely on.
//
// Stored pivot rows are normalized to leading coefficient 1 and have pairwise
// distinct leading keys. normal_form() is the division-style reduction: it is
// linear, idempotent, and canonical for a fixed insertion history (any element
// of the row span reduces to zero; the reduction of v is supported on
// non-pivot keys only).
template <class Key, class Less>
class SparseEchelon {
 public:
  using Row = std::map<Key, Rational, Less>;

  explicit SparseEchelon(Less less = Less{}) : less_(less), pivots_(less) {}

  std::size_t rank() const { return pivots_.size(); }

  // target += c * source
  static void axpy(Row& target, const Rational& c, const Row& source) {
    for (const auto& [k, v] : source) {
      auto it = target.find(k);
      if (it == target.end()) {
        target.emplace(k, c * v);
      } else {
        it->second += c * v;
        if (it->second == 0) target.erase(it);
      }
    }
  }

  Row normal_form(Row r) const {
    Row out(less_);
    while (!r.empty()) {
      auto lead = r.begin();
      auto pivot = pivots_.find(lead->first);
      if (pivot == pivots_.end()) {
        out.insert(r.extract(lead));
      } else {
        Rational c = -lead->second;
        axpy(r, c, pivot->second);  // clears the leading entry
      }
    }
    return out;
  }

  bool reduces_to_zero(const Row& r) const { return normal_form(r).empty(); }

  // Reduces r and, if anything is left, installs it as a new pivot.
  // Returns true iff the rank grew.
  bool insert(Row r) {
    Row nf = normal_form(std::move(r));
    if (nf.empty()) return false;
    Rational lead = nf.begin()->second;
    if (lead != 1) {
      for (auto& [k, v] : nf) v /= lead;
    }
    Key key = nf.begin()->first;
    pivots_.emplace(std::move(key), std::move(nf));
    return true;
  }

  const std::map<Key, Row, Less>& pivots() const { return pivots_; }

 private:
  Less less_;
  std::map<Key, Row, Less> pivots_;
};

}  // namespace alexinv

#endif  // ALEXINV_LINALG_HPP
