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

#ifndef ALEXINV_MAPCLASS_HPP
#define ALEXINV_MAPCLASS_HPP

#include <utility>
#include <vector>

#include "alexinv/fox.hpp"
#include "alexinv/words.hpp"

namespace alexinv {

// Dehn twist on the separating curve enclosing the first h handles, realized
// as the conjugation endomorphism by c_h = [a_1,b_1]...[a_h,b_h] on
// a_1..a_h, b_1..b_h and the identity on the rest. The derived images fix
// homology pointwise and send the surface relator to a conjugate of itself;
// both properties are checked at construction.
struct TwistSpec {
  int genus;
  int handles;
  FreeWord curve;  // c_h
  EndoImages endo;
};

TwistSpec separating_twist(int genus, int handles);

// True iff the image of the surface relator is conjugate to the relator,
// detected by cyclic reduction and rotation matching.
bool maps_relator_to_conjugate(const EndoImages& e);

// alexander_class(e([u,v])) - alexander_class([u,v]), in Theta normal form.
// Requires e to fix homology.
AlexVector twist_difference(const EndoImages& e, const FreeWord& u,
                            const FreeWord& v);

// Exploratory probe of the span of twist differences inside the J-adic
// filtration. Reports, for each difference, its valuation (certified at m
// and m+1), and for each n <= max_n how much of the collective span lies
// outside the truncated n-th filtration layer. Evidence only: finite probing
// cannot decide whether the twist-difference span equals a filtration layer.
struct ProbeEntry {
  int twist_handles;
  FreeWord u;
  FreeWord v;
  bool zero;       // difference vanishes mod Theta
  int valuation;   // capped at max_n
};

struct ProbeReport {
  int genus;
  int max_n;
  int truncation;
  std::vector<ProbeEntry> entries;
  // added_rank[n] = rank the differences add over the truncated span of
  // J^n A + (Theta), n = 0..max_n+1. Zero entries through n confirm
  // containment in J^n A; the first nonzero entry locates the span.
  std::vector<int> added_rank;
};

ProbeReport kg1_probe(int genus, const std::vector<TwistSpec>& twists,
                      const std::vector<std::pair<FreeWord, FreeWord>>& pairs,
                      int max_n, int m);

}  // namespace alexinv

#endif  // ALEXINV_MAPCLASS_HPP
