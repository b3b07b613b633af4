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

#include "alexinv/mapclass.hpp"

#include <stdexcept>

namespace alexinv {

TwistSpec separating_twist(int genus, int handles) {
  if (genus < 2)
    throw std::invalid_argument("separating twist needs genus >= 2");
  if (handles < 1 || handles >= genus)
    throw std::invalid_argument("separating twist needs 1 <= h < g");
  FreeWord curve(genus);
  for (int i = 1; i <= handles; ++i) {
    curve = curve * commutator(FreeWord::generator(genus, i),
                               FreeWord::generator(genus, genus + i));
  }
  std::vector<FreeWord> images;
  images.reserve(2 * static_cast<std::size_t>(genus));
  for (int i = 1; i <= 2 * genus; ++i) {
    FreeWord x = FreeWord::generator(genus, i);
    bool in_handle = (i <= handles) || (i > genus && i <= genus + handles);
    images.push_back(in_handle ? curve * x * curve.inverse() : x);
  }
  TwistSpec spec{genus, handles, curve, EndoImages(genus, std::move(images))};
  if (!fixes_homology(spec.endo))
    throw std::logic_error("separating twist must fix homology");
  if (!maps_relator_to_conjugate(spec.endo))
    throw std::logic_error(
        "separating twist must send the relator to a conjugate");
  return spec;
}

bool maps_relator_to_conjugate(const EndoImages& e) {
  FreeWord relator = surface_relator(e.genus());
  return conjugate_as_cyclic_words(apply_endo(e, relator), relator);
}

AlexVector twist_difference(const EndoImages& e, const FreeWord& u,
                            const FreeWord& v) {
  if (!fixes_homology(e))
    throw std::invalid_argument(
        "twist_difference needs an endomorphism fixing H");
  FreeWord c = commutator(u, v);
  AlexVector diff = alexander_class(apply_endo(e, c)) - alexander_class(c);
  return theta_normal_form(diff);
}

ProbeReport kg1_probe(int genus, const std::vector<TwistSpec>& twists,
                      const std::vector<std::pair<FreeWord, FreeWord>>& pairs,
                      int max_n, int m) {
  if (max_n < 0 || m < max_n + 3)
    throw std::invalid_argument("kg1_probe needs m >= max_n + 3");
  ProbeReport report;
  report.genus = genus;
  report.max_n = max_n;
  report.truncation = m;

  std::vector<AlexVector> differences;
  for (const TwistSpec& twist : twists) {
    for (const auto& [u, v] : pairs) {
      AlexVector d = twist_difference(twist.endo, u, v);
      ProbeEntry entry{twist.handles, u, v, is_multiple_of_theta(d), 0};
      entry.valuation = entry.zero ? max_n : a_valuation(d, max_n, m);
      if (!entry.zero) differences.push_back(d);
      report.entries.push_back(std::move(entry));
    }
  }
  report.added_rank.reserve(static_cast<std::size_t>(max_n) + 2);
  for (int n = 0; n <= max_n + 1; ++n)
    report.added_rank.push_back(added_rank_over_jadic(differences, n, m));
  return report;
}

}  // namespace alexinv
