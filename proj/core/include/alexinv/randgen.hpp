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

#ifndef ALEXINV_RANDGEN_HPP
#define ALEXINV_RANDGEN_HPP

#include <cstdint>
#include <string_view>

#include "alexinv/words.hpp"

namespace alexinv {

// splitmix64: tiny, seedable, and identical on every platform, unlike the
// standard-library distributions. All randomized suites draw from this so a
// seed pins the whole run.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in 0..n-1; modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

inline FreeWord random_word(SplitMix64& rng, int genus, int max_len) {
  std::vector<Letter> raw;
  int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
  raw.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    int index = 1 + static_cast<int>(rng.below(2ull * genus));
    int sign = rng.below(2) == 0 ? 1 : -1;
    raw.push_back(Letter{index, sign});
  }
  return FreeWord(genus, raw);
}

// A word in the commutator subgroup: a product of two commutators of short
// random words.
inline FreeWord random_commutator_word(SplitMix64& rng, int genus) {
  FreeWord w = commutator(random_word(rng, genus, 4),
                          random_word(rng, genus, 4));
  w = w * commutator(random_word(rng, genus, 3), random_word(rng, genus, 3));
  return w;
}

}  // namespace alexinv

#endif  // ALEXINV_RANDGEN_HPP
