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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexinv/randgen.hpp"
#include "alexinv/words.hpp"

using namespace alexinv;

namespace {

// Independent reduction oracle: rescan the whole letter sequence and cancel
// one adjacent inverse pair at a time, until a full pass finds nothing.
std::vector<Letter> naive_reduce(std::vector<Letter> ls) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].index == ls[i + 1].index && ls[i].sign == -ls[i + 1].sign) {
        ls.erase(ls.begin() + static_cast<long>(i),
                 ls.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return ls;
}

}  // namespace

TEST_CASE("reduction cancels inverse pairs") {
  FreeWord w(2, {Letter{1, 1}, Letter{1, -1}});
  CHECK(w.empty());
  CHECK(w == FreeWord(2));
}

TEST_CASE("the genus-2 relator is already reduced, length 8") {
  FreeWord relator = surface_relator(2);
  CHECK(relator.length() == 8);
  CHECK(FreeWord(2, relator.letters()) == relator);
  CHECK(relator == parse_word(2, "x1 x3 x1^-1 x3^-1 x2 x4 x2^-1 x4^-1"));
}

TEST_CASE("reduction agrees with the rescan oracle on random sequences") {
  SplitMix64 rng(1001);
  for (int t = 0; t < 50; ++t) {
    std::vector<Letter> raw;
    for (int i = 0; i < 50; ++i) {
      raw.push_back(Letter{1 + static_cast<int>(rng.below(4)),
                           rng.below(2) == 0 ? 1 : -1});
    }
    CHECK(FreeWord(2, raw).letters() == naive_reduce(raw));
  }
}

TEST_CASE("reduction is idempotent and length-nonincreasing") {
  SplitMix64 rng(1002);
  for (int t = 0; t < 50; ++t) {
    std::vector<Letter> raw;
    for (int i = 0; i < 30; ++i) {
      raw.push_back(Letter{1 + static_cast<int>(rng.below(6)),
                           rng.below(2) == 0 ? 1 : -1});
    }
    FreeWord w(3, raw);
    CHECK(w.length() <= raw.size());
    CHECK(FreeWord(3, w.letters()) == w);
  }
}

TEST_CASE("letter index out of range is rejected") {
  CHECK_THROWS_AS(FreeWord(2, {Letter{5, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FreeWord(2, {Letter{0, 1}}), std::invalid_argument);
}

TEST_CASE("commutator basics") {
  FreeWord x1 = FreeWord::generator(2, 1);
  FreeWord x3 = FreeWord::generator(2, 3);
  CHECK(commutator(x1, x1).empty());
  CHECK(commutator(x1, x3).length() == 4);
  CHECK(commutator(x1, x3) == parse_word(2, "x1 x3 x1^-1 x3^-1"));
}

TEST_CASE("Hall-Witt product reduces to the empty word") {
  SplitMix64 rng(1003);
  for (int t = 0; t < 50; ++t) {
    FreeWord x = random_word(rng, 2, 6);
    FreeWord y = random_word(rng, 2, 6);
    FreeWord z = random_word(rng, 2, 6);
    // [x, yz] = [x, y] [x, z]^{y^-1}
    FreeWord residue = commutator(x, y * z) *
                       conjugate(commutator(x, z), y.inverse()).inverse() *
                       commutator(x, y).inverse();
    CHECK(residue.empty());
  }
}

TEST_CASE("abelianization") {
  FreeWord relator = surface_relator(3);
  for (long e : abelianize(relator)) CHECK(e == 0);

  FreeWord w = parse_word(2, "x1 x1 x2^-1");
  CHECK(abelianize(w) == std::vector<long>{2, -1, 0, 0});

  SplitMix64 rng(1004);
  for (int t = 0; t < 30; ++t) {
    FreeWord u = random_word(rng, 2, 8);
    FreeWord v = random_word(rng, 2, 8);
    std::vector<long> sum = abelianize(u);
    std::vector<long> bv = abelianize(v);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += bv[i];
    CHECK(abelianize(u * v) == sum);
    for (long e : abelianize(commutator(u, v))) CHECK(e == 0);
  }
}

TEST_CASE("identity endomorphism acts trivially") {
  EndoImages id = EndoImages::identity(3);
  SplitMix64 rng(1005);
  for (int t = 0; t < 10; ++t) {
    FreeWord w = random_word(rng, 3, 10);
    CHECK(apply_endo(id, w) == w);
  }
}

TEST_CASE("conjugation image matches the classical twist word") {
  // c a1 c^-1 with c = [a1,b1] reduces to [[a1,b1],a1] a1.
  int g = 2;
  FreeWord a1 = FreeWord::generator(g, 1);
  FreeWord b1 = FreeWord::generator(g, 3);
  FreeWord c = commutator(a1, b1);
  FreeWord image = c * a1 * c.inverse();
  CHECK(image == commutator(c, a1) * a1);
}

TEST_CASE("composition of endomorphisms matches sequential application") {
  SplitMix64 rng(1006);
  int g = 2;
  auto random_endo = [&] {
    std::vector<FreeWord> images;
    for (int i = 1; i <= 2 * g; ++i) images.push_back(random_word(rng, g, 5));
    return EndoImages(g, std::move(images));
  };
  for (int t = 0; t < 5; ++t) {
    EndoImages e = random_endo();
    EndoImages f = random_endo();
    EndoImages ef = compose(e, f);
    for (int i = 0; i < 20; ++i) {
      FreeWord w = random_word(rng, g, 8);
      CHECK(apply_endo(ef, w) == apply_endo(e, apply_endo(f, w)));
    }
  }
}

TEST_CASE("genus mismatch is rejected") {
  FreeWord u(2);
  FreeWord v(3);
  CHECK_THROWS_AS(u * v, std::invalid_argument);
  CHECK_THROWS_AS(apply_endo(EndoImages::identity(2), FreeWord(3)),
                  std::invalid_argument);
}

TEST_CASE("cyclic reduction and rotation conjugacy") {
  FreeWord w = parse_word(2, "x2^-1 x1 x3 x2");
  CHECK(cyclic_reduce(w) == parse_word(2, "x1 x3"));
  CHECK(conjugate_as_cyclic_words(parse_word(2, "x1 x3"),
                                  parse_word(2, "x3 x1")));
  CHECK_FALSE(conjugate_as_cyclic_words(parse_word(2, "x1 x3"),
                                        parse_word(2, "x1 x4")));
  SplitMix64 rng(1007);
  for (int t = 0; t < 20; ++t) {
    FreeWord a = random_word(rng, 2, 6);
    FreeWord u = random_word(rng, 2, 6);
    CHECK(conjugate_as_cyclic_words(conjugate(a, u), a));
  }
}

TEST_CASE("word parsing with aliases and printing") {
  CHECK(parse_word(2, "a1 b1 a1^-1 b1^-1") ==
        commutator(FreeWord::generator(2, 1), FreeWord::generator(2, 3)));
  CHECK(parse_word(3, "b2") == FreeWord::generator(3, 5));
  CHECK(parse_word(2, "") == FreeWord(2));
  CHECK(to_string(parse_word(2, "x1 x3^-1")) == "x1 x3^-1");
  CHECK_THROWS_AS(parse_word(2, "q1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(2, "a3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(2, "x1^2"), std::invalid_argument);
}
