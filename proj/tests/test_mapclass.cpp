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

#include "alexinv/magnus.hpp"
#include "alexinv/mapclass.hpp"

using namespace alexinv;

TEST_CASE("separating twist images match the classical words") {
  TwistSpec twist = separating_twist(2, 1);
  FreeWord a1 = FreeWord::generator(2, 1);
  FreeWord b1 = FreeWord::generator(2, 3);
  // image of a1 is [[a1,b1],a1] a1
  CHECK(twist.endo.image(1) ==
        commutator(commutator(a1, b1), a1) * a1);
  // a2 is on the other side of the curve and is fixed
  CHECK(twist.endo.image(2) == FreeWord::generator(2, 2));
  CHECK(twist.endo.image(4) == FreeWord::generator(2, 4));
}

TEST_CASE("twist invariants hold for all g <= 4, h < g") {
  for (int g = 2; g <= 4; ++g) {
    for (int h = 1; h < g; ++h) {
      CAPTURE(g);
      CAPTURE(h);
      TwistSpec twist = separating_twist(g, h);
      CHECK(fixes_homology(twist.endo));
      CHECK(maps_relator_to_conjugate(twist.endo));
    }
  }
}

TEST_CASE("twists fix the generators outside the enclosed handles") {
  TwistSpec twist = separating_twist(3, 2);
  CHECK(twist.endo.image(3) == FreeWord::generator(3, 3));
  CHECK(twist.endo.image(6) == FreeWord::generator(3, 6));
  CHECK(twist.endo.image(1) != FreeWord::generator(3, 1));
}

TEST_CASE("handle count out of range is rejected") {
  CHECK_THROWS_AS(separating_twist(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(separating_twist(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(separating_twist(3, 3), std::invalid_argument);
}

TEST_CASE("twist difference of the displayed commutator") {
  for (int g : {2, 3}) {
    CAPTURE(g);
    TwistSpec twist = separating_twist(g, 1);
    FreeWord a1 = FreeWord::generator(g, 1);
    FreeWord a2 = FreeWord::generator(g, 2);
    FreeWord b1 = FreeWord::generator(g, g + 1);
    AlexVector diff = twist_difference(twist.endo, a1, a2);
    AlexVector target = module_scalar(
        parse_poly(g, "(x1-1)*(x2-1)"),
        alexander_class(commutator(a1, b1)));
    CHECK(equal_mod_theta(diff, target));
    CHECK_FALSE(is_multiple_of_theta(diff));
  }
}

TEST_CASE("identity endomorphism gives zero differences") {
  EndoImages id = EndoImages::identity(2);
  AlexVector diff = twist_difference(id, FreeWord::generator(2, 1),
                                     FreeWord::generator(2, 2));
  CHECK(diff.is_zero());
}

TEST_CASE("pairs fixed by the twist give zero differences") {
  TwistSpec twist = separating_twist(3, 1);
  AlexVector diff = twist_difference(twist.endo, FreeWord::generator(3, 2),
                                     FreeWord::generator(3, 5));
  CHECK(diff.is_zero());
}

TEST_CASE("twist differences sit at least as deep as the Johnson depth") {
  int g = 2;
  TwistSpec twist = separating_twist(g, 1);
  int depth = johnson_depth(twist.endo, 4);
  CHECK(depth == 2);
  for (int i = 1; i <= 2 * g; ++i) {
    for (int j = i + 1; j <= 2 * g; ++j) {
      AlexVector d = twist_difference(twist.endo, FreeWord::generator(g, i),
                                      FreeWord::generator(g, j));
      if (is_multiple_of_theta(d)) continue;
      CHECK(a_valuation(d, depth, depth + 3) >= depth);
    }
  }
}

TEST_CASE("probe report over the generator pairs at g = 2") {
  int g = 2;
  std::vector<TwistSpec> twists{separating_twist(g, 1)};
  std::vector<std::pair<FreeWord, FreeWord>> pairs;
  for (int i = 1; i <= 2 * g; ++i)
    for (int j = i + 1; j <= 2 * g; ++j)
      pairs.emplace_back(FreeWord::generator(g, i),
                         FreeWord::generator(g, j));
  ProbeReport report = kg1_probe(g, twists, pairs, 2, 5);
  REQUIRE(report.entries.size() == 6);

  bool lemma_nonzero = false;
  for (const ProbeEntry& e : report.entries) {
    if (e.zero) continue;
    CHECK(e.valuation >= 2);
    if (e.u == FreeWord::generator(g, 1) && e.v == FreeWord::generator(g, 2))
      lemma_nonzero = true;
  }
  CHECK(lemma_nonzero);

  // Everything lies inside J^2 (nothing added over the layers up to 2), and
  // the span is visible over J^3.
  REQUIRE(report.added_rank.size() == 4);
  CHECK(report.added_rank[0] == 0);
  CHECK(report.added_rank[1] == 0);
  CHECK(report.added_rank[2] == 0);
  CHECK(report.added_rank[3] > 0);

  // Determinism: rebuilding the report gives identical data.
  ProbeReport again = kg1_probe(g, twists, pairs, 2, 5);
  CHECK(again.added_rank == report.added_rank);
  REQUIRE(again.entries.size() == report.entries.size());
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    CHECK(again.entries[i].zero == report.entries[i].zero);
    CHECK(again.entries[i].valuation == report.entries[i].valuation);
  }
}

TEST_CASE("probe on the identity contributes only zero vectors") {
  int g = 2;
  TwistSpec id{g, 1, FreeWord(g), EndoImages::identity(g)};
  std::vector<std::pair<FreeWord, FreeWord>> pairs{
      {FreeWord::generator(g, 1), FreeWord::generator(g, 2)}};
  ProbeReport report = kg1_probe(g, {id}, pairs, 1, 4);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].zero);
  for (int r : report.added_rank) CHECK(r == 0);
}
