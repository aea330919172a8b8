// Copyright 2026 The rsgeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sampling.hpp"
#include "structures.hpp"
#include "testutil.hpp"

using namespace rsgeq;
using namespace rsgeq::testutil;

TEST_CASE("structure construction validates and normalizes") {
  auto C = CoalitionStructure::make(3, {{2, 1}, {1, 2}, {3}});
  CHECK(C.coalitions.size() == 2);  // duplicate removed
  CHECK(C.coalitions[0] == Coalition{1, 2});
  CHECK_THROWS_AS(CoalitionStructure::make(3, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(CoalitionStructure::make(3, {{4}}), std::invalid_argument);
  CHECK_THROWS_AS(CoalitionStructure::make(3, {{}}), std::invalid_argument);
  // Repeated members normalize away rather than erroring.
  CHECK(CoalitionStructure::make(3, {{1, 1}}).coalitions == std::vector<Coalition>{{1}});
}

TEST_CASE("class recognition on hand examples") {
  auto part = CoalitionStructure::make(4, {{1, 2}, {3}, {4}});
  CHECK(is_partition(part));
  CHECK(is_laminar(part));

  auto lam = CoalitionStructure::make(4, {{1}, {1, 2}, {1, 2, 3}});
  CHECK_FALSE(is_partition(lam));
  CHECK(is_laminar(lam));

  auto cross = CoalitionStructure::make(3, {{1, 2}, {2, 3}});
  CHECK_FALSE(is_laminar(cross));
  CHECK(find_contiguous_path(cross).has_value());

  auto cycle = CoalitionStructure::make(4, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}});
  CHECK_FALSE(find_contiguous_path(cycle).has_value());

  auto empty = CoalitionStructure::make(3, {});
  CHECK(is_partition(empty));
  CHECK(is_laminar(empty));
  CHECK(all_singletons(empty));
  CHECK(find_contiguous_path(empty).has_value());
}

TEST_CASE("super-strong domain recognition") {
  CHECK(is_super_strong_domain(all_nonempty_coalitions(3)));
  CHECK(all_nonempty_coalitions(3).coalitions.size() == 7);
  CHECK_FALSE(is_super_strong_domain(singletons(3)));
}

TEST_CASE("path search agrees with the permutation oracle") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);  // oracle affordable to n = 6
    // Mix random interval structures with fully random families.
    CoalitionStructure C = (t % 2 == 0)
                               ? random_contiguous(rng, n)
                               : [&] {
                                   std::vector<Coalition> cs;
                                   int k = 1 + static_cast<int>(rng() % 4);
                                   for (int r = 0; r < k; ++r) {
                                     Coalition c;
                                     for (int j = 1; j <= n; ++j)
                                       if (rng() % 2) c.push_back(j);
                                     if (!c.empty()) cs.push_back(c);
                                   }
                                   return CoalitionStructure::make(n, cs);
                                 }();
    auto found = find_contiguous_path(C);
    bool oracle = contiguous_by_permutations(C);
    CHECK(found.has_value() == oracle);
    if (found) CHECK(witnesses_contiguous(C, *found));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("laminar structures always get a path constructively") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 8);
    auto C = random_laminar(rng, n);
    REQUIRE(is_laminar(C));
    auto w = laminar_to_path(C);
    CHECK(witnesses_contiguous(C, w));
  }
}

TEST_CASE("path witnesses turn into verified circle embeddings") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 8);
    auto C = random_contiguous(rng, n);
    auto w = find_contiguous_path(C);
    REQUIRE(w.has_value());
    auto emb = contiguous_to_embedding(C, *w);
    CHECK(verify_embedding(C, emb));
  }
}

TEST_CASE("embedding verification rejects tampered witnesses") {
  auto C = CoalitionStructure::make(3, {{1, 2}, {2, 3}});
  auto w = find_contiguous_path(C);
  auto emb = contiguous_to_embedding(C, *w);
  REQUIRE(verify_embedding(C, emb));
  auto bad = emb;
  bad.circles[0].radius += rat(1000);  // now swallows outsiders
  CHECK_FALSE(verify_embedding(C, bad));
  auto bad2 = emb;
  bad2.circles.pop_back();
  CHECK_FALSE(verify_embedding(C, bad2));
  auto bad3 = emb;
  bad3.circles[0].coalition_index = bad3.circles[1].coalition_index;
  CHECK_FALSE(verify_embedding(C, bad3));
}

TEST_CASE("the crossing pair defeats the interval-start circle placement") {
  // Centering each coalition's circle at its first agent on the path cannot
  // capture {2,3} without catching agent 1; the last-agent placement works.
  auto C = CoalitionStructure::make(3, {{1, 2}, {2, 3}});
  auto emb = contiguous_to_embedding(C, PathWitness{{1, 2, 3}});
  CHECK(verify_embedding(C, emb));
}

TEST_CASE("hierarchy demo passes for small agent counts") {
  for (int n : {2, 3, 4, 5}) {
    auto checks = hierarchy_demo(n);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      INFO(n, " agents: ", c.claim, " -- ", c.detail);
      CHECK(c.ok);
    }
  }
  CHECK_THROWS_AS(hierarchy_demo(1), std::invalid_argument);
}

TEST_CASE("non-laminar recognition needs no witness order to fail") {
  // A structure contiguous only under a non-identity order.
  auto C = CoalitionStructure::make(4, {{1, 3}, {1, 2, 3}});
  auto w = find_contiguous_path(C);
  REQUIRE(w.has_value());
  CHECK(witnesses_contiguous(C, *w));
  CHECK_FALSE(witnesses_contiguous(C, PathWitness{{1, 2, 3, 4}}));
}
