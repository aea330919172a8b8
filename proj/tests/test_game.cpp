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

#include "game.hpp"
#include "sampling.hpp"
#include "testutil.hpp"

using namespace rsgeq;
using namespace rsgeq::testutil;

TEST_CASE("cost tables must be strictly increasing and positive") {
  CHECK_THROWS_AS(Rsg(3, {{"r", table({1, 1, 2})}}), std::invalid_argument);
  CHECK_THROWS_AS(Rsg(3, {{"r", table({0, 1, 2})}}), std::invalid_argument);
  CHECK_THROWS_AS(Rsg(3, {{"r", table({1, 2})}}), std::invalid_argument);
  CHECK_THROWS_AS(Rsg(0, {{"r", table({})}}), std::invalid_argument);
  CHECK_NOTHROW(Rsg(3, {{"r", table({1, 2, 3})}}));
}

TEST_CASE("load-zero cost is implicit zero") {
  Rsg g(2, {{"r", table({3, 5})}});
  CHECK(g.cost(1, 0) == rat(0));
  CHECK(g.cost(1, 1) == rat(3));
  CHECK(g.cost(1, 2) == rat(5));
}

TEST_CASE("alpha, quotas and types on a hand example") {
  // Three agents, two identical linear resources: the best worst case splits
  // 2+1, alpha = 2, both resources Type 1 with quota 2.
  auto g = two_resource_game(3, {1, 2, 3}, {1, 2, 3});
  auto d = derive_rsg(g);
  CHECK(d.alpha == rat(2));
  CHECK(d.quota == std::vector<int>{2, 2});
  CHECK(d.type1 == std::vector<int>{1, 2});
  CHECK(d.type2.empty());
  CHECK(d.beta[0] == rat(1));
}

TEST_CASE("a Type-2 resource sits strictly below alpha at quota") {
  // r2 is so cheap that it takes most agents and still undercuts alpha.
  auto g = two_resource_game(4, {10, 20, 30, 40}, {1, 2, 3, 4});
  auto d = derive_rsg(g);
  // Load vectors (0,4),(1,3),...: maxcost 4, 10, ... so alpha = 4.
  CHECK(d.alpha == rat(4));
  CHECK(d.quota == std::vector<int>{0, 4});
  CHECK(d.type2 == std::vector<int>{1});
  CHECK(d.type1 == std::vector<int>{2});
}

TEST_CASE("identical_resources compares by value") {
  Rsg g1(2, {{"a", table({1, 2})}, {"b", table({1, 2})}});
  CHECK(g1.identical_resources());
  Rsg g2(2, {{"a", table({1, 2})}, {"b", table({1, 3})}});
  CHECK_FALSE(g2.identical_resources());
}

TEST_CASE("Nash characterization matches brute force on random games") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = 2 + static_cast<int>(rng() % 2);
    Rsg g = random_rsg(rng, n, m);
    auto d = derive_rsg(g);
    for (const auto& assign : all_assignments(n, m)) {
      Allocation a(n, m, assign);
      // Brute force: no single agent can strictly lower its own cost.
      bool brute = true;
      for (int j = 1; j <= n && brute; ++j) {
        int from = a.resource_of(j);
        for (int i = 1; i <= m; ++i) {
          if (i == from) continue;
          if (g.cost(i, a.load(i) + 1) < g.cost(from, a.load(from))) { brute = false; break; }
        }
      }
      CHECK(is_nash(g, d, a) == brute);
    }
  }
}

TEST_CASE("low/high classification and the low count") {
  auto g = two_resource_game(3, {1, 2, 3}, {1, 2, 3});
  auto d = derive_rsg(g);
  Allocation a(3, 2, {1, 1, 2});  // loads (2,1): r1 high, r2 low
  auto lh = classify_low_high(g, d, a);
  CHECK(lh.high == std::vector<int>{1});
  CHECK(lh.low == std::vector<int>{2});
  // Sum of quotas minus n bounds the number of lows.
  int lows = d.quota[0] + d.quota[1] - 3;
  CHECK(static_cast<int>(lh.low.size()) == lows);
  Allocation not_nash(3, 2, {1, 1, 1});
  CHECK_THROWS_AS(classify_low_high(g, d, not_nash), std::invalid_argument);
}

TEST_CASE("cost ranks order exactly like the rational values") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = 2 + static_cast<int>(rng() % 3);
    Rsg g = random_rsg(rng, n, m);
    auto d = derive_rsg(g);
    for (int i = 1; i <= m; ++i)
      for (int i2 = 1; i2 <= m; ++i2)
        for (int q = 0; q <= n; ++q)
          for (int q2 = 0; q2 <= n; ++q2) {
            bool lt_rank = d.cost_rank(i, q) < d.cost_rank(i2, q2);
            bool lt_val = g.cost(i, q) < g.cost(i2, q2);
            CHECK(lt_rank == lt_val);
          }
  }
}

TEST_CASE("allocation group and assignment views agree") {
  Allocation a = Allocation::from_groups(4, 3, {{2, 4}, {}, {1, 3}});
  CHECK(a.resource_of(1) == 3);
  CHECK(a.resource_of(2) == 1);
  CHECK(a.load(1) == 2);
  CHECK(a.load(2) == 0);
  CHECK(a.groups() == std::vector<std::vector<int>>{{2, 4}, {}, {1, 3}});
  CHECK_THROWS_AS(Allocation::from_groups(4, 3, {{2, 4}, {}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Allocation::from_groups(4, 3, {{2, 4, 4}, {}, {1, 3}}),
                  std::invalid_argument);
}

TEST_CASE("strategic-form encoding negates costs and is total") {
  auto g = two_resource_game(2, {1, 3}, {2, 4});
  StrategicGame sg = rsg_to_strategic(g);
  sg.validate();
  CHECK(sg.n_agents == 2);
  CHECK(sg.payoffs.size() == 4);
  CHECK(sg.payoffs.at({1, 1}) == std::vector<Rational>{rat(-3), rat(-3)});
  CHECK(sg.payoffs.at({1, 2}) == std::vector<Rational>{rat(-1), rat(-2)});
}

TEST_CASE("alpha via exhaustive minmax on random small games") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = 2 + static_cast<int>(rng() % 3);
    Rsg g = random_rsg(rng, n, m);
    auto d = derive_rsg(g);
    Rational best = maxcost(g, Allocation(n, m, std::vector<int>(n, 1)));
    for (const auto& assign : all_assignments(n, m)) {
      Rational v = maxcost(g, Allocation(n, m, assign));
      if (v < best) best = v;
    }
    CHECK(d.alpha == best);
    // Quota definition: largest load priced at or below alpha.
    for (int i = 1; i <= m; ++i) {
      if (d.quota[i - 1] > 0) CHECK(g.cost(i, d.quota[i - 1]) <= d.alpha);
      if (d.quota[i - 1] < n) CHECK(g.cost(i, d.quota[i - 1] + 1) > d.alpha);
    }
  }
}
