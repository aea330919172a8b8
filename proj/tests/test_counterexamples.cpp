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

#include "construction.hpp"
#include "counterexamples.hpp"
#include "sampling.hpp"
#include "testutil.hpp"

using namespace rsgeq;
using namespace rsgeq::testutil;

TEST_CASE("the three-agent fixture has no super-strong equilibrium") {
  Fixture f = fixture_super_strong();
  auto d = derive_rsg(f.game);
  auto cert = verify_no_equilibrium(f.game, d, f.structure);
  CHECK(cert.allocations == 8);
  CHECK(cert.refuted == 8);
  CHECK(cert.complete());
}

TEST_CASE("the contiguous fixture is refuted in full") {
  Fixture f = fixture_contiguous();
  REQUIRE(f.path.has_value());
  CHECK(witnesses_contiguous(f.structure, *f.path));
  auto d = derive_rsg(f.game);
  CHECK(d.alpha == rat(4));
  auto cert = verify_no_equilibrium(f.game, d, f.structure);
  CHECK(cert.allocations == 64);
  CHECK(cert.complete());
}

TEST_CASE("the centralized fixture's embedding verifies and it is refuted") {
  Fixture f = fixture_centralized();
  REQUIRE(f.embedding.has_value());
  CHECK(verify_embedding(f.structure, *f.embedding));
  // Its structure is not contiguous: circles are essential.
  CHECK_FALSE(find_contiguous_path(f.structure).has_value());
  auto d = derive_rsg(f.game);
  auto cert = verify_no_equilibrium(f.game, d, f.structure);
  CHECK(cert.allocations == 32);
  CHECK(cert.complete());
}

TEST_CASE("the large laminar fixture meets its design constraints exactly") {
  Fixture f = fixture_laminar_large();
  const Rsg& g = f.game;
  REQUIRE(g.n_agents() == 14052);
  REQUIRE(g.n_resources() == 2001);
  auto d = derive_rsg(g);
  CHECK(d.alpha == rat(100));
  CHECK(d.quota[0] == 53);
  for (int i = 2; i <= 1001; ++i) CHECK(d.quota[i - 1] == 8);
  for (int i = 1002; i <= 2001; ++i) CHECK(d.quota[i - 1] == 7);
  CHECK(d.type2.empty());
  // The vacated-cost chain: beta_x > beta_y > beta_z > every sub-quota cost.
  CHECK(d.beta[0] == rat(98));
  CHECK(d.beta[1] == rat(97));
  CHECK(d.beta[1000 + 1] == rat(96));
  CHECK(d.beta[0] > d.beta[1]);
  CHECK(d.beta[1] > d.beta[1001]);
  CHECK(d.beta[1001] > g.cost(1, 51));
  // Quotas overshoot the agent count by exactly 1001: every Nash allocation
  // has 1001 low resources.
  long long quota_sum = 0;
  for (int q : d.quota) quota_sum += q;
  CHECK(quota_sum - g.n_agents() == 1001);
  CHECK(is_laminar(f.structure));
  CHECK(f.structure.coalitions.size() == 6 + 14052 + 1);
}

TEST_CASE("the refuter defeats constructed and random Nash allocations") {
  Fixture f = fixture_laminar_large();
  auto d = derive_rsg(f.game);
  std::mt19937_64 rng(59);
  for (int t = 0; t < 12; ++t) {
    Allocation a = t == 0 ? construct_nash(f.game, d) : random_nash(rng, f.game, d);
    REQUIRE(is_nash(f.game, d, a));
    auto res = refute_laminar_large(f.game, d, f.structure, a);
    CHECK(f.structure.contains(res.coalition));
    CHECK(deviation_improves(f.game, a, res.deviation));
  }
}

TEST_CASE("the refuter rejects non-Nash input") {
  Fixture f = fixture_laminar_large();
  auto d = derive_rsg(f.game);
  std::vector<int> assign(f.game.n_agents(), 1);
  Allocation a(f.game.n_agents(), f.game.n_resources(), assign);
  CHECK_THROWS_AS(refute_laminar_large(f.game, d, f.structure, a), std::invalid_argument);
}

TEST_CASE("exhaustive refutation refuses oversized spaces") {
  Fixture f = fixture_laminar_large();
  auto d = derive_rsg(f.game);
  CHECK_THROWS_AS(verify_no_equilibrium(f.game, d, f.structure), BudgetExceeded);
}

TEST_CASE("an instance with an equilibrium yields an incomplete certificate") {
  auto g = two_resource_game(2, {1, 2}, {1, 2});
  auto d = derive_rsg(g);
  auto cert = verify_no_equilibrium(g, d, all_nonempty_coalitions(2));
  CHECK_FALSE(cert.complete());
  REQUIRE(cert.stable_found.has_value());
  CHECK(is_C_stable(g, d, *cert.stable_found, all_nonempty_coalitions(2)).stable);
}
