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

#include "sampling.hpp"

#include <algorithm>
#include <numeric>

namespace rsgeq {

std::shared_ptr<const std::vector<Rational>> random_cost_table(std::mt19937_64& rng,
                                                               int n_agents, int spread) {
  if (spread < 1) spread = 1;
  std::vector<int> pool(static_cast<size_t>(n_agents) * spread);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n_agents);
  std::sort(pool.begin(), pool.end());
  auto table = std::make_shared<std::vector<Rational>>();
  for (int v : pool) table->push_back(rat(v));
  return table;
}

Rsg random_rsg(std::mt19937_64& rng, int n_agents, int n_resources, int spread) {
  std::vector<Resource> rs;
  for (int i = 1; i <= n_resources; ++i)
    rs.push_back({"r" + std::to_string(i), random_cost_table(rng, n_agents, spread)});
  return Rsg(n_agents, std::move(rs));
}

Rsg random_identical_rsg(std::mt19937_64& rng, int n_agents, int n_resources, int spread) {
  auto table = random_cost_table(rng, n_agents, spread);
  std::vector<Resource> rs;
  for (int i = 1; i <= n_resources; ++i) rs.push_back({"r" + std::to_string(i), table});
  return Rsg(n_agents, std::move(rs));
}

CoalitionStructure random_partition(std::mt19937_64& rng, int n_agents) {
  std::vector<int> perm(n_agents);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Coalition> cs;
  size_t at = 0;
  while (at < perm.size()) {
    std::uniform_int_distribution<size_t> len(1, perm.size() - at);
    size_t take = len(rng);
    cs.emplace_back(perm.begin() + at, perm.begin() + at + take);
    at += take;
  }
  return CoalitionStructure::make(n_agents, std::move(cs));
}

namespace {

void laminar_split(std::mt19937_64& rng, std::vector<int> set, std::vector<Coalition>& out) {
  if (set.size() < 2) return;
  if (std::uniform_int_distribution<int>(0, 1)(rng)) out.push_back(set);
  std::shuffle(set.begin(), set.end(), rng);
  std::uniform_int_distribution<size_t> cut(1, set.size() - 1);
  size_t k = cut(rng);
  laminar_split(rng, {set.begin(), set.begin() + k}, out);
  laminar_split(rng, {set.begin() + k, set.end()}, out);
}

}  // namespace

CoalitionStructure random_laminar(std::mt19937_64& rng, int n_agents) {
  std::vector<int> all(n_agents);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Coalition> cs;
  laminar_split(rng, all, cs);
  // Some singletons keep small samples non-trivial.
  for (int j = 1; j <= n_agents; ++j)
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) cs.push_back({j});
  return CoalitionStructure::make(n_agents, std::move(cs));
}

CoalitionStructure random_contiguous(std::mt19937_64& rng, int n_agents) {
  std::vector<int> perm(n_agents);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> count(1, std::max(1, n_agents));
  int k = count(rng);
  std::vector<Coalition> cs;
  for (int t = 0; t < k; ++t) {
    std::uniform_int_distribution<int> pick(1, n_agents);
    int a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    cs.emplace_back(perm.begin() + (a - 1), perm.begin() + b);
  }
  return CoalitionStructure::make(n_agents, std::move(cs));
}

Allocation random_nash(std::mt19937_64& rng, const Rsg& g, const RsgDerived& d) {
  long long quota_sum = std::accumulate(d.quota.begin(), d.quota.end(), 0ll);
  long long lows = quota_sum - g.n_agents();
  if (lows < 0 || lows >= static_cast<long long>(d.type1.size()))
    throw std::logic_error("internal error: quota sum outside the feasible band");

  std::vector<int> t1 = d.type1;
  std::shuffle(t1.begin(), t1.end(), rng);
  std::vector<int> target(d.quota);
  for (long long k = 0; k < lows; ++k) target[t1[k] - 1] -= 1;

  std::vector<int> slots;
  slots.reserve(g.n_agents());
  for (int i = 1; i <= g.n_resources(); ++i)
    for (int t = 0; t < target[i - 1]; ++t) slots.push_back(i);
  std::shuffle(slots.begin(), slots.end(), rng);
  return Allocation(g.n_agents(), g.n_resources(), std::move(slots));
}

}  // namespace rsgeq
