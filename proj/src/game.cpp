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

#include "game.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rsgeq {

namespace {
const Rational kZero = Rational(Int(0));
}

bool coalition_less(const Coalition& a, const Coalition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// ---------------------------------------------------------------------------
// Rsg

Rsg::Rsg(int n_agents, std::vector<Resource> resources)
    : n_agents_(n_agents), resources_(std::move(resources)) {
  if (n_agents_ < 1) throw std::invalid_argument("need at least one agent");
  if (resources_.empty()) throw std::invalid_argument("need at least one resource");
  for (const auto& r : resources_) {
    if (!r.costs || static_cast<int>(r.costs->size()) != n_agents_)
      throw std::invalid_argument("resource '" + r.name + "': cost table must have length n");
    const auto& t = *r.costs;
    if (t[0] <= kZero)
      throw std::invalid_argument("resource '" + r.name + "': costs must be positive");
    for (size_t q = 1; q < t.size(); ++q) {
      if (t[q] <= t[q - 1])
        throw std::invalid_argument("resource '" + r.name + "': costs must be strictly increasing");
    }
  }
}

const Rational& Rsg::cost(int i, int load) const {
  if (load == 0) return kZero;
  return resource(i).costs->at(load - 1);
}

bool Rsg::identical_resources() const {
  for (size_t i = 1; i < resources_.size(); ++i) {
    if (resources_[i].costs != resources_[0].costs &&
        *resources_[i].costs != *resources_[0].costs)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// derive_rsg

namespace {

// Largest q in 0..n with f_i(q) <= v.
int quota_at(const std::vector<Rational>& table, const Rational& v) {
  auto it = std::upper_bound(table.begin(), table.end(), v);
  return static_cast<int>(it - table.begin());
}

Rational alpha_by_binary_search(const Rsg& g,
                                const std::vector<const std::vector<Rational>*>& tables,
                                const std::vector<int>& table_index) {
  // Candidate values: the distinct table entries. alpha is the smallest value
  // v such that the quotas at v can absorb all agents.
  std::set<Rational> values;
  for (const auto* t : tables) values.insert(t->begin(), t->end());
  std::vector<Rational> cand(values.begin(), values.end());

  auto feasible = [&](const Rational& v) {
    long long total = 0;
    for (int i = 1; i <= g.n_resources(); ++i) {
      total += quota_at(*tables[table_index[i - 1]], v);
      if (total >= g.n_agents()) return true;
    }
    return false;
  };

  size_t lo = 0, hi = cand.size() - 1;
  // The all-agents-on-one-resource allocation shows the largest entry is feasible.
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (feasible(cand[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cand[lo];
}

Rational alpha_by_enumeration(const Rsg& g) {
  // Minimize max_i f_i(load_i) over load vectors summing to n.
  const int m = g.n_resources();
  const int n = g.n_agents();
  std::optional<Rational> best;
  std::vector<int> load(m, 0);
  // Enumerate compositions of n into m nonnegative parts.
  auto consider = [&]() {
    Rational mc = kZero;
    for (int i = 1; i <= m; ++i)
      if (load[i - 1] > 0) mc = std::max(mc, g.cost(i, load[i - 1]));
    if (!best || mc < *best) best = mc;
  };
  // Recursive enumeration, pruning branches already above the incumbent.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == m) {
      load[i - 1] = remaining;
      consider();
      return;
    }
    for (int q = 0; q <= remaining; ++q) {
      load[i - 1] = q;
      if (best && q > 0 && g.cost(i, q) >= *best) break;
      self(self, i + 1, remaining - q);
    }
    load[i - 1] = 0;
  };
  rec(rec, 1, n);
  return *best;
}

double composition_count(int n, int m) {
  double c = 1.0;
  for (int k = 1; k < m; ++k) c *= double(n + k) / k;
  return c;
}

}  // namespace

RsgDerived derive_rsg(const Rsg& g) {
  RsgDerived d;
  const int m = g.n_resources();

  // Distinct cost tables (by value), so that replicated resources share ranks.
  std::vector<const std::vector<Rational>*> tables;
  d.table_index.resize(m);
  for (int i = 1; i <= m; ++i) {
    const auto* t = g.resource(i).costs.get();
    int found = -1;
    for (size_t k = 0; k < tables.size(); ++k) {
      if (tables[k] == t || *tables[k] == *t) { found = static_cast<int>(k); break; }
    }
    if (found < 0) {
      found = static_cast<int>(tables.size());
      tables.push_back(t);
    }
    d.table_index[i - 1] = found;
  }

  if (m == 2 || composition_count(g.n_agents(), m) <= 2e6)
    d.alpha = alpha_by_enumeration(g);
  else
    d.alpha = alpha_by_binary_search(g, tables, d.table_index);

  d.quota.resize(m);
  d.type.resize(m);
  d.beta.assign(m, kZero);
  for (int i = 1; i <= m; ++i) {
    int q = quota_at(*tables[d.table_index[i - 1]], d.alpha);
    d.quota[i - 1] = q;
    bool type1 = (q >= 1 && g.cost(i, q) == d.alpha);
    d.type[i - 1] = type1 ? ResourceType::kType1 : ResourceType::kType2;
    if (type1) {
      d.beta[i - 1] = g.cost(i, q - 1);
      d.type1.push_back(i);
    } else {
      d.type2.push_back(i);
    }
  }

  // Global cost ranks: 0 plus every distinct table entry.
  std::set<Rational> values;
  values.insert(kZero);
  for (const auto* t : tables) values.insert(t->begin(), t->end());
  std::vector<Rational> sorted(values.begin(), values.end());
  d.rank_of.resize(tables.size());
  for (size_t k = 0; k < tables.size(); ++k) {
    d.rank_of[k].resize(g.n_agents() + 1);
    d.rank_of[k][0] = 0;
    for (int q = 1; q <= g.n_agents(); ++q) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), (*tables[k])[q - 1]);
      d.rank_of[k][q] = static_cast<int>(it - sorted.begin());
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Allocation

Allocation::Allocation(int n_agents, int n_resources, std::vector<int> assignment)
    : n_agents_(n_agents), n_resources_(n_resources), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != n_agents_)
    throw std::invalid_argument("allocation must assign every agent");
  loads_.assign(n_resources_, 0);
  for (int r : assignment_) {
    if (r < 1 || r > n_resources_) throw std::invalid_argument("resource id out of range");
    ++loads_[r - 1];
  }
}

Allocation Allocation::from_groups(int n_agents, int n_resources,
                                   const std::vector<std::vector<int>>& groups) {
  if (static_cast<int>(groups.size()) != n_resources)
    throw std::invalid_argument("expected one agent list per resource");
  std::vector<int> assignment(n_agents, 0);
  for (int i = 1; i <= n_resources; ++i) {
    for (int j : groups[i - 1]) {
      if (j < 1 || j > n_agents) throw std::invalid_argument("agent id out of range");
      if (assignment[j - 1] != 0) throw std::invalid_argument("agent assigned twice");
      assignment[j - 1] = i;
    }
  }
  for (int j = 1; j <= n_agents; ++j)
    if (assignment[j - 1] == 0) throw std::invalid_argument("agent left unassigned");
  return Allocation(n_agents, n_resources, std::move(assignment));
}

std::vector<std::vector<int>> Allocation::groups() const {
  std::vector<std::vector<int>> out(n_resources_);
  for (int j = 1; j <= n_agents_; ++j) out[assignment_[j - 1] - 1].push_back(j);
  return out;
}

std::vector<Rational> allocation_costs(const Rsg& g, const Allocation& a) {
  std::vector<Rational> out(a.n_agents());
  for (int j = 1; j <= a.n_agents(); ++j) {
    int i = a.resource_of(j);
    out[j - 1] = g.cost(i, a.load(i));
  }
  return out;
}

Rational maxcost(const Rsg& g, const Allocation& a) {
  Rational mc = kZero;
  for (int i = 1; i <= g.n_resources(); ++i)
    if (a.load(i) > 0) mc = std::max(mc, g.cost(i, a.load(i)));
  return mc;
}

bool is_nash(const Rsg& g, const RsgDerived& d, const Allocation& a) {
  (void)g;
  bool some_type1_at_quota = false;
  for (int i = 1; i <= a.n_resources(); ++i) {
    int q = d.quota[i - 1];
    int load = a.load(i);
    if (d.type[i - 1] == ResourceType::kType2) {
      if (load != q) return false;
    } else {
      if (load != q && load != q - 1) return false;
      if (load == q) some_type1_at_quota = true;
    }
  }
  return some_type1_at_quota;
}

LowHigh classify_low_high(const Rsg& g, const RsgDerived& d, const Allocation& a) {
  if (!is_nash(g, d, a))
    throw std::invalid_argument("low/high classification requires a Nash allocation");
  LowHigh out;
  for (int i = 1; i <= a.n_resources(); ++i) {
    if (d.type[i - 1] == ResourceType::kType1 && a.load(i) == d.quota[i - 1] - 1)
      out.low.push_back(i);
    else
      out.high.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// StrategicGame

void StrategicGame::validate() const {
  if (n_agents < 1) throw std::invalid_argument("need at least one agent");
  if (static_cast<int>(strategy_counts.size()) != n_agents)
    throw std::invalid_argument("strategy_counts must have one entry per agent");
  long long total = 1;
  for (int c : strategy_counts) {
    if (c < 1) throw std::invalid_argument("each agent needs a strategy");
    total *= c;
  }
  if (static_cast<long long>(payoffs.size()) != total)
    throw std::invalid_argument("payoff map must be total over the profile space");
  for (const auto& [profile, u] : payoffs) {
    if (static_cast<int>(profile.size()) != n_agents ||
        static_cast<int>(u.size()) != n_agents)
      throw std::invalid_argument("malformed payoff entry");
    for (int j = 1; j <= n_agents; ++j)
      if (profile[j - 1] < 1 || profile[j - 1] > strategy_counts[j - 1])
        throw std::invalid_argument("profile strategy out of range");
  }
}

StrategicGame rsg_to_strategic(const Rsg& g) {
  StrategicGame sg;
  sg.n_agents = g.n_agents();
  sg.strategy_counts.assign(g.n_agents(), g.n_resources());
  std::vector<int> profile(g.n_agents(), 1);
  while (true) {
    Allocation a(g.n_agents(), g.n_resources(), profile);
    auto costs = allocation_costs(g, a);
    std::vector<Rational> u(costs.size());
    for (size_t j = 0; j < costs.size(); ++j) u[j] = -costs[j];
    sg.payoffs.emplace(profile, std::move(u));
    int j = 0;
    while (j < g.n_agents() && profile[j] == g.n_resources()) profile[j++] = 1;
    if (j == g.n_agents()) break;
    ++profile[j];
  }
  return sg;
}

}  // namespace rsgeq
