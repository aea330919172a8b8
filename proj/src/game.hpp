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
//
// Domain types for strategic-form games and resource selection games (RSGs),
// together with the derived RSG quantities: the minmax cost alpha, per-resource
// quotas, the Type-1/Type-2 split, beta values and the low/high partition of a
// Nash allocation. Agents and resources are 1-based everywhere, matching the
// instance file format.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rsgeq {

// Thrown when an exhaustive scan would exceed its enumeration budget. Callers
// must treat this as "refused", never as a stability verdict.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coalition is a non-empty set of agent ids, kept sorted ascending.
using Coalition = std::vector<int>;

// Canonical coalition order: by size, then lexicographic.
bool coalition_less(const Coalition& a, const Coalition& b);

// ---------------------------------------------------------------------------
// Resource selection games

struct Resource {
  std::string name;
  // costs[q-1] = f(q) for loads q = 1..n; f(0) = 0 is implicit and never read.
  // Shared so that many identical resources store one table.
  std::shared_ptr<const std::vector<Rational>> costs;
};

class Rsg {
 public:
  // Validates: n >= 1, at least one resource, each table has length n, is
  // strictly increasing and all entries positive.
  Rsg(int n_agents, std::vector<Resource> resources);

  int n_agents() const { return n_agents_; }
  int n_resources() const { return static_cast<int>(resources_.size()); }
  const Resource& resource(int i) const { return resources_.at(i - 1); }
  const std::vector<Resource>& resources() const { return resources_; }

  // f_i(load); load 0 yields the implicit zero cost.
  const Rational& cost(int i, int load) const;

  // True when all resources share one cost table (by value).
  bool identical_resources() const;

 private:
  int n_agents_;
  std::vector<Resource> resources_;
};

enum class ResourceType { kType1, kType2 };

struct RsgDerived {
  Rational alpha;  // minmax cost
  std::vector<int> quota;              // [i-1] = q_i
  std::vector<ResourceType> type;      // [i-1]
  std::vector<Rational> beta;          // [i-1] = f_i(q_i - 1); Type-1 only

  std::vector<int> type1;  // resource ids, ascending
  std::vector<int> type2;

  // Exact cost comparisons as integer ranks: rank_of[t][q] is the rank of
  // f_i(q) among all distinct cost values of the game (load 0 included),
  // where t = table_index[i-1]. Profitability checks only ever compare
  // cost values, so ranks decide them exactly.
  std::vector<int> table_index;
  std::vector<std::vector<int>> rank_of;

  int cost_rank(int i, int load) const { return rank_of[table_index[i - 1]][load]; }
};

// Computes alpha, quotas, types and beta values. Alpha is found by exhaustive
// load-vector enumeration when m = 2 or the load-composition space is small,
// and otherwise by binary search over the multiset of table entries with the
// feasibility test sum_i max{q : f_i(q) <= v} >= n. Both routes are exact.
RsgDerived derive_rsg(const Rsg& g);

// ---------------------------------------------------------------------------
// Allocations

class Allocation {
 public:
  // assignment[j-1] = resource of agent j, for j = 1..n.
  Allocation(int n_agents, int n_resources, std::vector<int> assignment);

  // groups[i-1] lists the agents on resource i; they must partition 1..n.
  static Allocation from_groups(int n_agents, int n_resources,
                                const std::vector<std::vector<int>>& groups);

  int n_agents() const { return n_agents_; }
  int n_resources() const { return n_resources_; }
  int resource_of(int agent) const { return assignment_.at(agent - 1); }
  int load(int i) const { return loads_.at(i - 1); }
  const std::vector<int>& loads() const { return loads_; }
  std::vector<std::vector<int>> groups() const;

  bool operator==(const Allocation& other) const = default;

 private:
  int n_agents_;
  int n_resources_;
  std::vector<int> assignment_;
  std::vector<int> loads_;
};

// Per-agent incurred costs, indexed [j-1] for agent j.
std::vector<Rational> allocation_costs(const Rsg& g, const Allocation& a);

// Maximum cost incurred by any agent at a.
Rational maxcost(const Rsg& g, const Allocation& a);

// Nash test via the load characterization: Type-2 resources at quota, Type-1
// at quota or quota-1, at least one Type-1 at quota.
bool is_nash(const Rsg& g, const RsgDerived& d, const Allocation& a);

struct LowHigh {
  std::vector<int> low;   // Type-1 resources at quota-1
  std::vector<int> high;  // everything else
};

// Requires a to be a Nash equilibrium; throws std::invalid_argument otherwise.
LowHigh classify_low_high(const Rsg& g, const RsgDerived& d, const Allocation& a);

// ---------------------------------------------------------------------------
// Generic strategic-form games

struct StrategicGame {
  int n_agents;
  std::vector<int> strategy_counts;  // [j-1], strategies of agent j are 1..count
  // Total map from joint profiles (1-based strategies) to per-agent payoffs.
  std::map<std::vector<int>, std::vector<Rational>> payoffs;

  void validate() const;  // throws on a non-total payoff map
};

// The strategic-form encoding of an RSG: strategies are resources, payoffs
// are negated costs.
StrategicGame rsg_to_strategic(const Rsg& g);

}  // namespace rsgeq
