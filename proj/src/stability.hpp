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
// Profitable coalition deviations and stability verdicts. A deviation is
// profitable when every deviating member is weakly better off and at least
// one is strictly better off. An allocation is c-stable when the coalition c
// has no profitable deviation, and C-stable when that holds for every
// coalition of the structure C.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "game.hpp"
#include "structures.hpp"

namespace rsgeq {

struct Deviation {
  Coalition coalition;       // sorted agent ids
  std::vector<int> targets;  // targets[k] = new resource of coalition[k]
};

// The joint move applied to a; non-members keep their resource.
Allocation apply_deviation(const Allocation& a, const Deviation& dev);

// Exact weak-Pareto test over the deviating members (costs compared as
// rationals). Throws std::invalid_argument on a malformed deviation.
bool deviation_improves(const Rsg& g, const Allocation& a, const Deviation& dev);

struct StabilityReport {
  bool stable = false;
  std::optional<Deviation> witness;  // a profitable deviation, when unstable
  long long examined = 0;            // candidate deviations evaluated
};

// Default cap on candidate deviations per stability query.
inline constexpr long long kDefaultDeviationBudget = 20'000'000;

// Exhaustive c-stability for an RSG allocation. Candidates are enumerated as
// origin-to-target count matrices (members on one resource are
// interchangeable), and verdicts use the integer cost ranks of d. A found
// witness names the lowest-id members per origin and is replayed through
// deviation_improves before being returned. Throws BudgetExceeded when the
// candidate count would exceed the budget.
StabilityReport is_c_stable_rsg(const Rsg& g, const RsgDerived& d, const Allocation& a,
                                const Coalition& c,
                                long long budget = kDefaultDeviationBudget);

// C-stability: coalitions checked in canonical order (size, then lex); the
// budget bounds the total candidates across all coalitions.
StabilityReport is_C_stable(const Rsg& g, const RsgDerived& d, const Allocation& a,
                            const CoalitionStructure& C,
                            long long budget = kDefaultDeviationBudget);

// The same notions over an explicit strategic-form game; candidates are all
// joint strategy choices of the coalition.
StabilityReport is_c_stable_generic(const StrategicGame& sg, const std::vector<int>& profile,
                                    const Coalition& c,
                                    long long budget = kDefaultDeviationBudget);
StabilityReport is_C_stable_generic(const StrategicGame& sg, const std::vector<int>& profile,
                                    const CoalitionStructure& C,
                                    long long budget = kDefaultDeviationBudget);

// Closed-form c-stability for two-resource Nash allocations. With low
// resource i' (load quota-1) and high resource i, writing s = |a_i' cap c|
// and h = |a_i cap c|, the allocation is c-stable iff
//   s = 0                          implies h <= 1,
//   s > 0 and beta_i = beta_i'     implies h <= s + 1,
//   s > 0 and beta_i < beta_i'     implies h <= s.
// With no low resource the allocation is c-stable outright. Requires m = 2
// and a Nash allocation; throws std::invalid_argument otherwise.
bool two_resource_lemma_stable(const Rsg& g, const RsgDerived& d, const Allocation& a,
                               const Coalition& c);

// Potentials driving the two-resource construction: gamma counts the
// (resource group, coalition) incidences, beta sums the top-of-group costs.
long long gamma_value(const Allocation& a, const CoalitionStructure& C);
Rational beta_value(const Rsg& g, const Allocation& a);

// Strict progress: gamma up, or gamma equal and beta down.
bool gb_dominates(const Rsg& g, const CoalitionStructure& C,
                  const Allocation& after, const Allocation& before);

}  // namespace rsgeq
