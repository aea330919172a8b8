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
// Constructive solvers: Nash allocations, the near-balanced two-coloring of a
// laminar structure, the two-resource laminar equilibrium (coloring plus a
// potential-guided repair loop), the round-robin equilibrium for identical
// resources, and an exhaustive symmetry-reduced equilibrium search.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "game.hpp"
#include "stability.hpp"
#include "structures.hpp"

namespace rsgeq {

// A deterministic Nash allocation: Type-2 resources filled to quota, the
// highest-indexed Type-1 resources lowered to quota-1 until loads sum to n,
// agents dealt in id order.
Allocation construct_nash(const Rsg& g, const RsgDerived& d);

// Colors `subset` so that every coalition of the laminar structure C is
// near-balanced on it (black and white members differ by at most one) and
// exactly ceil(|subset|/2) members are black. Works by ordering the subset so
// that every restricted coalition is consecutive, then alternating colors.
// Returns the black members, sorted. Throws on a non-laminar structure.
Coalition two_color_blacks(const CoalitionStructure& C, const Coalition& subset);

// True when every coalition of C meets the high/low balance condition
// |a_i cap c| <= |a_i' cap c| + 1 for all i in H(a), i' in L(a). For a Nash
// allocation over identical resources this is sufficient for C-stability.
bool high_low_balance_holds(const Rsg& g, const RsgDerived& d, const Allocation& a,
                            const CoalitionStructure& C);

// Deals the agents in path order over resources 1..m cyclically.
Allocation round_robin_by_path(const Rsg& g, const PathWitness& order);

struct ConstructionResult {
  Allocation allocation;
  std::vector<std::string> trace;  // one line per construction step
};

// Identical resources, contiguous structure: a path witness (found or given)
// followed by the round-robin deal. The result is verified to be Nash and to
// meet the high/low balance condition before it is returned.
ConstructionResult construct_identical_contiguous_eq(
    const Rsg& g, const RsgDerived& d, const CoalitionStructure& C,
    const std::optional<PathWitness>& path = std::nullopt);

// Two resources, laminar structure. When quotas sum to n both resources fill
// to quota and every coalition is powerless. Otherwise the agent set is
// two-colored against C, the smaller-quota resource takes that many black
// agents, and a repair loop driven by the closed-form stability conditions
// rewires one violating coalition at a time; every rewiring strictly
// increases the (coalition incidence, -group cost) potential, which bounds
// the loop. The result satisfies the closed form for every coalition of C.
ConstructionResult construct_two_resource_laminar_eq(const Rsg& g, const RsgDerived& d,
                                                     const CoalitionStructure& C);

struct SearchResult {
  std::optional<Allocation> equilibrium;
  long long candidates = 0;  // allocations examined, up to agent symmetry
};

// Exhaustive C-stable allocation search. Agents with identical coalition
// memberships are interchangeable, so candidates are enumerated as count
// matrices per membership class and expanded with lowest ids first. Throws
// BudgetExceeded when the candidate count would exceed the budget.
SearchResult find_equilibrium_by_search(const Rsg& g, const RsgDerived& d,
                                        const CoalitionStructure& C,
                                        long long budget = kDefaultDeviationBudget);

}  // namespace rsgeq
