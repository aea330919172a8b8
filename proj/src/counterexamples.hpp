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
// Built-in non-existence instances with machine-checked certificates. Three
// small fixtures are refuted by exhausting their allocation spaces; the large
// laminar fixture ships with a deterministic refuter that, for any Nash
// allocation, derives a profitable coalition deviation through a fixed case
// ladder.

#pragma once

#include <optional>
#include <string>

#include "game.hpp"
#include "stability.hpp"
#include "structures.hpp"

namespace rsgeq {

struct Fixture {
  std::string name;
  Rsg game;
  CoalitionStructure structure;
  std::optional<PathWitness> path;          // when the structure is contiguous
  std::optional<PlanarWitness> embedding;   // when the structure is centralized
};

// Three agents on two identical linear resources, all non-empty coalitions:
// no allocation survives every coalition.
Fixture fixture_super_strong();

// Six agents on two resources with a contiguous structure (pairs {1,2},
// {3,4}, {5,6} and triples {1,2,3}, {4,5,6} plus singletons): no C-stable
// allocation exists.
Fixture fixture_contiguous();

// Five agents on two identical resources with a centralized structure given
// by a grid embedding: no C-stable allocation exists.
Fixture fixture_centralized();

// The large laminar fixture: 14052 agents; one resource of quota 53, 1000 of
// quota 8 and 1000 of quota 7, all Type 1, with vacated costs 98 > 97 > 96
// all above every sub-quota cost. The structure is six disjoint blocks of
// 2342 agents plus all singletons plus the grand coalition.
Fixture fixture_laminar_large();

struct NoEquilibriumCertificate {
  long long allocations = 0;  // size of the allocation space
  long long refuted = 0;      // allocations shown unstable
  std::optional<Allocation> stable_found;
  bool complete() const { return !stable_found && refuted == allocations; }
};

// Exhausts all m^n allocations and refutes each through is_C_stable. Throws
// BudgetExceeded when the space is too large.
NoEquilibriumCertificate verify_no_equilibrium(const Rsg& g, const RsgDerived& d,
                                               const CoalitionStructure& C,
                                               long long budget = kDefaultDeviationBudget);

struct RefuteResult {
  int step = 0;  // which case of the ladder fired (1, 2, 5a or 5b as 3..4)
  Coalition coalition;
  Deviation deviation;
  std::string note;
};

// For any Nash allocation of the large laminar fixture, produces a coalition
// of its structure together with a profitable deviation, following the case
// ladder: (1) the quota-53 resource runs high; (2) eight or more quota-8
// resources run high; otherwise (3) a block crowds the high quota-7
// resources, and a one-move or a two-for-one swap fires against a low
// resource the block barely touches. The returned deviation is replayed
// through deviation_improves before it is returned.
RefuteResult refute_laminar_large(const Rsg& g, const RsgDerived& d,
                                  const CoalitionStructure& C, const Allocation& a);

}  // namespace rsgeq
