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
// Seeded random generators for games, coalition structures and Nash
// allocations. All draws go through a caller-owned mt19937_64, so a fixed
// seed reproduces every sample.

#pragma once

#include <memory>
#include <random>

#include "game.hpp"
#include "structures.hpp"

namespace rsgeq {

// A strictly increasing table of n integer costs drawn from 1..n*spread.
std::shared_ptr<const std::vector<Rational>> random_cost_table(std::mt19937_64& rng,
                                                               int n_agents, int spread = 3);

// n_resources independent random tables.
Rsg random_rsg(std::mt19937_64& rng, int n_agents, int n_resources, int spread = 3);

// One random table shared by every resource.
Rsg random_identical_rsg(std::mt19937_64& rng, int n_agents, int n_resources, int spread = 3);

// A uniform random set partition into blocks of random sizes.
CoalitionStructure random_partition(std::mt19937_64& rng, int n_agents);

// A random laminar family built by recursive splitting of the agent set.
CoalitionStructure random_laminar(std::mt19937_64& rng, int n_agents);

// Random intervals of a random agent order; the order witnesses contiguity.
CoalitionStructure random_contiguous(std::mt19937_64& rng, int n_agents);

// A uniform random Nash allocation: a random set of Type-1 resources runs
// low, agents are shuffled into the resulting loads.
Allocation random_nash(std::mt19937_64& rng, const Rsg& g, const RsgDerived& d);

}  // namespace rsgeq
