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
// Recognition, construction and witness verification for the coalition
// structure classes: partition, laminar, contiguous (path witness) and
// centralized (planar circle witness).

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "game.hpp"
#include "rational.hpp"

namespace rsgeq {

struct CoalitionStructure {
  int n_agents = 0;
  // Input order preserved; each coalition sorted ascending; duplicates removed.
  std::vector<Coalition> coalitions;

  // Validates ids, sorts members, deduplicates coalitions.
  static CoalitionStructure make(int n_agents, std::vector<Coalition> coalitions);

  bool contains(const Coalition& c) const;
};

// The full domain of non-empty coalitions over 1..n.
CoalitionStructure all_nonempty_coalitions(int n_agents);
// The singleton structure (Nash domain).
CoalitionStructure singletons(int n_agents);

struct PathWitness {
  std::vector<int> order;  // permutation of 1..n
};

struct Circle {
  int coalition_index = 0;  // 1-based index into CoalitionStructure::coalitions
  int center_agent = 0;     // must belong to the coalition
  Rational radius;          // > 0
};

struct PlanarWitness {
  std::vector<std::pair<Rational, Rational>> positions;  // [j-1] = (x, y)
  std::vector<Circle> circles;                           // exactly one per coalition
};

// Pairwise disjoint cover of 1..n (the empty structure counts as degenerate
// member of every class).
bool is_partition(const CoalitionStructure& C);

// Every intersecting pair nested.
bool is_laminar(const CoalitionStructure& C);

// True when every coalition is a singleton (the structure lies inside the
// Nash domain).
bool all_singletons(const CoalitionStructure& C);

// True when C is exactly the set of all non-empty coalitions.
bool is_super_strong_domain(const CoalitionStructure& C);

// Does `w` order every coalition consecutively?
bool witnesses_contiguous(const CoalitionStructure& C, const PathWitness& w);

// Exact contiguity recognition. Laminar structures take a direct constructive
// route; otherwise an exact dynamic program over placed-agent subsets is used
// (a prefix extends iff the next agent lies in every partially placed
// coalition). Throws BudgetExceeded for non-laminar structures beyond
// max_dp_agents.
std::optional<PathWitness> find_contiguous_path(const CoalitionStructure& C,
                                                int max_dp_agents = 22);

// The recursive laminar-to-path construction: split off a maximal proper
// coalition, order its inside first, the rest after. Throws on non-laminar
// input.
PathWitness laminar_to_path(const CoalitionStructure& C);

// Builds a circle witness from a path witness via the star-padded line
// construction: agents sit on a line with gaps widened so that the circle of
// each coalition interval, centered at its last agent on the path with radius
// equal to the interval span, captures exactly the interval. Singleton
// intervals get radius 1/2. Throws if `w` does not witness C.
PlanarWitness contiguous_to_embedding(const CoalitionStructure& C, const PathWitness& w);

// Exact membership-equivalence check over squared rational distances,
// boundary included.
bool verify_embedding(const CoalitionStructure& C, const PlanarWitness& w);

// One machine-checked claim of the class-hierarchy demonstration.
struct HierarchyCheck {
  std::string claim;
  bool ok = false;
  std::string detail;
};

// Witness structures for the strict inclusions and exclusions of the class
// hierarchy, each membership/non-membership machine-checked at the given n.
std::vector<HierarchyCheck> hierarchy_demo(int n_agents);

}  // namespace rsgeq
