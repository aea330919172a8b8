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
// The guarantee-matrix runner. Sixteen cells pair a coalition-structure
// family (partition, laminar, contiguous, centralized) with a cost regime
// (general, two resources, identical resources, two identical resources).
// A guaranteed cell is backed by running the matching construction or search
// on seeded random instances and verifying each output against the
// exhaustive stability oracle; a non-guaranteed cell is backed by a built-in
// instance whose lack of an equilibrium is machine-checked.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stability.hpp"

namespace rsgeq {

struct CellResult {
  std::string family;   // partition | laminar | contiguous | centralized
  std::string regime;   // general | two | identical | two-identical
  bool guaranteed;      // the claimed entry: true = equilibrium always exists
  bool pass;            // evidence agrees with the claim
  std::string evidence;
};

struct ReproduceReport {
  std::uint64_t seed = 0;
  std::vector<CellResult> cells;
  bool all_consistent() const;
};

// Runs the evidence for every cell. Deterministic for a fixed seed.
ReproduceReport reproduce_table(std::uint64_t seed,
                                long long budget = kDefaultDeviationBudget);

// A printable matrix plus one line per cell.
std::string format_reproduce_report(const ReproduceReport& rep);

}  // namespace rsgeq
