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
// Instance and report serialization. Instances are JSON with exact numbers:
// integers are taken as-is, fractions travel as "p/q" strings, and
// floating-point literals are rejected outright. A resource entry may carry
// "copies" to stand for that many identical resources.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "counterexamples.hpp"
#include "game.hpp"
#include "stability.hpp"
#include "structures.hpp"

namespace rsgeq {

using Json = nlohmann::json;

// Exact JSON number handling.
Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);

struct Instance {
  Rsg game;
  CoalitionStructure structure;
  std::optional<PathWitness> path;
  std::optional<PlanarWitness> embedding;
};

// Fields: agents, resources [{name, costs, copies?}], coalitions, optional
// path, optional embedding {positions: [{agent,x,y}], circles: [{coalition,
// center, radius}]}. Throws std::invalid_argument on malformed input.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);

// Allocations as agent groups per resource: {"allocation": [[...], ...]}.
Allocation allocation_from_json(const Json& j, int n_agents, int n_resources);
Json allocation_to_json(const Allocation& a);

Json path_to_json(const PathWitness& w);
PathWitness path_from_json(const Json& j);
Json embedding_to_json(const PlanarWitness& w);
PlanarWitness embedding_from_json(const Json& j);

// Verdict, violating coalition, the origin-to-target count matrix of the
// witness deviation and per-member cost deltas.
Json stability_report_to_json(const Rsg& g, const Allocation& a, const StabilityReport& rep);

Json refute_result_to_json(const Rsg& g, const Allocation& a, const RefuteResult& res);

Instance fixture_to_instance(const Fixture& f);

}  // namespace rsgeq
