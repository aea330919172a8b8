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

#include "io.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace rsgeq {

Json rational_to_json(const Rational& v) {
  if (v.denominator() == 1) {
    const Int& num = v.numerator();
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
      return Json(static_cast<long long>(num));
  }
  return Json(format_rational(v));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Int(j.get<unsigned long long>()));
    return rat(j.get<long long>());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float())
    throw std::invalid_argument("floating-point literals are not accepted; use \"p/q\"");
  throw std::invalid_argument("expected an exact number");
}

// ---------------------------------------------------------------------------
// Instances

namespace {

int int_field(const Json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + name + "'");
  return j[name].get<int>();
}

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  int n = int_field(j, "agents");
  if (!j.contains("resources") || !j["resources"].is_array())
    throw std::invalid_argument("missing 'resources' list");

  std::vector<Resource> resources;
  for (const auto& rj : j["resources"]) {
    if (!rj.is_object() || !rj.contains("costs") || !rj["costs"].is_array())
      throw std::invalid_argument("each resource needs a 'costs' list");
    auto table = std::make_shared<std::vector<Rational>>();
    for (const auto& cj : rj["costs"]) table->push_back(rational_from_json(cj));
    std::string name = rj.contains("name") ? rj["name"].get<std::string>() : "";
    int copies = rj.contains("copies") ? rj["copies"].get<int>() : 1;
    if (copies < 1) throw std::invalid_argument("'copies' must be positive");
    for (int k = 1; k <= copies; ++k) {
      std::string rname = name.empty()
                              ? "r" + std::to_string(resources.size() + 1)
                              : (copies == 1 ? name : name + std::to_string(k));
      resources.push_back({std::move(rname), table});
    }
  }
  Rsg game(n, std::move(resources));

  std::vector<Coalition> cs;
  if (j.contains("coalitions")) {
    if (!j["coalitions"].is_array()) throw std::invalid_argument("'coalitions' must be a list");
    for (const auto& cj : j["coalitions"]) {
      Coalition c;
      for (const auto& v : cj) c.push_back(v.get<int>());
      cs.push_back(std::move(c));
    }
  }
  Instance inst{std::move(game), CoalitionStructure::make(n, std::move(cs)), std::nullopt,
                std::nullopt};
  if (j.contains("path")) inst.path = path_from_json(j["path"]);
  if (j.contains("embedding")) inst.embedding = embedding_from_json(j["embedding"]);
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["agents"] = inst.game.n_agents();
  Json rs = Json::array();
  // A run of resources sharing one table collapses into a 'copies' entry,
  // but only when the names follow the base+index scheme the parser uses to
  // expand it, so serialization round-trips exactly.
  int m = inst.game.n_resources();
  for (int i = 1; i <= m;) {
    const auto& r = inst.game.resource(i);
    int run = 1;
    while (i + run <= m && inst.game.resource(i + run).costs == r.costs) ++run;
    std::string base;
    if (run > 1 && r.name.size() > 1 && r.name.back() == '1') {
      base = r.name.substr(0, r.name.size() - 1);
      for (int k = 0; k < run; ++k) {
        if (inst.game.resource(i + k).name != base + std::to_string(k + 1)) {
          base.clear();
          break;
        }
      }
    }
    if (base.empty()) run = 1;
    Json rj;
    rj["name"] = base.empty() ? r.name : base;
    Json costs = Json::array();
    for (const auto& v : *r.costs) costs.push_back(rational_to_json(v));
    rj["costs"] = std::move(costs);
    if (run > 1) rj["copies"] = run;
    rs.push_back(std::move(rj));
    i += run;
  }
  j["resources"] = std::move(rs);
  Json cs = Json::array();
  for (const auto& c : inst.structure.coalitions) cs.push_back(c);
  j["coalitions"] = std::move(cs);
  if (inst.path) j["path"] = path_to_json(*inst.path);
  if (inst.embedding) j["embedding"] = embedding_to_json(*inst.embedding);
  return j;
}

Instance parse_instance(const std::string& text) {
  Json j = Json::parse(text);  // throws nlohmann parse_error on bad JSON
  return instance_from_json(j);
}

std::string format_instance(const Instance& inst) { return instance_to_json(inst).dump(2); }

// ---------------------------------------------------------------------------
// Allocations and witnesses

Allocation allocation_from_json(const Json& j, int n_agents, int n_resources) {
  const Json* groups_json = nullptr;
  if (j.is_object() && j.contains("allocation")) groups_json = &j["allocation"];
  else if (j.is_array()) groups_json = &j;
  else throw std::invalid_argument("allocation must be a list of agent groups");
  std::vector<std::vector<int>> groups;
  for (const auto& gj : *groups_json) {
    std::vector<int> grp;
    for (const auto& v : gj) grp.push_back(v.get<int>());
    groups.push_back(std::move(grp));
  }
  return Allocation::from_groups(n_agents, n_resources, groups);
}

Json allocation_to_json(const Allocation& a) {
  Json j;
  j["allocation"] = a.groups();
  return j;
}

Json path_to_json(const PathWitness& w) { return Json(w.order); }

PathWitness path_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("'path' must be a list of agent ids");
  PathWitness w;
  for (const auto& v : j) w.order.push_back(v.get<int>());
  return w;
}

Json embedding_to_json(const PlanarWitness& w) {
  Json positions = Json::array();
  for (size_t k = 0; k < w.positions.size(); ++k) {
    positions.push_back({{"agent", static_cast<int>(k) + 1},
                         {"x", rational_to_json(w.positions[k].first)},
                         {"y", rational_to_json(w.positions[k].second)}});
  }
  Json circles = Json::array();
  for (const auto& c : w.circles) {
    circles.push_back({{"coalition", c.coalition_index},
                       {"center", c.center_agent},
                       {"radius", rational_to_json(c.radius)}});
  }
  return Json{{"positions", std::move(positions)}, {"circles", std::move(circles)}};
}

PlanarWitness embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("positions") || !j.contains("circles"))
    throw std::invalid_argument("'embedding' needs 'positions' and 'circles'");
  std::vector<std::pair<int, std::pair<Rational, Rational>>> pts;
  for (const auto& pj : j["positions"]) {
    pts.push_back({pj.at("agent").get<int>(),
                   {rational_from_json(pj.at("x")), rational_from_json(pj.at("y"))}});
  }
  PlanarWitness w;
  w.positions.resize(pts.size());
  std::vector<char> seen(pts.size() + 1, 0);
  for (const auto& [agent, xy] : pts) {
    if (agent < 1 || agent > static_cast<int>(pts.size()) || seen[agent])
      throw std::invalid_argument("embedding positions must cover each agent once");
    seen[agent] = 1;
    w.positions[agent - 1] = xy;
  }
  for (const auto& cj : j["circles"]) {
    w.circles.push_back({cj.at("coalition").get<int>(), cj.at("center").get<int>(),
                         rational_from_json(cj.at("radius"))});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

Json deviation_to_json(const Rsg& g, const Allocation& a, const Deviation& dev) {
  Json j;
  if (dev.coalition.size() <= 64) j["coalition"] = dev.coalition;
  j["coalition_size"] = dev.coalition.size();
  Json moves = Json::array();
  std::map<std::pair<int, int>, int> matrix;  // (origin, target) -> member count
  Allocation after = apply_deviation(a, dev);
  Json deltas = Json::array();
  long long unchanged = 0;
  for (size_t k = 0; k < dev.coalition.size(); ++k) {
    int agent = dev.coalition[k];
    int from = a.resource_of(agent), to = dev.targets[k];
    ++matrix[{from, to}];
    if (from != to) moves.push_back({{"agent", agent}, {"from", from}, {"to", to}});
    Rational delta = g.cost(to, after.load(to)) - g.cost(from, a.load(from));
    if (delta == Rational(Int(0))) {
      ++unchanged;
    } else {
      deltas.push_back({{"agent", agent}, {"cost_delta", rational_to_json(delta)}});
    }
  }
  Json mj = Json::array();
  for (const auto& [cell, count] : matrix) {
    if (cell.first == cell.second) continue;
    mj.push_back({{"from", cell.first}, {"to", cell.second}, {"count", count}});
  }
  j["moves"] = std::move(moves);
  j["matrix"] = std::move(mj);
  j["cost_deltas"] = std::move(deltas);
  j["members_with_unchanged_cost"] = unchanged;
  return j;
}

}  // namespace

Json stability_report_to_json(const Rsg& g, const Allocation& a, const StabilityReport& rep) {
  Json j;
  j["stable"] = rep.stable;
  j["examined"] = rep.examined;
  if (rep.witness) {
    j["violating_coalition"] = rep.witness->coalition;
    j["deviation"] = deviation_to_json(g, a, *rep.witness);
  }
  return j;
}

Json refute_result_to_json(const Rsg& g, const Allocation& a, const RefuteResult& res) {
  Json j;
  j["step"] = res.step;
  j["note"] = res.note;
  j["violating_coalition_size"] = res.coalition.size();
  j["deviation"] = deviation_to_json(g, a, res.deviation);
  return j;
}

Instance fixture_to_instance(const Fixture& f) {
  return Instance{f.game, f.structure, f.path, f.embedding};
}

}  // namespace rsgeq
