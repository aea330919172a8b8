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

#include "rsgeq.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <string>

#include "construction.hpp"
#include "counterexamples.hpp"
#include "io.hpp"
#include "reproduce.hpp"
#include "sampling.hpp"

using namespace rsgeq;

struct rsgeq_instance {
  Instance inst;
};

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into statuses. `parsing` widens the
// net so malformed instance fields surface as parse errors.
template <typename F>
rsgeq_status guarded(bool parsing, F&& body) {
  try {
    body();
    return RSGEQ_OK;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return RSGEQ_ERR_PARSE;
  } catch (const BudgetExceeded& e) {
    g_last_error = e.what();
    return RSGEQ_ERR_BUDGET;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return parsing ? RSGEQ_ERR_PARSE : RSGEQ_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSGEQ_ERR_INTERNAL;
  }
}

// Maps a notion name onto the coalition set to defend against, verifying any
// claimed class membership of the instance's structure.
CoalitionStructure resolve_notion(const Instance& inst, const char* notion_c) {
  std::string notion = notion_c ? notion_c : "";
  int n = inst.game.n_agents();
  if (notion.empty() || notion == "coalition") return inst.structure;
  if (notion == "nash") return singletons(n);
  if (notion == "super-strong") {
    if (n > 20) throw BudgetExceeded("super-strong domain too large to enumerate");
    return all_nonempty_coalitions(n);
  }
  if (notion == "partition") {
    if (!is_partition(inst.structure))
      throw std::invalid_argument("the instance's structure is not a partition");
    return inst.structure;
  }
  if (notion == "laminar") {
    if (!is_laminar(inst.structure))
      throw std::invalid_argument("the instance's structure is not laminar");
    return inst.structure;
  }
  if (notion == "contiguous") {
    if (inst.path) {
      if (!witnesses_contiguous(inst.structure, *inst.path))
        throw std::invalid_argument("the supplied path does not witness the structure");
    } else if (!find_contiguous_path(inst.structure)) {
      throw std::invalid_argument("the instance's structure is not contiguous");
    }
    return inst.structure;
  }
  if (notion == "centralized") {
    if (!inst.embedding)
      throw std::invalid_argument("the centralized notion needs an embedding witness");
    if (!verify_embedding(inst.structure, *inst.embedding))
      throw std::invalid_argument("the supplied embedding does not witness the structure");
    return inst.structure;
  }
  throw std::invalid_argument("unknown notion '" + notion + "'");
}

bool looks_like_large_laminar(const Instance& inst) {
  return inst.game.n_agents() == 14052 && inst.game.n_resources() == 2001;
}

// For a non-Nash allocation some agent holds an improving unilateral move;
// find one by scanning resources for the cheapest entry cost.
Deviation unilateral_improvement(const Rsg& g, const RsgDerived& d, const Allocation& a) {
  int best_i = 0, best_rank = 0;
  for (int i = 1; i <= g.n_resources(); ++i) {
    int r = d.cost_rank(i, a.load(i) + 1);
    if (!best_i || r < best_rank) { best_i = i; best_rank = r; }
  }
  for (int j = 1; j <= g.n_agents(); ++j) {
    int from = a.resource_of(j);
    if (from == best_i) continue;
    if (d.cost_rank(from, a.load(from)) > best_rank) return {{j}, {best_i}};
  }
  throw std::logic_error("internal error: no unilateral improvement found");
}

}  // namespace

extern "C" {

const char* rsgeq_version(void) { return "rsgeq 1.0.0"; }

const char* rsgeq_last_error(void) { return g_last_error.c_str(); }

void rsgeq_string_free(char* s) { std::free(s); }

rsgeq_status rsgeq_instance_parse(const char* json_text, rsgeq_instance** out) {
  if (!json_text || !out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  return guarded(true, [&] {
    auto* h = new rsgeq_instance{parse_instance(json_text)};
    *out = h;
  });
}

rsgeq_status rsgeq_instance_from_fixture(const char* name, rsgeq_instance** out) {
  if (!name || !out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  return guarded(false, [&] {
    std::string s = name;
    Fixture f = [&] {
      if (s == "super-strong") return fixture_super_strong();
      if (s == "contiguous") return fixture_contiguous();
      if (s == "centralized") return fixture_centralized();
      if (s == "laminar-large") return fixture_laminar_large();
      throw std::invalid_argument("unknown fixture '" + s + "'");
    }();
    *out = new rsgeq_instance{fixture_to_instance(f)};
  });
}

rsgeq_status rsgeq_instance_format(const rsgeq_instance* inst, char** json_out) {
  if (!inst || !json_out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  return guarded(false, [&] { *json_out = dup_string(format_instance(inst->inst)); });
}

void rsgeq_instance_free(rsgeq_instance* inst) { delete inst; }

rsgeq_status rsgeq_classify(const rsgeq_instance* h, long long budget, char** json_out) {
  if (!h || !json_out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  (void)budget;  // classification work is bounded by the instance itself
  return guarded(false, [&] {
    const Instance& inst = h->inst;
    const Rsg& g = inst.game;
    RsgDerived d = derive_rsg(g);
    Json j;
    j["agents"] = g.n_agents();
    j["resources"] = g.n_resources();
    j["identical_resources"] = g.identical_resources();
    j["two_resources"] = g.n_resources() == 2;
    j["alpha"] = rational_to_json(d.alpha);
    if (g.n_resources() <= 64) {
      j["quota"] = d.quota;
    } else {
      int qmin = d.quota[0], qmax = d.quota[0];
      for (int q : d.quota) { qmin = std::min(qmin, q); qmax = std::max(qmax, q); }
      j["quota_range"] = {qmin, qmax};
    }
    j["type1_count"] = d.type1.size();
    j["type2_count"] = d.type2.size();

    Json s;
    const CoalitionStructure& C = inst.structure;
    s["coalitions"] = C.coalitions.size();
    s["all_singletons"] = all_singletons(C);
    s["partition"] = is_partition(C);
    s["laminar"] = is_laminar(C);
    s["super_strong_domain"] =
        g.n_agents() <= 20 && is_super_strong_domain(C);
    try {
      auto path = inst.path;
      if (path && !witnesses_contiguous(C, *path)) path.reset();
      if (!path) path = find_contiguous_path(C);
      s["contiguous"] = path.has_value();
      if (path) s["path"] = path_to_json(*path);
    } catch (const BudgetExceeded&) {
      s["contiguous"] = "unknown";
    }
    s["embedding_supplied"] = inst.embedding.has_value();
    if (inst.embedding) s["embedding_verified"] = verify_embedding(C, *inst.embedding);
    j["structure"] = std::move(s);
    *json_out = dup_string(j.dump(2));
  });
}

rsgeq_status rsgeq_check(const rsgeq_instance* h, const char* allocation_json,
                         const char* notion, long long budget, int* stable_out,
                         char** json_out) {
  if (!h || !allocation_json || !stable_out || !json_out) {
    g_last_error = "null argument";
    return RSGEQ_ERR_INVALID;
  }
  return guarded(false, [&] {
    const Instance& inst = h->inst;
    Json aj = Json::parse(allocation_json);
    Allocation a =
        allocation_from_json(aj, inst.game.n_agents(), inst.game.n_resources());
    RsgDerived d = derive_rsg(inst.game);
    CoalitionStructure C = resolve_notion(inst, notion);
    StabilityReport rep = is_C_stable(inst.game, d, a, C, budget);
    Json j = stability_report_to_json(inst.game, a, rep);
    j["notion"] = notion && *notion ? notion : "coalition";
    j["coalitions_checked"] = C.coalitions.size();
    *stable_out = rep.stable ? 1 : 0;
    *json_out = dup_string(j.dump(2));
  });
}

rsgeq_status rsgeq_solve(const rsgeq_instance* h, const char* notion,
                         unsigned long long seed, long long budget, int* found_out,
                         char** json_out) {
  if (!h || !found_out || !json_out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  return guarded(false, [&] {
    const Instance& inst = h->inst;
    const Rsg& g = inst.game;
    RsgDerived d = derive_rsg(g);
    CoalitionStructure C = resolve_notion(inst, notion);
    Json j;
    j["seed"] = seed;
    j["notion"] = notion && *notion ? notion : "coalition";

    std::optional<Allocation> result;
    std::string method;
    if (C.coalitions.empty() || all_singletons(C)) {
      result = construct_nash(g, d);
      method = "nash-construction";
    } else if (g.identical_resources()) {
      std::optional<PathWitness> path = inst.path;
      if (path && !witnesses_contiguous(C, *path)) path.reset();
      try {
        if (!path) path = find_contiguous_path(C);
      } catch (const BudgetExceeded&) {
        path.reset();
      }
      if (path) {
        auto cr = construct_identical_contiguous_eq(g, d, C, path);
        result = cr.allocation;
        method = "round-robin";
        j["trace"] = cr.trace;
      }
    }
    if (!result && method.empty() && g.n_resources() == 2 && is_laminar(C)) {
      auto cr = construct_two_resource_laminar_eq(g, d, C);
      result = cr.allocation;
      method = "two-resource-laminar";
      j["trace"] = cr.trace;
    }

    if (result) {
      j["method"] = method;
      j["allocation"] = allocation_to_json(*result)["allocation"];
      try {
        StabilityReport rep = is_C_stable(g, d, *result, C, budget);
        if (!rep.stable) throw std::logic_error("internal error: construction not stable");
        j["oracle_verified"] = true;
      } catch (const BudgetExceeded&) {
        j["oracle_verified"] = "skipped (budget)";
      }
      *found_out = 1;
      *json_out = dup_string(j.dump(2));
      return;
    }

    // No construction applies: exhaustive symmetry-reduced search.
    SearchResult sr = find_equilibrium_by_search(g, d, C, budget);
    j["method"] = "exhaustive-search";
    j["candidates_examined"] = sr.candidates;
    if (sr.equilibrium) {
      j["allocation"] = allocation_to_json(*sr.equilibrium)["allocation"];
      *found_out = 1;
    } else {
      // A per-allocation certificate when the full space is small enough to
      // list: every allocation with its violating coalition.
      double space = 1.0;
      for (int t = 0; t < g.n_agents(); ++t) space *= g.n_resources();
      if (space <= 4096.0) {
        Json cert = Json::array();
        std::vector<int> profile(g.n_agents(), 1);
        while (true) {
          Allocation a(g.n_agents(), g.n_resources(), profile);
          StabilityReport rep = is_C_stable(g, d, a, C, budget);
          if (rep.stable) throw std::logic_error("internal error: search missed a solution");
          cert.push_back({{"allocation", a.groups()},
                          {"violating_coalition", rep.witness->coalition},
                          {"targets", rep.witness->targets}});
          int t = 0;
          while (t < g.n_agents() && profile[t] == g.n_resources()) profile[t++] = 1;
          if (t == g.n_agents()) break;
          ++profile[t];
        }
        j["certificate"] = std::move(cert);
      }
      j["result"] = "none";
      *found_out = 0;
    }
    *json_out = dup_string(j.dump(2));
  });
}

rsgeq_status rsgeq_refute(const rsgeq_instance* h, const char* allocation_json,
                          unsigned long long seed, long long budget, int* refuted_out,
                          char** json_out) {
  if (!h || !refuted_out || !json_out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  return guarded(false, [&] {
    const Instance& inst = h->inst;
    const Rsg& g = inst.game;
    RsgDerived d = derive_rsg(g);
    Json j;
    j["seed"] = seed;

    if (allocation_json) {
      Json aj = Json::parse(allocation_json);
      Allocation a = allocation_from_json(aj, g.n_agents(), g.n_resources());
      if (looks_like_large_laminar(inst)) {
        if (!is_nash(g, d, a)) {
          Deviation dev = unilateral_improvement(g, d, a);
          j["refuted"] = true;
          j["note"] = "not a Nash allocation; one agent improves alone";
          j["deviation"] = {{"agent", dev.coalition[0]}, {"to", dev.targets[0]}};
          *refuted_out = 1;
        } else {
          RefuteResult res = refute_laminar_large(g, d, inst.structure, a);
          j["refuted"] = true;
          j["witness"] = refute_result_to_json(g, a, res);
          *refuted_out = 1;
        }
      } else {
        StabilityReport rep = is_C_stable(g, d, a, inst.structure, budget);
        j["refuted"] = !rep.stable;
        if (rep.witness) j["witness"] = stability_report_to_json(g, a, rep);
        *refuted_out = rep.stable ? 0 : 1;
      }
      *json_out = dup_string(j.dump(2));
      return;
    }

    if (looks_like_large_laminar(inst)) {
      // Equilibria must be Nash; refute the constructed Nash allocation and a
      // batch of seeded random ones.
      std::mt19937_64 rng(seed);
      const int trials = 25;
      int refuted = 0;
      Json first;
      for (int t = 0; t < trials; ++t) {
        Allocation a = t == 0 ? construct_nash(g, d) : random_nash(rng, g, d);
        RefuteResult res = refute_laminar_large(g, d, inst.structure, a);
        if (t == 0) first = refute_result_to_json(g, a, res);
        ++refuted;
      }
      j["refuted"] = true;
      j["nash_allocations_refuted"] = refuted;
      j["first_witness"] = std::move(first);
      *refuted_out = 1;
      *json_out = dup_string(j.dump(2));
      return;
    }

    NoEquilibriumCertificate cert = verify_no_equilibrium(g, d, inst.structure, budget);
    j["allocations"] = cert.allocations;
    j["allocations_refuted"] = cert.refuted;
    j["refuted"] = cert.complete();
    if (cert.stable_found)
      j["stable_allocation"] = allocation_to_json(*cert.stable_found)["allocation"];
    *refuted_out = cert.complete() ? 1 : 0;
    *json_out = dup_string(j.dump(2));
  });
}

rsgeq_status rsgeq_reproduce(unsigned long long seed, long long budget,
                             int* consistent_out, char** text_out) {
  if (!consistent_out || !text_out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  return guarded(false, [&] {
    ReproduceReport rep = reproduce_table(seed, budget);
    *consistent_out = rep.all_consistent() ? 1 : 0;
    *text_out = dup_string(format_reproduce_report(rep));
  });
}

rsgeq_status rsgeq_hierarchy_demo(int n_agents, int* ok_out, char** text_out) {
  if (!ok_out || !text_out) { g_last_error = "null argument"; return RSGEQ_ERR_INVALID; }
  return guarded(false, [&] {
    auto checks = hierarchy_demo(n_agents);
    bool all_ok = true;
    std::ostringstream os;
    os << "structure-class hierarchy over " << n_agents << " agents\n";
    for (const auto& c : checks) {
      all_ok = all_ok && c.ok;
      os << (c.ok ? "pass" : "FAIL") << "  " << c.claim << " (" << c.detail << ")\n";
    }
    os << (all_ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    *ok_out = all_ok ? 1 : 0;
    *text_out = dup_string(os.str());
  });
}

}  // extern "C"
