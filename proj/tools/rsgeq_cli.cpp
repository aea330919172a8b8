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
// Command-line front end. Exit codes: 0 = stable / found / consistent,
// 1 = unstable / none / refuted-absent, 2 = error or budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rsgeq.h"

namespace {

constexpr int kExitStable = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitError = 2;

struct InstanceHandle {
  rsgeq_instance* p = nullptr;
  ~InstanceHandle() { rsgeq_instance_free(p); }
};

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { rsgeq_string_free(p); }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int fail(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kExitError;
}

int fail_api(const std::string& op) {
  std::cerr << "error: " << op << ": " << rsgeq_last_error() << "\n";
  return kExitError;
}

// Loads an instance from a file path or a "fixture:NAME" reference.
bool load_instance(const std::string& ref, InstanceHandle& h, int& exit_code) {
  rsgeq_status st;
  if (ref.rfind("fixture:", 0) == 0) {
    st = rsgeq_instance_from_fixture(ref.substr(8).c_str(), &h.p);
  } else {
    auto text = read_file(ref);
    if (!text) {
      exit_code = fail("cannot read instance file '" + ref + "'");
      return false;
    }
    st = rsgeq_instance_parse(text->c_str(), &h.p);
  }
  if (st != RSGEQ_OK) {
    exit_code = fail_api("loading '" + ref + "'");
    return false;
  }
  return true;
}

// Reports go to --out when given, stdout otherwise.
int emit(const std::string& out_path, const std::string& header, const std::string& body,
         int exit_code) {
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return fail("cannot write '" + out_path + "'");
    out << header << body << "\n";
    std::cout << header;
  } else {
    std::cout << header << body << "\n";
  }
  return exit_code;
}

std::string header_line(const std::string& cmd, std::uint64_t seed) {
  return "# rsgeq " + cmd + " seed=" + std::to_string(seed) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition-restricted equilibria in resource selection games"};
  app.require_subcommand(1);

  std::string instance_ref, allocation_path, notion, out_path;
  long long budget = 20'000'000;
  std::uint64_t seed = 1;
  int demo_agents = 4;

  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance)
      sub->add_option("instance", instance_ref,
                      "instance file, or fixture:{super-strong|contiguous|centralized|laminar-large}")
          ->required();
    sub->add_option("--notion", notion,
                    "nash | coalition | super-strong | partition | laminar | contiguous | centralized");
    sub->add_option("--budget", budget, "enumeration budget");
    sub->add_option("--seed", seed, "random seed (printed in the report header)");
    sub->add_option("--out", out_path, "write the report to this file");
  };

  auto* c_classify = app.add_subcommand("classify", "structure classes and game regime");
  add_common(c_classify, true);
  auto* c_check = app.add_subcommand("check", "stability of a given allocation");
  add_common(c_check, true);
  c_check->add_option("allocation", allocation_path, "allocation JSON file")->required();
  auto* c_solve = app.add_subcommand("solve", "find a stable allocation or certify none");
  add_common(c_solve, true);
  auto* c_refute = app.add_subcommand("refute", "produce a refutation certificate");
  add_common(c_refute, true);
  c_refute->add_option("allocation", allocation_path, "allocation JSON file (optional)");
  auto* c_repro = app.add_subcommand("reproduce", "run the sixteen-cell guarantee matrix");
  add_common(c_repro, false);
  auto* c_demo = app.add_subcommand("hierarchy-demo", "machine-check the class hierarchy");
  add_common(c_demo, false);
  c_demo->add_option("--agents", demo_agents, "number of agents (default 4)");

  CLI11_PARSE(app, argc, argv);

  if (c_repro->parsed()) {
    OwnedString text;
    int consistent = 0;
    if (rsgeq_reproduce(seed, budget, &consistent, &text.p) != RSGEQ_OK)
      return fail_api("reproduce");
    return emit(out_path, header_line("reproduce", seed), text.p,
                consistent ? kExitStable : kExitUnstable);
  }

  if (c_demo->parsed()) {
    OwnedString text;
    int ok = 0;
    if (rsgeq_hierarchy_demo(demo_agents, &ok, &text.p) != RSGEQ_OK)
      return fail_api("hierarchy-demo");
    return emit(out_path, header_line("hierarchy-demo", seed), text.p,
                ok ? kExitStable : kExitUnstable);
  }

  InstanceHandle inst;
  int exit_code = kExitError;
  if (!load_instance(instance_ref, inst, exit_code)) return exit_code;
  const char* notion_c = notion.empty() ? nullptr : notion.c_str();

  if (c_classify->parsed()) {
    OwnedString text;
    if (rsgeq_classify(inst.p, budget, &text.p) != RSGEQ_OK) return fail_api("classify");
    return emit(out_path, header_line("classify", seed), text.p, kExitStable);
  }

  if (c_check->parsed()) {
    auto alloc = read_file(allocation_path);
    if (!alloc) return fail("cannot read allocation file '" + allocation_path + "'");
    OwnedString text;
    int stable = 0;
    if (rsgeq_check(inst.p, alloc->c_str(), notion_c, budget, &stable, &text.p) != RSGEQ_OK)
      return fail_api("check");
    return emit(out_path, header_line("check", seed), text.p,
                stable ? kExitStable : kExitUnstable);
  }

  if (c_solve->parsed()) {
    OwnedString text;
    int found = 0;
    if (rsgeq_solve(inst.p, notion_c, seed, budget, &found, &text.p) != RSGEQ_OK)
      return fail_api("solve");
    return emit(out_path, header_line("solve", seed), text.p,
                found ? kExitStable : kExitUnstable);
  }

  if (c_refute->parsed()) {
    std::optional<std::string> alloc;
    if (!allocation_path.empty()) {
      alloc = read_file(allocation_path);
      if (!alloc) return fail("cannot read allocation file '" + allocation_path + "'");
    }
    OwnedString text;
    int refuted = 0;
    if (rsgeq_refute(inst.p, alloc ? alloc->c_str() : nullptr, seed, budget, &refuted,
                     &text.p) != RSGEQ_OK)
      return fail_api("refute");
    // A successful refutation means instability, hence exit code 1 mirrors
    // check's "unstable"; an allocation (or instance) surviving refutation
    // exits 0.
    return emit(out_path, header_line("refute", seed), text.p,
                refuted ? kExitUnstable : kExitStable);
  }

  return fail("no subcommand");
}
