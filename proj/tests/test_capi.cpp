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
// Exercises the shared library through the C header only, the way an
// external consumer would.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "rsgeq.h"

namespace {

struct Handle {
  rsgeq_instance* p = nullptr;
  ~Handle() { rsgeq_instance_free(p); }
};

struct Str {
  char* p = nullptr;
  ~Str() { rsgeq_string_free(p); }
};

constexpr const char* kTiny = R"({
  "agents": 3,
  "resources": [{"name": "r", "costs": [1, 2, 3], "copies": 2}],
  "coalitions": [[1], [2], [3]]
})";

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(std::string(rsgeq_version()).find("rsgeq") != std::string::npos);
  rsgeq_instance* out = nullptr;
  CHECK(rsgeq_instance_parse("{malformed", &out) == RSGEQ_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(std::string(rsgeq_last_error()).size() > 0);
}

TEST_CASE("parse, format and reparse") {
  Handle h;
  REQUIRE(rsgeq_instance_parse(kTiny, &h.p) == RSGEQ_OK);
  Str s;
  REQUIRE(rsgeq_instance_format(h.p, &s.p) == RSGEQ_OK);
  Handle h2;
  CHECK(rsgeq_instance_parse(s.p, &h2.p) == RSGEQ_OK);
}

TEST_CASE("fixtures load by name") {
  for (const char* name : {"super-strong", "contiguous", "centralized", "laminar-large"}) {
    Handle h;
    CHECK(rsgeq_instance_from_fixture(name, &h.p) == RSGEQ_OK);
  }
  rsgeq_instance* out = nullptr;
  CHECK(rsgeq_instance_from_fixture("no-such", &out) == RSGEQ_ERR_INVALID);
}

TEST_CASE("classify reports regime and classes") {
  Handle h;
  REQUIRE(rsgeq_instance_from_fixture("contiguous", &h.p) == RSGEQ_OK);
  Str s;
  REQUIRE(rsgeq_classify(h.p, 1000000, &s.p) == RSGEQ_OK);
  auto j = nlohmann::json::parse(s.p);
  CHECK(j["two_resources"] == true);
  CHECK(j["structure"]["contiguous"] == true);
  CHECK(j["structure"]["laminar"] == false);
}

TEST_CASE("check distinguishes notions") {
  Handle h;
  REQUIRE(rsgeq_instance_from_fixture("super-strong", &h.p) == RSGEQ_OK);
  const char* alloc = R"({"allocation": [[1, 2], [3]]})";
  int stable = -1;
  Str s1;
  REQUIRE(rsgeq_check(h.p, alloc, "nash", 1000000, &stable, &s1.p) == RSGEQ_OK);
  CHECK(stable == 1);
  Str s2;
  REQUIRE(rsgeq_check(h.p, alloc, "super-strong", 1000000, &stable, &s2.p) == RSGEQ_OK);
  CHECK(stable == 0);
  auto j = nlohmann::json::parse(s2.p);
  CHECK(j.contains("violating_coalition"));
}

TEST_CASE("solve finds an equilibrium or certifies none") {
  Handle solvable;
  REQUIRE(rsgeq_instance_parse(kTiny, &solvable.p) == RSGEQ_OK);
  int found = -1;
  Str s1;
  REQUIRE(rsgeq_solve(solvable.p, nullptr, 1, 1000000, &found, &s1.p) == RSGEQ_OK);
  CHECK(found == 1);

  Handle none;
  REQUIRE(rsgeq_instance_from_fixture("centralized", &none.p) == RSGEQ_OK);
  Str s2;
  REQUIRE(rsgeq_solve(none.p, nullptr, 1, 10000000, &found, &s2.p) == RSGEQ_OK);
  CHECK(found == 0);
  auto j = nlohmann::json::parse(s2.p);
  CHECK(j["certificate"].size() == 32);
}

TEST_CASE("refute certifies non-existence for small fixtures") {
  Handle h;
  REQUIRE(rsgeq_instance_from_fixture("contiguous", &h.p) == RSGEQ_OK);
  int refuted = -1;
  Str s;
  REQUIRE(rsgeq_refute(h.p, nullptr, 1, 10000000, &refuted, &s.p) == RSGEQ_OK);
  CHECK(refuted == 1);
  auto j = nlohmann::json::parse(s.p);
  CHECK(j["allocations"] == 64);
  CHECK(j["allocations_refuted"] == 64);
}

TEST_CASE("hierarchy demo and reproduce succeed through the C API") {
  int ok = 0;
  Str s;
  REQUIRE(rsgeq_hierarchy_demo(3, &ok, &s.p) == RSGEQ_OK);
  CHECK(ok == 1);
  CHECK(rsgeq_hierarchy_demo(1, &ok, &s.p) == RSGEQ_ERR_INVALID);
}

TEST_CASE("null arguments are rejected, not crashed on") {
  CHECK(rsgeq_instance_parse(nullptr, nullptr) == RSGEQ_ERR_INVALID);
  CHECK(rsgeq_classify(nullptr, 0, nullptr) == RSGEQ_ERR_INVALID);
  rsgeq_string_free(nullptr);
  rsgeq_instance_free(nullptr);
}
