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
// Brute-force oracles and small builders shared by the test binaries. The
// oracles deliberately use the dumbest correct method available so that they
// share no code with the implementations they check.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <vector>

#include "game.hpp"
#include "structures.hpp"

namespace rsgeq::testutil {

inline std::shared_ptr<const std::vector<Rational>> table(std::vector<long long> v) {
  auto t = std::make_shared<std::vector<Rational>>();
  for (long long x : v) t->push_back(rat(x));
  return t;
}

inline Rsg two_resource_game(int n, std::vector<long long> f1, std::vector<long long> f2) {
  return Rsg(n, {{"r1", table(std::move(f1))}, {"r2", table(std::move(f2))}});
}

// Contiguity oracle: tries every permutation of the agents.
inline bool contiguous_by_permutations(const CoalitionStructure& C) {
  std::vector<int> order(C.n_agents);
  std::iota(order.begin(), order.end(), 1);
  do {
    if (witnesses_contiguous(C, PathWitness{order})) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Two-coloring oracle: is `blacks` one of the subsets of `subset` of the
// required size whose per-coalition balance never exceeds one? Checked by
// enumerating all subsets of that size.
inline bool valid_coloring_by_enumeration(const CoalitionStructure& C,
                                          const Coalition& subset,
                                          const Coalition& blacks) {
  int s = static_cast<int>(subset.size());
  int k = (s + 1) / 2;
  std::vector<char> in_subset(C.n_agents + 1, 0);
  for (int j : subset) in_subset[j] = 1;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    if (std::popcount(mask) != k) continue;
    Coalition candidate;
    for (int t = 0; t < s; ++t)
      if (mask & (1u << t)) candidate.push_back(subset[t]);
    std::vector<char> black(C.n_agents + 1, 0);
    for (int j : candidate) black[j] = 1;
    bool ok = true;
    for (const auto& c : C.coalitions) {
      int b = 0, w = 0;
      for (int j : c) {
        if (!in_subset[j]) continue;
        (black[j] ? b : w)++;
      }
      if (std::abs(b - w) > 1) { ok = false; break; }
    }
    if (ok && candidate == blacks) return true;
  }
  return false;
}

// All allocations of n agents over m resources, as assignment vectors.
inline std::vector<std::vector<int>> all_assignments(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 1);
  while (true) {
    out.push_back(a);
    int j = 0;
    while (j < n && a[j] == m) a[j++] = 1;
    if (j == n) break;
    ++a[j];
  }
  return out;
}

// All strictly increasing tables of length n with values in 1..hi.
inline std::vector<std::vector<long long>> all_increasing_tables(int n, int hi) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long next) -> void {
    if (static_cast<int>(cur.size()) == n) { out.push_back(cur); return; }
    for (long long v = next; v <= hi; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace rsgeq::testutil
