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

#include "counterexamples.hpp"

#include <algorithm>
#include <numeric>

namespace rsgeq {

namespace {

std::shared_ptr<const std::vector<Rational>> table_from_ints(const std::vector<long long>& v) {
  auto t = std::make_shared<std::vector<Rational>>();
  for (long long x : v) t->push_back(rat(x));
  return t;
}

std::shared_ptr<const std::vector<Rational>> linear_table(int n) {
  auto t = std::make_shared<std::vector<Rational>>();
  for (int q = 1; q <= n; ++q) t->push_back(rat(q));
  return t;
}

}  // namespace

Fixture fixture_super_strong() {
  auto table = linear_table(3);
  Rsg game(3, {{"r1", table}, {"r2", table}});
  return {"super-strong", std::move(game), all_nonempty_coalitions(3), std::nullopt,
          std::nullopt};
}

Fixture fixture_contiguous() {
  Rsg game(6, {{"r1", table_from_ints({1, 2, 4, 5, 6, 7})},
               {"r2", table_from_ints({1, 2, 3, 4, 5, 6})}});
  std::vector<Coalition> cs;
  for (int j = 1; j <= 6; ++j) cs.push_back({j});
  cs.push_back({1, 2});
  cs.push_back({3, 4});
  cs.push_back({5, 6});
  cs.push_back({1, 2, 3});
  cs.push_back({4, 5, 6});
  auto C = CoalitionStructure::make(6, std::move(cs));
  PathWitness path{{1, 2, 3, 4, 5, 6}};
  return {"contiguous", std::move(game), std::move(C), path, std::nullopt};
}

Fixture fixture_centralized() {
  auto table = linear_table(5);
  Rsg game(5, {{"r1", table}, {"r2", table}});
  std::vector<Coalition> cs;
  for (int j = 1; j <= 5; ++j) cs.push_back({j});
  cs.push_back({1, 2});
  cs.push_back({3, 4});
  cs.push_back({4, 5});
  cs.push_back({1, 2, 3, 5});
  cs.push_back({2, 3, 4, 5});
  auto C = CoalitionStructure::make(5, std::move(cs));

  PlanarWitness w;
  w.positions = {{rat(8), rat(8)}, {rat(8), rat(6)}, {rat(2), rat(6)},
                 {rat(0), rat(3)}, {rat(4), rat(0)}};
  // Coalition indices follow the construction order above.
  w.circles = {{1, 1, rat(1)}, {2, 2, rat(1)}, {3, 3, rat(1)}, {4, 4, rat(1)},
               {5, 5, rat(1)}, {6, 1, rat(2)}, {7, 3, rat(4)}, {8, 5, rat(5)},
               {9, 1, rat(9)}, {10, 5, rat(8)}};
  return {"centralized", std::move(game), std::move(C), std::nullopt, w};
}

Fixture fixture_laminar_large() {
  const int n = 14052;
  // One resource vacates at 98, the quota-8 group at 97, the quota-7 group at
  // 96; every sub-quota cost stays far below, and all quotas price at 100.
  std::vector<long long> fx(n), fy(n), fz(n);
  for (int q = 1; q <= n; ++q) {
    fx[q - 1] = (q <= 51) ? q : (q == 52 ? 98 : q + 47);
    fy[q - 1] = (q <= 6) ? q : (q == 7 ? 97 : q + 92);
    fz[q - 1] = (q <= 5) ? q : (q == 6 ? 96 : q + 93);
  }
  auto tx = table_from_ints(fx);
  auto ty = table_from_ints(fy);
  auto tz = table_from_ints(fz);
  std::vector<Resource> rs;
  rs.push_back({"x", tx});
  for (int k = 1; k <= 1000; ++k) rs.push_back({"y" + std::to_string(k), ty});
  for (int k = 1; k <= 1000; ++k) rs.push_back({"z" + std::to_string(k), tz});
  Rsg game(n, std::move(rs));

  std::vector<Coalition> cs;
  const int block = n / 6;
  for (int b = 0; b < 6; ++b) {
    Coalition c(block);
    std::iota(c.begin(), c.end(), b * block + 1);
    cs.push_back(std::move(c));
  }
  for (int j = 1; j <= n; ++j) cs.push_back({j});
  Coalition everyone(n);
  std::iota(everyone.begin(), everyone.end(), 1);
  cs.push_back(std::move(everyone));
  return {"laminar-large", std::move(game), CoalitionStructure::make(n, std::move(cs)),
          std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Exhaustive refutation

NoEquilibriumCertificate verify_no_equilibrium(const Rsg& g, const RsgDerived& d,
                                               const CoalitionStructure& C, long long budget) {
  double space = 1.0;
  for (int j = 0; j < g.n_agents(); ++j) space *= g.n_resources();
  if (space > 100000.0)
    throw BudgetExceeded("exhaustive refutation refused: allocation space too large");

  NoEquilibriumCertificate cert;
  std::vector<int> profile(g.n_agents(), 1);
  while (true) {
    ++cert.allocations;
    Allocation a(g.n_agents(), g.n_resources(), profile);
    StabilityReport rep = is_C_stable(g, d, a, C, budget);
    if (rep.stable) {
      cert.stable_found = std::move(a);
      return cert;
    }
    ++cert.refuted;
    int j = 0;
    while (j < g.n_agents() && profile[j] == g.n_resources()) profile[j++] = 1;
    if (j == g.n_agents()) break;
    ++profile[j];
  }
  return cert;
}

// ---------------------------------------------------------------------------
// The large-fixture refuter

RefuteResult refute_laminar_large(const Rsg& g, const RsgDerived& d,
                                  const CoalitionStructure& C, const Allocation& a) {
  const int n = g.n_agents();
  int x = 0;
  std::vector<int> my, mz;
  for (int i = 1; i <= g.n_resources(); ++i) {
    if (d.quota[i - 1] == 53) {
      if (x) throw std::invalid_argument("unexpected fixture shape");
      x = i;
    } else if (d.quota[i - 1] == 8) {
      my.push_back(i);
    } else if (d.quota[i - 1] == 7) {
      mz.push_back(i);
    } else {
      throw std::invalid_argument("unexpected fixture shape");
    }
  }
  if (!x || my.size() != 1000 || mz.size() != 1000 || n != 14052)
    throw std::invalid_argument("unexpected fixture shape");
  if (!is_nash(g, d, a)) throw std::invalid_argument("refuter needs a Nash allocation");

  auto groups = a.groups();
  auto is_high = [&](int i) { return a.load(i) == d.quota[i - 1]; };

  RefuteResult res;
  auto finish = [&](int step, Coalition coalition, const std::vector<int>& target_of,
                    std::string note) {
    Deviation dev;
    dev.coalition = std::move(coalition);
    for (int j : dev.coalition) dev.targets.push_back(target_of[j - 1]);
    if (!deviation_improves(g, a, dev))
      throw std::logic_error("internal error: refuter deviation failed replay");
    res.step = step;
    res.coalition = dev.coalition;
    res.deviation = std::move(dev);
    res.note = std::move(note);
    return res;
  };

  std::vector<int> target_of(n);
  for (int j = 1; j <= n; ++j) target_of[j - 1] = a.resource_of(j);

  Coalition everyone(n);
  std::iota(everyone.begin(), everyone.end(), 1);

  if (is_high(x)) {
    // The big resource runs high, so two small resources run low; the grand
    // coalition rotates their occupants through the big resource, leaving it
    // two short of quota.
    std::vector<int> lows;
    for (int i : my)
      if (!is_high(i)) lows.push_back(i);
    for (int i : mz)
      if (!is_high(i)) lows.push_back(i);
    int i1 = lows.at(0), i2 = lows.at(1);
    size_t at = 0;
    for (int t = 0; t < d.quota[i1 - 1]; ++t) target_of[groups[x - 1][at++] - 1] = i1;
    for (int t = 0; t < d.quota[i2 - 1]; ++t) target_of[groups[x - 1][at++] - 1] = i2;
    for (int j : groups[i1 - 1]) target_of[j - 1] = x;
    for (int j : groups[i2 - 1]) target_of[j - 1] = x;
    return finish(1, everyone, target_of, "big resource high: grand-coalition rotation");
  }

  std::vector<int> high_y, low_z;
  for (int i : my)
    if (is_high(i)) high_y.push_back(i);
  for (int i : mz)
    if (!is_high(i)) low_z.push_back(i);

  if (high_y.size() >= 8) {
    // Too many quota-8 resources run high: rotate 49 big-resource agents onto
    // seven of them, push their 56 occupants onto eight low quota-7
    // resources, and pull those 48 occupants onto the big resource.
    for (size_t t = 0; t < 49; ++t)
      target_of[groups[x - 1][t] - 1] = high_y[t / 7];
    std::vector<int> movers_y;
    for (int t = 0; t < 7; ++t)
      for (int j : groups[high_y[t] - 1]) movers_y.push_back(j);
    for (size_t t = 0; t < movers_y.size(); ++t) target_of[movers_y[t] - 1] = low_z[t / 7];
    for (int t = 0; t < 8; ++t)
      for (int j : groups[low_z[t] - 1]) target_of[j - 1] = x;
    return finish(2, everyone, target_of, "eight high quota-8 resources: three-way rotation");
  }

  // A block crowds the high quota-7 resources; it must leave some low
  // resource in the big/quota-8 tier nearly untouched.
  std::vector<const Coalition*> blocks;
  for (const auto& c : C.coalitions)
    if (c.size() > 1 && static_cast<int>(c.size()) < n) blocks.push_back(&c);
  std::vector<char> in_c(n + 1, 0);
  const Coalition* best = nullptr;
  long long best_count = -1;
  for (const Coalition* c : blocks) {
    for (int j : *c) in_c[j] = 1;
    long long count = 0;
    for (int i : mz)
      if (is_high(i))
        for (int j : groups[i - 1]) count += in_c[j];
    for (int j : *c) in_c[j] = 0;
    if (count > best_count) { best_count = count; best = c; }
  }
  const Coalition& c = *best;
  for (int j : c) in_c[j] = 1;

  int zstar = 0, j1 = 0, j2 = 0;
  for (int i : mz) {
    if (!is_high(i)) continue;
    int found = 0, f1 = 0, f2 = 0;
    for (int j : groups[i - 1]) {
      if (!in_c[j]) continue;
      if (++found == 1) f1 = j;
      else { f2 = j; break; }
    }
    if (found >= 2) { zstar = i; j1 = f1; j2 = f2; break; }
  }
  if (!zstar) throw std::logic_error("internal error: no crowded high quota-7 resource");

  std::vector<int> lows_xy;
  if (!is_high(x)) lows_xy.push_back(x);
  for (int i : my)
    if (!is_high(i)) lows_xy.push_back(i);
  for (int y : lows_xy) {
    int cnt = 0, jt = 0;
    for (int j : groups[y - 1]) {
      if (in_c[j]) { ++cnt; jt = j; }
      if (cnt > 1) break;
    }
    if (cnt == 0) {
      target_of[j1 - 1] = y;
      return finish(3, c, target_of, "one member fills the untouched low resource");
    }
    if (cnt == 1) {
      target_of[j1 - 1] = y;
      target_of[j2 - 1] = y;
      target_of[jt - 1] = zstar;
      return finish(4, c, target_of, "two-for-one swap against a barely touched low resource");
    }
  }
  throw std::logic_error("internal error: every low resource is doubly covered");
}

}  // namespace rsgeq
