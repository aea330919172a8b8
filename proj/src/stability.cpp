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

#include "stability.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rsgeq {

namespace {

void validate_deviation(const Allocation& a, const Deviation& dev) {
  if (dev.coalition.empty()) throw std::invalid_argument("empty deviation");
  if (dev.targets.size() != dev.coalition.size())
    throw std::invalid_argument("deviation needs one target per member");
  for (size_t k = 0; k < dev.coalition.size(); ++k) {
    int j = dev.coalition[k];
    if (j < 1 || j > a.n_agents()) throw std::invalid_argument("deviating agent out of range");
    if (k > 0 && dev.coalition[k - 1] >= j)
      throw std::invalid_argument("deviation coalition must be sorted and duplicate-free");
    if (dev.targets[k] < 1 || dev.targets[k] > a.n_resources())
      throw std::invalid_argument("deviation target out of range");
  }
}

double binom(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c *= double(n - k + i) / i;
  return c;
}

}  // namespace

Allocation apply_deviation(const Allocation& a, const Deviation& dev) {
  validate_deviation(a, dev);
  std::vector<int> assignment(a.n_agents());
  for (int j = 1; j <= a.n_agents(); ++j) assignment[j - 1] = a.resource_of(j);
  for (size_t k = 0; k < dev.coalition.size(); ++k)
    assignment[dev.coalition[k] - 1] = dev.targets[k];
  return Allocation(a.n_agents(), a.n_resources(), std::move(assignment));
}

bool deviation_improves(const Rsg& g, const Allocation& a, const Deviation& dev) {
  Allocation b = apply_deviation(a, dev);
  bool strict = false;
  for (int j : dev.coalition) {
    const Rational& before = g.cost(a.resource_of(j), a.load(a.resource_of(j)));
    const Rational& after = g.cost(b.resource_of(j), b.load(b.resource_of(j)));
    if (after > before) return false;
    if (after < before) strict = true;
  }
  return strict;
}

// ---------------------------------------------------------------------------
// Exhaustive RSG stability

StabilityReport is_c_stable_rsg(const Rsg& g, const RsgDerived& d, const Allocation& a,
                                const Coalition& c, long long budget) {
  const int m = g.n_resources();
  std::vector<std::vector<int>> members(m);
  for (int j : c) {
    if (j < 1 || j > a.n_agents()) throw std::invalid_argument("coalition agent out of range");
    members[a.resource_of(j) - 1].push_back(j);
  }
  std::vector<int> origins;
  for (int r = 1; r <= m; ++r)
    if (!members[r - 1].empty()) origins.push_back(r);

  // Members sharing an origin are interchangeable, so candidates are counted
  // as one origin-to-target matrix each.
  double total = 1.0;
  for (int r : origins) {
    total *= binom(static_cast<int>(members[r - 1].size()) + m - 1, m - 1);
    if (total > 1e18) break;
  }
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("c-stability check refused: about " + std::to_string(total) +
                         " candidate deviations exceed the budget of " + std::to_string(budget));

  StabilityReport rep;
  rep.stable = true;

  std::vector<std::vector<int>> T(m, std::vector<int>(m, 0));
  std::vector<int> newload(m);

  auto evaluate = [&]() {
    ++rep.examined;
    for (int s = 1; s <= m; ++s) {
      int col = 0;
      for (int r : origins) col += T[r - 1][s - 1];
      newload[s - 1] = a.load(s) - static_cast<int>(members[s - 1].size()) + col;
    }
    bool strict = false;
    for (int r : origins) {
      int before = d.cost_rank(r, a.load(r));
      for (int s = 1; s <= m; ++s) {
        if (T[r - 1][s - 1] == 0) continue;
        int after = d.cost_rank(s, newload[s - 1]);
        if (after > before) return false;
        if (after < before) strict = true;
      }
    }
    if (!strict) return false;

    Deviation dev;
    std::map<int, int> target_of;
    for (int r : origins) {
      size_t idx = 0;
      for (int s = 1; s <= m; ++s)
        for (int t = 0; t < T[r - 1][s - 1]; ++t) target_of[members[r - 1][idx++]] = s;
    }
    for (const auto& [agent, target] : target_of) {
      dev.coalition.push_back(agent);
      dev.targets.push_back(target);
    }
    if (!deviation_improves(g, a, dev))
      throw std::logic_error("internal error: deviation witness failed replay");
    rep.stable = false;
    rep.witness = std::move(dev);
    return true;
  };

  std::function<bool(size_t)> rec_origin = [&](size_t oi) -> bool {
    if (oi == origins.size()) return evaluate();
    int r = origins[oi];
    int cnt = static_cast<int>(members[r - 1].size());
    std::function<bool(int, int)> rec_target = [&](int s, int remaining) -> bool {
      if (s == m) {
        T[r - 1][m - 1] = remaining;
        bool hit = rec_origin(oi + 1);
        T[r - 1][m - 1] = 0;
        return hit;
      }
      for (int t = 0; t <= remaining; ++t) {
        T[r - 1][s - 1] = t;
        if (rec_target(s + 1, remaining - t)) {
          T[r - 1][s - 1] = 0;
          return true;
        }
      }
      T[r - 1][s - 1] = 0;
      return false;
    };
    return rec_target(1, cnt);
  };
  rec_origin(0);
  return rep;
}

StabilityReport is_C_stable(const Rsg& g, const RsgDerived& d, const Allocation& a,
                            const CoalitionStructure& C, long long budget) {
  std::vector<Coalition> order = C.coalitions;
  std::sort(order.begin(), order.end(), coalition_less);
  StabilityReport rep;
  rep.stable = true;
  for (const auto& c : order) {
    StabilityReport sub = is_c_stable_rsg(g, d, a, c, budget - rep.examined);
    rep.examined += sub.examined;
    if (!sub.stable) {
      rep.stable = false;
      rep.witness = std::move(sub.witness);
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Generic strategic-form stability

StabilityReport is_c_stable_generic(const StrategicGame& sg, const std::vector<int>& profile,
                                    const Coalition& c, long long budget) {
  if (static_cast<int>(profile.size()) != sg.n_agents)
    throw std::invalid_argument("profile size mismatch");
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] < 1 || c[k] > sg.n_agents) throw std::invalid_argument("coalition agent out of range");
    if (k > 0 && c[k - 1] >= c[k]) throw std::invalid_argument("coalition must be sorted");
  }
  double total = 1.0;
  for (int j : c) total *= sg.strategy_counts[j - 1];
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("c-stability check refused: joint strategy space exceeds the budget");

  const auto& base = sg.payoffs.at(profile);
  StabilityReport rep;
  rep.stable = true;
  std::vector<int> choice(c.size(), 1);
  std::vector<int> p = profile;
  while (true) {
    ++rep.examined;
    for (size_t k = 0; k < c.size(); ++k) p[c[k] - 1] = choice[k];
    const auto& u = sg.payoffs.at(p);
    bool ok = true, strict = false;
    for (int j : c) {
      if (u[j - 1] < base[j - 1]) { ok = false; break; }
      if (u[j - 1] > base[j - 1]) strict = true;
    }
    if (ok && strict) {
      Deviation dev;
      dev.coalition = c;
      dev.targets.assign(choice.begin(), choice.end());
      rep.stable = false;
      rep.witness = std::move(dev);
      return rep;
    }
    size_t k = 0;
    while (k < c.size() && choice[k] == sg.strategy_counts[c[k] - 1]) choice[k++] = 1;
    if (k == c.size()) break;
    ++choice[k];
  }
  return rep;
}

StabilityReport is_C_stable_generic(const StrategicGame& sg, const std::vector<int>& profile,
                                    const CoalitionStructure& C, long long budget) {
  std::vector<Coalition> order = C.coalitions;
  std::sort(order.begin(), order.end(), coalition_less);
  StabilityReport rep;
  rep.stable = true;
  for (const auto& c : order) {
    StabilityReport sub = is_c_stable_generic(sg, profile, c, budget - rep.examined);
    rep.examined += sub.examined;
    if (!sub.stable) {
      rep.stable = false;
      rep.witness = std::move(sub.witness);
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Two-resource closed form

bool two_resource_lemma_stable(const Rsg& g, const RsgDerived& d, const Allocation& a,
                               const Coalition& c) {
  if (g.n_resources() != 2)
    throw std::invalid_argument("closed-form stability needs exactly two resources");
  LowHigh lh = classify_low_high(g, d, a);  // throws unless Nash
  if (lh.low.empty()) return true;          // both resources filled to quota
  int lo = lh.low.front();
  int hi = lh.high.front();
  int s = 0, h = 0;
  for (int j : c) {
    if (j < 1 || j > a.n_agents()) throw std::invalid_argument("coalition agent out of range");
    if (a.resource_of(j) == lo) ++s;
    else ++h;
  }
  if (s == 0) return h <= 1;
  const Rational& beta_hi = d.beta[hi - 1];
  const Rational& beta_lo = d.beta[lo - 1];
  if (beta_hi == beta_lo) return h <= s + 1;
  if (beta_hi < beta_lo) return h <= s;
  return true;  // movers off the low resource could only lose
}

// ---------------------------------------------------------------------------
// Potentials

long long gamma_value(const Allocation& a, const CoalitionStructure& C) {
  auto groups = a.groups();
  long long total = 0;
  std::vector<char> in_c(a.n_agents() + 1, 0);
  for (const auto& c : C.coalitions) {
    for (int j : c) in_c[j] = 1;
    for (const auto& grp : groups) {
      for (int j : grp) {
        if (in_c[j]) { ++total; break; }
      }
    }
    for (int j : c) in_c[j] = 0;
  }
  return total;
}

Rational beta_value(const Rsg& g, const Allocation& a) {
  Rational total(Int(0));
  for (int i = 1; i <= g.n_resources(); ++i)
    if (a.load(i) > 0) total += g.cost(i, a.load(i));
  return total;
}

bool gb_dominates(const Rsg& g, const CoalitionStructure& C,
                  const Allocation& after, const Allocation& before) {
  long long ga = gamma_value(after, C), gb = gamma_value(before, C);
  if (ga != gb) return ga > gb;
  return beta_value(g, after) < beta_value(g, before);
}

}  // namespace rsgeq
