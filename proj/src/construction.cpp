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

#include "construction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rsgeq {

namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream os;
  for (size_t k = 0; k < ids.size(); ++k) {
    if (k) os << ",";
    os << ids[k];
  }
  return os.str();
}

double binom(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c *= double(n - k + i) / i;
  return c;
}

}  // namespace

Allocation construct_nash(const Rsg& g, const RsgDerived& d) {
  const int m = g.n_resources();
  long long quota_sum = std::accumulate(d.quota.begin(), d.quota.end(), 0ll);
  long long lows = quota_sum - g.n_agents();
  if (lows < 0 || lows >= static_cast<long long>(d.type1.size()))
    throw std::logic_error("internal error: quota sum outside the feasible band");

  std::vector<int> target(d.quota);
  for (long long k = 0; k < lows; ++k)
    target[d.type1[d.type1.size() - 1 - k] - 1] -= 1;

  std::vector<int> assignment;
  assignment.reserve(g.n_agents());
  for (int i = 1; i <= m; ++i)
    for (int t = 0; t < target[i - 1]; ++t) assignment.push_back(i);
  return Allocation(g.n_agents(), m, std::move(assignment));
}

// ---------------------------------------------------------------------------
// Two-coloring

Coalition two_color_blacks(const CoalitionStructure& C, const Coalition& subset) {
  Coalition sub = subset;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (sub.size() != subset.size()) throw std::invalid_argument("subset has duplicates");
  for (int j : sub)
    if (j < 1 || j > C.n_agents) throw std::invalid_argument("subset agent out of range");
  if (sub.empty()) return {};

  // Restrict the structure to the subset; laminarity is preserved.
  std::map<int, int> local;
  for (size_t k = 0; k < sub.size(); ++k) local[sub[k]] = static_cast<int>(k) + 1;
  std::vector<Coalition> restricted;
  for (const auto& c : C.coalitions) {
    Coalition rc;
    for (int j : c) {
      auto it = local.find(j);
      if (it != local.end()) rc.push_back(it->second);
    }
    if (!rc.empty()) restricted.push_back(std::move(rc));
  }
  auto CR = CoalitionStructure::make(static_cast<int>(sub.size()), std::move(restricted));

  // Along an order that keeps every restricted coalition consecutive,
  // alternating colors leave each coalition balanced within one.
  PathWitness path = laminar_to_path(CR);
  Coalition blacks;
  for (size_t p = 0; p < path.order.size(); p += 2)
    blacks.push_back(sub[path.order[p] - 1]);
  std::sort(blacks.begin(), blacks.end());
  return blacks;
}

// ---------------------------------------------------------------------------
// Identical resources

bool high_low_balance_holds(const Rsg& g, const RsgDerived& d, const Allocation& a,
                            const CoalitionStructure& C) {
  LowHigh lh = classify_low_high(g, d, a);
  if (lh.low.empty() || lh.high.empty()) return true;
  for (const auto& c : C.coalitions) {
    std::vector<int> cnt(g.n_resources(), 0);
    for (int j : c) ++cnt[a.resource_of(j) - 1];
    int max_high = 0, min_low = a.n_agents();
    for (int i : lh.high) max_high = std::max(max_high, cnt[i - 1]);
    for (int i : lh.low) min_low = std::min(min_low, cnt[i - 1]);
    if (max_high > min_low + 1) return false;
  }
  return true;
}

Allocation round_robin_by_path(const Rsg& g, const PathWitness& order) {
  const int n = g.n_agents();
  if (static_cast<int>(order.order.size()) != n)
    throw std::invalid_argument("path must order every agent");
  std::vector<int> assignment(n, 0);
  for (int p = 1; p <= n; ++p) {
    int agent = order.order[p - 1];
    if (agent < 1 || agent > n || assignment[agent - 1] != 0)
      throw std::invalid_argument("path is not a permutation of the agents");
    assignment[agent - 1] = ((p - 1) % g.n_resources()) + 1;
  }
  return Allocation(n, g.n_resources(), std::move(assignment));
}

ConstructionResult construct_identical_contiguous_eq(
    const Rsg& g, const RsgDerived& d, const CoalitionStructure& C,
    const std::optional<PathWitness>& path) {
  if (!g.identical_resources())
    throw std::invalid_argument("round-robin construction needs identical resources");
  if (C.n_agents != g.n_agents())
    throw std::invalid_argument("structure and game disagree on the agent count");

  PathWitness order;
  if (path) {
    if (!witnesses_contiguous(C, *path))
      throw std::invalid_argument("given path does not witness the structure");
    order = *path;
  } else {
    auto found = find_contiguous_path(C);
    if (!found) throw std::invalid_argument("structure is not contiguous");
    order = *found;
  }

  ConstructionResult res{round_robin_by_path(g, order), {}};
  res.trace.push_back("path order: " + join_ids(order.order));
  res.trace.push_back("round-robin deal over " + std::to_string(g.n_resources()) +
                      " identical resources");
  if (!is_nash(g, d, res.allocation))
    throw std::logic_error("internal error: round-robin allocation is not Nash");
  if (!high_low_balance_holds(g, d, res.allocation, C))
    throw std::logic_error("internal error: round-robin allocation breaks the balance condition");
  return res;
}

// ---------------------------------------------------------------------------
// Two resources, laminar structure

namespace {

// Repairs the first coalition violating the closed-form conditions. Returns
// the rewired allocation, or nullopt when every coalition passes.
std::optional<Allocation> repair_one(const Rsg& g, const RsgDerived& d, const Allocation& a,
                                     const CoalitionStructure& C,
                                     const std::vector<Coalition>& order,
                                     std::string& note) {
  const Coalition* bad = nullptr;
  for (const auto& c : order) {
    if (!two_resource_lemma_stable(g, d, a, c)) { bad = &c; break; }
  }
  if (!bad) return std::nullopt;
  const Coalition& c = *bad;

  LowHigh lh = classify_low_high(g, d, a);
  int hi = lh.high.front();
  int lo = lh.low.front();
  Coalition on_hi, on_lo;
  for (int j : c) (a.resource_of(j) == hi ? on_hi : on_lo).push_back(j);

  std::vector<int> assignment(a.n_agents());
  for (int j = 1; j <= a.n_agents(); ++j) assignment[j - 1] = a.resource_of(j);

  if (on_lo.empty()) {
    // More than one member crowds the high resource while the coalition
    // misses the low one; moving a single member flips the orientation and
    // gives the coalition a foot on both resources.
    int mover = on_hi.at(1);
    assignment[mover - 1] = lo;
    note = "coalition {" + join_ids(c) + "}: moved agent " + std::to_string(mover) +
           " to the low resource";
  } else {
    // The high resource holds strictly more members although its vacated
    // cost is smaller. Swap a near-balanced pocket across the resources.
    const int k = static_cast<int>(on_lo.size()) + 1;
    std::set<int> pocket_hi;
    for (int j : on_lo) {
      // The smallest coalition around j inside c that reaches the high
      // resource pins a distinct high-side partner for j.
      const Coalition* tight = nullptr;
      for (const auto& cc : C.coalitions) {
        if (!std::binary_search(cc.begin(), cc.end(), j)) continue;
        if (!std::includes(c.begin(), c.end(), cc.begin(), cc.end())) continue;
        bool hits_hi = false;
        for (int x : cc)
          if (a.resource_of(x) == hi) { hits_hi = true; break; }
        if (!hits_hi) continue;
        if (!tight || cc.size() < tight->size()) tight = &cc;
      }
      if (!tight) throw std::logic_error("internal error: no coalition around a low member");
      for (int x : *tight) {
        if (a.resource_of(x) == hi) { pocket_hi.insert(x); break; }  // smallest id, cc sorted
      }
    }
    for (int j : on_hi) {
      if (static_cast<int>(pocket_hi.size()) >= k) break;
      pocket_hi.insert(j);
    }
    if (static_cast<int>(pocket_hi.size()) != k)
      throw std::logic_error("internal error: pocket on the high resource is short");

    Coalition pocket(pocket_hi.begin(), pocket_hi.end());
    pocket.insert(pocket.end(), on_lo.begin(), on_lo.end());
    std::sort(pocket.begin(), pocket.end());
    Coalition blacks = two_color_blacks(C, pocket);
    std::set<int> black_set(blacks.begin(), blacks.end());
    for (int j : pocket) assignment[j - 1] = black_set.count(j) ? lo : hi;
    note = "coalition {" + join_ids(c) + "}: recolored pocket {" + join_ids(pocket) +
           "}, blacks {" + join_ids(blacks) + "} to the low resource";
  }
  return Allocation(a.n_agents(), a.n_resources(), std::move(assignment));
}

}  // namespace

ConstructionResult construct_two_resource_laminar_eq(const Rsg& g, const RsgDerived& d,
                                                     const CoalitionStructure& C) {
  if (g.n_resources() != 2)
    throw std::invalid_argument("this construction needs exactly two resources");
  if (C.n_agents != g.n_agents())
    throw std::invalid_argument("structure and game disagree on the agent count");
  if (!is_laminar(C)) throw std::invalid_argument("structure is not laminar");

  const int n = g.n_agents();
  const int q1 = d.quota[0], q2 = d.quota[1];

  ConstructionResult res{Allocation(n, 2, std::vector<int>(n, 1)), {}};

  if (q1 + q2 == n) {
    // Both resources at quota: any extra occupant would pay above the minmax
    // cost, so no coalition can profit and any quota-respecting fill works.
    std::vector<int> assignment(n, 2);
    for (int j = 1; j <= q1; ++j) assignment[j - 1] = 1;
    res.allocation = Allocation(n, 2, std::move(assignment));
    res.trace.push_back("quotas sum to n: filled both resources to quota");
    return res;
  }

  if (q1 + q2 != n + 1 || d.type1.size() != 2)
    throw std::logic_error("internal error: two-resource quotas outside the feasible band");

  if (d.beta[0] == d.beta[1]) {
    // Equal vacated costs: color the agents against C, give the smaller-quota
    // resource that many black agents; the coloring balance bounds every
    // coalition's presence on the high resource by its low presence plus one.
    int small = (q1 <= q2) ? 1 : 2;
    int big = 3 - small;
    int q_small = std::min(q1, q2);
    Coalition everyone(n);
    std::iota(everyone.begin(), everyone.end(), 1);
    Coalition blacks = two_color_blacks(C, everyone);
    std::vector<int> assignment(n, big);
    for (int k = 0; k < q_small; ++k) assignment[blacks[k] - 1] = small;
    res.allocation = Allocation(n, 2, std::move(assignment));
    res.trace.push_back("colored fill: blacks {" + join_ids(blacks) + "}, resource " +
                        std::to_string(small) + " high with load " + std::to_string(q_small));
  } else {
    res.allocation = construct_nash(g, d);
    res.trace.push_back("starting from the plain Nash fill");
  }
  if (!is_nash(g, d, res.allocation))
    throw std::logic_error("internal error: start allocation is not Nash");

  std::vector<Coalition> order = C.coalitions;
  std::sort(order.begin(), order.end(), coalition_less);

  long long cap = 2ll * static_cast<long long>(C.coalitions.size()) * n * n + 16;
  for (long long it = 0; it < cap; ++it) {
    std::string note;
    auto next = repair_one(g, d, res.allocation, C, order, note);
    if (!next) {
      res.trace.push_back("all coalitions pass the closed-form conditions");
      return res;
    }
    if (!is_nash(g, d, *next))
      throw std::logic_error("internal error: repair left the Nash band");
    if (!gb_dominates(g, C, *next, res.allocation))
      throw std::logic_error("internal error: repair did not advance the potential");
    res.allocation = *next;
    res.trace.push_back(note);
  }
  throw std::logic_error("internal error: repair loop exceeded its bound");
}

// ---------------------------------------------------------------------------
// Exhaustive search

SearchResult find_equilibrium_by_search(const Rsg& g, const RsgDerived& d,
                                        const CoalitionStructure& C, long long budget) {
  if (C.n_agents != g.n_agents())
    throw std::invalid_argument("structure and game disagree on the agent count");
  const int n = g.n_agents();
  const int m = g.n_resources();

  // Agents sharing the same coalition memberships and cost environment are
  // interchangeable; one representative allocation per count profile suffices.
  std::map<std::vector<int>, std::vector<int>> classes;  // membership key -> agents
  for (int j = 1; j <= n; ++j) {
    std::vector<int> key;
    for (size_t k = 0; k < C.coalitions.size(); ++k)
      if (std::binary_search(C.coalitions[k].begin(), C.coalitions[k].end(), j))
        key.push_back(static_cast<int>(k));
    classes[key].push_back(j);
  }
  std::vector<std::vector<int>> members;
  for (auto& [key, agents] : classes) members.push_back(agents);
  std::sort(members.begin(), members.end());

  double total = 1.0;
  for (const auto& cls : members) {
    total *= binom(static_cast<int>(cls.size()) + m - 1, m - 1);
    if (total > 1e18) break;
  }
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("equilibrium search refused: about " + std::to_string(total) +
                         " candidate allocations exceed the budget of " + std::to_string(budget));

  SearchResult res;
  std::vector<int> assignment(n, 0);

  std::function<bool(size_t)> rec_class = [&](size_t ci) -> bool {
    if (ci == members.size()) {
      ++res.candidates;
      Allocation a(n, m, assignment);
      StabilityReport rep = is_C_stable(g, d, a, C, budget);
      if (rep.stable) {
        res.equilibrium = std::move(a);
        return true;
      }
      return false;
    }
    const auto& cls = members[ci];
    std::function<bool(int, size_t)> rec_split = [&](int r, size_t from) -> bool {
      if (r == m) {
        for (size_t k = from; k < cls.size(); ++k) assignment[cls[k] - 1] = m;
        return rec_class(ci + 1);
      }
      for (size_t take = 0; take <= cls.size() - from; ++take) {
        for (size_t k = 0; k < take; ++k) assignment[cls[from + k] - 1] = r;
        if (rec_split(r + 1, from + take)) return true;
      }
      return false;
    };
    return rec_split(1, 0);
  };
  rec_class(0);
  return res;
}

}  // namespace rsgeq
