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

#include "structures.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace rsgeq {

namespace {

bool is_subset(const Coalition& a, const Coalition& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int intersection_size(const Coalition& a, const Coalition& b) {
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoalitionStructure

CoalitionStructure CoalitionStructure::make(int n_agents, std::vector<Coalition> coalitions) {
  if (n_agents < 1) throw std::invalid_argument("need at least one agent");
  CoalitionStructure out;
  out.n_agents = n_agents;
  for (auto& c : coalitions) {
    if (c.empty()) throw std::invalid_argument("empty coalition");
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int j : c)
      if (j < 1 || j > n_agents) throw std::invalid_argument("agent id out of range in coalition");
    if (!out.contains(c)) out.coalitions.push_back(std::move(c));
  }
  return out;
}

bool CoalitionStructure::contains(const Coalition& c) const {
  return std::find(coalitions.begin(), coalitions.end(), c) != coalitions.end();
}

CoalitionStructure all_nonempty_coalitions(int n_agents) {
  if (n_agents < 1 || n_agents > 20)
    throw std::invalid_argument("full coalition domain supported for 1..20 agents");
  std::vector<Coalition> cs;
  for (uint32_t mask = 1; mask < (1u << n_agents); ++mask) {
    Coalition c;
    for (int j = 1; j <= n_agents; ++j)
      if (mask & (1u << (j - 1))) c.push_back(j);
    cs.push_back(std::move(c));
  }
  return CoalitionStructure::make(n_agents, std::move(cs));
}

CoalitionStructure singletons(int n_agents) {
  std::vector<Coalition> cs;
  for (int j = 1; j <= n_agents; ++j) cs.push_back({j});
  return CoalitionStructure::make(n_agents, std::move(cs));
}

// ---------------------------------------------------------------------------
// Class predicates

bool is_partition(const CoalitionStructure& C) {
  if (C.coalitions.empty()) return true;
  std::vector<char> seen(C.n_agents + 1, 0);
  int covered = 0;
  for (const auto& c : C.coalitions) {
    for (int j : c) {
      if (seen[j]) return false;
      seen[j] = 1;
      ++covered;
    }
  }
  return covered == C.n_agents;
}

bool is_laminar(const CoalitionStructure& C) {
  const auto& cs = C.coalitions;
  for (size_t a = 0; a < cs.size(); ++a) {
    for (size_t b = a + 1; b < cs.size(); ++b) {
      int inter = intersection_size(cs[a], cs[b]);
      if (inter == 0) continue;
      if (inter != static_cast<int>(std::min(cs[a].size(), cs[b].size()))) return false;
    }
  }
  return true;
}

bool all_singletons(const CoalitionStructure& C) {
  for (const auto& c : C.coalitions)
    if (c.size() != 1) return false;
  return true;
}

bool is_super_strong_domain(const CoalitionStructure& C) {
  if (C.n_agents > 20) return false;
  long long want = (1ll << C.n_agents) - 1;
  if (static_cast<long long>(C.coalitions.size()) != want) return false;
  std::set<Coalition> have(C.coalitions.begin(), C.coalitions.end());
  return static_cast<long long>(have.size()) == want;
}

// ---------------------------------------------------------------------------
// Contiguity

bool witnesses_contiguous(const CoalitionStructure& C, const PathWitness& w) {
  const int n = C.n_agents;
  if (static_cast<int>(w.order.size()) != n) return false;
  std::vector<int> pos(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    int j = w.order[p - 1];
    if (j < 1 || j > n || pos[j] != 0) return false;
    pos[j] = p;
  }
  for (const auto& c : C.coalitions) {
    int lo = n + 1, hi = 0;
    for (int j : c) {
      lo = std::min(lo, pos[j]);
      hi = std::max(hi, pos[j]);
    }
    if (hi - lo + 1 != static_cast<int>(c.size())) return false;
  }
  return true;
}

std::optional<PathWitness> find_contiguous_path(const CoalitionStructure& C,
                                                int max_dp_agents) {
  const int n = C.n_agents;

  // Singletons and the full agent set are intervals under any order.
  std::vector<uint32_t> cons;
  if (n <= 31) {
    for (const auto& c : C.coalitions) {
      if (c.size() < 2 || static_cast<int>(c.size()) == n) continue;
      uint32_t mask = 0;
      for (int j : c) mask |= 1u << (j - 1);
      cons.push_back(mask);
    }
  }
  bool unconstrained = true;
  for (const auto& c : C.coalitions)
    if (c.size() >= 2 && static_cast<int>(c.size()) != n) unconstrained = false;
  if (unconstrained) {
    PathWitness w;
    w.order.resize(n);
    std::iota(w.order.begin(), w.order.end(), 1);
    return w;
  }

  if (is_laminar(C)) return laminar_to_path(C);

  if (n > max_dp_agents)
    throw BudgetExceeded("contiguity recognition refused: " + std::to_string(n) +
                         " agents with a non-laminar structure exceeds the subset budget");

  // Exact subset dynamic program. A placed prefix S extends by agent a iff a
  // lies in every coalition that S has started but not finished.
  const uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);
  std::vector<uint8_t> parent(size_t(full) + 1, 0xff);
  std::vector<char> reach(size_t(full) + 1, 0);
  reach[0] = 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (!reach[mask]) continue;
    if (mask == full) break;
    uint32_t req = full & ~mask;
    for (uint32_t cm : cons) {
      if ((cm & mask) && (cm & ~mask & full)) req &= cm;
      if (!req) break;
    }
    for (uint32_t rest = req; rest;) {
      uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      uint32_t next = mask | bit;
      if (!reach[next]) {
        reach[next] = 1;
        parent[next] = static_cast<uint8_t>(std::countr_zero(bit));
      }
    }
  }
  if (!reach[full]) return std::nullopt;

  PathWitness w;
  w.order.resize(n);
  uint32_t mask = full;
  for (int p = n; p >= 1; --p) {
    int a = parent[mask];
    w.order[p - 1] = a + 1;
    mask ^= 1u << a;
  }
  if (!witnesses_contiguous(C, w))
    throw std::logic_error("internal error: contiguity witness failed replay");
  return w;
}

namespace {

// Appends an order of `ground` in which every coalition of cs is consecutive.
// Invariant: every coalition in cs is a subset of ground.
void laminar_order_rec(const std::vector<int>& ground, std::vector<Coalition> cs,
                       std::vector<int>& out) {
  std::erase_if(cs, [&](const Coalition& c) {
    return c.size() <= 1 || c.size() == ground.size();
  });
  if (cs.empty()) {
    out.insert(out.end(), ground.begin(), ground.end());
    return;
  }
  // A maximal proper coalition; the one with the smallest member is unique,
  // since two maximal coalitions sharing that member would have to be nested.
  int pick = -1;
  for (size_t a = 0; a < cs.size(); ++a) {
    bool maximal = true;
    for (size_t b = 0; b < cs.size(); ++b) {
      if (a != b && cs[a].size() < cs[b].size() && is_subset(cs[a], cs[b])) {
        maximal = false;
        break;
      }
    }
    if (maximal && (pick < 0 || cs[a].front() < cs[pick].front()))
      pick = static_cast<int>(a);
  }
  Coalition c = cs[pick];
  std::vector<Coalition> inside, outside;
  for (auto& other : cs) {
    if (is_subset(other, c)) inside.push_back(std::move(other));
    else outside.push_back(std::move(other));
  }
  std::vector<int> rest;
  for (int j : ground)
    if (!std::binary_search(c.begin(), c.end(), j)) rest.push_back(j);
  laminar_order_rec(c, std::move(inside), out);
  laminar_order_rec(rest, std::move(outside), out);
}

}  // namespace

PathWitness laminar_to_path(const CoalitionStructure& C) {
  if (!is_laminar(C)) throw std::invalid_argument("structure is not laminar");
  std::vector<int> ground(C.n_agents);
  std::iota(ground.begin(), ground.end(), 1);
  PathWitness w;
  laminar_order_rec(ground, C.coalitions, w.order);
  if (!witnesses_contiguous(C, w))
    throw std::logic_error("internal error: laminar path failed replay");
  return w;
}

// ---------------------------------------------------------------------------
// Embeddings

PlanarWitness contiguous_to_embedding(const CoalitionStructure& C, const PathWitness& w) {
  if (!witnesses_contiguous(C, w))
    throw std::invalid_argument("path does not witness the structure");
  const int n = C.n_agents;
  std::vector<int> pos(n + 1, 0);
  for (int p = 1; p <= n; ++p) pos[w.order[p - 1]] = p;

  std::vector<int> lo(C.coalitions.size()), hi(C.coalitions.size());
  // Gap widening: the gap after position p must exceed the span of every
  // coalition interval ending at p, so the interval circles capture nothing
  // to the right.
  std::vector<int> min_lo_ending_at(n + 1);
  std::iota(min_lo_ending_at.begin(), min_lo_ending_at.end(), 0);
  for (size_t k = 0; k < C.coalitions.size(); ++k) {
    int l = n + 1, h = 0;
    for (int j : C.coalitions[k]) {
      l = std::min(l, pos[j]);
      h = std::max(h, pos[j]);
    }
    lo[k] = l;
    hi[k] = h;
    if (l < h) min_lo_ending_at[h] = std::min(min_lo_ending_at[h], l);
  }

  std::vector<Int> coord(n + 1);
  coord[1] = 0;
  for (int p = 1; p < n; ++p)
    coord[p + 1] = coord[p] + 1 + (coord[p] - coord[min_lo_ending_at[p]]);

  PlanarWitness pw;
  pw.positions.resize(n);
  for (int j = 1; j <= n; ++j)
    pw.positions[j - 1] = {Rational(coord[pos[j]]), Rational(Int(0))};
  for (size_t k = 0; k < C.coalitions.size(); ++k) {
    Circle circ;
    circ.coalition_index = static_cast<int>(k) + 1;
    if (lo[k] == hi[k]) {
      circ.center_agent = w.order[lo[k] - 1];
      circ.radius = rat(1, 2);
    } else {
      circ.center_agent = w.order[hi[k] - 1];
      circ.radius = Rational(coord[hi[k]] - coord[lo[k]]);
    }
    pw.circles.push_back(std::move(circ));
  }
  if (!verify_embedding(C, pw))
    throw std::logic_error("internal error: embedding failed replay");
  return pw;
}

bool verify_embedding(const CoalitionStructure& C, const PlanarWitness& w) {
  const int n = C.n_agents;
  if (static_cast<int>(w.positions.size()) != n) return false;
  if (w.circles.size() != C.coalitions.size()) return false;
  std::vector<char> seen(C.coalitions.size(), 0);
  for (const auto& circ : w.circles) {
    if (circ.coalition_index < 1 ||
        circ.coalition_index > static_cast<int>(C.coalitions.size()))
      return false;
    if (seen[circ.coalition_index - 1]) return false;
    seen[circ.coalition_index - 1] = 1;
    const auto& c = C.coalitions[circ.coalition_index - 1];
    if (circ.center_agent < 1 || circ.center_agent > n) return false;
    if (!std::binary_search(c.begin(), c.end(), circ.center_agent)) return false;
    if (circ.radius <= Rational(Int(0))) return false;
    const auto& [cx, cy] = w.positions[circ.center_agent - 1];
    Rational r2 = circ.radius * circ.radius;
    for (int j = 1; j <= n; ++j) {
      Rational dx = w.positions[j - 1].first - cx;
      Rational dy = w.positions[j - 1].second - cy;
      bool inside = dx * dx + dy * dy <= r2;  // boundary included
      bool member = std::binary_search(c.begin(), c.end(), j);
      if (inside != member) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hierarchy demonstration

namespace {

// Exhaustive search for a circle witness of the full 3-agent coalition domain
// over small integer grids. A coalition admits a circle around center z iff
// the farthest member is strictly closer to z than the nearest non-member.
bool grid_embedding_exists_full3(int grid, long long& tried) {
  struct Pt { int x, y; };
  std::vector<Pt> pts;
  for (int x = 0; x < grid; ++x)
    for (int y = 0; y < grid; ++y) pts.push_back({x, y});
  auto d2 = [](const Pt& a, const Pt& b) {
    long long dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
  };
  tried = 0;
  for (size_t p1 = 0; p1 < pts.size(); ++p1) {
    for (size_t p2 = 0; p2 < pts.size(); ++p2) {
      if (p2 == p1) continue;
      for (size_t p3 = 0; p3 < pts.size(); ++p3) {
        if (p3 == p1 || p3 == p2) continue;
        ++tried;
        Pt pos[3] = {pts[p1], pts[p2], pts[p3]};
        bool all_ok = true;
        for (int cmask = 1; cmask < 8 && all_ok; ++cmask) {
          bool some_center = false;
          for (int z = 0; z < 3 && !some_center; ++z) {
            if (!(cmask & (1 << z))) continue;
            long long max_in = 0, min_out = -1;
            for (int j = 0; j < 3; ++j) {
              long long d = d2(pos[z], pos[j]);
              if (cmask & (1 << j)) max_in = std::max(max_in, d);
              else if (min_out < 0 || d < min_out) min_out = d;
            }
            if (min_out < 0 || max_in < min_out) some_center = true;
          }
          if (!some_center) all_ok = false;
        }
        if (all_ok) return true;
      }
    }
  }
  return false;
}

CoalitionStructure with_free_agents(int n, std::vector<Coalition> cs) {
  return CoalitionStructure::make(n, std::move(cs));
}

}  // namespace

std::vector<HierarchyCheck> hierarchy_demo(int n_agents) {
  if (n_agents < 2) throw std::invalid_argument("hierarchy demo needs at least 2 agents");
  const int n = n_agents;
  std::vector<HierarchyCheck> out;
  auto add = [&](std::string claim, bool ok, std::string detail) {
    out.push_back({std::move(claim), ok, std::move(detail)});
  };

  // Partition beyond the singleton domain.
  std::vector<Coalition> pe_cs = {{1, 2}};
  for (int j = 3; j <= n; ++j) pe_cs.push_back({j});
  auto C_pe = with_free_agents(n, pe_cs);
  add("partition witness {1,2} + singletons is a partition but not all singletons",
      is_partition(C_pe) && !all_singletons(C_pe), "agents 1 and 2 pooled");

  // Laminar beyond partitions.
  auto C_le = with_free_agents(n, {{1}, {1, 2}});
  add("laminar witness {{1},{1,2}} is laminar but no partition",
      is_laminar(C_le) && !is_partition(C_le), "nested overlap on agent 1");

  // Contiguous beyond laminar.
  std::optional<CoalitionStructure> C_coe;
  std::optional<PathWitness> path_coe;
  if (n >= 3) {
    C_coe = with_free_agents(n, {{1, 2}, {2, 3}});
    path_coe = find_contiguous_path(*C_coe);
    add("contiguous witness {{1,2},{2,3}} has a path but is not laminar",
        path_coe.has_value() && witnesses_contiguous(*C_coe, *path_coe) && !is_laminar(*C_coe),
        "crossing pair on agent 2");
  }

  if (n >= 4) {
    // Centralized beyond contiguous: the four triples of a 4-cycle. Free
    // agents never break contiguity, so the path search runs on the
    // constrained core.
    std::vector<Coalition> cee_cs = {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}};
    auto C_cee_core = with_free_agents(4, cee_cs);
    bool cee_no_path = !find_contiguous_path(C_cee_core).has_value();

    auto C_cee = with_free_agents(n, cee_cs);
    PlanarWitness square;
    square.positions.assign(n, {Rational(Int(0)), Rational(Int(0))});
    square.positions[0] = {rat(0), rat(0)};
    square.positions[1] = {rat(1), rat(0)};
    square.positions[2] = {rat(1), rat(1)};
    square.positions[3] = {rat(0), rat(1)};
    for (int j = 5; j <= n; ++j) square.positions[j - 1] = {rat(10 + j), rat(0)};
    // Each triple omits one corner; its circle sits at that corner's diagonal.
    square.circles = {{1, 2, rat(1)}, {2, 3, rat(1)}, {3, 4, rat(1)}, {4, 1, rat(1)}};
    add("centralized witness (all triples of a 4-cycle) embeds but has no path",
        cee_no_path && verify_embedding(C_cee, square),
        "unit-square circles of radius 1; no agent order keeps all four triples consecutive");
  }

  // Every witness also sits in each wider class.
  bool chain_ok = true;
  auto pe_path = laminar_to_path(C_pe);
  chain_ok = chain_ok && witnesses_contiguous(C_pe, pe_path) &&
             verify_embedding(C_pe, contiguous_to_embedding(C_pe, pe_path));
  auto le_path = laminar_to_path(C_le);
  chain_ok = chain_ok && witnesses_contiguous(C_le, le_path) &&
             verify_embedding(C_le, contiguous_to_embedding(C_le, le_path));
  if (C_coe)
    chain_ok = chain_ok && verify_embedding(*C_coe, contiguous_to_embedding(*C_coe, *path_coe));
  add("each witness belongs to every wider class",
      chain_ok, "paths from laminar structures, circle witnesses from paths");

  if (n >= 3) {
    // The full coalition domain escapes the whole chain.
    int nf = std::min(n, 8);
    auto full = all_nonempty_coalitions(nf);
    bool full_no_path = false;
    try {
      full_no_path = !find_contiguous_path(full).has_value();
    } catch (const BudgetExceeded&) {
      full_no_path = false;
    }
    add("the full coalition domain is no partition, not laminar, not contiguous",
        !is_partition(full) && !is_laminar(full) && full_no_path,
        "checked over " + std::to_string(nf) + " agents");

    long long tried = 0;
    bool grid_hit = grid_embedding_exists_full3(5, tried);
    add("no circle witness for the full 3-agent domain over a 5x5 grid",
        !grid_hit,
        std::to_string(tried) +
            " candidate position maps, none admits circles for every coalition");
  }

  return out;
}

}  // namespace rsgeq
