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

#include "reproduce.hpp"

#include <random>
#include <sstream>

#include "construction.hpp"
#include "counterexamples.hpp"
#include "sampling.hpp"

namespace rsgeq {

bool ReproduceReport::all_consistent() const {
  if (cells.size() != 16) return false;
  for (const auto& c : cells)
    if (!c.pass) return false;
  return true;
}

namespace {

constexpr int kSamplesPerCell = 20;

enum class Family { kPartition, kLaminar, kContiguous };

CoalitionStructure sample_structure(std::mt19937_64& rng, Family fam, int n) {
  switch (fam) {
    case Family::kPartition: return random_partition(rng, n);
    case Family::kLaminar: return random_laminar(rng, n);
    default: return random_contiguous(rng, n);
  }
}

// A guaranteed cell passes when every sampled instance yields a construction
// (or search hit) that the exhaustive oracle confirms C-stable.
CellResult positive_cell(std::mt19937_64& rng, std::string family_name, Family fam,
                         std::string regime, long long budget) {
  bool identical = regime == "identical" || regime == "two-identical";
  bool two = regime == "two" || regime == "two-identical";
  bool search_only = fam == Family::kPartition && regime == "general";
  int ok = 0;
  std::string failure;
  for (int t = 0; t < kSamplesPerCell; ++t) {
    std::uniform_int_distribution<int> nd(3, search_only ? 6 : 7);
    int n = nd(rng);
    int m = two ? 2 : std::uniform_int_distribution<int>(2, search_only ? 3 : 4)(rng);
    Rsg g = identical ? random_identical_rsg(rng, n, m) : random_rsg(rng, n, m);
    RsgDerived d = derive_rsg(g);
    auto C = sample_structure(rng, fam, n);
    try {
      Allocation a = [&] {
        if (search_only) {
          auto sr = find_equilibrium_by_search(g, d, C, budget);
          if (!sr.equilibrium) throw std::runtime_error("search found no equilibrium");
          return *sr.equilibrium;
        }
        if (identical) return construct_identical_contiguous_eq(g, d, C).allocation;
        return construct_two_resource_laminar_eq(g, d, C).allocation;
      }();
      StabilityReport rep = is_C_stable(g, d, a, C, budget);
      if (rep.stable) ++ok;
      else if (failure.empty())
        failure = "sample " + std::to_string(t + 1) + ": oracle found a deviation";
    } catch (const std::exception& e) {
      if (failure.empty())
        failure = "sample " + std::to_string(t + 1) + ": " + e.what();
    }
  }
  std::string evidence = std::to_string(ok) + "/" + std::to_string(kSamplesPerCell) +
                         " sampled instances solved and oracle-verified";
  if (!failure.empty()) evidence += " (" + failure + ")";
  return {std::move(family_name), std::move(regime), true, ok == kSamplesPerCell,
          std::move(evidence)};
}

struct NegativeEvidence {
  bool ok = false;
  std::string text;
};

// Exhausts the fixture's allocation space; every allocation must be refuted.
NegativeEvidence certificate_evidence(const Fixture& f, long long budget) {
  NegativeEvidence ev;
  RsgDerived d = derive_rsg(f.game);
  if (f.embedding && !verify_embedding(f.structure, *f.embedding)) {
    ev.text = f.name + ": embedding witness failed verification";
    return ev;
  }
  if (f.path && !witnesses_contiguous(f.structure, *f.path)) {
    ev.text = f.name + ": path witness failed verification";
    return ev;
  }
  auto cert = verify_no_equilibrium(f.game, d, f.structure, budget);
  ev.ok = cert.complete();
  ev.text = f.name + ": " + std::to_string(cert.refuted) + "/" +
            std::to_string(cert.allocations) + " allocations refuted";
  if (cert.stable_found) ev.text += " (a stable allocation slipped through)";
  return ev;
}

// The large laminar instance: the deterministic construction's Nash output
// and a handful of random Nash allocations all get refuted.
NegativeEvidence laminar_refuter_evidence(std::uint64_t seed) {
  NegativeEvidence ev;
  Fixture f = fixture_laminar_large();
  RsgDerived d = derive_rsg(f.game);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  int refuted = 0;
  const int trials = 6;  // construct_nash plus five random Nash allocations
  try {
    for (int t = 0; t < trials; ++t) {
      Allocation a = t == 0 ? construct_nash(f.game, d) : random_nash(rng, f.game, d);
      refute_laminar_large(f.game, d, f.structure, a);  // throws unless validated
      ++refuted;
    }
    ev.ok = true;
  } catch (const std::exception& e) {
    ev.text = std::string("refuter failed: ") + e.what();
    return ev;
  }
  ev.text = "laminar-large: " + std::to_string(refuted) + "/" + std::to_string(trials) +
            " Nash allocations refuted with validated deviations";
  return ev;
}

CellResult negative_cell(std::string family, std::string regime, const NegativeEvidence& ev) {
  return {std::move(family), std::move(regime), false, ev.ok, ev.text};
}

}  // namespace

ReproduceReport reproduce_table(std::uint64_t seed, long long budget) {
  ReproduceReport rep;
  rep.seed = seed;
  std::mt19937_64 rng(seed);

  // Partition structures: an equilibrium exists in every regime.
  rep.cells.push_back(positive_cell(rng, "partition", Family::kPartition, "general", budget));
  rep.cells.push_back(positive_cell(rng, "partition", Family::kPartition, "two", budget));
  rep.cells.push_back(positive_cell(rng, "partition", Family::kPartition, "identical", budget));
  rep.cells.push_back(
      positive_cell(rng, "partition", Family::kPartition, "two-identical", budget));

  // Laminar structures: refuted in general, guaranteed otherwise.
  NegativeEvidence lam = laminar_refuter_evidence(seed);
  rep.cells.push_back(negative_cell("laminar", "general", lam));
  rep.cells.push_back(positive_cell(rng, "laminar", Family::kLaminar, "two", budget));
  rep.cells.push_back(positive_cell(rng, "laminar", Family::kLaminar, "identical", budget));
  rep.cells.push_back(positive_cell(rng, "laminar", Family::kLaminar, "two-identical", budget));

  // Contiguous structures: the two-resource fixture kills the general and
  // two-resource regimes; identical costs stay solvable.
  NegativeEvidence cont = certificate_evidence(fixture_contiguous(), budget);
  rep.cells.push_back(negative_cell("contiguous", "general", cont));
  rep.cells.push_back(negative_cell("contiguous", "two", cont));
  rep.cells.push_back(positive_cell(rng, "contiguous", Family::kContiguous, "identical", budget));
  rep.cells.push_back(
      positive_cell(rng, "contiguous", Family::kContiguous, "two-identical", budget));

  // Centralized structures: one fixture with two identical resources sits in
  // every regime, so its certificate covers the whole row.
  NegativeEvidence cen = certificate_evidence(fixture_centralized(), budget);
  rep.cells.push_back(negative_cell("centralized", "general", cen));
  rep.cells.push_back(negative_cell("centralized", "two", cen));
  rep.cells.push_back(negative_cell("centralized", "identical", cen));
  rep.cells.push_back(negative_cell("centralized", "two-identical", cen));
  return rep;
}

std::string format_reproduce_report(const ReproduceReport& rep) {
  std::ostringstream os;
  os << "seed: " << rep.seed << "\n\n";
  const char* regimes[] = {"general", "two", "identical", "two-identical"};
  os << "family       general  two  identical  two-identical\n";
  for (size_t r = 0; r < rep.cells.size(); r += 4) {
    os << rep.cells[r].family;
    for (size_t pad = rep.cells[r].family.size(); pad < 13; ++pad) os << ' ';
    for (int k = 0; k < 4; ++k) {
      const auto& c = rep.cells[r + k];
      std::string mark = std::string(c.guaranteed ? "+" : "-") + (c.pass ? "" : "!");
      os << mark;
      size_t width = std::string(regimes[k]).size() + 2;
      for (size_t pad = mark.size(); pad < width; ++pad) os << ' ';
    }
    os << "\n";
  }
  os << "\n";
  for (const auto& c : rep.cells) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.family << " x " << c.regime << ": "
       << c.evidence << "\n";
  }
  os << "\nresult: " << (rep.all_consistent() ? "all 16 cells consistent" : "INCONSISTENT")
     << "\n";
  return os.str();
}

}  // namespace rsgeq
