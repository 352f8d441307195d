// Copyright 2026 The Authors.
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

#include "imstab/optimize.h"

#include <algorithm>
#include <limits>
#include <queue>

#include <fmt/format.h>

#include "imstab/errors.h"
#include "imstab/rng.h"

namespace imstab {
namespace {

void CheckCardinality(const Objective& obj, std::size_t k) {
  if (k > obj.ground_size()) {
    throw InputError(
        fmt::format("cannot select {} seeds from {} nodes", k, obj.ground_size()));
  }
}

std::vector<NodeId> AllNodes(std::size_t n) {
  std::vector<NodeId> nodes(n);
  for (std::size_t v = 0; v < n; ++v) nodes[v] = static_cast<NodeId>(v);
  return nodes;
}

// Heap entry; `round` is the iteration whose base set the gain refers to.
struct StaleGain {
  double gain;
  NodeId node;
  std::size_t round;
};

// Max-heap order: larger gain first, then smaller NodeId.
struct HeapOrder {
  bool operator()(const StaleGain& a, const StaleGain& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.node > b.node;
  }
};

using GainHeap = std::priority_queue<StaleGain, std::vector<StaleGain>, HeapOrder>;

GainHeap InitialHeap(const Objective& obj, std::size_t& evaluations) {
  const std::vector<NodeId> all = AllNodes(obj.ground_size());
  const std::vector<double> gains = obj.MarginalGains(SeedSet(), all);
  evaluations += all.size();
  GainHeap heap;
  for (std::size_t i = 0; i < all.size(); ++i) heap.push({gains[i], all[i], 0});
  return heap;
}

// Pool order: larger gain first; among equal gains real nodes by id, then
// dummies by index.
bool PoolBefore(const Candidate& a, const Candidate& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.dummy != b.dummy) return !a.dummy;
  return a.id < b.id;
}

}  // namespace

GreedyReport NaiveGreedy(const Objective& obj, std::size_t k) {
  CheckCardinality(obj, k);
  GreedyReport report;
  std::vector<NodeId> remaining = AllNodes(obj.ground_size());
  std::vector<NodeId> chosen;
  for (std::size_t round = 0; round < k; ++round) {
    const SeedSet base(chosen, obj.ground_size());
    const std::vector<double> gains = obj.MarginalGains(base, remaining);
    report.gain_evaluations += remaining.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (gains[i] > gains[best]) best = i;  // remaining is id-sorted
    }
    report.steps.push_back({{false, remaining[best], gains[best]}, {}});
    chosen.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  report.selected = SeedSet(chosen, obj.ground_size());
  report.value = obj.Evaluate(report.selected);
  return report;
}

GreedyReport LazyGreedy(const Objective& obj, std::size_t k) {
  CheckCardinality(obj, k);
  GreedyReport report;
  std::vector<NodeId> chosen;
  if (k > 0) {
    GainHeap heap = InitialHeap(obj, report.gain_evaluations);
    for (std::size_t round = 0; round < k; ++round) {
      const SeedSet base(chosen, obj.ground_size());
      while (true) {
        const StaleGain top = heap.top();
        heap.pop();
        if (top.round == round) {
          report.steps.push_back({{false, top.node, top.gain}, {}});
          chosen.push_back(top.node);
          break;
        }
        const NodeId node = top.node;
        const double fresh = obj.MarginalGains(base, std::span<const NodeId>(&node, 1))[0];
        ++report.gain_evaluations;
        heap.push({fresh, node, round});
      }
    }
  }
  report.selected = SeedSet(chosen, obj.ground_size());
  report.value = obj.Evaluate(report.selected);
  return report;
}

GreedyReport RandomGreedy(const Objective& obj, std::size_t k, std::uint64_t seed, bool lazy) {
  CheckCardinality(obj, k);
  GreedyReport report;
  CounterRng rng(seed, StreamDomain::kOptimizer);
  std::vector<NodeId> chosen;
  std::vector<NodeId> remaining = AllNodes(obj.ground_size());
  std::vector<std::uint32_t> spare_dummies(k);
  for (std::uint32_t j = 0; j < k; ++j) spare_dummies[j] = j;

  GainHeap heap;
  if (lazy && k > 0) heap = InitialHeap(obj, report.gain_evaluations);

  for (std::size_t round = 0; round < k; ++round) {
    const SeedSet base(chosen, obj.ground_size());
    std::vector<Candidate> ranked;
    if (!lazy) {
      const std::vector<double> gains = obj.MarginalGains(base, remaining);
      report.gain_evaluations += remaining.size();
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        ranked.push_back({false, remaining[i], gains[i]});
      }
    } else {
      // Pull verified elements off the heap until the pool is full or every
      // remaining bound falls below the dummies' zero gain.
      while (!heap.empty() && ranked.size() < k) {
        const StaleGain top = heap.top();
        if (top.gain < 0.0 && ranked.size() + spare_dummies.size() >= k) break;
        heap.pop();
        if (top.round == round) {
          ranked.push_back({false, top.node, top.gain});
          continue;
        }
        const NodeId node = top.node;
        const double fresh = obj.MarginalGains(base, std::span<const NodeId>(&node, 1))[0];
        ++report.gain_evaluations;
        heap.push({fresh, node, round});
      }
    }
    for (std::uint32_t j : spare_dummies) ranked.push_back({true, j, 0.0});
    std::stable_sort(ranked.begin(), ranked.end(), PoolBefore);

    std::vector<Candidate> pool(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k));
    const Candidate pick = pool[rng.Below(k)];
    if (pick.dummy) {
      spare_dummies.erase(std::find(spare_dummies.begin(), spare_dummies.end(), pick.id));
    } else {
      chosen.push_back(pick.id);
      remaining.erase(std::find(remaining.begin(), remaining.end(), pick.id));
    }
    if (lazy) {
      for (const Candidate& c : ranked) {
        if (!c.dummy && !(c.id == pick.id && !pick.dummy)) heap.push({c.gain, c.id, round});
      }
    }
    report.steps.push_back({pick, std::move(pool)});
  }
  report.selected = SeedSet(chosen, obj.ground_size());
  report.value = obj.Evaluate(report.selected);
  return report;
}

namespace {

std::uint64_t BinomialCapped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

Optimum ExhaustiveOpt(const Objective& obj, std::optional<std::size_t> k,
                      std::span<const NodeId> ground) {
  const std::size_t n = obj.ground_size();
  std::vector<NodeId> items =
      ground.empty() ? AllNodes(n) : std::vector<NodeId>(ground.begin(), ground.end());
  std::sort(items.begin(), items.end());
  if (std::adjacent_find(items.begin(), items.end()) != items.end() ||
      (!items.empty() && items.back() >= n)) {
    throw InputError("exhaustive search ground set must be distinct nodes of the objective");
  }
  if (k) {
    if (*k > items.size()) {
      throw InputError(fmt::format("cannot select {} of {} nodes", *k, items.size()));
    }
    if (BinomialCapped(items.size(), *k, kMaxExhaustiveSubsets) > kMaxExhaustiveSubsets) {
      throw CapacityError(fmt::format("C({}, {}) subsets exceed the exhaustive search limit",
                                      items.size(), *k));
    }
  } else if (items.size() > kMaxExhaustiveGround) {
    throw CapacityError(fmt::format("2^{} subsets exceed the exhaustive search limit",
                                    items.size()));
  }

  Optimum best;
  best.value = -std::numeric_limits<double>::infinity();
  std::vector<NodeId> current;
  // Depth-first in lexicographic order; a set is visited before its
  // extensions, so keeping the first strict maximum gives the smallest tie.
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!k || current.size() == *k) {
      SeedSet candidate(current, n);
      const double value = obj.Evaluate(candidate);
      if (value > best.value) {
        best.value = value;
        best.set = std::move(candidate);
      }
      if (k) return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      if (k && items.size() - i < *k - current.size()) break;
      current.push_back(items[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

}  // namespace imstab
