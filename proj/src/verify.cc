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

#include "imstab/verify.h"

#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "imstab/errors.h"
#include "imstab/optimize.h"
#include "imstab/uncertainty.h"

namespace imstab {
namespace {

SeedSet FromMask(std::uint32_t mask, std::size_t n) {
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < n; ++v) {
    if (mask >> v & 1u) nodes.push_back(v);
  }
  return SeedSet(std::move(nodes), n);
}

std::vector<double> ValueTable(const Objective& obj) {
  const std::size_t n = obj.ground_size();
  if (n > kMaxCheckedNodes) {
    throw CapacityError(
        fmt::format("{} nodes exceed the {}-node limit of the set-function checks", n,
                    kMaxCheckedNodes));
  }
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = obj.Evaluate(FromMask(mask, n));
  }
  return table;
}

std::vector<std::uint32_t> UndirectedAdjacency(const Graph& g) {
  std::vector<std::uint32_t> adj(g.num_nodes(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.src] |= 1u << e.dst;
    adj[e.dst] |= 1u << e.src;
  }
  return adj;
}

void MaxIndependent(const std::vector<std::uint32_t>& adj, std::uint32_t candidates,
                    std::size_t size, std::size_t& best) {
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  if (candidates == 0) {
    best = size;
    return;
  }
  const int v = std::countr_zero(candidates);
  const std::uint32_t bit = 1u << v;
  MaxIndependent(adj, candidates & ~bit & ~adj[v], size + 1, best);
  MaxIndependent(adj, candidates & ~bit, size, best);
}

}  // namespace

UncertainInstance CounterexampleInstance() {
  const std::vector<Arc> arcs = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  UncertainInstance instance;
  instance.graph = BuildGraph(4, arcs, false).graph;
  instance.labels = {"u", "v", "x", "y"};
  instance.uncertainty.model = Model::kIC;
  instance.uncertainty.intervals = {{0.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
  return instance;
}

std::vector<Violation> SubmodularityViolations(const Objective& obj, double tolerance) {
  const std::size_t n = obj.ground_size();
  const std::vector<double> f = ValueTable(obj);
  const std::uint32_t full = static_cast<std::uint32_t>(f.size() - 1);
  std::vector<Violation> violations;
  for (std::uint32_t t = 0; t <= full; ++t) {
    // Proper submasks of t, from t - 1 down to the empty set.
    for (std::uint32_t s = (t - 1) & t;; s = (s - 1) & t) {
      if (s != t) {
        for (NodeId v = 0; v < n; ++v) {
          const std::uint32_t bit = 1u << v;
          if (t & bit) continue;
          const double at_s = f[s | bit] - f[s];
          const double at_t = f[t | bit] - f[t];
          if (at_s < at_t - tolerance) {
            violations.push_back({FromMask(s, n), FromMask(t, n), v, at_s, at_t});
          }
        }
      }
      if (s == 0) break;
    }
  }
  return violations;
}

std::vector<Violation> SubmodularityViolations(const Graph& g, const ParamVector& theta_plus,
                                               const ParamVector& theta_minus) {
  return SubmodularityViolations(ExactObjective::Delta(g, theta_plus, theta_minus));
}

bool IsMonotone(const Objective& obj, double tolerance) {
  const std::vector<double> f = ValueTable(obj);
  for (std::uint32_t s = 0; s < f.size(); ++s) {
    for (std::size_t v = 0; v < obj.ground_size(); ++v) {
      const std::uint32_t bit = 1u << v;
      if (!(s & bit) && f[s | bit] - f[s] < -tolerance) return false;
    }
  }
  return true;
}

ReductionInstance MakeReductionInstance(const Graph& source,
                                        const std::vector<std::string>& labels) {
  const std::size_t n = source.num_nodes();
  const std::vector<std::string> base = labels.empty() ? IndexLabels(n) : labels;
  if (base.size() != n) throw InputError("label count does not match node count");

  std::set<std::pair<NodeId, NodeId>> known;
  for (const Edge& e : source.edges()) {
    known.emplace(e.src, static_cast<NodeId>(n + e.dst));
    known.emplace(e.dst, static_cast<NodeId>(n + e.src));
  }
  std::vector<Arc> arcs;
  for (const auto& [src, dst] : known) arcs.push_back({src, dst, 1});
  for (NodeId i = 0; i < n; ++i) arcs.push_back({i, static_cast<NodeId>(n + i), 1});

  ReductionInstance result;
  result.source = source;
  UncertainInstance& inst = result.instance;
  inst.graph = BuildGraph(2 * n, arcs, false).graph;
  inst.labels.reserve(2 * n);
  for (const std::string& label : base) inst.labels.push_back(label + "'");
  for (const std::string& label : base) inst.labels.push_back(label + "''");
  inst.uncertainty.model = Model::kIC;
  inst.uncertainty.intervals.resize(inst.graph.num_edges());
  for (const Edge& e : inst.graph.edges()) {
    const bool matching = e.dst == e.src + n;
    inst.uncertainty.intervals[e.id] = matching ? Interval{0.0, 1.0} : Interval{1.0, 1.0};
  }
  return result;
}

std::size_t MisBruteforce(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n > kMaxMisNodes) {
    throw CapacityError(fmt::format("{} nodes exceed the {}-node MIS brute-force limit", n,
                                    kMaxMisNodes));
  }
  const std::uint32_t all = n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::size_t best = 0;
  MaxIndependent(UndirectedAdjacency(g), all, 0, best);
  return best;
}

ReductionCheck CheckReduction(const Graph& g) {
  ReductionCheck check;
  check.mis = MisBruteforce(g);
  const ReductionInstance reduction = MakeReductionInstance(g);
  const UncertainInstance& inst = reduction.instance;
  const ExactObjective delta =
      ExactObjective::Delta(inst.graph, ExtremeParams(inst.uncertainty, Bound::kUpper),
                            ExtremeParams(inst.uncertainty, Bound::kLower));
  std::vector<NodeId> primed(g.num_nodes());
  std::iota(primed.begin(), primed.end(), NodeId{0});
  check.idm_optimum = ExhaustiveOpt(delta, std::nullopt, primed).value;
  check.agrees = check.idm_optimum == static_cast<double>(check.mis);
  return check;
}

}  // namespace imstab
