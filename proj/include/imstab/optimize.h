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

#ifndef IMSTAB_OPTIMIZE_H_
#define IMSTAB_OPTIMIZE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "imstab/graph.h"
#include "imstab/objective.h"

namespace imstab {

// A member of a Random Greedy candidate pool: a node or one of the k
// zero-gain padding elements.
struct Candidate {
  bool dummy = false;
  std::uint32_t id = 0;  // NodeId, or dummy index when dummy
  double gain = 0.0;
};

struct GreedyStep {
  Candidate chosen;
  // Random Greedy: the pool M_i the choice was drawn from. Empty otherwise.
  std::vector<Candidate> pool;
};

struct GreedyReport {
  SeedSet selected;
  std::vector<GreedyStep> steps;
  // obj.Evaluate(selected), recomputed once at the end.
  double value = 0.0;
  // Number of single-candidate gain computations performed.
  std::size_t gain_evaluations = 0;
};

// Plain greedy: every iteration recomputes all marginal gains and takes the
// largest (smallest NodeId on ties). Throws InputError if k > n.
GreedyReport NaiveGreedy(const Objective& obj, std::size_t k);

// CELF: stale gains sit in a max-heap and are re-verified on pop. Returns the
// same set as NaiveGreedy whenever the objective is submodular.
GreedyReport LazyGreedy(const Objective& obj, std::size_t k);

// Random Greedy for cardinality-constrained non-monotone objectives: the
// ground set is padded with k dummies of zero gain, each iteration ranks the
// remaining elements by marginal gain (NodeId order on ties, dummies after
// real elements of equal gain), and draws one of the top k uniformly using
// the given seed. Dummies are dropped from the reported set. With `lazy`,
// the top-k pool is found CELF-style from stale bounds, which is exact only
// for submodular objectives.
GreedyReport RandomGreedy(const Objective& obj, std::size_t k, std::uint64_t seed,
                          bool lazy = false);

struct Optimum {
  SeedSet set;
  double value = 0.0;
};

inline constexpr std::uint64_t kMaxExhaustiveSubsets = 1'000'000;
inline constexpr std::size_t kMaxExhaustiveGround = 20;

// Brute-force maximum over subsets of `ground` (all nodes when empty) of size
// exactly k, or of any size when k is nullopt. Ties go to the
// lexicographically smallest set. Throws CapacityError when C(|ground|, k)
// exceeds kMaxExhaustiveSubsets, or |ground| > kMaxExhaustiveGround in the
// unconstrained case.
Optimum ExhaustiveOpt(const Objective& obj, std::optional<std::size_t> k,
                      std::span<const NodeId> ground = {});

}  // namespace imstab

#endif  // IMSTAB_OPTIMIZE_H_
