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

#ifndef IMSTAB_VERIFY_H_
#define IMSTAB_VERIFY_H_

#include <cstddef>
#include <vector>

#include "imstab/graph.h"
#include "imstab/instance_io.h"
#include "imstab/objective.h"

namespace imstab {

// Four nodes u, v, x, y (ids 0..3) on a path; (u,v) is entirely unknown,
// the other two edges are certain. IC.
UncertainInstance CounterexampleInstance();

inline constexpr std::size_t kMaxCheckedNodes = 12;
inline constexpr double kMarginalTolerance = 1e-9;

// A witness that f(S + v) - f(S) < f(T + v) - f(T) with S a proper subset
// of T and v outside T.
struct Violation {
  SeedSet smaller;
  SeedSet larger;
  NodeId node = 0;
  double marginal_smaller = 0.0;
  double marginal_larger = 0.0;
};

// Every violation of diminishing returns, found from a table of all 2^n
// values. Throws CapacityError when n > kMaxCheckedNodes.
std::vector<Violation> SubmodularityViolations(const Objective& obj,
                                               double tolerance = kMarginalTolerance);

// Same check on the exact delta objective of (theta+, theta-).
std::vector<Violation> SubmodularityViolations(const Graph& g, const ParamVector& theta_plus,
                                               const ParamVector& theta_minus);

// True iff no marginal gain is below -tolerance.
bool IsMonotone(const Objective& obj, double tolerance = kMarginalTolerance);

// Bipartite IDM instance whose unconstrained optimum equals the maximum
// independent set size of `source`. Node i of the source becomes i' = i and
// i'' = n + i. Arcs are read as undirected.
struct ReductionInstance {
  UncertainInstance instance;
  Graph source;
};

ReductionInstance MakeReductionInstance(const Graph& source,
                                        const std::vector<std::string>& labels = {});

inline constexpr std::size_t kMaxMisNodes = 20;

// Maximum independent set size, arcs read as undirected.
std::size_t MisBruteforce(const Graph& g);

struct ReductionCheck {
  std::size_t mis = 0;
  double idm_optimum = 0.0;
  bool agrees = false;
};

// Compares MisBruteforce(g) with the exact unconstrained delta optimum over
// subsets of V' on the reduction instance.
ReductionCheck CheckReduction(const Graph& g);

}  // namespace imstab

#endif  // IMSTAB_VERIFY_H_
