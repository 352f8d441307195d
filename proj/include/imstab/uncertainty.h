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

#ifndef IMSTAB_UNCERTAINTY_H_
#define IMSTAB_UNCERTAINTY_H_

#include <vector>

#include "imstab/graph.h"

namespace imstab {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Per-edge parameter intervals the adversary may choose from.
// Invariants: 0 <= lower <= upper <= 1; for LT, every node's upper in-sum <= 1.
struct UncertaintyModel {
  Model model = Model::kIC;
  std::vector<Interval> intervals;
};

void ValidateUncertainty(const Graph& g, const UncertaintyModel& u);

struct RelativeIntervalsResult {
  UncertaintyModel model;
  // LT nodes whose upper bounds had to be scaled down to sum to one.
  std::size_t repaired_nodes = 0;
};

// [(1 - delta) * theta_e, (1 + delta) * theta_e] clamped to [0,1].
RelativeIntervalsResult RelativeIntervals(const Graph& g, const ParamVector& theta, double delta);

enum class Bound { kUpper, kLower };

// theta+ (every upper endpoint) or theta- (every lower endpoint).
ParamVector ExtremeParams(const UncertaintyModel& u, Bound bound);

// Throws InputError when theta has a different edge count.
bool Contains(const UncertaintyModel& u, const ParamVector& theta);

}  // namespace imstab

#endif  // IMSTAB_UNCERTAINTY_H_
