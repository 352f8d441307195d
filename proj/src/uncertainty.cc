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

#include "imstab/uncertainty.h"

#include <algorithm>

#include <fmt/format.h>

#include "imstab/errors.h"

namespace imstab {

void ValidateUncertainty(const Graph& g, const UncertaintyModel& u) {
  if (u.intervals.size() != g.num_edges()) {
    throw InputError(fmt::format("uncertainty model has {} intervals for {} edges",
                                 u.intervals.size(), g.num_edges()));
  }
  for (std::size_t e = 0; e < u.intervals.size(); ++e) {
    const Interval& iv = u.intervals[e];
    if (!(0.0 <= iv.lower && iv.lower <= iv.upper && iv.upper <= 1.0)) {
      throw InputError(
          fmt::format("interval [{}, {}] of edge {} is not inside [0,1]", iv.lower, iv.upper, e));
    }
  }
  if (u.model == Model::kLT) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      double sum = 0.0;
      for (EdgeId e : g.in_edges(v)) sum += u.intervals[e].upper;
      if (sum > 1.0 + kLtSumSlack) {
        throw InputError(fmt::format("LT upper bounds into node {} sum to {} > 1", v, sum));
      }
    }
  }
}

RelativeIntervalsResult RelativeIntervals(const Graph& g, const ParamVector& theta,
                                          double delta) {
  if (!(delta >= 0.0)) throw InputError(fmt::format("relative perturbation {} < 0", delta));
  ValidateParams(g, theta);
  RelativeIntervalsResult result;
  result.model.model = theta.model;
  result.model.intervals.resize(theta.values.size());
  for (std::size_t e = 0; e < theta.values.size(); ++e) {
    const double value = theta.values[e];
    result.model.intervals[e] = {std::max(0.0, (1.0 - delta) * value),
                                 std::min(1.0, (1.0 + delta) * value)};
  }
  if (theta.model == Model::kLT) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      double sum = 0.0;
      for (EdgeId e : g.in_edges(v)) sum += result.model.intervals[e].upper;
      if (sum <= 1.0) continue;
      ++result.repaired_nodes;
      for (EdgeId e : g.in_edges(v)) {
        Interval& iv = result.model.intervals[e];
        iv.upper /= sum;
        iv.lower = std::min(iv.lower, iv.upper);
      }
    }
  }
  return result;
}

ParamVector ExtremeParams(const UncertaintyModel& u, Bound bound) {
  ParamVector theta;
  theta.model = u.model;
  theta.values.reserve(u.intervals.size());
  for (const Interval& iv : u.intervals) {
    theta.values.push_back(bound == Bound::kUpper ? iv.upper : iv.lower);
  }
  return theta;
}

bool Contains(const UncertaintyModel& u, const ParamVector& theta) {
  if (theta.values.size() != u.intervals.size()) {
    throw InputError(fmt::format("parameter vector has {} entries, uncertainty model has {}",
                                 theta.values.size(), u.intervals.size()));
  }
  for (std::size_t e = 0; e < theta.values.size(); ++e) {
    if (theta.values[e] < u.intervals[e].lower || theta.values[e] > u.intervals[e].upper) {
      return false;
    }
  }
  return true;
}

}  // namespace imstab
