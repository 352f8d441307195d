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

#ifndef IMSTAB_INTERNAL_SCRATCH_H_
#define IMSTAB_INTERNAL_SCRATCH_H_

// Per-thread work buffers shared by the estimators and the SAA objective.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "imstab/diffusion.h"
#include "imstab/graph.h"

namespace imstab::internal {

// O(1)-reset membership set over [0, n).
class Marker {
 public:
  explicit Marker(std::size_t n) : stamp_(n, 0) {}

  void Clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0u);
      epoch_ = 1;
    }
  }
  bool Test(std::size_t i) const { return stamp_[i] == epoch_; }
  void Set(std::size_t i) { stamp_[i] = epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

// Tape entries generated on first use and cached for the current sample, so a
// BFS only pays for the edges it actually inspects.
class LazyTape {
 public:
  LazyTape(Model model, std::uint64_t master_seed, const Graph& g)
      : model_(model),
        master_seed_(master_seed),
        values_(model == Model::kIC ? g.num_edges() : g.num_nodes()),
        known_(values_.size()) {}

  void Reset(std::uint64_t sample_index) {
    sample_index_ = sample_index;
    known_.Clear();
  }

  double operator()(std::uint32_t entity) {
    if (!known_.Test(entity)) {
      values_[entity] = TapeUniform(model_, master_seed_, sample_index_, entity);
      known_.Set(entity);
    }
    return values_[entity];
  }

 private:
  Model model_;
  std::uint64_t master_seed_;
  std::uint64_t sample_index_ = 0;
  std::vector<double> values_;
  Marker known_;
};

class ReachScratch {
 public:
  explicit ReachScratch(std::size_t n) : visited_(n), fresh_(n) {}

  std::size_t CountLazy(const Graph& g, const LiveEdgeRule& rule, std::span<const NodeId> seeds,
                        LazyTape& tape) {
    visited_.Clear();
    queue_.clear();
    for (NodeId s : seeds) {
      visited_.Set(s);
      queue_.push_back(s);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (EdgeId e : g.out_edges(queue_[head])) {
        const Edge& edge = g.edge(e);
        if (visited_.Test(edge.dst)) continue;
        if (rule.Live(e, tape(rule.Entity(edge)))) {
          visited_.Set(edge.dst);
          queue_.push_back(edge.dst);
        }
      }
    }
    return queue_.size();
  }

  // Marks reach(seeds) in the base set and returns its size.
  std::size_t MarkBase(const LiveGraph& live, std::span<const NodeId> seeds) {
    visited_.Clear();
    queue_.clear();
    for (NodeId s : seeds) {
      if (visited_.Test(s)) continue;
      visited_.Set(s);
      queue_.push_back(s);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (NodeId v : live.out(queue_[head])) {
        if (!visited_.Test(v)) {
          visited_.Set(v);
          queue_.push_back(v);
        }
      }
    }
    return queue_.size();
  }

  // Nodes reachable from u that are outside the base set marked last.
  std::size_t CountBeyondBase(const LiveGraph& live, NodeId u) {
    if (visited_.Test(u)) return 0;
    fresh_.Clear();
    extra_.clear();
    fresh_.Set(u);
    extra_.push_back(u);
    for (std::size_t head = 0; head < extra_.size(); ++head) {
      for (NodeId v : live.out(extra_[head])) {
        if (!visited_.Test(v) && !fresh_.Test(v)) {
          fresh_.Set(v);
          extra_.push_back(v);
        }
      }
    }
    return extra_.size();
  }

 private:
  Marker visited_;
  Marker fresh_;
  std::vector<NodeId> queue_;
  std::vector<NodeId> extra_;
};

}  // namespace imstab::internal

#endif  // IMSTAB_INTERNAL_SCRATCH_H_
