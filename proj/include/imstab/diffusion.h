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

#ifndef IMSTAB_DIFFUSION_H_
#define IMSTAB_DIFFUSION_H_

// Independent Cascade and Linear Threshold diffusion through live-edge
// realizations.
//
// Sample i of master seed s is a RandomTape: one uniform per edge (IC) or per
// node (LT). A tape is realized into a live-edge subgraph under any parameter
// vector, so one tape drives several diffusions at once (coupling). Under IC
// edge e is live iff r_e < theta_e. Under LT the in-edges of v are laid out
// back to back on [0,1) in EdgeId order with lengths taken from a layout
// vector, and e is live iff r_v falls in the first theta_e of its slot; with
// layout = theta+ every theta- live edge is also theta+ live.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "imstab/graph.h"
#include "imstab/rng.h"

namespace imstab {

struct RandomTape {
  Model model = Model::kIC;
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
  // Per EdgeId (IC) or per NodeId (LT), each in [0, 1).
  std::vector<double> uniforms;
};

// The uniform for one tape entry, without materializing the tape.
inline double TapeUniform(Model model, std::uint64_t master_seed, std::uint64_t sample_index,
                          std::uint32_t entity) {
  return CounterUniform(master_seed,
                        model == Model::kIC ? StreamDomain::kEdgeCoin
                                            : StreamDomain::kNodeThreshold,
                        sample_index, entity);
}

RandomTape DrawTape(const Graph& g, Model model, std::uint64_t master_seed,
                    std::uint64_t sample_index);

struct LiveEdgeSample {
  std::vector<std::uint8_t> live;  // per EdgeId

  std::size_t count() const;
};

// Per-edge liveness rule for one parameter vector (and, for LT, one layout).
// Precomputes LT slot offsets once so realizations are O(1) per edge.
class LiveEdgeRule {
 public:
  // Throws InputError on model mismatch, bad sizes, or (LT) a layout that
  // does not dominate theta or violates the node-sum constraint.
  LiveEdgeRule(const Graph& g, const ParamVector& theta, const ParamVector& layout);
  LiveEdgeRule(const Graph& g, const ParamVector& theta) : LiveEdgeRule(g, theta, theta) {}

  Model model() const { return model_; }
  // Tape entry that decides edge e: e itself (IC) or its head node (LT).
  std::uint32_t Entity(const Edge& e) const {
    return model_ == Model::kIC ? e.id : e.dst;
  }
  bool Live(EdgeId e, double r) const {
    if (model_ == Model::kIC) return r < theta_[e];
    return r >= start_[e] && r < start_[e] + theta_[e];
  }

 private:
  Model model_;
  std::vector<double> theta_;
  std::vector<double> start_;  // LT slot offsets
};

LiveEdgeSample RealizeIC(const RandomTape& tape, const ParamVector& theta);
LiveEdgeSample RealizeLT(const Graph& g, const RandomTape& tape, const ParamVector& theta,
                         const ParamVector& layout);
// Dispatches on the model; LT uses theta as its own layout.
LiveEdgeSample Realize(const Graph& g, const RandomTape& tape, const LiveEdgeRule& rule);

// Out-adjacency restricted to the live edges of one realization.
struct LiveGraph {
  std::vector<std::uint32_t> offsets;  // num_nodes + 1
  std::vector<NodeId> targets;

  static LiveGraph From(const Graph& g, const LiveEdgeSample& live);

  std::span<const NodeId> out(NodeId v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

// Nodes reachable from the seeds over live edges, sorted, seeds included.
std::vector<NodeId> Reach(const Graph& g, const LiveEdgeSample& live, const SeedSet& seeds);

struct DiffusionTrace {
  // rounds[t] is the sorted active set A_t; the last entry is final.
  std::vector<std::vector<NodeId>> rounds;

  std::size_t tau() const { return rounds.size() - 1; }
  const std::vector<NodeId>& final_set() const { return rounds.back(); }
};

// Round-by-round process driven by the tape: IC uses r_e as the single
// activation coin of edge e, LT uses r_v as the threshold of v.
DiffusionTrace SimulateRounds(const Graph& g, const ParamVector& theta, const SeedSet& seeds,
                              const RandomTape& tape);

// Enumeration budgets for exact oracles.
inline constexpr std::size_t kMaxFreeIcEdges = 20;
inline constexpr std::uint64_t kMaxLtConfigurations = std::uint64_t{1} << 20;

// Calls fn(probability, live) for every live-edge outcome with nonzero
// probability. Throws CapacityError beyond the budgets above.
void ForEachOutcome(const Graph& g, const ParamVector& theta,
                    const std::function<void(double, const LiveEdgeSample&)>& fn);

double ExactSigma(const Graph& g, const ParamVector& theta, const SeedSet& seeds);
// Throws InputError unless theta_plus dominates theta_minus.
double ExactDelta(const Graph& g, const ParamVector& theta_plus, const ParamVector& theta_minus,
                  const SeedSet& seeds);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

struct EstimatorConfig {
  std::size_t samples = 2000;
  std::uint64_t master_seed = 1;
  // Worker threads; has no effect on results.
  int threads = 1;
};

// Monte Carlo mean of |reach| over tapes 0..M-1 of master_seed.
Estimate EstimateSigma(const Graph& g, const ParamVector& theta, const SeedSet& seeds,
                       const EstimatorConfig& cfg);

// Coupled estimate of sigma+(S) - sigma-(S): each tape drives both diffusions
// (LT layout = theta_plus), so every per-sample difference is >= 0.
Estimate EstimateDelta(const Graph& g, const ParamVector& theta_plus,
                       const ParamVector& theta_minus, const SeedSet& seeds,
                       const EstimatorConfig& cfg);

// Mean and standard error of per-sample values.
Estimate Summarize(const std::vector<double>& values);

}  // namespace imstab

#endif  // IMSTAB_DIFFUSION_H_
