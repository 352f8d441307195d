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

#include "imstab/objective.h"

#include <algorithm>

#include "imstab/errors.h"
#include "internal/scratch.h"

namespace imstab {

std::vector<double> Objective::MarginalGains(const SeedSet& base,
                                             std::span<const NodeId> candidates) const {
  const double base_value = Evaluate(base);
  std::vector<double> gains(candidates.size(), 0.0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (base.contains(candidates[i])) continue;
    std::vector<NodeId> extended(base.nodes().begin(), base.nodes().end());
    extended.push_back(candidates[i]);
    gains[i] = Evaluate(SeedSet(std::move(extended), ground_size())) - base_value;
  }
  return gains;
}

// ---------------------------------------------------------------------------
// ExactObjective

ExactObjective::ExactObjective(const Graph& g, std::vector<Outcome> plus,
                               std::vector<Outcome> minus)
    : graph_(std::make_shared<const Graph>(g)), plus_(std::move(plus)), minus_(std::move(minus)) {}

namespace {

template <typename OutcomeT>
std::vector<OutcomeT> CollectOutcomes(const Graph& g, const ParamVector& theta) {
  std::vector<OutcomeT> outcomes;
  ForEachOutcome(g, theta, [&](double prob, const LiveEdgeSample& live) {
    if (prob > 0.0) outcomes.push_back({prob, LiveGraph::From(g, live)});
  });
  return outcomes;
}

}  // namespace

ExactObjective ExactObjective::Sigma(const Graph& g, const ParamVector& theta) {
  return ExactObjective(g, CollectOutcomes<Outcome>(g, theta), {});
}

ExactObjective ExactObjective::Delta(const Graph& g, const ParamVector& theta_plus,
                                     const ParamVector& theta_minus) {
  if (theta_plus.model != theta_minus.model) {
    throw InputError("theta+ and theta- use different models");
  }
  if (!Dominates(theta_plus, theta_minus)) {
    throw InputError("theta+ must dominate theta- on every edge");
  }
  return ExactObjective(g, CollectOutcomes<Outcome>(g, theta_plus),
                        CollectOutcomes<Outcome>(g, theta_minus));
}

double ExactObjective::Evaluate(const SeedSet& seeds) const {
  internal::ReachScratch scratch(graph_->num_nodes());
  auto expected = [&](const std::vector<Outcome>& outcomes) {
    double total = 0.0;
    for (const Outcome& o : outcomes) {
      total += o.prob * static_cast<double>(scratch.MarkBase(o.live, seeds.nodes()));
    }
    return total;
  };
  return expected(plus_) - expected(minus_);
}

std::vector<double> ExactObjective::MarginalGains(const SeedSet& base,
                                                  std::span<const NodeId> candidates) const {
  internal::ReachScratch scratch(graph_->num_nodes());
  auto expected_gain = [&](const std::vector<Outcome>& outcomes) {
    std::vector<double> sums(candidates.size(), 0.0);
    for (const Outcome& o : outcomes) {
      scratch.MarkBase(o.live, base.nodes());
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        sums[i] += o.prob * static_cast<double>(scratch.CountBeyondBase(o.live, candidates[i]));
      }
    }
    return sums;
  };
  std::vector<double> gains = expected_gain(plus_);
  if (!minus_.empty()) {
    const std::vector<double> lower = expected_gain(minus_);
    for (std::size_t i = 0; i < gains.size(); ++i) gains[i] -= lower[i];
  }
  return gains;
}

// ---------------------------------------------------------------------------
// SaaObjective

struct SaaObjective::Samples {
  std::vector<LiveGraph> plus;
  std::vector<LiveGraph> minus;  // empty for sigma objectives
};

SaaObjective::SaaObjective(std::size_t n, int threads, std::unique_ptr<Samples> samples)
    : n_(n), threads_(std::max(1, threads)), samples_(std::move(samples)) {}

SaaObjective::~SaaObjective() = default;
SaaObjective::SaaObjective(SaaObjective&&) noexcept = default;
SaaObjective& SaaObjective::operator=(SaaObjective&&) noexcept = default;

std::size_t SaaObjective::samples() const { return samples_->plus.size(); }

namespace {

std::vector<LiveGraph> FreezeSamples(const Graph& g, const LiveEdgeRule& rule,
                                     const EstimatorConfig& cfg) {
  std::vector<LiveGraph> frozen(cfg.samples);
  const auto count = static_cast<std::int64_t>(cfg.samples);
#pragma omp parallel num_threads(std::max(1, cfg.threads))
  {
    internal::LazyTape tape(rule.model(), cfg.master_seed, g);
    LiveEdgeSample live;
    live.live.resize(g.num_edges());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      tape.Reset(static_cast<std::uint64_t>(i));
      for (const Edge& e : g.edges()) {
        live.live[e.id] = rule.Live(e.id, tape(rule.Entity(e))) ? 1 : 0;
      }
      frozen[i] = LiveGraph::From(g, live);
    }
  }
  return frozen;
}

}  // namespace

SaaObjective SaaObjective::Sigma(const Graph& g, const ParamVector& theta,
                                 const EstimatorConfig& cfg) {
  if (cfg.samples == 0) throw InputError("SAA objective needs at least one sample");
  ValidateParams(g, theta);
  auto samples = std::make_unique<Samples>();
  samples->plus = FreezeSamples(g, LiveEdgeRule(g, theta), cfg);
  return SaaObjective(g.num_nodes(), cfg.threads, std::move(samples));
}

SaaObjective SaaObjective::Delta(const Graph& g, const ParamVector& theta_plus,
                                 const ParamVector& theta_minus, const EstimatorConfig& cfg) {
  if (cfg.samples == 0) throw InputError("SAA objective needs at least one sample");
  if (theta_plus.model != theta_minus.model) {
    throw InputError("theta+ and theta- use different models");
  }
  ValidateParams(g, theta_plus);
  ValidateParams(g, theta_minus);
  if (!Dominates(theta_plus, theta_minus)) {
    throw InputError("theta+ must dominate theta- on every edge");
  }
  auto samples = std::make_unique<Samples>();
  samples->plus = FreezeSamples(g, LiveEdgeRule(g, theta_plus, theta_plus), cfg);
  samples->minus = FreezeSamples(g, LiveEdgeRule(g, theta_minus, theta_plus), cfg);
  return SaaObjective(g.num_nodes(), cfg.threads, std::move(samples));
}

double SaaObjective::Evaluate(const SeedSet& seeds) const {
  const auto count = static_cast<std::int64_t>(samples());
  const bool coupled = !samples_->minus.empty();
  std::int64_t total = 0;
#pragma omp parallel num_threads(threads_) reduction(+ : total)
  {
    internal::ReachScratch scratch(n_);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      total += static_cast<std::int64_t>(scratch.MarkBase(samples_->plus[i], seeds.nodes()));
      if (coupled) {
        total -= static_cast<std::int64_t>(scratch.MarkBase(samples_->minus[i], seeds.nodes()));
      }
    }
  }
  return static_cast<double>(total) / static_cast<double>(count);
}

std::vector<double> SaaObjective::MarginalGains(const SeedSet& base,
                                                std::span<const NodeId> candidates) const {
  const auto count = static_cast<std::int64_t>(samples());
  const bool coupled = !samples_->minus.empty();
  // Integer accumulation keeps the result independent of the thread split.
  std::vector<std::int64_t> totals(candidates.size(), 0);
#pragma omp parallel num_threads(threads_)
  {
    internal::ReachScratch scratch(n_);
    std::vector<std::int64_t> local(candidates.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const LiveGraph& upper = samples_->plus[i];
      scratch.MarkBase(upper, base.nodes());
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        local[c] += static_cast<std::int64_t>(scratch.CountBeyondBase(upper, candidates[c]));
      }
      if (!coupled) continue;
      const LiveGraph& lower = samples_->minus[i];
      scratch.MarkBase(lower, base.nodes());
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        local[c] -= static_cast<std::int64_t>(scratch.CountBeyondBase(lower, candidates[c]));
      }
    }
#pragma omp critical
    for (std::size_t c = 0; c < candidates.size(); ++c) totals[c] += local[c];
  }
  std::vector<double> gains(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    gains[c] = static_cast<double>(totals[c]) / static_cast<double>(count);
  }
  return gains;
}

}  // namespace imstab
