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

#ifndef IMSTAB_OBJECTIVE_H_
#define IMSTAB_OBJECTIVE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "imstab/diffusion.h"
#include "imstab/graph.h"

namespace imstab {

// A deterministic set function over nodes [0, ground_size()).
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t ground_size() const = 0;
  virtual double Evaluate(const SeedSet& seeds) const = 0;

  // gains[i] = f(base + candidates[i]) - f(base). Implementations must return
  // the same value for a candidate whether it is queried alone or in a batch;
  // the greedy variants rely on this to agree with each other.
  virtual std::vector<double> MarginalGains(const SeedSet& base,
                                            std::span<const NodeId> candidates) const;
};

// Wraps an arbitrary callable; mostly for tests and fixtures.
class FunctionObjective : public Objective {
 public:
  using Fn = std::function<double(const SeedSet&)>;
  FunctionObjective(std::size_t n, Fn fn) : n_(n), fn_(std::move(fn)) {}

  std::size_t ground_size() const override { return n_; }
  double Evaluate(const SeedSet& seeds) const override { return fn_(seeds); }

 private:
  std::size_t n_;
  Fn fn_;
};

// Exact sigma(S) or delta(S) by enumerating every live-edge outcome once up
// front. Marginal gains sum prob * (new nodes) per outcome in a fixed order;
// rounding is monotone, so an objective that is submodular outcome by outcome
// stays submodular in floating point.
class ExactObjective : public Objective {
 public:
  static ExactObjective Sigma(const Graph& g, const ParamVector& theta);
  static ExactObjective Delta(const Graph& g, const ParamVector& theta_plus,
                              const ParamVector& theta_minus);

  std::size_t ground_size() const override { return graph_->num_nodes(); }
  double Evaluate(const SeedSet& seeds) const override;
  std::vector<double> MarginalGains(const SeedSet& base,
                                    std::span<const NodeId> candidates) const override;

 private:
  struct Outcome {
    double prob;
    LiveGraph live;
  };
  ExactObjective(const Graph& g, std::vector<Outcome> plus, std::vector<Outcome> minus);

  std::shared_ptr<const Graph> graph_;
  std::vector<Outcome> plus_;
  std::vector<Outcome> minus_;  // empty for sigma objectives
};

// Sample-average approximation over a frozen set of M tapes. The tapes are the
// ones EstimateSigma/EstimateDelta use for the same master seed, so
// Evaluate(S) equals their mean exactly.
class SaaObjective : public Objective {
 public:
  static SaaObjective Sigma(const Graph& g, const ParamVector& theta,
                            const EstimatorConfig& cfg);
  static SaaObjective Delta(const Graph& g, const ParamVector& theta_plus,
                            const ParamVector& theta_minus, const EstimatorConfig& cfg);

  ~SaaObjective() override;
  SaaObjective(SaaObjective&&) noexcept;
  SaaObjective& operator=(SaaObjective&&) noexcept;

  std::size_t ground_size() const override { return n_; }
  std::size_t samples() const;
  double Evaluate(const SeedSet& seeds) const override;
  std::vector<double> MarginalGains(const SeedSet& base,
                                    std::span<const NodeId> candidates) const override;

 private:
  struct Samples;
  SaaObjective(std::size_t n, int threads, std::unique_ptr<Samples> samples);

  std::size_t n_;
  int threads_;
  std::unique_ptr<Samples> samples_;
};

}  // namespace imstab

#endif  // IMSTAB_OBJECTIVE_H_
