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

#ifndef IMSTAB_RNG_H_
#define IMSTAB_RNG_H_

// Counter-based randomness. Every random number in the library is a pure
// function of (key, counter), so any sample can be regenerated in isolation
// and results do not depend on evaluation order or thread count.

#include <array>
#include <cstdint>

namespace imstab {

// Philox4x32-10 (Salmon et al., SC'11).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter Generate(Counter counter, Key key);
};

// Top 53 bits of a 64-bit word as a double in [0, 1).
inline double ToUnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Stream domains keep independent uses of one master seed from overlapping.
enum class StreamDomain : std::uint32_t {
  kEdgeCoin = 1,
  kNodeThreshold = 2,
  kGenerator = 3,
  kOptimizer = 4,
  kDerivedSeed = 5,
};

// A single uniform in [0,1) addressed by (seed, domain, sample, entity).
double CounterUniform(std::uint64_t master_seed, StreamDomain domain,
                      std::uint64_t sample_index, std::uint32_t entity);

// Sequential engine over a counter stream; used by the graph generators and
// the optimizer's random draws. Bounded integers use rejection sampling rather
// than <random> distributions, whose output is implementation-defined.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, StreamDomain domain, std::uint64_t stream = 0)
      : seed_(seed), domain_(domain), stream_(stream) {}

  std::uint64_t NextU64();
  double NextUniform() { return ToUnitInterval(NextU64()); }
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  bool Bernoulli(double p) { return NextUniform() < p; }

 private:
  std::uint64_t seed_;
  StreamDomain domain_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
};

// Deterministically derives an independent seed, e.g. for evaluation passes
// that must not reuse the optimizer's tapes.
std::uint64_t DeriveSeed(std::uint64_t master_seed, std::uint64_t purpose);

}  // namespace imstab

#endif  // IMSTAB_RNG_H_
