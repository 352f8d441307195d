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

#include "imstab/rng.h"

namespace imstab {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void MulHiLo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline std::uint64_t Join(std::uint32_t lo, std::uint32_t hi) {
  return static_cast<std::uint64_t>(lo) | (static_cast<std::uint64_t>(hi) << 32);
}

Philox4x32::Key SplitKey(std::uint64_t seed) {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

}  // namespace

Philox4x32::Counter Philox4x32::Generate(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    MulHiLo(kMul0, ctr[0], hi0, lo0);
    MulHiLo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

double CounterUniform(std::uint64_t master_seed, StreamDomain domain,
                      std::uint64_t sample_index, std::uint32_t entity) {
  const Philox4x32::Counter out = Philox4x32::Generate(
      {entity, static_cast<std::uint32_t>(domain),
       static_cast<std::uint32_t>(sample_index),
       static_cast<std::uint32_t>(sample_index >> 32)},
      SplitKey(master_seed));
  return ToUnitInterval(Join(out[0], out[1]));
}

std::uint64_t CounterRng::NextU64() {
  const std::uint64_t block = position_ >> 1;
  const Philox4x32::Counter out = Philox4x32::Generate(
      {static_cast<std::uint32_t>(block),
       (static_cast<std::uint32_t>(domain_) << 16) |
           static_cast<std::uint32_t>((block >> 32) & 0xFFFFu),
       static_cast<std::uint32_t>(stream_),
       static_cast<std::uint32_t>(stream_ >> 32)},
      SplitKey(seed_));
  const bool upper = (position_ & 1) != 0;
  ++position_;
  return upper ? Join(out[2], out[3]) : Join(out[0], out[1]);
}

std::uint64_t CounterRng::Below(std::uint64_t bound) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw;
  do {
    draw = NextU64();
  } while (draw >= limit);
  return draw % bound;
}

std::uint64_t DeriveSeed(std::uint64_t master_seed, std::uint64_t purpose) {
  const Philox4x32::Counter out = Philox4x32::Generate(
      {static_cast<std::uint32_t>(purpose), static_cast<std::uint32_t>(StreamDomain::kDerivedSeed),
       static_cast<std::uint32_t>(purpose >> 32), 0},
      SplitKey(master_seed));
  return Join(out[0], out[1]);
}

}  // namespace imstab
