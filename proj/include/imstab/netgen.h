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

#ifndef IMSTAB_NETGEN_H_
#define IMSTAB_NETGEN_H_

// Seedable synthetic network generators. All outputs are bidirected simple
// graphs with multiplicity 1, and every generator is a pure function of its
// arguments.

#include <cstdint>
#include <string>

#include "imstab/graph.h"

namespace imstab {

// 4-neighbour lattice; node id = row * cols + col.
Graph Grid2D(std::size_t rows, std::size_t cols);

// Uniform-ish random d-regular graph via incremental pairing with restarts.
// Throws GenerationError after kRegularRestartBudget failed attempts.
inline constexpr int kRegularRestartBudget = 1000;
Graph RandomRegular(std::size_t n, std::size_t d, std::uint64_t seed);

// Ring lattice with `side` neighbours on each side, far endpoints rewired
// with probability beta.
Graph WattsStrogatz(std::size_t n, std::size_t side, double beta, std::uint64_t seed);

// Preferential attachment from a seed clique K_{m+1}.
Graph BarabasiAlbert(std::size_t n, std::size_t m, std::uint64_t seed);

Graph Clique(std::size_t n);

// Two disjoint bidirected K_n on nodes [0, n) and [n, 2n).
Graph TwoCliques(std::size_t n);

enum class Family { kGrid2D, kRandomRegular, kSmallWorld, kPrefAttach, kClique, kTwoCliques };

struct GenSpec {
  Family family = Family::kGrid2D;
  std::size_t rows = 0, cols = 0;  // grid
  std::size_t n = 0;               // everything else
  std::size_t degree = 0;          // random regular
  std::size_t side = 0;            // small world
  double beta = 0.0;               // small world
  std::size_t attach = 0;          // preferential attachment (m)
  std::uint64_t seed = 0;
};

// "family:key=value,..." e.g. "smallworld:n=400,side=5,beta=0.1",
// "grid:rows=20,cols=20", "regular:n=400,d=10", "pa:n=400,m=5",
// "clique:n=200", "two-cliques:n=100". The seed is supplied separately.
GenSpec ParseGenSpec(const std::string& text, std::uint64_t seed);
std::string FormatGenSpec(const GenSpec& spec);

Graph Generate(const GenSpec& spec);

}  // namespace imstab

#endif  // IMSTAB_NETGEN_H_
