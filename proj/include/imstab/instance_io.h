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

#ifndef IMSTAB_INSTANCE_IO_H_
#define IMSTAB_INSTANCE_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imstab/graph.h"
#include "imstab/uncertainty.h"

namespace imstab {

// A labeled graph whose edges carry explicit parameter intervals.
struct UncertainInstance {
  Graph graph;
  std::vector<std::string> labels;
  UncertaintyModel uncertainty;
};

// Result of reading either file shape. `uncertainty` is set only for
// interval files.
struct InstanceFile {
  LabeledGraph graph;
  std::optional<UncertaintyModel> uncertainty;
};

// Reads a plain edge list ("src dst [multiplicity]") or an interval
// instance ("src dst lower upper"). Mixing the two line shapes is an error,
// as is listing an interval edge twice. With `undirected`, each interval
// line also defines the reverse edge with the same interval.
InstanceFile LoadInstance(std::istream& in, Model model, bool undirected);
InstanceFile LoadInstanceFile(const std::string& path, Model model, bool undirected);

// Writes the "# nodes:" header and one "src dst lower upper" line per edge.
// Values are printed with round-trip precision.
void DumpInstance(const UncertainInstance& instance, std::ostream& out);

}  // namespace imstab

#endif  // IMSTAB_INSTANCE_IO_H_
