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

#ifndef IMSTAB_CLI_H_
#define IMSTAB_CLI_H_

namespace imstab {

// Entry point of the `imstab` tool. Returns 0 on success, 1 on bad input or
// usage, 2 when a request exceeds an exact-computation capacity limit.
int CliMain(int argc, char** argv);

}  // namespace imstab

#endif  // IMSTAB_CLI_H_
