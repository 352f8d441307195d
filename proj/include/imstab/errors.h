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

#ifndef IMSTAB_ERRORS_H_
#define IMSTAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace imstab {

// Malformed or inconsistent caller input (bad endpoints, model mismatch,
// dominance violations, parse failures).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact oracle or brute-force routine was asked for an instance beyond its
// enumeration budget. Callers should fall back to Monte Carlo.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized generator exhausted its restart budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace imstab

#endif  // IMSTAB_ERRORS_H_
