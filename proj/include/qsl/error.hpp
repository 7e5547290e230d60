// Copyright 2026 The qsl-bounds Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsl {

/// Raised for malformed or out-of-range caller input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Moment pair that no state on the requested spectrum can realize.
class InfeasibleMoments : public InputError {
 public:
  InfeasibleMoments(std::size_t level, double weight)
      : InputError("infeasible moments: weight of level " +
                   std::to_string(level) + " would be " +
                   std::to_string(weight)),
        level_(level),
        weight_(weight) {}

  std::size_t level() const noexcept { return level_; }
  double weight() const noexcept { return weight_; }

 private:
  std::size_t level_;
  double weight_;
};

/// An iterative solver failed to bracket or converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsl
