// Copyright 2026 The RAP Toolkit Authors
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

#ifndef RAP_ERROR_HPP_
#define RAP_ERROR_HPP_

#include <stdexcept>
#include <string>

#include "rap/graph.hpp"

namespace rap {

// Base class for failures that are properties of the input rather than misuse
// of the API (which raises std::invalid_argument).
class RapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge set fails the robustness requirement. `scenario()` is the first
// failing vulnerable edge, or kNoEdge when the set has no perfect matching at
// all and the instance has no vulnerable edges.
class InfeasibleError : public RapError {
 public:
  explicit InfeasibleError(EdgeId scenario)
      : RapError(scenario == kNoEdge
                     ? std::string("infeasible: no perfect matching")
                     : "infeasible at scenario e" + std::to_string(scenario)),
        scenario_(scenario) {}

  EdgeId scenario() const { return scenario_; }

 private:
  EdgeId scenario_;
};

}  // namespace rap

#endif  // RAP_ERROR_HPP_
