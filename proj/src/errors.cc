// Copyright 2026 The Stackguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stackguard/errors.h"

#include <string>
#include <utility>
#include <vector>

namespace stackguard {
namespace {

std::string JoinViolations(const std::vector<std::string>& violations) {
  std::string out = "validation failed";
  for (const std::string& v : violations) {
    out += "\n  - ";
    out += v;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(JoinViolations(violations)), violations_(std::move(violations)) {}

UnknownActionError::UnknownActionError(std::string label, std::size_t depth)
    : Error("unknown action '" + label + "' at depth " + std::to_string(depth)),
      label_(std::move(label)),
      depth_(depth) {}

DimensionMismatchError::DimensionMismatchError(std::size_t lhs, std::size_t rhs)
    : Error("dimension mismatch: " + std::to_string(lhs) + " vs " +
            std::to_string(rhs)) {}

}  // namespace stackguard
