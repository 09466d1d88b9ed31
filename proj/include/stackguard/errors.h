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

#ifndef STACKGUARD_ERRORS_H_
#define STACKGUARD_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stackguard {

// Base of every error thrown by the library. The CLI maps ValidationError
// to exit code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented bound or structural invariant. Carries every
// violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Malformed JSON or a field of the wrong type/shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A history names an action that does not exist at the node reached so far.
class UnknownActionError : public Error {
 public:
  UnknownActionError(std::string label, std::size_t depth);

  const std::string& label() const { return label_; }
  std::size_t depth() const { return depth_; }

 private:
  std::string label_;
  std::size_t depth_;
};

class NonTerminalHistoryError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  DimensionMismatchError(std::size_t lhs, std::size_t rhs);
};

// External oracle replied with something other than the matching response.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

class EmptyTreeError : public Error {
 public:
  using Error::Error;
};

}  // namespace stackguard

#endif  // STACKGUARD_ERRORS_H_
