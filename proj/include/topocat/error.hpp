// Copyright 2026 The topocat Authors
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
#include <string_view>

namespace topocat {

enum class ErrorKind {
  InvalidInput,
  NotATopology,
  SpaceMismatch,
  NotContinuous,
  NotFunctional,
  CapExceeded,
  SizeCap,
  NotAPreorder,
  TypeMismatch,
  AnchorMismatch,
  PartialMapPresent,
  InvalidSequence,
  DepthMismatch,
  BadMetric,
  HypothesisViolated,
  InvalidModel,
  NotASubpredicate,
  SyntaxError,
  SortError,
  SortMismatch,
  UnboundVariable,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every library error. `kind()` identifies the
/// contract violation; the message carries a human-readable witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse errors carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError, "at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace topocat
