// Copyright 2026 The qdpv authors
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

#include <stdexcept>
#include <string>
#include <utility>

namespace qdpv {

/// Base class of all qdpv errors. `code()` is the stable machine-readable
/// identifier that the CLI emits in error records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define QDPV_ERROR_TYPE(Name)                              \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& message)              \
        : Error(#Name, message) {}                         \
  }

QDPV_ERROR_TYPE(InvalidMatrix);
QDPV_ERROR_TYPE(DimensionMismatch);
QDPV_ERROR_TYPE(UnknownGate);
QDPV_ERROR_TYPE(InvalidParams);
QDPV_ERROR_TYPE(InvalidTarget);
QDPV_ERROR_TYPE(InvalidProbability);
QDPV_ERROR_TYPE(ResourceLimit);
QDPV_ERROR_TYPE(InvalidInput);
QDPV_ERROR_TYPE(NotNeighbors);
QDPV_ERROR_TYPE(ParseError);

#undef QDPV_ERROR_TYPE

/// Raised when an eigensolve cannot meet the requested residual bound.
/// Carries the best residual that was achieved.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& message, double best_residual)
      : Error("ConvergenceFailure", message), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace qdpv
