// Copyright 2026 The regprod Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regprod {

enum class ErrorCode {
  kInvalidArgument,
  kMissingField,
  kUnexpectedField,
  kOutOfRange,
  kWrongKind,
  kMaximizerOnBoundary,
  kBlowUp,
  kOutOfHorizon,
  kConfigMismatch,
  kNonFinitePath,
  kEmpty,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

/// True for the failure classes that stem from bad input rather than from a
/// numerical outcome (the CLI maps these to exit status 1).
bool IsValidationError(ErrorCode code);

/// Every failure raised by the library. `field()` names the offending
/// parameter for validation errors and is empty otherwise; for BlowUp and
/// NonFinitePath `time()` holds the time at which the failure was detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string field = {},
        double time = 0.0)
      : std::runtime_error(std::move(message)),
        code_(code),
        field_(std::move(field)),
        time_(time) {}

  ErrorCode code() const { return code_; }
  const std::string& field() const { return field_; }
  double time() const { return time_; }

 private:
  ErrorCode code_;
  std::string field_;
  double time_;
};

}  // namespace regprod
