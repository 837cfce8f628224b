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

#include "regprod/error.hpp"

namespace regprod {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kUnexpectedField: return "UnexpectedField";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kMaximizerOnBoundary: return "MaximizerOnBoundary";
    case ErrorCode::kBlowUp: return "BlowUp";
    case ErrorCode::kOutOfHorizon: return "OutOfHorizon";
    case ErrorCode::kConfigMismatch: return "ConfigMismatch";
    case ErrorCode::kNonFinitePath: return "NonFinitePath";
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

bool IsValidationError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kMissingField:
    case ErrorCode::kUnexpectedField:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kWrongKind:
    case ErrorCode::kConfigMismatch:
    case ErrorCode::kOutOfHorizon:
    case ErrorCode::kEmpty:
      return true;
    default:
      return false;
  }
}

}  // namespace regprod
