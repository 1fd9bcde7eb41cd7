// Copyright 2026 The okbody Authors
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

#include "okbody/error.hpp"

namespace okb {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kInvalidFan: return "InvalidFan";
    case ErrorCode::kInvalidFlag: return "InvalidFlag";
    case ErrorCode::kUnknownDivisor: return "UnknownDivisor";
    case ErrorCode::kNotBig: return "NotBig";
    case ErrorCode::kNotSmooth: return "NotSmooth";
    case ErrorCode::kZeroSection: return "ZeroSection";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidPotential: return "InvalidPotential";
    case ErrorCode::kInvalidValuation: return "InvalidValuation";
    case ErrorCode::kBadAxis: return "BadAxis";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kUnsupportedResidual: return "UnsupportedResidual";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kNotUnimodular:
    case ErrorCode::kInvalidFan:
    case ErrorCode::kInvalidFlag:
    case ErrorCode::kUnknownDivisor:
    case ErrorCode::kInvalidPotential:
    case ErrorCode::kInvalidValuation:
    case ErrorCode::kBadAxis:
      return true;
    default:
      return false;
  }
}

}  // namespace okb
