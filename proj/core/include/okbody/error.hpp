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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace okb {

enum class ErrorCode {
  kParse,
  kEmptyInput,
  kDimensionMismatch,
  kUnbounded,
  kNotUnimodular,
  kInvalidFan,
  kInvalidFlag,
  kUnknownDivisor,
  kNotBig,
  kNotSmooth,
  kZeroSection,
  kTooLarge,
  kInvalidPotential,
  kInvalidValuation,
  kBadAxis,
  kOutOfRange,
  kUnsupportedResidual,
  kPreconditionFailed,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Input-validation errors map to CLI exit code 2; failed mathematical
// preconditions (NotBig and friends) map to 3.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace okb
