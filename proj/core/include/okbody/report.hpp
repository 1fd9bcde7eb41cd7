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

#include <string>

#include <nlohmann/json.hpp>

#include "okbody/rational.hpp"

namespace okb {

// Outcome of one exact identity check. exact_equal is derived from lhs and
// rhs and cannot be set independently.
class IdentityReport {
 public:
  IdentityReport(std::string identity, Rational lhs, Rational rhs, nlohmann::json context = nlohmann::json::object());

  const std::string& identity() const { return identity_; }
  const Rational& lhs() const { return lhs_; }
  const Rational& rhs() const { return rhs_; }
  bool exact_equal() const { return lhs_ == rhs_; }
  const nlohmann::json& context() const { return context_; }
  nlohmann::json& context() { return context_; }

  nlohmann::json to_json() const;

 private:
  std::string identity_;
  Rational lhs_;
  Rational rhs_;
  nlohmann::json context_;
};

}  // namespace okb
