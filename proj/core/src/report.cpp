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

#include "okbody/report.hpp"

namespace okb {

IdentityReport::IdentityReport(std::string identity, Rational lhs, Rational rhs, nlohmann::json context)
    : identity_(std::move(identity)), lhs_(std::move(lhs)), rhs_(std::move(rhs)), context_(std::move(context)) {}

nlohmann::json IdentityReport::to_json() const {
  return nlohmann::json{{"identity", identity_},
                        {"lhs", to_string(lhs_)},
                        {"rhs", to_string(rhs_)},
                        {"exact_equal", exact_equal()},
                        {"context", context_}};
}

}  // namespace okb
