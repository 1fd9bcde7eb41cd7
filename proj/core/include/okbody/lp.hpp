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

#include "okbody/rational.hpp"

namespace okb::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  Rational value;  // meaningful only when optimal
  Vec point;       // an optimal point when optimal
};

// maximize c.x subject to A x <= b with x unrestricted in sign.
// Dense two-phase simplex over Q with Bland's rule, so it always terminates.
Result maximize(const Vec& c, const Matrix& a, const Vec& b);

// Whether {x : A x <= b} is nonempty; `dim` is the number of unknowns.
bool feasible(const Matrix& a, const Vec& b, std::size_t dim);

}  // namespace okb::lp
