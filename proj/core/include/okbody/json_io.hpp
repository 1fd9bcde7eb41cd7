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

#include <nlohmann/json.hpp>

#include "okbody/bodies.hpp"
#include "okbody/polytope.hpp"
#include "okbody/potential.hpp"
#include "okbody/toric.hpp"
#include "okbody/valuation.hpp"

// Readers throw Error(kParse) naming the offending field.
namespace okb::io {

using nlohmann::json;

// A rational from "p/q", "p" or a JSON integer.
Rational rational_from_json(const json& j, const std::string& field);
Vec vec_from_json(const json& j, const std::string& field);
json to_json(const Rational& r);
json to_json(const Vec& v);

// {"dim": n, "vertices": [["p/q", ...], ...]}
json to_json(const geom::Polytope& p);
geom::Polytope polytope_from_json(const json& j);

// {"rays": [[int, ...]], "cones": [[int, ...]]}
json to_json(const toric::Fan& fan);
toric::FanPtr fan_from_json(const json& j);

// {"offsets": ["p/q", ...]}
json to_json(const toric::ToricClass& xi);
toric::ToricClass class_from_json(const json& j, const toric::FanPtr& fan);

// {"cone": [...], "edge_order": [...]}; cone may be omitted.
json to_json(const toric::InvariantFlag& flag);
toric::InvariantFlag flag_from_json(const json& j, const toric::Fan& fan);

// {"terms": [{"exp": [ints], "coef": "p/q"}]}
json to_json(const valuation::Polynomial& s);
valuation::Polynomial polynomial_from_json(const json& j);

// {"pieces": [{"slope": ["p/q", ...], "offset": "p/q"}]}
json to_json(const moment::ConvexPotential& u);
moment::ConvexPotential potential_from_json(const json& j);

json to_json(const bodies::OkounkovBody& body);

}  // namespace okb::io
