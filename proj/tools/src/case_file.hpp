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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "okbody/potential.hpp"
#include "okbody/toric.hpp"

namespace okb::cli {

// A testbed case: a fan, a class on it, and whatever the requested
// computations need. Only fan and class are mandatory.
struct CaseFile {
  std::string name;
  toric::FanPtr fan;
  std::optional<toric::ToricClass> cls;
  std::optional<toric::InvariantFlag> flag;
  std::optional<Vec> divisor;
  std::optional<toric::ToricClass> second_class;
  Rational lambda = make_rational(1, 2);
  std::optional<toric::Cone> blowup_cone;
  std::optional<std::vector<std::size_t>> wn_rays;
  std::optional<Vec> t_grid;
  std::optional<moment::ConvexPotential> potential;
  std::optional<Rational> expected_volume;
  std::optional<std::vector<std::string>> identities;
};

CaseFile case_from_json(const nlohmann::json& j, const std::string& fallback_name);
CaseFile load_case(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

// The case's flag, or every invariant flag of the fan.
std::vector<toric::InvariantFlag> flags_of(const CaseFile& c);

}  // namespace okb::cli
