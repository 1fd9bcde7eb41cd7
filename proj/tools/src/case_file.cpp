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

#include "case_file.hpp"

#include <fstream>

#include "okbody/error.hpp"
#include "okbody/json_io.hpp"

namespace okb::cli {

using nlohmann::json;

namespace {

std::vector<std::size_t> indices(const json& j, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "field '" + field + "': expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw Error(ErrorCode::kParse, "field '" + field + "': expected nonnegative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

CaseFile case_from_json(const json& j, const std::string& fallback_name) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "case: expected an object");
  CaseFile c;
  c.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : fallback_name;
  if (!j.contains("fan")) throw Error(ErrorCode::kParse, "field 'fan': missing");
  c.fan = io::fan_from_json(j["fan"]);
  if (j.contains("class")) c.cls = io::class_from_json(j["class"], c.fan);
  if (j.contains("flag")) c.flag = io::flag_from_json(j["flag"], *c.fan);
  if (j.contains("divisor")) {
    const auto& d = j["divisor"];
    if (!d.is_object() || !d.contains("coefficients"))
      throw Error(ErrorCode::kParse, "field 'divisor.coefficients': missing");
    c.divisor = io::vec_from_json(d["coefficients"], "divisor.coefficients");
  }
  if (j.contains("second_class")) c.second_class = io::class_from_json(j["second_class"], c.fan);
  if (j.contains("lambda")) c.lambda = io::rational_from_json(j["lambda"], "lambda");
  if (j.contains("blowup_cone")) c.blowup_cone = indices(j["blowup_cone"], "blowup_cone");
  if (j.contains("wn_rays")) c.wn_rays = indices(j["wn_rays"], "wn_rays");
  if (j.contains("t_grid")) c.t_grid = io::vec_from_json(j["t_grid"], "t_grid");
  if (j.contains("potential")) c.potential = io::potential_from_json(j["potential"]);
  if (j.contains("expected_volume")) c.expected_volume = io::rational_from_json(j["expected_volume"], "expected_volume");
  if (j.contains("identities")) {
    if (!j["identities"].is_array()) throw Error(ErrorCode::kParse, "field 'identities': expected an array");
    std::vector<std::string> ids;
    for (const auto& x : j["identities"]) {
      if (!x.is_string()) throw Error(ErrorCode::kParse, "field 'identities': expected strings");
      ids.push_back(x.get<std::string>());
    }
    c.identities = std::move(ids);
  }
  return c;
}

CaseFile load_case(const std::filesystem::path& path) {
  return case_from_json(read_json_file(path), path.stem().string());
}

std::vector<toric::InvariantFlag> flags_of(const CaseFile& c) {
  if (c.flag) return {*c.flag};
  return toric::all_flags(*c.fan);
}

}  // namespace okb::cli
