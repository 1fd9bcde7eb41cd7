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

#include "okbody/json_io.hpp"

#include <algorithm>
#include <optional>

#include "okbody/error.hpp"

namespace okb::io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kParse, "field '" + field + "': " + why);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::int64_t int_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::size_t> index_list(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto x = int_from_json(j[i], field + "[" + std::to_string(i) + "]");
    if (x < 0) bad(field, "indices must be nonnegative");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(field, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    const std::string what = e.what();
    bad(field, what.substr(error_code_name(e.code()).size() + 2));
  }
}

Vec vec_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of rationals");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Vec& v) {
  auto out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const geom::Polytope& p) {
  auto verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return {{"dim", p.ambient_dim()}, {"vertices", verts}};
}

geom::Polytope polytope_from_json(const json& j) {
  auto n = int_from_json(member(j, "dim", "polytope"), "polytope.dim");
  if (n < 1) bad("polytope.dim", "must be positive");
  const auto& vj = member(j, "vertices", "polytope");
  if (!vj.is_array()) bad("polytope.vertices", "expected an array");
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < vj.size(); ++i) {
    auto v = vec_from_json(vj[i], "polytope.vertices[" + std::to_string(i) + "]");
    if (v.size() != static_cast<std::size_t>(n)) bad("polytope.vertices[" + std::to_string(i) + "]", "wrong length");
    pts.push_back(std::move(v));
  }
  if (pts.empty()) return geom::Polytope::empty(static_cast<std::size_t>(n));
  return geom::hull(pts);
}

json to_json(const toric::Fan& fan) { return {{"rays", fan.rays()}, {"cones", fan.cones()}}; }

toric::FanPtr fan_from_json(const json& j) {
  const auto& rj = member(j, "rays", "fan");
  if (!rj.is_array() || rj.empty()) bad("fan.rays", "expected a nonempty array");
  std::vector<toric::IntVec> rays;
  for (std::size_t i = 0; i < rj.size(); ++i) {
    const std::string f = "fan.rays[" + std::to_string(i) + "]";
    if (!rj[i].is_array()) bad(f, "expected an integer vector");
    toric::IntVec r;
    for (const auto& x : rj[i]) r.push_back(int_from_json(x, f));
    rays.push_back(std::move(r));
  }
  const auto& cj = member(j, "cones", "fan");
  if (!cj.is_array()) bad("fan.cones", "expected an array");
  std::vector<toric::Cone> cones;
  for (std::size_t i = 0; i < cj.size(); ++i) cones.push_back(index_list(cj[i], "fan.cones[" + std::to_string(i) + "]"));
  return std::make_shared<const toric::Fan>(rays.front().size(), rays, cones);
}

json to_json(const toric::ToricClass& xi) { return {{"offsets", to_json(xi.offsets())}}; }

toric::ToricClass class_from_json(const json& j, const toric::FanPtr& fan) {
  return toric::ToricClass(fan, vec_from_json(member(j, "offsets", "class"), "class.offsets"));
}

json to_json(const toric::InvariantFlag& flag) { return {{"cone", flag.cone()}, {"edge_order", flag.edge_order()}}; }

toric::InvariantFlag flag_from_json(const json& j, const toric::Fan& fan) {
  auto order = index_list(member(j, "edge_order", "flag"), "flag.edge_order");
  toric::InvariantFlag flag(fan, order);
  if (j.contains("cone")) {
    auto cone = index_list(j["cone"], "flag.cone");
    std::sort(cone.begin(), cone.end());
    if (cone != flag.cone()) throw Error(ErrorCode::kInvalidFlag, "flag.cone does not match flag.edge_order");
  }
  return flag;
}

json to_json(const valuation::Polynomial& s) {
  auto terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return {{"terms", terms}};
}

valuation::Polynomial polynomial_from_json(const json& j) {
  const auto& tj = member(j, "terms", "polynomial");
  if (!tj.is_array() || tj.empty()) bad("polynomial.terms", "expected a nonempty array");
  std::optional<valuation::Polynomial> p;
  for (std::size_t i = 0; i < tj.size(); ++i) {
    const std::string f = "polynomial.terms[" + std::to_string(i) + "]";
    const auto& ej = member(tj[i], "exp", f);
    if (!ej.is_array()) bad(f + ".exp", "expected an integer vector");
    valuation::Exponent e;
    for (const auto& x : ej) e.push_back(int_from_json(x, f + ".exp"));
    if (!p) p.emplace(e.size());
    p->add_term(e, rational_from_json(member(tj[i], "coef", f), f + ".coef"));
  }
  return *p;
}

json to_json(const moment::ConvexPotential& u) {
  auto pieces = json::array();
  for (const auto& p : u.pieces()) pieces.push_back({{"slope", to_json(p.slope)}, {"offset", to_string(p.offset)}});
  return {{"pieces", pieces}};
}

moment::ConvexPotential potential_from_json(const json& j) {
  const auto& pj = member(j, "pieces", "potential");
  if (!pj.is_array()) bad("potential.pieces", "expected an array");
  std::vector<moment::AffinePiece> pieces;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string f = "potential.pieces[" + std::to_string(i) + "]";
    pieces.push_back({vec_from_json(member(pj[i], "slope", f), f + ".slope"),
                      pj[i].contains("offset") ? rational_from_json(pj[i]["offset"], f + ".offset") : Rational(0)});
  }
  return moment::ConvexPotential(std::move(pieces));
}

json to_json(const bodies::OkounkovBody& body) {
  json out = to_json(body.body);
  out["volume"] = to_string(geom::volume(body.body));
  out["class"] = to_json(body.cls);
  out["flag"] = to_json(body.flag);
  out["provenance"] = {{"kind", bodies::provenance_name(body.provenance)}, {"data", body.provenance_data}};
  return out;
}

}  // namespace okb::io
