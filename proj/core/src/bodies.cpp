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

#include "okbody/bodies.hpp"

#include <algorithm>
#include <set>

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"
#include "okbody/potential.hpp"
#include "okbody/valuation.hpp"

namespace okb::bodies {

namespace {

void require_big(const toric::ToricClass& xi, const std::string& what = "class") {
  if (!toric::is_big(xi)) throw Error(ErrorCode::kNotBig, what + " is not big");
}

nlohmann::json rationals(const Vec& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json matrix_json(const Matrix& m) {
  auto out = nlohmann::json::array();
  for (const auto& row : m) out.push_back(rationals(row));
  return out;
}

Rational nfact(std::size_t n) { return factorial(static_cast<unsigned>(n)); }

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kDirectTransform: return "direct_transform";
    case Provenance::kSemigroup: return "semigroup_k";
    case Provenance::kPartial: return "partial";
    case Provenance::kPsefLimit: return "psef_limit";
  }
  return "unknown";
}

nlohmann::json class_context(const toric::ToricClass& xi, const toric::InvariantFlag& flag) {
  return {{"rays", xi.fan().rays()}, {"offsets", rationals(xi.offsets())}, {"edge_order", flag.edge_order()}};
}

OkounkovBody okounkov_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag) {
  return {valuation::okounkov_body_toric(xi, flag), xi, flag, Provenance::kDirectTransform, nlohmann::json::object()};
}

OkounkovBody semigroup_okounkov_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag, unsigned k) {
  return {valuation::semigroup_level(xi, flag, k), xi, flag, Provenance::kSemigroup, {{"k", k}}};
}

DivisorCurrent::DivisorCurrent(Vec coefficients, toric::ToricClass residual_class)
    : coefficients_(std::move(coefficients)), residual_(std::move(residual_class)) {
  if (coefficients_.size() != residual_.fan().ray_count())
    throw Error(ErrorCode::kDimensionMismatch, "divisor needs one coefficient per ray");
  for (const auto& d : coefficients_)
    if (d < 0) throw Error(ErrorCode::kOutOfRange, "divisor coefficient " + to_string(d) + " is negative");
}

DivisorCurrent DivisorCurrent::in_class(const toric::ToricClass& xi, Vec coefficients) {
  toric::ToricClass d(xi.fan_ptr(), coefficients);
  return DivisorCurrent(std::move(coefficients), xi - d);
}

OkounkovBody partial_body(const toric::ToricClass& xi, const DivisorCurrent& r, const toric::InvariantFlag& flag) {
  if (!(r.total_class() == xi)) throw Error(ErrorCode::kPreconditionFailed, "current does not lie in the class");
  const auto& residual = r.residual_class();
  require_big(residual, "residual class xi - {D}");
  // [D] has potential sum d_rho x_i near the fixed point: only the flag
  // divisors pass through it.
  Vec slope;
  for (auto ray : flag.edge_order()) slope.push_back(r.coefficients()[ray]);
  auto nu = valuation::current_valuation(moment::ConvexPotential::linear(slope), flag);
  auto body = geom::translate(valuation::okounkov_body_toric(residual, flag), nu.components());
  return {body, xi, flag, Provenance::kPartial, {{"divisor", rationals(r.coefficients())}}};
}

PsefBodies psef_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag, const Vec& eps_list) {
  if (eps_list.empty()) throw Error(ErrorCode::kOutOfRange, "eps list is empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (eps_list[i] <= 0) throw Error(ErrorCode::kOutOfRange, "eps values must be positive");
    if (i > 0 && eps_list[i] >= eps_list[i - 1]) throw Error(ErrorCode::kOutOfRange, "eps list must decrease");
  }
  const auto n = xi.dim();
  const auto omega = toric::ToricClass::ample_reference(xi.fan_ptr());
  PsefBodies out{OkounkovBody{geom::Polytope::empty(n), xi, flag, Provenance::kPsefLimit, {{"eps", rationals(eps_list)}}},
                 geom::Polytope::empty(n), {}, {}};
  for (const auto& eps : eps_list) {
    auto perturbed = xi + eps * omega;
    auto body = toric::is_big(perturbed) ? valuation::okounkov_body_toric(perturbed, flag) : geom::Polytope::empty(n);
    out.list_intersection = out.bodies.empty() ? body : geom::intersect(out.list_intersection, body);
    out.volumes.push_back(geom::volume(body));
    out.bodies.push_back(std::move(body));
  }
  auto p = toric::section_polytope(xi);
  if (!p.is_empty()) out.limit.body = geom::affine_image(p, flag.adapted_map(), flag.shift(xi));
  return out;
}

Vec default_t_grid(const Rational& nu_min, const Rational& nu_max) {
  const Rational range = nu_max - nu_min;
  Vec grid{nu_min + range / 64};
  for (int i = 1; i <= 5; ++i) grid.push_back(nu_min + range * Rational(i) / 6);
  grid.push_back(nu_max - range / 64);
  return grid;
}

IdentityReport verify_An(const toric::ToricClass& xi, const toric::InvariantFlag& flag) {
  require_big(xi);
  auto body = valuation::okounkov_body_toric(xi, flag);
  return IdentityReport("An", toric::volume_class(xi), nfact(xi.dim()) * geom::volume(body), class_context(xi, flag));
}

IdentityReport verify_Bn(const toric::ToricClass& xi, const DivisorCurrent& r, const toric::InvariantFlag& flag) {
  require_big(xi);
  const auto& residual = r.residual_class();
  if (!toric::is_nef(residual))
    throw Error(ErrorCode::kUnsupportedResidual, "residual class xi - {D} is not nef");
  auto body = partial_body(xi, r, flag);
  auto ctx = class_context(xi, flag);
  ctx["divisor"] = rationals(r.coefficients());
  ctx["residual"] = "nef";
  return IdentityReport("Bn", toric::volume_class(residual), nfact(xi.dim()) * geom::volume(body.body), ctx);
}

IdentityReport verify_Cn(const toric::ToricClass& xi, const toric::InvariantFlag& flag, const Rational& t) {
  const auto n = xi.dim();
  if (n < 2) throw Error(ErrorCode::kDimensionMismatch, "slice identity needs dimension at least 2");
  require_big(xi);
  auto [lo, hi] = toric::numin_numax(xi, flag);
  if (t <= lo || t >= hi)
    throw Error(ErrorCode::kOutOfRange,
                "t = " + to_string(t) + " outside the open interval (" + to_string(lo) + ", " + to_string(hi) + ")");
  const auto y1 = flag.first_divisor();
  auto shifted = xi - t * toric::ToricClass::divisor(xi.fan_ptr(), y1);
  auto body = valuation::okounkov_body_toric(xi, flag);
  auto ctx = class_context(xi, flag);
  ctx["t"] = to_string(t);
  return IdentityReport("Cn", toric::restricted_volume(shifted, y1),
                        nfact(n - 1) * geom::relative_volume(geom::slice(body, t)), ctx);
}

std::vector<IdentityReport> verify_WN(const toric::ToricClass& xi, std::size_t ray) {
  require_big(xi);
  const auto n = xi.dim();
  const auto& fan = xi.fan();
  const auto p = toric::section_polytope(xi);
  const Vec vz = fan.ray(ray);
  const Rational az = xi.offsets()[ray];
  auto [nu_min, nu_max] = toric::vanishing_range(xi, ray);

  // vol_{X|Z}(xi - tZ) as the normalized area of the moving face
  // P ∩ {<m, v_Z> + a_Z = t}; piecewise polynomial with breaks at vertices.
  std::set<Rational> cuts{Rational(0), nu_max};
  for (const auto& v : p.vertices()) {
    Rational t = dot(v, vz) + az;
    if (t > 0 && t < nu_max) cuts.insert(t);
  }
  Vec breaks(cuts.begin(), cuts.end());
  auto integrand = fit_piecewise(breaks, static_cast<unsigned>(n - 1), [&](const Rational& t) -> Rational {
    return nfact(n - 1) * geom::relative_volume(geom::section(p, vz, t - az));
  });
  const Rational vol = toric::volume_class(xi);
  auto ctx = nlohmann::json{{"rays", fan.rays()}, {"offsets", rationals(xi.offsets())}, {"divisor", ray},
                            {"nu_min", to_string(nu_min)}, {"nu_max", to_string(nu_max)}};
  std::vector<IdentityReport> out;
  out.emplace_back("WN:integral", vol, Rational(static_cast<long>(n)) * integrand.integral(), ctx);

  auto profile = toric::volume_profile(xi, ray);
  auto dctx = ctx;
  dctx["breakpoints"] = rationals(profile.breaks);
  out.emplace_back("WN:derivative", profile.right_derivative(0),
                   Rational(-static_cast<long>(n)) * toric::restricted_volume(xi, ray), dctx);

  if (nu_min > 0) {
    auto reduced = xi - nu_min * toric::ToricClass::divisor(xi.fan_ptr(), ray);
    out.emplace_back("WN:numin_shift", vol, toric::volume_class(reduced), ctx);
  }
  return out;
}

IdentityReport polytope_equality(std::string name, const geom::Polytope& a, const geom::Polytope& b,
                                 nlohmann::json context) {
  long bad = 0;
  for (const auto& v : a.vertices()) bad += !b.contains_point(v);
  for (const auto& v : b.vertices()) bad += !a.contains_point(v);
  if (a.is_empty() != b.is_empty()) ++bad;
  return IdentityReport(std::move(name), bad, 0, std::move(context));
}

IdentityReport polytope_inclusion(std::string name, const geom::Polytope& inner, const geom::Polytope& outer,
                                  nlohmann::json context) {
  long bad = 0;
  for (const auto& v : inner.vertices()) bad += !outer.contains_point(v);
  return IdentityReport(std::move(name), bad, 0, std::move(context));
}

std::vector<IdentityReport> verify_body_calculus(const toric::ToricClass& xi1, const toric::ToricClass& xi2,
                                                 const Rational& lambda, const toric::InvariantFlag& flag) {
  if (lambda <= 0) throw Error(ErrorCode::kOutOfRange, "lambda must be positive");
  require_big(xi1, "first class");
  require_big(xi2, "second class");
  auto d1 = valuation::okounkov_body_toric(xi1, flag);
  auto d2 = valuation::okounkov_body_toric(xi2, flag);
  auto ctx = class_context(xi1, flag);
  ctx["second_offsets"] = rationals(xi2.offsets());
  ctx["lambda"] = to_string(lambda);
  std::vector<IdentityReport> out;
  out.push_back(polytope_equality("calculus:scaling", valuation::okounkov_body_toric(lambda * xi1, flag),
                                  geom::scale(d1, lambda), ctx));
  out.push_back(polytope_inclusion("calculus:minkowski", geom::minkowski_sum(d1, d2),
                                   valuation::okounkov_body_toric(xi1 + xi2, flag), ctx));
  return out;
}

IdentityReport verify_lift(const toric::ToricClass& xi, const toric::InvariantFlag& flag, const toric::Cone& cone) {
  require_big(xi);
  auto b = toric::blowup_at_fixed_point(xi.fan_ptr(), cone, flag);
  auto lifted = valuation::okounkov_body_toric(b.pullback(xi), b.flag);
  auto transformed = geom::apply_unimodular(valuation::okounkov_body_toric(xi, flag), b.g.matrix());
  auto ctx = class_context(xi, flag);
  ctx["cone"] = b.blown_cone;
  ctx["lifted_edge_order"] = b.flag.edge_order();
  ctx["g"] = matrix_json(b.g.matrix());
  return polytope_equality("lift", lifted, transformed, ctx);
}

}  // namespace okb::bodies
