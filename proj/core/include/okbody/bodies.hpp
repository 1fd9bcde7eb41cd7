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

#include <vector>

#include <nlohmann/json.hpp>

#include "okbody/polytope.hpp"
#include "okbody/report.hpp"
#include "okbody/toric.hpp"

namespace okb::bodies {

enum class Provenance { kDirectTransform, kSemigroup, kPartial, kPsefLimit };

std::string provenance_name(Provenance p);

struct OkounkovBody {
  geom::Polytope body;
  toric::ToricClass cls;
  toric::InvariantFlag flag;
  Provenance provenance = Provenance::kDirectTransform;
  // Level k for kSemigroup, divisor coefficients for kPartial, the epsilon
  // list for kPsefLimit.
  nlohmann::json provenance_data = nlohmann::json::object();
};

OkounkovBody okounkov_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag);
OkounkovBody semigroup_okounkov_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag, unsigned k);

// R = [D] + beta with D = sum d_rho D_rho, d_rho >= 0, and beta of class
// xi - {D}.
class DivisorCurrent {
 public:
  DivisorCurrent(Vec coefficients, toric::ToricClass residual_class);
  // The current [D] + beta with beta in xi - {D}.
  static DivisorCurrent in_class(const toric::ToricClass& xi, Vec coefficients);

  const Vec& coefficients() const { return coefficients_; }
  const toric::ToricClass& residual_class() const { return residual_; }
  toric::ToricClass divisor_class() const { return toric::ToricClass(residual_.fan_ptr(), coefficients_); }
  toric::ToricClass total_class() const { return residual_ + divisor_class(); }

 private:
  Vec coefficients_;
  toric::ToricClass residual_;
};

// Delta(xi - {D}) translated by the valuation vector of [D].
OkounkovBody partial_body(const toric::ToricClass& xi, const DivisorCurrent& r, const toric::InvariantFlag& flag);

struct PsefBodies {
  // The limit body: the direct transform of the (possibly degenerate)
  // section polytope of xi, which is the intersection over all eps > 0.
  OkounkovBody limit;
  // Intersection of the bodies over the given eps list only.
  geom::Polytope list_intersection;
  std::vector<geom::Polytope> bodies;
  // Euclidean volume of each eps-body.
  Vec volumes;
};

PsefBodies psef_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag, const Vec& eps_list);

// Seven interior points: range/64 in from either end and five evenly spaced.
Vec default_t_grid(const Rational& nu_min, const Rational& nu_max);

IdentityReport verify_An(const toric::ToricClass& xi, const toric::InvariantFlag& flag);
IdentityReport verify_Bn(const toric::ToricClass& xi, const DivisorCurrent& r, const toric::InvariantFlag& flag);
IdentityReport verify_Cn(const toric::ToricClass& xi, const toric::InvariantFlag& flag, const Rational& t);
// Integral formula, derivative at 0 and, when nu_min > 0, the volume
// invariance under subtracting nu_min Z.
std::vector<IdentityReport> verify_WN(const toric::ToricClass& xi, std::size_t ray);
// Scaling equality and Minkowski inclusion.
std::vector<IdentityReport> verify_body_calculus(const toric::ToricClass& xi1, const toric::ToricClass& xi2,
                                                 const Rational& lambda, const toric::InvariantFlag& flag);
// Lifted body of the pullback against the g-transformed body.
IdentityReport verify_lift(const toric::ToricClass& xi, const toric::InvariantFlag& flag, const toric::Cone& cone);

// Polytope relations as reports: lhs counts offending vertices, rhs is 0.
IdentityReport polytope_equality(std::string name, const geom::Polytope& a, const geom::Polytope& b,
                                 nlohmann::json context = nlohmann::json::object());
IdentityReport polytope_inclusion(std::string name, const geom::Polytope& inner, const geom::Polytope& outer,
                                  nlohmann::json context = nlohmann::json::object());

nlohmann::json class_context(const toric::ToricClass& xi, const toric::InvariantFlag& flag);

}  // namespace okb::bodies
