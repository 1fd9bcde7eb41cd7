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

#include <utility>

#include "okbody/polytope.hpp"
#include "okbody/potential.hpp"
#include "okbody/report.hpp"
#include "okbody/valuation.hpp"

namespace okb::moment {

// Closure of the subgradient image of a potential.
struct MomentBody {
  geom::Polytope body;
  friend bool operator==(const MomentBody&, const MomentBody&) = default;
};

// For max-affine u the subgradient image is the hull of the slopes.
MomentBody moment_body(const ConvexPotential& u);

// Total real Monge-Ampere mass, the volume of the moment body.
Rational ma_mass(const ConvexPotential& u);

// The same mass summed cell by cell over the regular subdivision of the
// slopes induced by the heights -b_i (the lower faces of the lifted points
// (a_i, -b_i)), each cell being the subgradient image of one vertex of the
// domains of linearity of u.
Rational ma_mass_by_subdivision(const ConvexPotential& u);

// Whether u2 <= u1 + C for some constant C, i.e. u1 is at most as singular
// as u2. Decided by one LP per piece of u2: sup_x (a_j x + b_j - u1(x)).
bool is_less_singular(const ConvexPotential& u1, const ConvexPotential& u2);

// For u1 more singular than u2: moment_body(u1) ⊆ moment_body(u2). The
// report counts vertices of the smaller body outside the larger one (lhs)
// against 0 (rhs). Throws PreconditionFailed unless is_less_singular(u2, u1).
IdentityReport check_inclusion_monotone(const ConvexPotential& u1, const ConvexPotential& u2);

ConvexPotential max_combine(const ConvexPotential& u1, const ConvexPotential& u2);

// The single-piece potential sum nu_i x_i and its point body {nu}.
std::pair<ConvexPotential, MomentBody> degeneration_endpoint(const valuation::ValuationVector& nu);

// The support function max_v <v, x> over the vertices of a polytope.
ConvexPotential support_potential(const geom::Polytope& body);

// Minimal slope along axis i, 1 <= i <= n: the generic Lelong number along
// the i-th coordinate divisor.
Rational lelong_along_axis(const ConvexPotential& u, std::size_t axis);

}  // namespace okb::moment
