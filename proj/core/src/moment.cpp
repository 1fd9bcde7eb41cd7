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

#include "okbody/moment.hpp"

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"
#include "okbody/lp.hpp"

namespace okb::moment {

MomentBody moment_body(const ConvexPotential& u) { return {geom::hull(u.slopes())}; }

Rational ma_mass(const ConvexPotential& u) { return geom::volume(moment_body(u).body); }

Rational ma_mass_by_subdivision(const ConvexPotential& u) {
  const auto n = u.dim();
  const auto slopes = u.slopes();
  if (linalg::affine_rank(slopes) < static_cast<int>(n)) return 0;
  std::vector<Vec> lifted;
  for (const auto& p : u.pieces()) {
    Vec y = p.slope;
    y.push_back(-p.offset);
    lifted.push_back(std::move(y));
  }
  auto upstairs = geom::hull(lifted);
  // Heights affine in the slope: a single cell.
  if (!upstairs.is_full_dimensional()) return geom::volume(geom::hull(slopes));
  Rational total = 0;
  for (std::size_t f = 0; f < upstairs.facets().size(); ++f) {
    if (upstairs.facets()[f].normal[n] >= 0) continue;
    std::vector<Vec> cell;
    for (auto v : upstairs.facet_vertices()[f]) {
      Vec a = upstairs.vertices()[v];
      a.pop_back();
      cell.push_back(std::move(a));
    }
    total += geom::volume(geom::hull(cell));
  }
  return total;
}

bool is_less_singular(const ConvexPotential& u1, const ConvexPotential& u2) {
  if (u1.dim() != u2.dim()) throw Error(ErrorCode::kDimensionMismatch, "potentials live in different dimensions");
  const auto n = u1.dim();
  // Variables (x, s): maximize s subject to s <= (a_j - a_i) x + b_j - b_i.
  Vec c(n + 1, Rational(0));
  c[n] = 1;
  for (const auto& pj : u2.pieces()) {
    Matrix a;
    Vec b;
    for (const auto& pi : u1.pieces()) {
      Vec row = okb::operator*(Rational(-1), pj.slope - pi.slope);
      row.push_back(1);
      a.push_back(std::move(row));
      b.push_back(pj.offset - pi.offset);
    }
    // A slope on the boundary of Delta(u1) still gives a bounded LP, so for
    // max-affine u1 the offsets never decide the marginal cases.
    if (lp::maximize(c, a, b).status == lp::Status::kUnbounded) return false;
  }
  return true;
}

IdentityReport check_inclusion_monotone(const ConvexPotential& u1, const ConvexPotential& u2) {
  if (!is_less_singular(u2, u1))
    throw Error(ErrorCode::kPreconditionFailed, "the first potential is not more singular than the second");
  auto small = moment_body(u1).body;
  auto large = moment_body(u2).body;
  long outside = 0;
  for (const auto& v : small.vertices()) outside += !large.contains_point(v);
  return IdentityReport("moment_monotone", outside, 0,
                        {{"smaller_body_vertices", small.vertices().size()},
                         {"larger_body_vertices", large.vertices().size()}});
}

ConvexPotential max_combine(const ConvexPotential& u1, const ConvexPotential& u2) {
  if (u1.dim() != u2.dim()) throw Error(ErrorCode::kDimensionMismatch, "potentials live in different dimensions");
  auto pieces = u1.pieces();
  pieces.insert(pieces.end(), u2.pieces().begin(), u2.pieces().end());
  return ConvexPotential(std::move(pieces));
}

std::pair<ConvexPotential, MomentBody> degeneration_endpoint(const valuation::ValuationVector& nu) {
  auto u = ConvexPotential::linear(nu.components());
  return {u, MomentBody{geom::point(nu.components())}};
}

ConvexPotential support_potential(const geom::Polytope& body) {
  if (body.is_empty()) throw Error(ErrorCode::kEmptyInput, "support function of the empty set");
  std::vector<AffinePiece> pieces;
  for (const auto& v : body.vertices()) pieces.push_back({v, 0});
  return ConvexPotential(std::move(pieces));
}

Rational lelong_along_axis(const ConvexPotential& u, std::size_t axis) {
  if (axis < 1 || axis > u.dim())
    throw Error(ErrorCode::kBadAxis,
                "axis " + std::to_string(axis) + " outside 1.." + std::to_string(u.dim()));
  Rational best = u.pieces().front().slope[axis - 1];
  for (const auto& p : u.pieces()) best = std::min(best, p.slope[axis - 1]);
  return best;
}

}  // namespace okb::moment
