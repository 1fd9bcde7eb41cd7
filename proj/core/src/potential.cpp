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

#include "okbody/potential.hpp"

#include <algorithm>
#include <map>

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"

namespace okb::moment {

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

}  // namespace

ConvexPotential::ConvexPotential(std::vector<AffinePiece> pieces) {
  if (pieces.empty()) throw Error(ErrorCode::kInvalidPotential, "potential needs at least one piece");
  const auto n = pieces.front().slope.size();
  std::map<Vec, Rational, VecLess> best;
  for (auto& p : pieces) {
    if (p.slope.size() != n) throw Error(ErrorCode::kInvalidPotential, "pieces have different dimensions");
    auto [it, inserted] = best.emplace(p.slope, p.offset);
    if (!inserted && it->second < p.offset) it->second = p.offset;
  }
  for (auto& [slope, offset] : best) pieces_.push_back({slope, offset});
}

ConvexPotential ConvexPotential::linear(Vec slope, Rational offset) {
  return ConvexPotential({{std::move(slope), std::move(offset)}});
}

std::vector<Vec> ConvexPotential::slopes() const {
  std::vector<Vec> out;
  for (const auto& p : pieces_) out.push_back(p.slope);
  return out;
}

Rational ConvexPotential::operator()(const Vec& x) const {
  if (x.size() != dim()) throw Error(ErrorCode::kDimensionMismatch, "point has wrong dimension");
  Rational best = dot(pieces_.front().slope, x) + pieces_.front().offset;
  for (const auto& p : pieces_) best = std::max(best, Rational(dot(p.slope, x) + p.offset));
  return best;
}

ConvexPotential ConvexPotential::add_constant(const Rational& c) const {
  auto pieces = pieces_;
  for (auto& p : pieces) p.offset += c;
  return ConvexPotential(std::move(pieces));
}

ConvexPotential ConvexPotential::transform_slopes(const Matrix& g) const {
  auto pieces = pieces_;
  for (auto& p : pieces) p.slope = linalg::row_times(p.slope, g);
  return ConvexPotential(std::move(pieces));
}

ConvexPotential convex_combination(const ConvexPotential& u1, const ConvexPotential& u2, const Rational& lambda) {
  if (u1.dim() != u2.dim()) throw Error(ErrorCode::kDimensionMismatch, "potentials live in different dimensions");
  const Rational mu = 1 - lambda;
  std::vector<AffinePiece> pieces;
  for (const auto& p : u1.pieces())
    for (const auto& q : u2.pieces())
      pieces.push_back({lambda * p.slope + mu * q.slope, lambda * p.offset + mu * q.offset});
  return ConvexPotential(std::move(pieces));
}

}  // namespace okb::moment
