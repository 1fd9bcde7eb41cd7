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

#include "okbody/rational.hpp"

namespace okb::moment {

struct AffinePiece {
  Vec slope;
  Rational offset;
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

// u(x) = max_i (a_i . x + b_i) on R^n.
//
// Pieces are kept sorted by slope with one piece per slope: of two pieces
// sharing a slope only the larger offset is ever attained, so the list is
// canonical and equal potentials compare equal.
class ConvexPotential {
 public:
  explicit ConvexPotential(std::vector<AffinePiece> pieces);

  static ConvexPotential linear(Vec slope, Rational offset = 0);

  std::size_t dim() const { return pieces_.front().slope.size(); }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  std::vector<Vec> slopes() const;

  Rational operator()(const Vec& x) const;

  ConvexPotential add_constant(const Rational& c) const;
  // x -> u(x) with every slope replaced by slope . g (row vectors).
  ConvexPotential transform_slopes(const Matrix& g) const;

  friend bool operator==(const ConvexPotential&, const ConvexPotential&) = default;

 private:
  std::vector<AffinePiece> pieces_;
};

// lambda u1 + (1 - lambda) u2, again max-affine: the max over all pairs.
ConvexPotential convex_combination(const ConvexPotential& u1, const ConvexPotential& u2, const Rational& lambda);

}  // namespace okb::moment
