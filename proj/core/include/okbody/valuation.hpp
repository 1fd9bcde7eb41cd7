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

#include <cstdint>
#include <map>
#include <vector>

#include "okbody/polytope.hpp"
#include "okbody/potential.hpp"
#include "okbody/rational.hpp"
#include "okbody/toric.hpp"

namespace okb::valuation {

using Exponent = std::vector<std::int64_t>;

// Polynomial in n variables with rational coefficients; zero coefficients
// are never stored, so the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const std::vector<std::pair<Exponent, Rational>>& terms);

  static Polynomial monomial(const Exponent& e, Rational coef = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

// (nu_1, ..., nu_n), all components nonnegative.
class ValuationVector {
 public:
  explicit ValuationVector(Vec components);

  const Vec& components() const { return components_; }
  std::size_t dim() const { return components_.size(); }

  ValuationVector operator+(const ValuationVector& o) const;
  friend ValuationVector operator*(const Rational& s, const ValuationVector& v);
  // Row vector times g.
  ValuationVector operator*(const toric::LiftMatrix& g) const;

  friend bool operator==(const ValuationVector&, const ValuationVector&) = default;

 private:
  Vec components_;
};

// Iterated vanishing orders along Y_1 = {x_1 = 0}, then Y_2 inside Y_1, ...
// The polynomial is already in flag-adapted coordinates.
ValuationVector flag_valuation_poly(const Polynomial& s, const toric::InvariantFlag& flag);

// Iterated generic Lelong numbers of a toric current given by its convex
// potential in flag-adapted log coordinates: take the minimal x_1-slope,
// subtract it, keep only the pieces attaining it, drop x_1, repeat.
ValuationVector current_valuation(const moment::ConvexPotential& u, const toric::InvariantFlag& flag);

// Image of the section polytope under m -> A m + a_sigma.
geom::Polytope okounkov_body_toric(const toric::ToricClass& xi, const toric::InvariantFlag& flag);

struct SemigroupOptions {
  unsigned k_max = 12;
  std::uint64_t lattice_budget = 1000000;
};

// Hull of nu(s)/k over the monomial sections s of level k (lattice points of
// k P). Empty when k P has no lattice points.
geom::Polytope semigroup_level(const toric::ToricClass& xi, const toric::InvariantFlag& flag, unsigned k,
                               std::uint64_t lattice_budget = SemigroupOptions{}.lattice_budget);

// Cumulative hulls of the levels 1..k_max; entry k-1 is the hull of levels
// 1..k, so the list is nondecreasing.
std::vector<geom::Polytope> semigroup_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag,
                                           const SemigroupOptions& options = {});

}  // namespace okb::valuation
