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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "okbody/poly1d.hpp"
#include "okbody/polytope.hpp"
#include "okbody/rational.hpp"

namespace okb::toric {

using IntVec = std::vector<std::int64_t>;
using Cone = std::vector<std::size_t>;  // ray indices, sorted

// Complete smooth simplicial fan in R^n. Construction validates everything:
// rays primitive, every maximal cone a Z-basis, cones covering R^n without
// overlap (checked on a fixed set of pseudo-random directions).
class Fan {
 public:
  Fan(std::size_t dim, std::vector<IntVec> rays, std::vector<Cone> cones);

  std::size_t dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  Vec ray(std::size_t i) const;

  // Index of the maximal cone spanned by exactly these rays, or -1.
  std::ptrdiff_t find_cone(Cone rays) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  std::size_t dim_;
  std::vector<IntVec> rays_;
  std::vector<Cone> cones_;
};

using FanPtr = std::shared_ptr<const Fan>;

std::string to_string_cone(const Cone& c);

namespace fans {
FanPtr projective_line();
FanPtr projective_space(std::size_t n);
FanPtr p1_times_p1();
// Hirzebruch surface F_a with rays (1,0), (0,1), (-1,a), (0,-1).
FanPtr hirzebruch(std::int64_t a);
}  // namespace fans

// A torus-invariant R-divisor class sum_rho a_rho D_rho, given by its facet
// offsets. The section polytope is {m : <m, v_rho> >= -a_rho}.
class ToricClass {
 public:
  ToricClass(FanPtr fan, Vec offsets);

  // All offsets 1: the fixed ample reference class of the fan.
  static ToricClass ample_reference(FanPtr fan);
  static ToricClass zero(FanPtr fan);

  const Fan& fan() const { return *fan_; }
  const FanPtr& fan_ptr() const { return fan_; }
  const Vec& offsets() const { return offsets_; }
  std::size_t dim() const { return fan_->dim(); }

  // The class of the prime divisor D_rho.
  static ToricClass divisor(FanPtr fan, std::size_t ray);

  ToricClass operator+(const ToricClass& o) const;
  ToricClass operator-(const ToricClass& o) const;
  friend ToricClass operator*(const Rational& s, const ToricClass& c);

  friend bool operator==(const ToricClass& a, const ToricClass& b) {
    return *a.fan_ == *b.fan_ && a.offsets_ == b.offsets_;
  }

 private:
  void check_same_fan(const ToricClass& o) const;

  FanPtr fan_;
  Vec offsets_;
};

// Torus-invariant flag Y_1 ⊃ ... ⊃ Y_n at the fixed point of a maximal cone:
// Y_i is the intersection of the first i divisors in edge_order.
class InvariantFlag {
 public:
  InvariantFlag(const Fan& fan, std::vector<std::size_t> edge_order);

  const std::vector<std::size_t>& edge_order() const { return edge_order_; }
  Cone cone() const;
  std::size_t first_divisor() const { return edge_order_.front(); }
  std::size_t dim() const { return edge_order_.size(); }

  // Rows are the ray generators in flag order; m -> adapted_map() m + shift(ξ)
  // sends character exponents to vanishing orders along the flag.
  const Matrix& adapted_map() const { return adapted_map_; }
  Vec shift(const ToricClass& xi) const;
  Vec adapt(const Vec& m, const ToricClass& xi) const;

  friend bool operator==(const InvariantFlag& a, const InvariantFlag& b) {
    return a.edge_order_ == b.edge_order_;
  }

 private:
  std::vector<std::size_t> edge_order_;
  Matrix adapted_map_;
};

// Every maximal cone with every ordering of its rays.
std::vector<InvariantFlag> all_flags(const Fan& fan);

// Integer matrix of the form I + N with N strictly upper triangular.
class LiftMatrix {
 public:
  explicit LiftMatrix(Matrix g);
  static LiftMatrix identity(std::size_t n);
  const Matrix& matrix() const { return g_; }
  friend bool operator==(const LiftMatrix&, const LiftMatrix&) = default;

 private:
  Matrix g_;
};

geom::Polytope section_polytope(const ToricClass& xi);

bool is_big(const ToricClass& xi);
bool is_nef(const ToricClass& xi);

// n! times the Euclidean volume of the section polytope.
Rational volume_class(const ToricClass& xi);

// Range of <m, v_Z> + a_Z over the section polytope: the vanishing orders
// along D_Z realized by the class. Requires a nonempty section polytope.
std::pair<Rational, Rational> vanishing_range(const ToricClass& xi, std::size_t ray);

// (nu_min, nu_max) along the first divisor of the flag. Throws NotBig.
std::pair<Rational, Rational> numin_numax(const ToricClass& xi, const InvariantFlag& flag);

// t -> volume_class(xi - t D_Z) on [0, nu_max], one exact polynomial of
// degree <= n per interval between combinatorial-type changes.
PiecewisePolynomial volume_profile(const ToricClass& xi, std::size_t ray);

// (n-1)! times the lattice-normalized volume of the face of the section
// polytope cut by the hyperplane of D_Z; 0 unless that face has dimension n-1.
Rational facet_restricted_volume(const ToricClass& xi, std::size_t ray);

// Restricted volume along D_Z: the facet formula when xi is nef, otherwise
// -1/n times the right derivative at 0 of t -> vol(xi - t D_Z).
Rational restricted_volume(const ToricClass& xi, std::size_t ray);

struct Blowup {
  FanPtr base_fan;
  FanPtr fan;
  Cone blown_cone;
  std::size_t exceptional_ray;
  InvariantFlag flag;
  LiftMatrix g;

  ToricClass pullback(const ToricClass& xi) const;
};

// Star subdivision of a smooth maximal cone at the sum of its rays, with the
// lifted flag and the unipotent matrix relating the valuations:
// nu_lifted(pullback T) = nu(T) g.
Blowup blowup_at_fixed_point(const FanPtr& fan, Cone cone, const InvariantFlag& flag);

}  // namespace okb::toric
