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

#include <cstddef>
#include <utility>
#include <vector>

#include "okbody/rational.hpp"

namespace okb::geom {

// normal . x <= offset, normal a primitive integer vector.
struct Halfspace {
  Vec normal;
  Rational offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

// normal . x == offset.
struct Hyperplane {
  Vec normal;
  Rational offset;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// Exact convex polytope in Q^n with both representations.
//
// Vertices are irredundant and sorted lexicographically, so two polytopes
// are equal exactly when their vertex lists are. Facets are the
// inequalities of the polytope inside its affine hull; when dim() < n the
// affine hull itself is described by equations(). The empty polytope is an
// ordinary value with dim() == -1.
class Polytope {
 public:
  Polytope() = default;

  static Polytope empty(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_dim_); }

  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Hyperplane>& equations() const { return equations_; }
  // Indices into vertices() of the vertices lying on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }

  bool contains_point(const Vec& x) const;
  Vec centroid() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope hull(const std::vector<Vec>& points);

  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<Vec> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Hyperplane> equations_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
};

// Convex hull by incremental beneath-beyond insertion with exact
// orientation tests. Lower-dimensional inputs are hulled inside their affine
// span. Throws EmptyInput / DimensionMismatch.
Polytope hull(const std::vector<Vec>& points);

// Bounded polyhedron {x : A x <= b, E x = f} by vertex enumeration.
// Throws Unbounded if the region is nonempty and unbounded.
Polytope from_halfspaces(std::size_t ambient_dim, const std::vector<Halfspace>& inequalities,
                         const std::vector<Hyperplane>& equations = {});

Polytope point(const Vec& p);

// Lebesgue volume in the ambient dimension; 0 unless full-dimensional.
Rational volume(const Polytope& p);

// Volume of P inside its affine span, normalized so that a fundamental
// domain of the lattice (span ∩ Z^n) has volume 1. A point has relative
// volume 1, the empty polytope 0.
Rational relative_volume(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope intersect(const Polytope& p, const Polytope& q);
Polytope translate(const Polytope& p, const Vec& v);
Polytope scale(const Polytope& p, const Rational& lambda);

// x -> x g (row-vector convention), g an integer matrix with det ±1.
Polytope apply_unimodular(const Polytope& p, const Matrix& g);
// x -> m x + shift.
Polytope affine_image(const Polytope& p, const Matrix& m, const Vec& shift);

// Whether inner ⊆ outer.
bool contains(const Polytope& outer, const Polytope& inner);

// Vertex index pairs spanning the edges of P.
std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p);

// Every nonempty face of P (including P) as a sorted vertex index set.
std::vector<std::vector<std::size_t>> faces(const Polytope& p);

// P ∩ {normal . x = offset}, in the ambient space of P.
Polytope section(const Polytope& p, const Vec& normal, const Rational& offset);

// {x ∈ Q^{n-1} : (t, x) ∈ P}; empty when t is outside the projection range.
Polytope slice(const Polytope& p, const Rational& t);

// [min, max] of the coordinate `axis` over P. P must be nonempty.
std::pair<Rational, Rational> projection_range(const Polytope& p, std::size_t axis = 0);

// Integral over t of volume(slice(P, t)), computed exactly from the
// piecewise-polynomial structure of the slice volume.
Rational fubini_volume(const Polytope& p);

// Exact squared Euclidean distance from x to P.
Rational squared_distance(const Polytope& p, const Vec& x);

// Hausdorff distance to within `tol`: the squared distance is exact, the
// square root is bracketed by rational bisection.
Rational hausdorff_distance(const Polytope& p, const Polytope& q, const Rational& tol);

}  // namespace okb::geom
