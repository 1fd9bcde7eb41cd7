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

#include <optional>
#include <vector>

#include "okbody/rational.hpp"

namespace okb::linalg {

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form over Q.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);

// Unique solution of a square nonsingular system, nullopt when singular.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Some solution of a (possibly rectangular) consistent system, nullopt when
// inconsistent.
std::optional<Vec> solve_any(const Matrix& a, const Vec& b);

std::optional<Matrix> inverse(const Matrix& a);

// Basis of {x : a x = 0}; `cols` fixes the ambient size when a has no rows.
Matrix nullspace(const Matrix& a, std::size_t cols);

Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix identity(std::size_t n);

// Row vector times matrix.
Vec row_times(const Vec& x, const Matrix& m);
// Matrix times column vector.
Vec times_col(const Matrix& m, const Vec& x);

// Rank of the affine span of a point set (-1 for an empty set).
int affine_rank(const std::vector<Vec>& points);

// Scales a rational vector to the primitive integer vector on the same ray.
// The zero vector is returned unchanged.
Vec primitive(const Vec& v);

// Z-basis of L ∩ Z^n, where L is the linear span of `directions`.
// The basis vectors are returned as rows.
Matrix saturated_lattice_basis(const std::vector<Vec>& directions,
                               std::size_t n);

}  // namespace okb::linalg
