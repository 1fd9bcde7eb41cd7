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

#include "okbody/linalg.hpp"

#include <algorithm>
#include <utility>

#include "okbody/error.hpp"

namespace okb::linalg {

Echelon row_reduce(Matrix m) {
  Echelon out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  const std::size_t n = a.size();
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() != n || e.pivot_cols.back() == n) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.rref[i][n];
  return x;
}

std::optional<Vec> solve_any(const Matrix& a, const Vec& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t n = a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;
  Vec x = zero_vec(n);
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivot_cols[i]] = e.rref[i][n];
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = a[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(Rational(i == j ? 1 : 0));
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] >= n) return std::nullopt;
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(e.rref[i].begin() + n, e.rref[i].end());
  return inv;
}

Matrix nullspace(const Matrix& a, std::size_t cols) {
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivot_cols[i]] = -e.rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Matrix out(a.size(), zero_vec(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix identity(std::size_t n) {
  Matrix m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Vec row_times(const Vec& x, const Matrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Vec out = zero_vec(cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += x[i] * m[i][j];
  }
  return out;
}

Vec times_col(const Matrix& m, const Vec& x) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
  return out;
}

int affine_rank(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  if (diffs.empty()) return 0;
  return static_cast<int>(rank(diffs));
}

Vec primitive(const Vec& v) {
  Integer den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rational(v[i].get_num() * (den_lcm / v[i].get_den()) / num_gcd);
  }
  return out;
}

namespace {

// Column-style Hermite reduction of an integer matrix. Returns the unimodular
// transform U and the number of nonzero columns of A*U; the remaining columns
// of U span the integer kernel of A.
std::pair<std::vector<std::vector<Integer>>, std::size_t> column_reduce(
    std::vector<std::vector<Integer>> a, std::size_t n) {
  std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : u) std::swap(row[i], row[j]);
  };
  std::size_t pc = 0;
  for (std::size_t r = 0; r < a.size() && pc < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = pc; c < n; ++c) {
        if (a[r][c] == 0) continue;
        if (best == n || abs(a[r][c]) < abs(a[r][best])) best = c;
      }
      if (best == n) break;
      if (best != pc) col_swap(pc, best);
      bool done = true;
      for (std::size_t c = pc + 1; c < n; ++c) {
        if (a[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[r][pc].get_mpz_t());
        col_axpy(c, pc, q);
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][pc] != 0) ++pc;
  }
  return {u, pc};
}

}  // namespace

Matrix saturated_lattice_basis(const std::vector<Vec>& directions, std::size_t n) {
  // Equations cutting out the span, scaled to integers.
  Matrix eqs = nullspace(directions, n);
  std::vector<std::vector<Integer>> a;
  for (const auto& e : eqs) {
    Vec p = primitive(e);
    std::vector<Integer> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = p[j].get_num();
    a.push_back(std::move(row));
  }
  auto [u, nonzero] = column_reduce(std::move(a), n);
  Matrix basis;
  for (std::size_t c = nonzero; c < n; ++c) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(u[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace okb::linalg
