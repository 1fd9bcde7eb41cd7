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

#include "okbody/lp.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace okb::lp {
namespace {

struct Tableau {
  Matrix rows;  // constraint coefficients
  Vec rhs;
  std::vector<std::size_t> basis;
  std::vector<bool> allowed;  // columns allowed to enter

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Maximizes cost.y from the current basic feasible solution. Returns
  // false when unbounded.
  bool run(const Vec& cost) {
    const std::size_t cols = cost.size();
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols && !enter; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter] <= 0) continue;
        Rational ratio = rhs[i] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rational objective(const Vec& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rhs[i];
    return v;
  }
};

}  // namespace

Result maximize(const Vec& c, const Matrix& a, const Vec& b) {
  const std::size_t n = c.size();
  const std::size_t m = a.size();
  // Columns: x+ (n), x- (n), slacks (m), artificials (one per negative rhs).
  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) art_rows.push_back(i);
  const std::size_t slack0 = 2 * n;
  const std::size_t art0 = slack0 + m;
  const std::size_t cols = art0 + art_rows.size();

  Tableau t;
  t.rows.assign(m, zero_vec(cols));
  t.rhs.resize(m);
  t.basis.resize(m);
  t.allowed.assign(cols, true);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = sign * a[i][j];
      t.rows[i][n + j] = -sign * a[i][j];
    }
    t.rows[i][slack0 + i] = sign;
    t.rhs[i] = sign * b[i];
    if (flip) {
      t.rows[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = slack0 + i;
    }
  }

  if (!art_rows.empty()) {
    Vec phase1 = zero_vec(cols);
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = -1;
    t.run(phase1);
    if (t.objective(phase1) < 0) return {Status::kInfeasible, 0, {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < art0) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art0 && !col; ++j)
        if (t.rows[i][j] != 0) col = j;
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = art0; j < cols; ++j) t.allowed[j] = false;
  }

  Vec cost = zero_vec(cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = c[j];
    cost[n + j] = -c[j];
  }
  if (!t.run(cost)) return {Status::kUnbounded, 0, {}};

  Result out;
  out.status = Status::kOptimal;
  out.value = t.objective(cost);
  out.point = zero_vec(n);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const std::size_t j = t.basis[i];
    if (j < n) out.point[j] += t.rhs[i];
    else if (j < 2 * n) out.point[j - n] -= t.rhs[i];
  }
  return out;
}

bool feasible(const Matrix& a, const Vec& b, std::size_t dim) {
  return maximize(zero_vec(dim), a, b).status != Status::kInfeasible;
}

}  // namespace okb::lp
