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

#include "okbody/valuation.hpp"

#include <algorithm>

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"

namespace okb::valuation {

namespace {

void check_dim(std::size_t got, const toric::InvariantFlag& flag) {
  if (got != flag.dim())
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(flag.dim()) + " variables, got " + std::to_string(got));
}

void require_big(const toric::ToricClass& xi) {
  if (!toric::is_big(xi)) throw Error(ErrorCode::kNotBig, "class is not big");
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, const std::vector<std::pair<Exponent, Rational>>& terms) : nvars_(nvars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Polynomial Polynomial::monomial(const Exponent& e, Rational coef) {
  Polynomial p(e.size());
  p.add_term(e, coef);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(ErrorCode::kDimensionMismatch, "exponent has wrong length");
  if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; }))
    throw Error(ErrorCode::kParse, "exponents must be nonnegative");
  Rational sum = terms_.count(e) ? terms_[e] + c : c;
  if (sum == 0)
    terms_.erase(e);
  else
    terms_[e] = sum;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::kDimensionMismatch, "polynomials in different variables");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::kDimensionMismatch, "polynomials in different variables");
  Polynomial out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

ValuationVector::ValuationVector(Vec components) : components_(std::move(components)) {
  for (const auto& c : components_)
    if (c < 0) throw Error(ErrorCode::kInvalidValuation, "valuation component " + to_string(c) + " is negative");
}

ValuationVector ValuationVector::operator+(const ValuationVector& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::kDimensionMismatch, "valuation vectors of different length");
  return ValuationVector(components_ + o.components_);
}

ValuationVector operator*(const Rational& s, const ValuationVector& v) {
  return ValuationVector(okb::operator*(s, v.components_));
}

ValuationVector ValuationVector::operator*(const toric::LiftMatrix& g) const {
  return ValuationVector(linalg::row_times(components_, g.matrix()));
}

ValuationVector flag_valuation_poly(const Polynomial& s, const toric::InvariantFlag& flag) {
  if (s.is_zero()) throw Error(ErrorCode::kZeroSection, "the zero polynomial has no valuation");
  check_dim(s.nvars(), flag);
  std::vector<Exponent> current;
  for (const auto& [e, c] : s.terms()) current.push_back(e);
  Vec nu;
  for (std::size_t i = 0; i < s.nvars(); ++i) {
    std::int64_t order = current.front()[i];
    for (const auto& e : current) order = std::min(order, e[i]);
    nu.emplace_back(static_cast<long>(order));
    // Divide by x_i^order, then restrict to {x_i = 0}.
    std::vector<Exponent> restricted;
    for (auto e : current) {
      e[i] -= order;
      if (e[i] == 0) restricted.push_back(std::move(e));
    }
    current = std::move(restricted);
  }
  return ValuationVector(std::move(nu));
}

ValuationVector current_valuation(const moment::ConvexPotential& u, const toric::InvariantFlag& flag) {
  check_dim(u.dim(), flag);
  std::vector<moment::AffinePiece> pieces = u.pieces();
  Vec nu;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Rational lelong = pieces.front().slope[i];
    for (const auto& p : pieces) lelong = std::min(lelong, p.slope[i]);
    if (lelong < 0)
      throw Error(ErrorCode::kInvalidPotential,
                  "negative Lelong number " + to_string(lelong) + " along Y_" + std::to_string(i + 1));
    nu.push_back(lelong);
    // Siu subtraction leaves slope_i - lelong; restriction keeps the pieces
    // where that is zero.
    std::vector<moment::AffinePiece> kept;
    for (auto& p : pieces)
      if (p.slope[i] == lelong) {
        p.slope[i] = 0;
        kept.push_back(std::move(p));
      }
    pieces = std::move(kept);
  }
  return ValuationVector(std::move(nu));
}

geom::Polytope okounkov_body_toric(const toric::ToricClass& xi, const toric::InvariantFlag& flag) {
  check_dim(xi.dim(), flag);
  require_big(xi);
  return geom::affine_image(toric::section_polytope(xi), flag.adapted_map(), flag.shift(xi));
}

geom::Polytope semigroup_level(const toric::ToricClass& xi, const toric::InvariantFlag& flag, unsigned k,
                               std::uint64_t lattice_budget) {
  check_dim(xi.dim(), flag);
  require_big(xi);
  if (k == 0) throw Error(ErrorCode::kOutOfRange, "level k must be positive");
  const auto n = xi.dim();
  const Rational kq(static_cast<unsigned long>(k));
  const auto& fan = xi.fan();
  const auto p = toric::section_polytope(xi);

  std::vector<Integer> lo(n), hi(n);
  Rational box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = geom::projection_range(p, i);
    lo[i] = ceil(kq * a).get_num();
    hi[i] = floor(kq * b).get_num();
    if (hi[i] < lo[i]) return geom::Polytope::empty(n);
    box *= Rational(hi[i] - lo[i] + 1);
  }
  if (box > Rational(static_cast<unsigned long>(lattice_budget)))
    throw Error(ErrorCode::kTooLarge, "lattice point budget " + std::to_string(lattice_budget) + " exceeded at level " +
                                          std::to_string(k) + " (bounding box holds " + to_string(box) + " points)");

  // Exponents of x^alpha in adapted coordinates: alpha = A m + floor(k a_sigma)
  // is a nonnegative integer vector; the fractional part of k a_sigma is
  // added back after valuing the monomial.
  const Vec ka = okb::operator*(kq, flag.shift(xi));
  Vec frac(n);
  Exponent base(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto f = floor(ka[i]);
    base[i] = f.get_num().get_si();
    frac[i] = ka[i] - f;
  }

  std::vector<Vec> points;
  std::vector<Integer> m = lo;
  while (true) {
    Vec mq(m.begin(), m.end());
    bool inside = true;
    for (std::size_t r = 0; r < fan.ray_count() && inside; ++r)
      inside = dot(mq, fan.ray(r)) >= -kq * xi.offsets()[r];
    if (inside) {
      Vec am = linalg::times_col(flag.adapted_map(), mq);
      Exponent alpha(n);
      for (std::size_t i = 0; i < n; ++i) alpha[i] = am[i].get_num().get_si() + base[i];
      auto nu = flag_valuation_poly(Polynomial::monomial(alpha), flag);
      points.push_back(okb::operator*(Rational(1) / kq, nu.components() + frac));
    }
    std::size_t i = 0;
    while (i < n && m[i] == hi[i]) m[i] = lo[i], ++i;
    if (i == n) break;
    ++m[i];
  }
  if (points.empty()) return geom::Polytope::empty(n);
  std::sort(points.begin(), points.end(), lex_less);
  return geom::hull(points);
}

std::vector<geom::Polytope> semigroup_body(const toric::ToricClass& xi, const toric::InvariantFlag& flag,
                                           const SemigroupOptions& options) {
  if (options.k_max == 0) throw Error(ErrorCode::kOutOfRange, "k_max must be at least 1");
  std::vector<geom::Polytope> out;
  std::vector<Vec> accumulated;
  for (unsigned k = 1; k <= options.k_max; ++k) {
    auto level = semigroup_level(xi, flag, k, options.lattice_budget);
    accumulated.insert(accumulated.end(), level.vertices().begin(), level.vertices().end());
    out.push_back(accumulated.empty() ? geom::Polytope::empty(xi.dim()) : geom::hull(accumulated));
    accumulated = out.back().vertices();
  }
  return out;
}

}  // namespace okb::valuation
