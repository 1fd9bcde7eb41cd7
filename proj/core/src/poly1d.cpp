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

#include "okbody/poly1d.hpp"

#include <utility>

#include "okbody/error.hpp"

namespace okb {

UnivariatePolynomial::UnivariatePolynomial(Vec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::interpolate(const Vec& xs, const Vec& ys) {
  const std::size_t m = xs.size();
  Vec result = zero_vec(m);
  for (std::size_t i = 0; i < m; ++i) {
    // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j).
    Vec basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      Vec next = zero_vec(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw Error(ErrorCode::kInternal, "interpolation nodes not distinct");
    Rational scale = ys[i] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += scale * basis[k];
  }
  return UnivariatePolynomial(std::move(result));
}

Rational UnivariatePolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  Vec d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::antiderivative() const {
  Vec a = zero_vec(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return UnivariatePolynomial(std::move(a));
}

Rational UnivariatePolynomial::integrate(const Rational& a, const Rational& b) const {
  UnivariatePolynomial prim = antiderivative();
  return prim(b) - prim(a);
}

Rational PiecewisePolynomial::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) total += pieces[i].integrate(breaks[i], breaks[i + 1]);
  return total;
}

namespace {

std::ptrdiff_t piece_index(const PiecewisePolynomial& f, const Rational& t) {
  if (f.pieces.empty() || t < f.breaks.front() || t > f.breaks.back()) return -1;
  for (std::size_t i = 0; i < f.pieces.size(); ++i)
    if (t < f.breaks[i + 1]) return static_cast<std::ptrdiff_t>(i);
  return static_cast<std::ptrdiff_t>(f.pieces.size()) - 1;
}

}  // namespace

Rational PiecewisePolynomial::operator()(const Rational& t) const {
  auto i = piece_index(*this, t);
  return i < 0 ? Rational(0) : pieces[static_cast<std::size_t>(i)](t);
}

Rational PiecewisePolynomial::right_derivative(const Rational& t) const {
  auto i = piece_index(*this, t);
  if (i < 0 || t == breaks.back()) return 0;
  return pieces[static_cast<std::size_t>(i)].derivative()(t);
}

PiecewisePolynomial fit_piecewise(const Vec& breaks, unsigned degree,
                                  const std::function<Rational(const Rational&)>& f) {
  PiecewisePolynomial out;
  out.breaks = breaks;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Rational width = breaks[i + 1] - breaks[i];
    Vec xs, ys;
    for (unsigned j = 1; j <= degree + 1; ++j) {
      Rational x = breaks[i] + width * Rational(j) / Rational(degree + 2);
      ys.push_back(f(x));
      xs.push_back(std::move(x));
    }
    out.pieces.push_back(UnivariatePolynomial::interpolate(xs, ys));
  }
  return out;
}

}  // namespace okb
