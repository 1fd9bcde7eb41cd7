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

#include <functional>
#include <vector>

#include "okbody/rational.hpp"

namespace okb {

// Dense univariate polynomial; coeffs[i] multiplies t^i.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(Vec coeffs);

  // Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
  static UnivariatePolynomial interpolate(const Vec& xs, const Vec& ys);

  const Vec& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& t) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial antiderivative() const;
  Rational integrate(const Rational& a, const Rational& b) const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  void trim();
  Vec coeffs_;
};

// A function given by one polynomial on each [breaks[i], breaks[i+1]].
struct PiecewisePolynomial {
  Vec breaks;
  std::vector<UnivariatePolynomial> pieces;

  Rational integral() const;
  // Value from the piece containing t on its right (the last piece at the
  // right end). Zero outside [breaks.front(), breaks.back()].
  Rational operator()(const Rational& t) const;
  Rational right_derivative(const Rational& t) const;
};

// Recovers a function known to be polynomial of degree <= `degree` on each
// interval between consecutive breaks, by sampling it at degree+1 interior
// points per interval.
PiecewisePolynomial fit_piecewise(const Vec& breaks, unsigned degree,
                                  const std::function<Rational(const Rational&)>& f);

}  // namespace okb
