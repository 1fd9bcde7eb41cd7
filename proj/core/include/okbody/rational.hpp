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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace okb {

// GMP rationals are kept in canonical form by every arithmetic operation;
// the helpers below canonicalize anything built from raw parts.
using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p" and "p/q". Anything else, including a zero denominator,
// throws Error(kParse).
Rational parse_rational(std::string_view text);

// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rational& r);

// 15 significant digits, for human-facing columns only.
std::string to_decimal(const Rational& r);

Rational floor(const Rational& r);
Rational ceil(const Rational& r);
Rational abs(const Rational& r);

// Rational interval [lo, hi] with lo^k <= x <= hi^k and hi - lo <= tol.
// Exact (lo == hi) whenever x is a k-th power of a rational.
struct RootBracket {
  Rational lo;
  Rational hi;
};
RootBracket kth_root(const Rational& x, unsigned k, const Rational& tol);

Rational factorial(unsigned n);
Rational power(const Rational& base, unsigned exponent);

Vec zero_vec(std::size_t n);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);

// Lexicographic three-way comparison of equal-length vectors.
std::strong_ordering lex_compare(const Vec& a, const Vec& b);
inline bool lex_less(const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; }

std::string to_string(const Vec& v);

}  // namespace okb
