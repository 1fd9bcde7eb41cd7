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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "okbody/error.hpp"
#include "okbody/valuation.hpp"
#include "test_util.hpp"

namespace okb::valuation {
namespace {

using moment::AffinePiece;
using moment::ConvexPotential;
using okb::testing::Q;
using okb::testing::V;
using okb::testing::Vi;
using toric::InvariantFlag;
using toric::ToricClass;

const InvariantFlag& standard_flag(std::size_t n) {
  static const auto f1 = InvariantFlag(*toric::fans::projective_space(1), {0});
  static const auto f2 = InvariantFlag(*toric::fans::projective_space(2), {0, 1});
  static const auto f3 = InvariantFlag(*toric::fans::projective_space(3), {0, 1, 2});
  return n == 1 ? f1 : n == 2 ? f2 : f3;
}

Polynomial random_polynomial(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 6), expo(0, 4), coef(-5, 5);
  Polynomial p(n);
  while (p.is_zero()) {
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      Exponent e(n);
      for (auto& x : e) x = expo(rng);
      p.add_term(e, Rational(coef(rng)));
    }
  }
  return p;
}

ConvexPotential random_potential(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 7);
  std::vector<AffinePiece> pieces;
  int k = count(rng);
  for (int i = 0; i < k; ++i)
    pieces.push_back({testing::random_point(rng, n, 0, 3, 2), testing::random_rational(rng, -2, 2, 3)});
  return ConvexPotential(pieces);
}

Vec lex_min(std::vector<Vec> pts) { return *std::min_element(pts.begin(), pts.end(), lex_less); }

Vec as_vec(const Exponent& e) {
  Vec v;
  for (auto x : e) v.emplace_back(static_cast<long>(x));
  return v;
}

TEST(FlagValuation, WorkedExample) {
  Polynomial s(2, {{{2, 1}, 1}, {{3, 0}, 1}});
  EXPECT_EQ(flag_valuation_poly(s, standard_flag(2)).components(), Vi({2, 1}));
}

TEST(FlagValuation, Monomial) {
  EXPECT_EQ(flag_valuation_poly(Polynomial::monomial({4, 0, 7}, Q("-2/3")), standard_flag(3)).components(),
            Vi({4, 0, 7}));
}

TEST(FlagValuation, ZeroSection) {
  try {
    flag_valuation_poly(Polynomial(2), standard_flag(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroSection);
  }
}

TEST(FlagValuation, CancellingTermsVanish) {
  auto p = Polynomial::monomial({1, 0}) + Polynomial::monomial({1, 0}, -1) + Polynomial::monomial({2, 2});
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(flag_valuation_poly(p, standard_flag(2)).components(), Vi({2, 2}));
}

TEST(FlagValuation, EqualsLexMinExponent) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto p = random_polynomial(rng, n);
    std::vector<Vec> exps;
    for (const auto& [e, c] : p.terms()) exps.push_back(as_vec(e));
    EXPECT_EQ(flag_valuation_poly(p, standard_flag(n)).components(), lex_min(exps));
  }
}

TEST(FlagValuation, Additive) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto s = random_polynomial(rng, n), t = random_polynomial(rng, n);
    const auto& flag = standard_flag(n);
    EXPECT_EQ(flag_valuation_poly(s * t, flag), flag_valuation_poly(s, flag) + flag_valuation_poly(t, flag));
  }
}

TEST(CurrentValuation, LinearPotential) {
  EXPECT_EQ(current_valuation(ConvexPotential::linear(V({"1/2", "3", "0"})), standard_flag(3)).components(),
            V({"1/2", "3", "0"}));
  EXPECT_EQ(current_valuation(ConvexPotential::linear(V({"5/7"}), Q("9")), standard_flag(1)).components(),
            V({"5/7"}));
}

TEST(CurrentValuation, TiesKeepEveryMinimalPiece) {
  // Both pieces have x1-slope 1; the x2 step then sees slopes 4 and 2.
  ConvexPotential u({{Vi({1, 4}), 0}, {Vi({1, 2}), -3}, {Vi({2, 0}), 5}});
  EXPECT_EQ(current_valuation(u, standard_flag(2)).components(), Vi({1, 2}));
}

TEST(CurrentValuation, NegativeLelongRejected) {
  try {
    current_valuation(ConvexPotential({{Vi({-1, 0}), 0}, {Vi({0, 0}), 0}}), standard_flag(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPotential);
  }
}

TEST(CurrentValuation, EqualsLexMinVertexOfMomentBody) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto u = random_potential(rng, n);
    auto body = geom::hull(u.slopes());
    EXPECT_EQ(current_valuation(u, standard_flag(n)).components(), lex_min(body.vertices()));
  }
}

TEST(CurrentValuation, ConvexCombinationIsLinear) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto u1 = random_potential(rng, n), u2 = random_potential(rng, n);
    Rational lambda = testing::random_rational(rng, 0, 1, 12);
    const auto& flag = standard_flag(n);
    EXPECT_EQ(current_valuation(moment::convex_combination(u1, u2, lambda), flag),
              lambda * current_valuation(u1, flag) + (1 - lambda) * current_valuation(u2, flag));
  }
}

TEST(CurrentValuation, EquivariantUnderBlowupLift) {
  std::mt19937 rng(5);
  for (std::size_t n = 2; n <= 3; ++n) {
    auto fan = toric::fans::projective_space(n);
    for (const auto& flag : toric::all_flags(*fan)) {
      auto b = toric::blowup_at_fixed_point(fan, flag.cone(), flag);
      for (int trial = 0; trial < 3; ++trial) {
        auto u = random_potential(rng, n);
        EXPECT_EQ(current_valuation(u.transform_slopes(b.g.matrix()), b.flag), current_valuation(u, flag) * b.g);
      }
    }
  }
}

TEST(OkounkovBody, PlaneStandardFlagIsScaledSimplex) {
  auto fan = toric::fans::projective_space(2);
  auto simplex = geom::hull({Vi({0, 0}), Vi({1, 0}), Vi({0, 1})});
  for (long d = 1; d <= 4; ++d)
    EXPECT_EQ(okounkov_body_toric(ToricClass(fan, {0, 0, d}), standard_flag(2)), geom::scale(simplex, Rational(d)));
}

TEST(OkounkovBody, VolumeMatchesSectionPolytopeForEveryFlag) {
  auto fan = toric::blowup_at_fixed_point(toric::fans::projective_space(2), {0, 1}, standard_flag(2)).fan;
  for (const auto& offsets : {V({"0", "0", "2", "1"}), V({"0", "0", "5/2", "1/2"}), V({"1/3", "0", "3", "3/2"})}) {
    ToricClass xi(fan, offsets);
    for (const auto& flag : toric::all_flags(*fan)) {
      auto body = okounkov_body_toric(xi, flag);
      EXPECT_EQ(geom::volume(body), geom::volume(toric::section_polytope(xi)));
      for (const auto& v : body.vertices())
        for (const auto& x : v) EXPECT_GE(x, 0);
    }
  }
}

TEST(OkounkovBody, NotBig) {
  auto fan = toric::fans::p1_times_p1();
  try {
    okounkov_body_toric(ToricClass(fan, {0, 1, 0, 0}), InvariantFlag(*fan, {0, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBig);
  }
}

TEST(Semigroup, PlaneLevelOneIsSimplexOfThreeMonomials) {
  auto fan = toric::fans::projective_space(2);
  auto level = semigroup_level(ToricClass(fan, {0, 0, 1}), standard_flag(2), 1);
  EXPECT_EQ(level.vertices(), (std::vector<Vec>{Vi({0, 0}), Vi({0, 1}), Vi({1, 0})}));
}

TEST(Semigroup, CumulativeBodiesNestAndStayInside) {
  auto fan = toric::fans::p1_times_p1();
  ToricClass xi(fan, V({"1/3", "1", "1/2", "3/2"}));
  InvariantFlag flag(*fan, {1, 3});
  auto body = okounkov_body_toric(xi, flag);
  auto levels = semigroup_body(xi, flag, {.k_max = 12});
  ASSERT_EQ(levels.size(), 12u);
  for (std::size_t k = 1; k <= 12; ++k) {
    EXPECT_TRUE(geom::contains(body, levels[k - 1]));
    if (k >= 2) EXPECT_TRUE(geom::contains(levels[k - 1], levels[k - 2]));
    if (2 * k <= 12) {
      auto lk = semigroup_level(xi, flag, static_cast<unsigned>(k));
      EXPECT_TRUE(geom::contains(semigroup_level(xi, flag, static_cast<unsigned>(2 * k)), lk));
    }
  }
}

TEST(Semigroup, AgreesWithDirectTransformAtDenominatorMultiple) {
  auto fan = toric::fans::p1_times_p1();
  std::mt19937 rng(6);
  for (int trial = 0; trial < 4; ++trial) {
    ToricClass xi(fan, testing::random_point(rng, 4, 0, 2, 2));
    if (!toric::is_big(xi)) continue;
    Integer lcm = 1;
    for (const auto& a : xi.offsets()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
    const unsigned k = static_cast<unsigned>(lcm.get_ui()) * 6;
    for (const auto& flag : toric::all_flags(*fan)) {
      auto body = okounkov_body_toric(xi, flag);
      auto level = semigroup_level(xi, flag, k);
      EXPECT_LE(geom::hausdorff_distance(body, level, Q("1/1000")), Rational(2) / Rational(k));
    }
  }
}

TEST(Semigroup, ValuationsBoundedByScaledRange) {
  // Each nu_i of a level-k section lies in [0, k max_P (<m, v_i> + a_i)].
  auto fan = toric::fans::projective_space(2);
  ToricClass xi(fan, V({"1/2", "0", "3/2"}));
  auto p = toric::section_polytope(xi);
  for (const auto& flag : toric::all_flags(*fan)) {
    Vec bound;
    for (std::size_t i = 0; i < 2; ++i) {
      auto ray = fan->ray(flag.edge_order()[i]);
      Rational hi = dot(p.vertices().front(), ray);
      for (const auto& v : p.vertices()) hi = std::max(hi, dot(v, ray));
      bound.push_back(hi + xi.offsets()[flag.edge_order()[i]]);
    }
    for (unsigned k = 1; k <= 6; ++k) {
      auto level = semigroup_level(xi, flag, k);
      for (const auto& v : level.vertices())
        for (std::size_t i = 0; i < 2; ++i) {
          EXPECT_GE(v[i], 0);
          EXPECT_LE(v[i], bound[i]);
        }
    }
  }
}

TEST(Semigroup, LatticeBudgetGuard) {
  auto fan = toric::fans::projective_space(3);
  try {
    semigroup_body(ToricClass(fan, {0, 0, 0, 50}), standard_flag(3), {.k_max = 12, .lattice_budget = 1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
}

}  // namespace
}  // namespace okb::valuation
