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

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"
#include "okbody/toric.hpp"
#include "test_util.hpp"

namespace okb::toric {
namespace {

using okb::testing::Q;
using okb::testing::V;
using okb::testing::Vi;

ToricClass plane(const Rational& d) { return ToricClass(fans::projective_space(2), {0, 0, d}); }

// Bl_pt P^2 with rays e1, e2, -e1-e2 and the exceptional ray e1+e2 (index 3).
FanPtr blown_up_plane() {
  auto p2 = fans::projective_space(2);
  return blowup_at_fixed_point(p2, {0, 1}, InvariantFlag(*p2, {0, 1})).fan;
}

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Derivative at 0+ of t -> volume_class(xi - t Z) by interpolating the
// volume at 0, h, h/2, ..., h/n, all inside the first polynomial piece.
Rational derivative_by_interpolation(const ToricClass& xi, std::size_t ray, const Rational& h) {
  auto z = ToricClass::divisor(xi.fan_ptr(), ray);
  Vec ts{Rational(0)}, vs{volume_class(xi)};
  for (unsigned k = 1; k <= xi.dim(); ++k) {
    Rational t = h / Rational(k);
    ts.push_back(t);
    vs.push_back(volume_class(xi - t * z));
  }
  return UnivariatePolynomial::interpolate(ts, vs).derivative()(0);
}

TEST(Fan, StandardFansValidate) {
  EXPECT_EQ(fans::projective_line()->cones().size(), 2u);
  EXPECT_EQ(fans::projective_space(3)->cones().size(), 4u);
  EXPECT_EQ(fans::p1_times_p1()->ray_count(), 4u);
  EXPECT_EQ(fans::hirzebruch(3)->cones().size(), 4u);
  EXPECT_EQ(blown_up_plane()->ray_count(), 4u);
}

TEST(Fan, RejectsMalformed) {
  expect_code(ErrorCode::kInvalidFan, [] { Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}); });
  expect_code(ErrorCode::kInvalidFan, [] { Fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); });
  expect_code(ErrorCode::kNotSmooth, [] { Fan(2, {{1, 2}, {0, 1}, {-1, -1}, {1, 0}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); });
  // Two cones covering the same half plane twice.
  expect_code(ErrorCode::kInvalidFan,
              [] { Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}}); });
  expect_code(ErrorCode::kDimensionMismatch, [] { Fan(2, {{1, 0, 0}, {0, 1}}, {{0, 1}}); });
}

TEST(ToricClass, OffsetCountChecked) {
  expect_code(ErrorCode::kDimensionMismatch, [] { ToricClass(fans::projective_space(2), {1, 2}); });
}

TEST(SectionPolytope, PlaneOfDegreeOne) {
  auto p = section_polytope(plane(1));
  EXPECT_EQ(p, geom::hull({Vi({0, 0}), Vi({1, 0}), Vi({0, 1})}));
}

TEST(SectionPolytope, LinearInOffsets) {
  for (long d = 1; d <= 5; ++d)
    EXPECT_EQ(section_polytope(plane(d)), geom::scale(section_polytope(plane(1)), Rational(d)));
}

TEST(SectionPolytope, EmptyForNegativeClass) {
  EXPECT_TRUE(section_polytope(plane(-1)).is_empty());
  EXPECT_EQ(volume_class(plane(-1)), 0);
}

TEST(VolumeClass, PlaneDegreeSquared) {
  for (long d = 1; d <= 6; ++d) EXPECT_EQ(volume_class(plane(d)), d * d);
  EXPECT_EQ(volume_class(plane(Q("3/2"))), Q("9/4"));
}

TEST(VolumeClass, ProductOfLinesIsTwiceRectangleArea) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = testing::random_rational(rng, 1, 5, 8), b = testing::random_rational(rng, 1, 5, 8);
    ToricClass xi(fans::p1_times_p1(), {0, a, 0, b});
    EXPECT_EQ(volume_class(xi), 2 * a * b);
    EXPECT_TRUE(is_nef(xi));
    EXPECT_TRUE(is_big(xi));
  }
}

TEST(VolumeClass, FiberClassIsNotBig) {
  ToricClass fiber(fans::p1_times_p1(), {0, 1, 0, 0});
  EXPECT_FALSE(is_big(fiber));
  EXPECT_TRUE(is_nef(fiber));
  EXPECT_EQ(volume_class(fiber), 0);
}

TEST(VolumeClass, HomogeneousOfDegreeN) {
  std::mt19937 rng(11);
  auto fan = fans::projective_space(3);
  for (int trial = 0; trial < 6; ++trial) {
    ToricClass xi(fan, testing::random_point(rng, 4, 0, 2, 4));
    Rational lambda = testing::random_rational(rng, 1, 4, 3);
    EXPECT_EQ(volume_class(lambda * xi), lambda * lambda * lambda * volume_class(xi));
  }
}

TEST(VolumeClass, ContinuousAcrossBigBoundary) {
  auto fan = fans::p1_times_p1();
  ToricClass fiber(fan, {0, 1, 0, 0});
  auto omega = ToricClass::ample_reference(fan);
  Rational prev = volume_class(fiber + omega);
  for (long k = 1; k <= 8; ++k) {
    Rational s = Rational(1) / Rational(1L << k);
    Rational v = volume_class(fiber + s * omega);
    EXPECT_LT(v, prev);
    EXPECT_LE(v, 12 * s);
    prev = v;
  }
}

TEST(Nef, BlownUpPlane) {
  auto fan = blown_up_plane();
  EXPECT_TRUE(is_nef(ToricClass(fan, {0, 0, 1, 0})));
  EXPECT_TRUE(is_nef(ToricClass(fan, {0, 0, 2, -1})));
  EXPECT_FALSE(is_nef(ToricClass(fan, {0, 0, 2, 1})));
  EXPECT_FALSE(is_nef(ToricClass(fan, {0, 0, 1, 1})));
}

TEST(RestrictedVolume, PlaneAlongLine) {
  for (long d = 1; d <= 5; ++d)
    for (std::size_t z = 0; z < 3; ++z) EXPECT_EQ(restricted_volume(plane(d), z), d);
}

TEST(RestrictedVolume, EmptyFacetGivesZero) {
  // Pulled-back line class: the exceptional hyperplane touches the section
  // polytope only at a vertex.
  auto fan = blown_up_plane();
  ToricClass xi(fan, {0, 0, 1, 0});
  EXPECT_EQ(facet_restricted_volume(xi, 3), 0);
  EXPECT_EQ(restricted_volume(xi, 3), 0);
}

TEST(RestrictedVolume, UnknownDivisor) {
  expect_code(ErrorCode::kUnknownDivisor, [] { restricted_volume(plane(1), 3); });
}

TEST(RestrictedVolume, DerivativeAgreesWithFacetFormulaOnNefClasses) {
  std::mt19937 rng(2026);
  auto fan = fans::p1_times_p1();
  int checked = 0;
  while (checked < 20) {
    ToricClass xi(fan, testing::random_point(rng, 4, 0, 3, 4));
    ASSERT_TRUE(is_nef(xi));
    if (!is_big(xi)) continue;
    ++checked;
    for (std::size_t z = 0; z < 4; ++z) {
      Rational derivative_route = Rational(-1, 2) * volume_profile(xi, z).right_derivative(0);
      EXPECT_EQ(derivative_route, facet_restricted_volume(xi, z)) << to_string(xi.offsets()) << " z=" << z;
    }
  }
}

TEST(RestrictedVolume, NefButNotBigUsesIntersectionNumber) {
  // A thin strip: vol vanishes identically, the restriction to Z does not.
  ToricClass xi(fans::p1_times_p1(), V({"0", "0", "1/4", "1/4"}));
  EXPECT_EQ(restricted_volume(xi, 0), Q("1/2"));
  EXPECT_EQ(volume_profile(xi, 0).right_derivative(0), 0);
}

TEST(RestrictedVolume, NonNefZariskiExamples) {
  auto fan = blown_up_plane();
  // 2H + E: E lies in the negative part, H-direction sees the full 2H.
  ToricClass xi(fan, {0, 0, 2, 1});
  EXPECT_EQ(restricted_volume(xi, 3), 0);
  EXPECT_EQ(restricted_volume(xi, 2), 2);
  EXPECT_EQ(volume_class(xi), 4);
}

TEST(RestrictedVolume, MatchesInterpolatedDerivativeOnNonNefClasses) {
  std::mt19937 rng(99);
  auto fan = blown_up_plane();
  int non_nef = 0;
  for (int trial = 0; trial < 25; ++trial) {
    ToricClass xi(fan, testing::random_point(rng, 4, 0, 3, 2));
    if (!is_big(xi)) continue;
    non_nef += !is_nef(xi);
    for (std::size_t z = 0; z < 4; ++z) {
      Rational oracle = Rational(-1, 2) * derivative_by_interpolation(xi, z, Q("1/1000"));
      EXPECT_EQ(restricted_volume(xi, z), oracle) << to_string(xi.offsets()) << " z=" << z;
    }
  }
  EXPECT_GT(non_nef, 3);
}

TEST(VolumeProfile, IntegratesRestrictedVolumes) {
  // vol(xi) = n * integral_0^{nu_max} vol_{X|Z}(xi - tZ) dt.
  std::mt19937 rng(5);
  std::vector<FanPtr> fan_list{fans::p1_times_p1(), blown_up_plane(), fans::projective_space(3)};
  for (const auto& fan : fan_list) {
    for (int trial = 0; trial < 3; ++trial) {
      auto xi = ToricClass::ample_reference(fan) + ToricClass(fan, testing::random_point(rng, fan->ray_count(), 0, 2, 2));
      const auto n = fan->dim();
      for (std::size_t z = 0; z < fan->ray_count(); ++z) {
        auto profile = volume_profile(xi, z);
        auto zc = ToricClass::divisor(fan, z);
        auto integrand = fit_piecewise(profile.breaks, static_cast<unsigned>(n - 1),
                                       [&](const Rational& t) { return restricted_volume(xi - t * zc, z); });
        EXPECT_EQ(Rational(static_cast<long>(n)) * integrand.integral(), volume_class(xi));
        EXPECT_EQ(profile(0), volume_class(xi));
      }
    }
  }
}

TEST(VolumeProfile, BreakpointsAtZariskiChamberWalls) {
  auto fan = blown_up_plane();
  ToricClass xi(fan, {0, 0, 2, 1});
  auto profile = volume_profile(xi, 3);
  // Constant until E enters the section polytope at t = 1, then 4 - (t-1)^2.
  EXPECT_EQ(profile.breaks, Vi({0, 1, 3}));
  EXPECT_EQ(profile(Q("1/2")), 4);
  EXPECT_EQ(profile(2), 3);
}

TEST(NuRange, PlaneStandardFlag) {
  auto p2 = fans::projective_space(2);
  auto range = numin_numax(plane(1), InvariantFlag(*p2, {0, 1}));
  EXPECT_EQ(range.first, 0);
  EXPECT_EQ(range.second, 1);
}

TEST(NuRange, ProjectiveLine) {
  auto p1 = fans::projective_line();
  for (long m = 1; m <= 5; ++m) {
    auto range = numin_numax(ToricClass(p1, {0, m}), InvariantFlag(*p1, {0}));
    EXPECT_EQ(range.first, 0);
    EXPECT_EQ(range.second, m);
  }
}

TEST(NuRange, HomogeneousAndStrict) {
  auto fan = blown_up_plane();
  ToricClass xi(fan, {Q("1/3"), 0, 3, Q("3/2")});
  for (const auto& flag : all_flags(*fan)) {
    auto [lo, hi] = numin_numax(xi, flag);
    EXPECT_LT(lo, hi);
    auto [lo2, hi2] = numin_numax(Q("5/2") * xi, flag);
    EXPECT_EQ(lo2, Q("5/2") * lo);
    EXPECT_EQ(hi2, Q("5/2") * hi);
  }
}

TEST(NuRange, NotBig) {
  auto fan = fans::p1_times_p1();
  expect_code(ErrorCode::kNotBig, [&] { numin_numax(ToricClass(fan, {0, 1, 0, 0}), InvariantFlag(*fan, {0, 2})); });
}

TEST(Flags, EnumeratesOrderedCones) {
  EXPECT_EQ(all_flags(*fans::projective_space(2)).size(), 6u);
  EXPECT_EQ(all_flags(*fans::projective_space(3)).size(), 24u);
  expect_code(ErrorCode::kInvalidFlag, [] { InvariantFlag(*fans::p1_times_p1(), {0, 1}); });
}

TEST(Flags, AdaptedCoordinatesVanishAtFixedPoint) {
  auto fan = blown_up_plane();
  ToricClass xi(fan, V({"1/3", "0", "3", "3/2"}));
  for (const auto& flag : all_flags(*fan)) {
    Vec rhs;
    for (auto r : flag.edge_order()) rhs.push_back(-xi.offsets()[r]);
    auto m = *linalg::solve(flag.adapted_map(), rhs);
    EXPECT_EQ(flag.adapt(m, xi), zero_vec(2));
  }
}

TEST(Blowup, AtFlagPointOfPlane) {
  auto p2 = fans::projective_space(2);
  InvariantFlag flag(*p2, {0, 1});
  auto b = blowup_at_fixed_point(p2, {0, 1}, flag);
  EXPECT_EQ(b.exceptional_ray, 3u);
  EXPECT_EQ(b.flag.edge_order(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(b.g.matrix(), (Matrix{Vi({1, 1}), Vi({0, 1})}));
}

TEST(Blowup, AwayFromFlagIsIdentity) {
  auto p2 = fans::projective_space(2);
  InvariantFlag flag(*p2, {0, 1});
  auto b = blowup_at_fixed_point(p2, {1, 2}, flag);
  EXPECT_EQ(b.flag.edge_order(), flag.edge_order());
  EXPECT_EQ(b.g, LiftMatrix::identity(2));
}

TEST(Blowup, LiftMatrixUnipotentForEveryFlagOrder) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto fan = fans::projective_space(n);
    for (const auto& flag : all_flags(*fan)) {
      auto b = blowup_at_fixed_point(fan, flag.cone(), flag);
      EXPECT_EQ(linalg::determinant(b.g.matrix()), 1);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(b.g.matrix()[i][n - 1], 1);
    }
  }
}

TEST(Blowup, PullbackPreservesVolume) {
  std::mt19937 rng(3);
  std::vector<FanPtr> fan_list{fans::projective_space(2), fans::p1_times_p1(), fans::projective_space(3)};
  for (const auto& fan : fan_list) {
    auto flags = all_flags(*fan);
    for (int trial = 0; trial < 4; ++trial) {
      ToricClass xi(fan, testing::random_point(rng, fan->ray_count(), 0, 3, 3));
      const auto& flag = flags[static_cast<std::size_t>(trial) * 5 % flags.size()];
      auto b = blowup_at_fixed_point(fan, fan->cones()[static_cast<std::size_t>(trial) % fan->cones().size()], flag);
      EXPECT_EQ(volume_class(b.pullback(xi)), volume_class(xi));
      EXPECT_EQ(section_polytope(b.pullback(xi)), section_polytope(xi));
    }
  }
}

TEST(Blowup, RejectsForeignCone) {
  auto p2 = fans::projective_space(2);
  InvariantFlag flag(*p2, {0, 1});
  expect_code(ErrorCode::kInvalidFan, [&] { blowup_at_fixed_point(p2, {0, 3}, flag); });
  auto b = blowup_at_fixed_point(p2, {0, 1}, flag);
  expect_code(ErrorCode::kInvalidFan, [&] { b.pullback(ToricClass::ample_reference(b.fan)); });
}

}  // namespace
}  // namespace okb::toric
