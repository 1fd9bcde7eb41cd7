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
#include <map>
#include <set>

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"
#include "okbody/polytope.hpp"
#include "test_util.hpp"

namespace okb::geom {
namespace {

using okb::testing::Q;
using okb::testing::V;
using okb::testing::Vi;

Polytope simplex2() { return hull({Vi({0, 0}), Vi({1, 0}), Vi({0, 1})}); }

Polytope cube(std::size_t n, const Rational& lo, const Rational& hi) {
  std::vector<Vec> pts;
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? hi : lo;
    pts.push_back(v);
  }
  return hull(pts);
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Brute-force 3D hull: every supporting plane through a point triple.
struct BruteHull {
  std::set<Vec, decltype(&lex_less)> planes{&lex_less};  // primitive normal ++ offset
  std::vector<Vec> vertices;
};

BruteHull brute_force_hull(const std::vector<Vec>& pts) {
  BruteHull out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        Vec normal = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; }))
          continue;
        Rational off = dot(normal, pts[i]);
        bool below = true, above = true;
        for (const auto& p : pts) {
          Rational s = dot(normal, p);
          below = below && s <= off;
          above = above && s >= off;
        }
        if (!below && !above) continue;
        if (!below) {
          for (auto& x : normal) x = -x;
          off = -off;
        }
        Vec prim = linalg::primitive(normal);
        Rational factor = 0;
        for (std::size_t c = 0; c < 3; ++c)
          if (normal[c] != 0) factor = prim[c] / normal[c];
        prim.push_back(off * factor);
        out.planes.insert(prim);
      }
  for (const auto& p : pts) {
    Matrix tight;
    for (const auto& pl : out.planes) {
      Vec normal(pl.begin(), pl.end() - 1);
      if (dot(normal, p) == pl.back()) tight.push_back(normal);
    }
    if (linalg::rank(tight) == 3) out.vertices.push_back(p);
  }
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

// Independent volume: fan-triangulate each brute-force facet polygon after
// an exact angular sort, cone everything to the centroid.
Rational fan_volume_3d(const std::vector<Vec>& pts) {
  BruteHull bh = brute_force_hull(pts);
  Vec c = zero_vec(3);
  for (const auto& v : bh.vertices) c = c + v;
  c = Rational(1) / Rational(static_cast<long>(bh.vertices.size())) * c;
  Rational total = 0;
  for (const auto& pl : bh.planes) {
    Vec normal(pl.begin(), pl.end() - 1);
    std::vector<Vec> poly;
    for (const auto& v : bh.vertices)
      if (dot(normal, v) == pl.back()) poly.push_back(v);
    Vec fc = zero_vec(3);
    for (const auto& v : poly) fc = fc + v;
    fc = Rational(1) / Rational(static_cast<long>(poly.size())) * fc;
    const Vec ref = poly[0] - fc;
    auto half = [&](const Vec& w) {
      Rational s = dot(normal, cross(ref, w));
      return (s > 0 || (s == 0 && dot(ref, w) > 0)) ? 0 : 1;
    };
    std::sort(poly.begin(), poly.end(), [&](const Vec& a, const Vec& b) {
      Vec wa = a - fc, wb = b - fc;
      int ha = half(wa), hb = half(wb);
      if (ha != hb) return ha < hb;
      return dot(normal, cross(wa, wb)) > 0;
    });
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Vec& a = poly[i];
      const Vec& b = poly[(i + 1) % poly.size()];
      Matrix m{a - c, b - c, fc - c};
      total += abs(linalg::determinant(m));
    }
  }
  return total / 6;
}

TEST(Hull, DropsInteriorPoint) {
  Polytope p = hull({Vi({0, 0}), Vi({1, 0}), Vi({0, 1}), V({"1/4", "1/4"})});
  EXPECT_EQ(p.vertices(), (std::vector<Vec>{Vi({0, 0}), Vi({0, 1}), Vi({1, 0})}));
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(p.facets().size(), 3u);
}

TEST(Hull, ScaledSimplex) {
  Polytope p = hull({Vi({0, 0}), Vi({2, 0}), Vi({0, 2})});
  EXPECT_EQ(p, scale(simplex2(), 2));
  EXPECT_EQ(volume(p), 2);
}

TEST(Hull, CollinearBoundaryPointsAreNotVertices) {
  std::vector<Vec> pts;
  for (long i = 0; i <= 4; ++i)
    for (long j = 0; j <= 4; ++j) pts.push_back(Vi({i, j}));
  Polytope p = hull(pts);
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_EQ(p.facets().size(), 4u);
  EXPECT_EQ(volume(p), 16);
}

TEST(Hull, LowerDimensionalInput) {
  Polytope p = hull({Vi({0, 0, 1}), Vi({1, 0, 1}), Vi({0, 1, 1}), V({"1/3", "1/3", "1"})});
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(p.vertices().size(), 3u);
  ASSERT_EQ(p.equations().size(), 1u);
  EXPECT_EQ(volume(p), 0);
  EXPECT_EQ(relative_volume(p), Q("1/2"));
  EXPECT_TRUE(p.contains_point(V({"1/4", "1/4", "1"})));
  EXPECT_FALSE(p.contains_point(V({"1/4", "1/4", "2"})));
}

TEST(Hull, SinglePointAndSegment) {
  Polytope pt = hull({Vi({3, 4}), Vi({3, 4})});
  EXPECT_EQ(pt.dim(), 0);
  EXPECT_EQ(relative_volume(pt), 1);
  Polytope seg = hull({Vi({0, 0}), Vi({2, 2}), Vi({1, 1})});
  EXPECT_EQ(seg.dim(), 1);
  EXPECT_EQ(seg.vertices().size(), 2u);
  EXPECT_EQ(relative_volume(seg), 2);
}

TEST(Hull, Errors) {
  EXPECT_THROW(hull({}), Error);
  try {
    hull({Vi({0, 0}), Vi({1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Hull, RandomAgainstBruteForceFacets) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto pts = okb::testing::random_points(rng, 50, 3, -3, 3, 4);
    Polytope p = hull(pts);
    BruteHull bh = brute_force_hull(pts);
    EXPECT_EQ(p.vertices(), bh.vertices);
    std::set<Vec, decltype(&lex_less)> planes(&lex_less);
    for (const auto& f : p.facets()) {
      Vec key = f.normal;
      key.push_back(f.offset);
      planes.insert(key);
    }
    EXPECT_TRUE(std::equal(planes.begin(), planes.end(), bh.planes.begin(), bh.planes.end()));
  }
}

TEST(Volume, KnownValues) {
  EXPECT_EQ(volume(simplex2()), Q("1/2"));
  EXPECT_EQ(volume(cube(3, 0, 1)), 1);
  EXPECT_EQ(volume(cube(4, -1, 1)), 16);
  EXPECT_EQ(volume(Polytope::empty(3)), 0);
}

TEST(Volume, RandomAgainstFanTriangulation) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto pts = okb::testing::random_points(rng, 25, 3, -2, 2, 3);
    EXPECT_EQ(volume(hull(pts)), fan_volume_3d(pts));
  }
}

TEST(Minkowski, TranslateBySinglePoint) {
  Polytope p = simplex2();
  EXPECT_EQ(minkowski_sum(p, point(Vi({2, -1}))), translate(p, Vi({2, -1})));
  EXPECT_EQ(minkowski_sum(p, point(Vi({0, 0}))), p);
}

TEST(Minkowski, SimplexPlusSimplex) {
  Polytope s = simplex2();
  Polytope t = hull({Vi({0, 0}), Vi({-1, 0}), Vi({0, 1})});
  std::vector<Vec> sums;
  for (const auto& a : s.vertices())
    for (const auto& b : t.vertices()) sums.push_back(a + b);
  EXPECT_EQ(sums.size(), 9u);
  EXPECT_EQ(minkowski_sum(s, t), hull(sums));
}

TEST(Minkowski, SymmetricDifferenceBody) {
  Polytope p = hull({Vi({0, 0}), Vi({2, 0}), Vi({2, 1}), Vi({0, 1})});
  std::vector<Vec> flipped;
  for (const auto& v : p.vertices()) flipped.push_back(Rational(-1) * v);
  Polytope sum = minkowski_sum(p, hull(flipped));
  EXPECT_TRUE(sum.contains_point(Vi({0, 0})));
  for (const auto& v : sum.vertices()) EXPECT_TRUE(sum.contains_point(Rational(-1) * v));
}

TEST(Minkowski, CommutativeAndAssociative) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope a = hull(okb::testing::random_points(rng, 6, 2, -2, 2, 2));
    Polytope b = hull(okb::testing::random_points(rng, 5, 2, -2, 2, 3));
    Polytope c = hull(okb::testing::random_points(rng, 4, 2, -1, 1, 1));
    EXPECT_EQ(minkowski_sum(a, b), minkowski_sum(b, a));
    EXPECT_EQ(minkowski_sum(minkowski_sum(a, b), c), minkowski_sum(a, minkowski_sum(b, c)));
  }
}

TEST(Slice, Simplex) {
  Polytope s = simplex2();
  EXPECT_EQ(slice(s, 0), hull({Vi({0}), Vi({1})}));
  EXPECT_EQ(slice(s, Q("1/2")), hull({Vi({0}), V({"1/2"})}));
  EXPECT_EQ(slice(s, 1), point(Vi({0})));
  EXPECT_TRUE(slice(s, Q("3/2")).is_empty());
  EXPECT_TRUE(slice(s, Q("-1/100")).is_empty());
  EXPECT_EQ(slice(s, 2).ambient_dim(), 1u);
}

TEST(Slice, NonemptyExactlyOnProjectionRange) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope p = hull(okb::testing::random_points(rng, 10, 3, -3, 3, 2));
    auto [lo, hi] = projection_range(p);
    EXPECT_FALSE(slice(p, lo).is_empty());
    EXPECT_FALSE(slice(p, hi).is_empty());
    EXPECT_FALSE(slice(p, (lo + hi) / 2).is_empty());
    EXPECT_TRUE(slice(p, lo - Q("1/1000")).is_empty());
    EXPECT_TRUE(slice(p, hi + Q("1/1000")).is_empty());
  }
}

TEST(Fubini, KnownValues) {
  EXPECT_EQ(fubini_volume(simplex2()), Q("1/2"));
  EXPECT_EQ(fubini_volume(cube(3, 0, 1)), 1);
  EXPECT_EQ(fubini_volume(hull({Vi({0, 0, 0}), Vi({1, 0, 0}), Vi({0, 1, 0})})), 0);
}

TEST(Fubini, EqualsVolumeOnRandomPolytopes) {
  std::mt19937 rng(17);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 6; ++trial) {
      Polytope p = hull(okb::testing::random_points(rng, 4 + 3 * n, n, -2, 2, 3));
      EXPECT_EQ(fubini_volume(p), volume(p)) << "n=" << n;
    }
  }
}

// Midpoint form of concavity of t -> relvol(slice)^(1/(n-1)), decided with
// exact rational root brackets; exact roots make equality cases exact.
bool midpoint_concave(const Rational& fa, const Rational& fm, const Rational& fb, unsigned k) {
  const Rational tol = Q("1/1000000000000");
  RootBracket a = kth_root(fa, k, tol), m = kth_root(fm, k, tol), b = kth_root(fb, k, tol);
  return m.hi >= (a.lo + b.lo) / 2;
}

TEST(Slice, BrunnMinkowskiConcavity) {
  std::mt19937 rng(23);
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 6; ++trial) {
      Polytope p = hull(okb::testing::random_points(rng, 12, n, -3, 3, 2));
      auto [lo, hi] = projection_range(p);
      for (int s = 0; s < 4; ++s) {
        Rational a = lo + (hi - lo) * okb::testing::random_rational_01(rng);
        Rational b = lo + (hi - lo) * okb::testing::random_rational_01(rng);
        Rational m = (a + b) / 2;
        EXPECT_TRUE(midpoint_concave(relative_volume(slice(p, a)), relative_volume(slice(p, m)),
                                     relative_volume(slice(p, b)), static_cast<unsigned>(n - 1)));
      }
    }
  }
}

TEST(Transforms, ScaleIntersectUnimodular) {
  Polytope s = simplex2();
  EXPECT_EQ(scale(s, 1), s);
  EXPECT_EQ(scale(s, 0), point(Vi({0, 0})));
  Matrix shear{Vi({1, 1}), Vi({0, 1})};
  Polytope sheared = apply_unimodular(s, shear);
  EXPECT_EQ(sheared, hull({Vi({0, 0}), Vi({1, 1}), Vi({0, 1})}));
  EXPECT_EQ(volume(sheared), Q("1/2"));
  EXPECT_EQ(intersect(cube(3, 0, 4), cube(3, 1, 2)), cube(3, 1, 2));
  EXPECT_TRUE(intersect(cube(2, 0, 1), cube(2, 2, 3)).is_empty());
  EXPECT_THROW(apply_unimodular(s, Matrix{Vi({2, 0}), Vi({0, 1})}), Error);
  EXPECT_THROW(apply_unimodular(s, Matrix{Vi({1, 0, 0}), Vi({0, 1, 0}), Vi({0, 0, 1})}), Error);
}

TEST(Transforms, UnimodularPreservesVolume) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    // Product of an upper and a lower unipotent integer matrix.
    Matrix up = linalg::identity(3), low = linalg::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        up[i][j] = entry(rng);
        low[j][i] = entry(rng);
      }
    Matrix g = linalg::multiply(up, low);
    Polytope p = hull(okb::testing::random_points(rng, 9, 3, -2, 2, 2));
    EXPECT_EQ(volume(apply_unimodular(p, g)), volume(p));
  }
}

TEST(Contains, Basics) {
  EXPECT_TRUE(contains(cube(2, 0, 3), simplex2()));
  EXPECT_FALSE(contains(simplex2(), cube(2, 0, 3)));
  EXPECT_TRUE(contains(simplex2(), Polytope::empty(2)));
  EXPECT_FALSE(contains(Polytope::empty(2), simplex2()));
  EXPECT_THROW(contains(simplex2(), cube(3, 0, 1)), Error);
}

TEST(RelativeVolume, LatticeNormalizedFacet) {
  // The hypotenuse of d*simplex has lattice length d.
  Polytope seg = hull({Vi({5, 0}), Vi({0, 5})});
  EXPECT_EQ(relative_volume(seg), 5);
  Polytope tri = hull({Vi({2, 0, 0}), Vi({0, 2, 0}), Vi({0, 0, 2})});
  EXPECT_EQ(relative_volume(tri), 2);
}

TEST(Hausdorff, Basics) {
  const Rational tol = Q("1/1000");
  Polytope sq = cube(2, 0, 1);
  EXPECT_EQ(hausdorff_distance(sq, sq, tol), 0);
  Rational d = hausdorff_distance(sq, translate(sq, Vi({3, 0})), tol);
  EXPECT_LE(abs(d - 3), tol);
  EXPECT_THROW(hausdorff_distance(sq, Polytope::empty(2), tol), Error);
}

TEST(Hausdorff, ScaledSimplexShrinksToZero) {
  // Oracle: the farthest vertex of (1+e)S from S is (1+e, 0) at distance e.
  const Rational tol = Q("1/100000");
  Polytope s = simplex2();
  Rational previous = 1000;
  for (const char* eps : {"1/2", "1/4", "1/8", "1/16", "1/32"}) {
    Rational d = hausdorff_distance(s, scale(s, 1 + Q(eps)), tol);
    EXPECT_LE(abs(d - Q(eps)), tol);
    EXPECT_LT(d, previous);
    previous = d;
  }
}

TEST(FromHalfspaces, SimplexAndEmpty) {
  std::vector<Halfspace> h{{Vi({-1, 0}), 0}, {Vi({0, -1}), 0}, {Vi({1, 1}), 1}};
  EXPECT_EQ(from_halfspaces(2, h), simplex2());
  h.push_back({Vi({-1, -1}), -2});
  EXPECT_TRUE(from_halfspaces(2, h).is_empty());
  EXPECT_THROW(from_halfspaces(2, {{Vi({-1, 0}), 0}}), Error);
}

TEST(Faces, CubeFaceCount) {
  // 8 vertices + 12 edges + 6 facets + the cube.
  EXPECT_EQ(faces(cube(3, 0, 1)).size(), 27u);
  EXPECT_EQ(edges(cube(3, 0, 1)).size(), 12u);
}

}  // namespace
}  // namespace okb::geom
