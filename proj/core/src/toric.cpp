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

#include "okbody/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"

namespace okb::toric {

namespace {

constexpr std::size_t kCompletenessProbes = 96;
constexpr std::size_t kMaxBreakpointSubsets = 200000;

Matrix cone_matrix(const Fan& fan, const std::vector<std::size_t>& rays) {
  Matrix m;
  for (auto r : rays) m.push_back(fan.ray(r));
  return m;
}

void check_ray(const Fan& fan, std::size_t ray) {
  if (ray >= fan.ray_count())
    throw Error(ErrorCode::kUnknownDivisor, "ray " + std::to_string(ray) + " is not a ray of the fan");
}

// Cone coordinates of d in the basis of the cone's rays.
Vec cone_coordinates(const Matrix& basis_inverse, const Vec& d) { return linalg::row_times(d, basis_inverse); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMaxBreakpointSubsets) return r;
  }
  return r;
}

// Vertex / tight-ray incidence of the section polytope: constant exactly on
// the open intervals where the combinatorial type does not change.
std::set<std::vector<std::size_t>> incidence_type(const ToricClass& xi) {
  auto p = section_polytope(xi);
  std::set<std::vector<std::size_t>> out;
  const auto& fan = xi.fan();
  for (const auto& v : p.vertices()) {
    std::vector<std::size_t> tight;
    for (std::size_t r = 0; r < fan.ray_count(); ++r)
      if (dot(v, fan.ray(r)) == -xi.offsets()[r]) tight.push_back(r);
    out.insert(std::move(tight));
  }
  return out;
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<IntVec> rays, std::vector<Cone> cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)) {
  if (dim_ == 0) throw Error(ErrorCode::kInvalidFan, "dimension must be positive");
  if (rays_.empty() || cones_.empty()) throw Error(ErrorCode::kInvalidFan, "fan has no rays or no cones");
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.size() != dim_)
      throw Error(ErrorCode::kDimensionMismatch, "ray " + std::to_string(i) + " has wrong length");
    std::int64_t g = 0;
    for (auto x : r) g = std::gcd(g, x);
    if (g != 1) throw Error(ErrorCode::kInvalidFan, "ray " + std::to_string(i) + " is not primitive");
    if (!seen.insert(r).second) throw Error(ErrorCode::kInvalidFan, "duplicate ray " + std::to_string(i));
  }
  std::set<Cone> distinct;
  std::vector<Matrix> inverses;
  for (auto& c : cones_) {
    std::sort(c.begin(), c.end());
    if (c.size() != dim_ || std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(ErrorCode::kInvalidFan, "maximal cones must have n distinct rays");
    for (auto r : c)
      if (r >= rays_.size()) throw Error(ErrorCode::kInvalidFan, "cone refers to missing ray");
    if (!distinct.insert(c).second) throw Error(ErrorCode::kInvalidFan, "duplicate cone");
    Matrix m = cone_matrix(*this, c);
    if (abs(linalg::determinant(m)) != 1)
      throw Error(ErrorCode::kNotSmooth, "cone " + to_string_cone(c) + " is not generated by a lattice basis");
    inverses.push_back(*linalg::inverse(m));
  }

  // Each generic direction must lie in the interior of exactly one cone.
  std::mt19937_64 rng(0x6f6b626f6479ULL);
  std::uniform_int_distribution<std::int64_t> coord(-997, 997);
  std::size_t probes = 0;
  while (probes < kCompletenessProbes) {
    Vec d(dim_);
    for (auto& x : d) x = Rational(coord(rng)) + Rational(1) / Rational(coord(rng) * 2 + 1999);
    std::size_t interior = 0;
    bool on_wall = false;
    for (const auto& inv : inverses) {
      auto lambda = cone_coordinates(inv, d);
      bool nonneg = std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0; });
      if (!nonneg) continue;
      if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x == 0; })) {
        on_wall = true;
        break;
      }
      ++interior;
    }
    if (on_wall) continue;
    ++probes;
    if (interior == 0) throw Error(ErrorCode::kInvalidFan, "fan is not complete: direction " + to_string(d) + " is uncovered");
    if (interior > 1) throw Error(ErrorCode::kInvalidFan, "maximal cones overlap at direction " + to_string(d));
  }
}

Vec Fan::ray(std::size_t i) const {
  Vec v;
  v.reserve(dim_);
  for (auto x : rays_.at(i)) v.emplace_back(static_cast<long>(x));
  return v;
}

std::ptrdiff_t Fan::find_cone(Cone rays) const {
  std::sort(rays.begin(), rays.end());
  auto it = std::find(cones_.begin(), cones_.end(), rays);
  return it == cones_.end() ? -1 : it - cones_.begin();
}

std::string to_string_cone(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

namespace fans {

FanPtr projective_line() { return projective_space(1); }

FanPtr projective_space(std::size_t n) {
  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVec(n, -1));
  std::vector<Cone> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return std::make_shared<const Fan>(n, rays, cones);
}

FanPtr p1_times_p1() {
  return std::make_shared<const Fan>(2, std::vector<IntVec>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                                     std::vector<Cone>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

FanPtr hirzebruch(std::int64_t a) {
  return std::make_shared<const Fan>(2, std::vector<IntVec>{{1, 0}, {0, 1}, {-1, a}, {0, -1}},
                                     std::vector<Cone>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

}  // namespace fans

ToricClass::ToricClass(FanPtr fan, Vec offsets) : fan_(std::move(fan)), offsets_(std::move(offsets)) {
  if (!fan_) throw Error(ErrorCode::kInvalidFan, "class has no fan");
  if (offsets_.size() != fan_->ray_count())
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(fan_->ray_count()) + " offsets, got " +
                                                   std::to_string(offsets_.size()));
}

ToricClass ToricClass::ample_reference(FanPtr fan) {
  auto k = fan->ray_count();
  return ToricClass(std::move(fan), Vec(k, Rational(1)));
}

ToricClass ToricClass::zero(FanPtr fan) {
  auto k = fan->ray_count();
  return ToricClass(std::move(fan), zero_vec(k));
}

ToricClass ToricClass::divisor(FanPtr fan, std::size_t ray) {
  check_ray(*fan, ray);
  Vec a = zero_vec(fan->ray_count());
  a[ray] = 1;
  return ToricClass(std::move(fan), std::move(a));
}

void ToricClass::check_same_fan(const ToricClass& o) const {
  if (fan_ != o.fan_ && !(*fan_ == *o.fan_)) throw Error(ErrorCode::kInvalidFan, "classes live on different fans");
}

ToricClass ToricClass::operator+(const ToricClass& o) const {
  check_same_fan(o);
  return ToricClass(fan_, offsets_ + o.offsets_);
}

ToricClass ToricClass::operator-(const ToricClass& o) const {
  check_same_fan(o);
  return ToricClass(fan_, offsets_ - o.offsets_);
}

ToricClass operator*(const Rational& s, const ToricClass& c) { return ToricClass(c.fan_, okb::operator*(s, c.offsets_)); }

InvariantFlag::InvariantFlag(const Fan& fan, std::vector<std::size_t> edge_order) : edge_order_(std::move(edge_order)) {
  if (edge_order_.size() != fan.dim())
    throw Error(ErrorCode::kInvalidFlag, "edge_order must list " + std::to_string(fan.dim()) + " rays");
  for (auto r : edge_order_)
    if (r >= fan.ray_count()) throw Error(ErrorCode::kInvalidFlag, "edge_order refers to missing ray");
  if (fan.find_cone(edge_order_) < 0)
    throw Error(ErrorCode::kInvalidFlag, "edge_order " + to_string_cone(edge_order_) + " does not span a maximal cone");
  adapted_map_ = cone_matrix(fan, edge_order_);
  if (abs(linalg::determinant(adapted_map_)) != 1)
    throw Error(ErrorCode::kInvalidFlag, "edge_order is not a lattice basis");
}

Cone InvariantFlag::cone() const {
  Cone c = edge_order_;
  std::sort(c.begin(), c.end());
  return c;
}

Vec InvariantFlag::shift(const ToricClass& xi) const {
  Vec s;
  for (auto r : edge_order_) s.push_back(xi.offsets().at(r));
  return s;
}

Vec InvariantFlag::adapt(const Vec& m, const ToricClass& xi) const {
  return linalg::times_col(adapted_map_, m) + shift(xi);
}

std::vector<InvariantFlag> all_flags(const Fan& fan) {
  std::vector<InvariantFlag> out;
  for (auto order : fan.cones()) {
    std::sort(order.begin(), order.end());
    do {
      out.emplace_back(fan, order);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

LiftMatrix::LiftMatrix(Matrix g) : g_(std::move(g)) {
  const auto n = g_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g_[i].size() != n) throw Error(ErrorCode::kDimensionMismatch, "lift matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = g_[i][j];
      if (x.get_den() != 1) throw Error(ErrorCode::kPreconditionFailed, "lift matrix must be integral");
      if ((i == j && x != 1) || (i > j && x != 0))
        throw Error(ErrorCode::kPreconditionFailed, "lift matrix must be unipotent upper triangular");
    }
  }
}

LiftMatrix LiftMatrix::identity(std::size_t n) { return LiftMatrix(linalg::identity(n)); }

geom::Polytope section_polytope(const ToricClass& xi) {
  const auto& fan = xi.fan();
  std::vector<geom::Halfspace> ineq;
  for (std::size_t r = 0; r < fan.ray_count(); ++r)
    ineq.push_back({okb::operator*(Rational(-1), fan.ray(r)), xi.offsets()[r]});
  return geom::from_halfspaces(fan.dim(), ineq);
}

bool is_big(const ToricClass& xi) { return section_polytope(xi).is_full_dimensional(); }

bool is_nef(const ToricClass& xi) {
  const auto& fan = xi.fan();
  for (const auto& c : fan.cones()) {
    Vec rhs;
    for (auto r : c) rhs.push_back(-xi.offsets()[r]);
    auto m = linalg::solve(cone_matrix(fan, c), rhs);
    for (std::size_t r = 0; r < fan.ray_count(); ++r)
      if (dot(*m, fan.ray(r)) < -xi.offsets()[r]) return false;
  }
  return true;
}

Rational volume_class(const ToricClass& xi) {
  return factorial(static_cast<unsigned>(xi.dim())) * geom::volume(section_polytope(xi));
}

std::pair<Rational, Rational> vanishing_range(const ToricClass& xi, std::size_t ray) {
  check_ray(xi.fan(), ray);
  auto p = section_polytope(xi);
  if (p.is_empty()) throw Error(ErrorCode::kPreconditionFailed, "section polytope is empty");
  const Vec v = xi.fan().ray(ray);
  Rational lo = dot(p.vertices().front(), v), hi = lo;
  for (const auto& x : p.vertices()) {
    auto y = dot(x, v);
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  return {lo + xi.offsets()[ray], hi + xi.offsets()[ray]};
}

std::pair<Rational, Rational> numin_numax(const ToricClass& xi, const InvariantFlag& flag) {
  if (!is_big(xi)) throw Error(ErrorCode::kNotBig, "class is not big");
  return vanishing_range(xi, flag.first_divisor());
}

PiecewisePolynomial volume_profile(const ToricClass& xi, std::size_t ray) {
  const auto& fan = xi.fan();
  check_ray(fan, ray);
  const auto n = fan.dim();
  PiecewisePolynomial flat{{Rational(0)}, {}};
  if (section_polytope(xi).is_empty()) return flat;
  const Rational nu_max = vanishing_range(xi, ray).second;
  if (nu_max <= 0) return flat;

  auto shifted = [&](const Rational& t) { return xi - t * ToricClass::divisor(xi.fan_ptr(), ray); };

  // An (n+1)-subset of hyperplanes containing the moving one becomes
  // concurrent where det [v_rho | a_rho(t)] vanishes; that determinant is
  // affine in t, so each subset contributes at most one candidate.
  std::vector<std::size_t> others;
  for (std::size_t r = 0; r < fan.ray_count(); ++r)
    if (r != ray) others.push_back(r);
  if (binomial(others.size(), n) > kMaxBreakpointSubsets)
    throw Error(ErrorCode::kTooLarge, "too many ray subsets for breakpoint search");
  std::set<Rational> candidates;
  std::vector<bool> pick(others.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(n, others.size())), true);
  if (others.size() >= n) {
    do {
      Matrix m0, m1;
      auto add_row = [&](std::size_t r, const Rational& c0, const Rational& c1) {
        Vec row = fan.ray(r);
        row.push_back(c0);
        m0.push_back(row);
        row.back() = c1;
        m1.push_back(std::move(row));
      };
      add_row(ray, xi.offsets()[ray], xi.offsets()[ray] - 1);
      for (std::size_t i = 0; i < others.size(); ++i)
        if (pick[i]) add_row(others[i], xi.offsets()[others[i]], xi.offsets()[others[i]]);
      auto f0 = linalg::determinant(m0), f1 = linalg::determinant(m1);
      if (f0 == f1) continue;
      Rational t = f0 / (f0 - f1);
      if (t > 0 && t < nu_max) candidates.insert(t);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  // Keep only candidates where the incidence type actually changes.
  Vec grid{Rational(0)};
  grid.insert(grid.end(), candidates.begin(), candidates.end());
  grid.push_back(nu_max);
  Vec breaks{Rational(0)};
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    auto left = incidence_type(shifted((grid[i - 1] + grid[i]) / 2));
    auto right = incidence_type(shifted((grid[i] + grid[i + 1]) / 2));
    if (left != right) breaks.push_back(grid[i]);
  }
  breaks.push_back(nu_max);
  return fit_piecewise(breaks, static_cast<unsigned>(n),
                       [&](const Rational& t) { return volume_class(shifted(t)); });
}

Rational facet_restricted_volume(const ToricClass& xi, std::size_t ray) {
  check_ray(xi.fan(), ray);
  auto p = section_polytope(xi);
  if (p.is_empty()) return 0;
  const auto n = xi.dim();
  auto face = geom::section(p, xi.fan().ray(ray), -xi.offsets()[ray]);
  if (face.dim() != static_cast<int>(n) - 1) return 0;
  return factorial(static_cast<unsigned>(n - 1)) * geom::relative_volume(face);
}

Rational restricted_volume(const ToricClass& xi, std::size_t ray) {
  check_ray(xi.fan(), ray);
  if (is_nef(xi)) return facet_restricted_volume(xi, ray);
  auto profile = volume_profile(xi, ray);
  return Rational(-1) / Rational(static_cast<long>(xi.dim())) * profile.right_derivative(0);
}

ToricClass Blowup::pullback(const ToricClass& xi) const {
  if (!(xi.fan() == *base_fan)) throw Error(ErrorCode::kInvalidFan, "class does not live on the blown-up fan");
  Vec a = xi.offsets();
  Rational aw = 0;
  for (auto r : blown_cone) aw += a[r];
  a.push_back(aw);
  return ToricClass(fan, std::move(a));
}

Blowup blowup_at_fixed_point(const FanPtr& fan, Cone cone, const InvariantFlag& flag) {
  std::sort(cone.begin(), cone.end());
  const auto n = fan->dim();
  if (fan->find_cone(cone) < 0)
    throw Error(ErrorCode::kInvalidFan, to_string_cone(cone) + " is not a maximal cone of the fan");
  if (abs(linalg::determinant(cone_matrix(*fan, cone))) != 1)
    throw Error(ErrorCode::kNotSmooth, "cone " + to_string_cone(cone) + " is not smooth");
  if (flag.dim() != n || fan->find_cone(flag.edge_order()) < 0)
    throw Error(ErrorCode::kInvalidFlag, "flag does not belong to the fan");

  auto rays = fan->rays();
  IntVec w(n, 0);
  for (auto r : cone)
    for (std::size_t i = 0; i < n; ++i) w[i] += rays[r][i];
  const std::size_t e = rays.size();
  rays.push_back(w);
  std::vector<Cone> cones;
  for (const auto& c : fan->cones())
    if (c != cone) cones.push_back(c);
  for (auto drop : cone) {
    Cone c;
    for (auto r : cone)
      if (r != drop) c.push_back(r);
    c.push_back(e);
    cones.push_back(c);
  }
  auto lifted_fan = std::make_shared<const Fan>(n, rays, cones);

  auto order = flag.edge_order();
  if (flag.cone() == cone) order.back() = e;
  InvariantFlag lifted(*lifted_fan, order);

  // Adapted coordinates satisfy y' = A' m + a', y = A m + a and the offsets
  // of the pullback agree on the shared rays, so y' = y (A' A^{-1})^T.
  auto g = linalg::transpose(linalg::multiply(lifted.adapted_map(), *linalg::inverse(flag.adapted_map())));
  return Blowup{fan, lifted_fan, cone, e, lifted, LiftMatrix(g)};
}

}  // namespace okb::toric
