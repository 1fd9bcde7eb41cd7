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

#include "okbody/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "okbody/error.hpp"
#include "okbody/linalg.hpp"
#include "okbody/lp.hpp"
#include "okbody/poly1d.hpp"

namespace okb::geom {
namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

// Facet of a full-dimensional hull in Q^d, as found by beneath-beyond.
struct MergedFacet {
  Vec normal;
  Rational offset;
};

struct FullHull {
  std::vector<std::size_t> vertex_ids;  // into the input points
  std::vector<MergedFacet> facets;
};

// Hyperplane through d points of Q^d, oriented so that `inside` satisfies
// normal . inside < offset.
MergedFacet oriented_plane(const std::vector<Vec>& pts, const std::vector<std::size_t>& ids,
                           const Vec& inside, std::size_t d) {
  Matrix diffs;
  for (std::size_t i = 1; i < ids.size(); ++i) diffs.push_back(pts[ids[i]] - pts[ids[0]]);
  Matrix ns = linalg::nullspace(diffs, d);
  if (ns.size() != 1) throw Error(ErrorCode::kInternal, "degenerate hull facet");
  Vec normal = linalg::primitive(ns[0]);
  Rational offset = dot(normal, pts[ids[0]]);
  if (dot(normal, inside) > offset) {
    for (auto& x : normal) x = -x;
    offset = -offset;
  }
  return {std::move(normal), std::move(offset)};
}

// Beneath-beyond on points spanning Q^d, d >= 2. The boundary is kept as a
// simplicial complex; coplanar simplices are merged at the end.
FullHull full_hull(const std::vector<Vec>& pts, std::size_t d) {
  // Initial simplex: greedily grow an affinely independent set.
  std::vector<std::size_t> simplex{0};
  Matrix diffs;
  for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
    diffs.push_back(pts[i] - pts[0]);
    if (linalg::rank(diffs) == simplex.size()) {
      simplex.push_back(i);
    } else {
      diffs.pop_back();
    }
  }
  Vec inside = zero_vec(d);
  for (auto id : simplex) inside = inside + pts[id];
  inside = Rational(1) / Rational(static_cast<unsigned long>(d + 1)) * inside;

  struct Simplex {
    std::vector<std::size_t> ids;  // sorted
    MergedFacet plane;
  };
  std::vector<Simplex> boundary;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k <= d; ++k)
      if (k != skip) ids.push_back(simplex[k]);
    std::sort(ids.begin(), ids.end());
    boundary.push_back({ids, oriented_plane(pts, ids, inside, d)});
  }

  std::vector<bool> used(pts.size(), false);
  for (auto id : simplex) used[id] = true;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (used[p]) continue;
    std::vector<bool> visible(boundary.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      if (dot(boundary[f].plane.normal, pts[p]) > boundary[f].plane.offset) {
        visible[f] = true;
        any = true;
      }
    }
    if (!any) continue;
    std::map<std::vector<std::size_t>, int> ridge_count;
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      if (!visible[f]) continue;
      const auto& ids = boundary[f].ids;
      for (std::size_t k = 0; k < ids.size(); ++k) {
        std::vector<std::size_t> ridge;
        for (std::size_t j = 0; j < ids.size(); ++j)
          if (j != k) ridge.push_back(ids[j]);
        ++ridge_count[ridge];
      }
    }
    std::vector<Simplex> next;
    for (std::size_t f = 0; f < boundary.size(); ++f)
      if (!visible[f]) next.push_back(std::move(boundary[f]));
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<std::size_t> ids = ridge;
      ids.push_back(p);
      std::sort(ids.begin(), ids.end());
      MergedFacet plane = oriented_plane(pts, ids, inside, d);
      next.push_back({std::move(ids), std::move(plane)});
    }
    boundary = std::move(next);
  }

  // Merge coplanar simplices.
  std::map<Vec, MergedFacet, VecLess> merged;
  std::set<std::size_t> candidates;
  for (const auto& s : boundary) {
    Vec key = s.plane.normal;
    key.push_back(s.plane.offset);
    merged.emplace(std::move(key), s.plane);
    candidates.insert(s.ids.begin(), s.ids.end());
  }
  FullHull out;
  for (auto& [key, f] : merged) out.facets.push_back(f);
  for (auto id : candidates) {
    Matrix tight;
    for (const auto& f : out.facets)
      if (dot(f.normal, pts[id]) == f.offset) tight.push_back(f.normal);
    if (linalg::rank(tight) == d) out.vertex_ids.push_back(id);
  }
  return out;
}

void check_same_dim(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch, "polytopes live in different ambient spaces");
}

// Affine dimension of a subset of P's vertices.
int subset_rank(const Polytope& p, const std::vector<std::size_t>& ids) {
  std::vector<Vec> pts;
  for (auto id : ids) pts.push_back(p.vertices()[id]);
  return linalg::affine_rank(pts);
}

std::vector<std::size_t> intersect_ids(const std::vector<std::size_t>& a,
                                       const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Pulling triangulation of a face of dimension k (vertex ids sorted).
void triangulate_face(const Polytope& p, const std::vector<std::size_t>& face, int k,
                      std::vector<std::size_t>& stack,
                      std::vector<std::vector<std::size_t>>& out) {
  const std::size_t apex = face.front();
  if (k == 0) {
    stack.push_back(apex);
    out.push_back(stack);
    stack.pop_back();
    return;
  }
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& fv : p.facet_vertices()) {
    auto sub = intersect_ids(face, fv);
    if (sub.empty() || std::binary_search(sub.begin(), sub.end(), apex)) continue;
    if (subset_rank(p, sub) == k - 1) subfaces.insert(std::move(sub));
  }
  stack.push_back(apex);
  for (const auto& sub : subfaces) triangulate_face(p, sub, k - 1, stack, out);
  stack.pop_back();
}

// Incidence of vertices and facets as sorted facet index lists per vertex.
std::vector<std::vector<std::size_t>> vertex_facets(const Polytope& p) {
  std::vector<std::vector<std::size_t>> out(p.vertices().size());
  for (std::size_t f = 0; f < p.facet_vertices().size(); ++f)
    for (auto v : p.facet_vertices()[f]) out[v].push_back(f);
  return out;
}

Polytope section_with_edges(const Polytope& p,
                            const std::vector<std::pair<std::size_t, std::size_t>>& es,
                            const Vec& normal, const Rational& offset) {
  std::vector<Vec> pts;
  std::vector<Rational> level(p.vertices().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    level[i] = dot(normal, p.vertices()[i]) - offset;
    if (level[i] == 0) pts.push_back(p.vertices()[i]);
  }
  for (const auto& [a, b] : es) {
    if (sgn(level[a]) * sgn(level[b]) >= 0) continue;
    Rational s = level[a] / (level[a] - level[b]);
    pts.push_back(p.vertices()[a] + s * (p.vertices()[b] - p.vertices()[a]));
  }
  if (pts.empty()) return Polytope::empty(p.ambient_dim());
  return hull(pts);
}

Polytope drop_first(const Polytope& p) {
  if (p.is_empty()) return Polytope::empty(p.ambient_dim() - 1);
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.emplace_back(v.begin() + 1, v.end());
  return hull(pts);
}

}  // namespace

Polytope Polytope::empty(std::size_t ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  p.dim_ = -1;
  return p;
}

bool Polytope::contains_point(const Vec& x) const {
  if (is_empty()) return false;
  if (x.size() != ambient_dim_)
    throw Error(ErrorCode::kDimensionMismatch, "point dimension differs from polytope");
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

Vec Polytope::centroid() const {
  Vec c = zero_vec(ambient_dim_);
  for (const auto& v : vertices_) c = c + v;
  return Rational(1) / Rational(static_cast<unsigned long>(vertices_.size())) * c;
}

Polytope hull(const std::vector<Vec>& points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "hull of no points");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw Error(ErrorCode::kDimensionMismatch, "points of mixed dimension");

  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  linalg::Echelon span = linalg::row_reduce(diffs);
  const std::size_t d = span.rank();

  Polytope out;
  out.ambient_dim_ = n;
  out.dim_ = static_cast<int>(d);

  // Coordinates on which the affine span projects injectively.
  const auto& cols = span.pivot_cols;
  std::vector<Vec> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) {
    Vec y(d);
    for (std::size_t k = 0; k < d; ++k) y[k] = p[cols[k]];
    proj.push_back(std::move(y));
  }

  std::vector<std::size_t> vertex_ids;
  std::vector<MergedFacet> facets;
  if (d == 0) {
    vertex_ids = {0};
  } else if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < proj.size(); ++i) {
      if (proj[i][0] < proj[lo][0]) lo = i;
      if (proj[i][0] > proj[hi][0]) hi = i;
    }
    vertex_ids = {lo, hi};
    facets.push_back({Vec{Rational(-1)}, -proj[lo][0]});
    facets.push_back({Vec{Rational(1)}, proj[hi][0]});
  } else {
    FullHull fh = full_hull(proj, d);
    vertex_ids = std::move(fh.vertex_ids);
    facets = std::move(fh.facets);
  }

  for (auto id : vertex_ids) out.vertices_.push_back(pts[id]);
  std::sort(out.vertices_.begin(), out.vertices_.end(), lex_less);

  for (const auto& f : facets) {
    Vec normal = zero_vec(n);
    for (std::size_t k = 0; k < d; ++k) normal[cols[k]] = f.normal[k];
    out.facets_.push_back({std::move(normal), f.offset});
  }
  std::sort(out.facets_.begin(), out.facets_.end(), [](const Halfspace& a, const Halfspace& b) {
    auto c = lex_compare(a.normal, b.normal);
    return c != 0 ? c < 0 : a.offset < b.offset;
  });

  if (d < n) {
    for (auto& normal : linalg::nullspace(diffs, n)) {
      Vec prim = linalg::primitive(normal);
      Rational offset = dot(prim, pts[0]);
      out.equations_.push_back({std::move(prim), std::move(offset)});
    }
  }

  for (const auto& f : out.facets_) {
    std::vector<std::size_t> tight;
    for (std::size_t v = 0; v < out.vertices_.size(); ++v) {
      const Rational lhs = dot(f.normal, out.vertices_[v]);
      if (lhs > f.offset) throw Error(ErrorCode::kInternal, "hull vertex violates a facet");
      if (lhs == f.offset) tight.push_back(v);
    }
    if (tight.size() < d) throw Error(ErrorCode::kInternal, "hull facet is under-supported");
    out.facet_vertices_.push_back(std::move(tight));
  }
  return out;
}

Polytope point(const Vec& p) { return hull({p}); }

Polytope from_halfspaces(std::size_t n, const std::vector<Halfspace>& inequalities,
                         const std::vector<Hyperplane>& equations) {
  for (const auto& h : inequalities)
    if (h.normal.size() != n) throw Error(ErrorCode::kDimensionMismatch, "halfspace dimension");
  for (const auto& h : equations)
    if (h.normal.size() != n) throw Error(ErrorCode::kDimensionMismatch, "hyperplane dimension");

  // Parametrize the affine subspace cut out by the equations: x = x0 + N z.
  Vec x0 = zero_vec(n);
  Matrix basis = linalg::identity(n);
  if (!equations.empty()) {
    Matrix e;
    Vec f;
    for (const auto& h : equations) {
      e.push_back(h.normal);
      f.push_back(h.offset);
    }
    auto sol = linalg::solve_any(e, f);
    if (!sol) return Polytope::empty(n);
    x0 = *sol;
    basis = linalg::nullspace(e, n);
  }
  const std::size_t k = basis.size();

  // Inequalities in z-coordinates: (a N) z <= b - a x0.
  Matrix rows;
  Vec rhs;
  for (const auto& h : inequalities) {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(h.normal, basis[j]);
    Rational r = h.offset - dot(h.normal, x0);
    if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; })) {
      if (r < 0) return Polytope::empty(n);
      continue;
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
  }

  auto lift = [&](const Vec& z) {
    Vec x = x0;
    for (std::size_t j = 0; j < k; ++j) x = x + z[j] * basis[j];
    return x;
  };

  if (k == 0) return hull({x0});
  if (linalg::rank(rows) < k) {
    if (!lp::feasible(rows, rhs, k)) return Polytope::empty(n);
    throw Error(ErrorCode::kUnbounded, "halfspace system is unbounded");
  }

  std::vector<Vec> vertices;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  const std::size_t m = rows.size();
  while (true) {
    Matrix a;
    Vec b;
    for (auto i : pick) {
      a.push_back(rows[i]);
      b.push_back(rhs[i]);
    }
    if (auto z = linalg::solve(a, b)) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) ok = dot(rows[i], *z) <= rhs[i];
      if (ok) vertices.push_back(lift(*z));
    }
    // Next k-combination of {0..m-1}.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (vertices.empty()) return Polytope::empty(n);
  return hull(vertices);
}

Rational volume(const Polytope& p) {
  if (!p.is_full_dimensional()) return 0;
  const std::size_t d = p.ambient_dim();
  const Vec c = p.centroid();
  Rational total = 0;
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> stack;
  for (const auto& fv : p.facet_vertices()) {
    simplices.clear();
    triangulate_face(p, fv, static_cast<int>(d) - 1, stack, simplices);
    for (const auto& s : simplices) {
      Matrix m;
      for (auto id : s) m.push_back(p.vertices()[id] - c);
      total += abs(linalg::determinant(std::move(m)));
    }
  }
  return total / factorial(static_cast<unsigned>(d));
}

Rational relative_volume(const Polytope& p) {
  if (p.is_empty()) return 0;
  if (p.dim() == 0) return 1;
  if (p.is_full_dimensional()) return volume(p);
  const std::size_t n = p.ambient_dim();
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const Vec& base = p.vertices().front();
  std::vector<Vec> directions;
  for (const auto& v : p.vertices()) directions.push_back(v - base);
  Matrix lattice = linalg::saturated_lattice_basis(directions, n);
  Matrix cols = linalg::transpose(lattice);  // n x d
  std::vector<Vec> coords;
  for (const auto& dir : directions) {
    auto c = linalg::solve_any(cols, dir);
    if (!c) throw Error(ErrorCode::kInternal, "vertex outside its own affine span");
    coords.push_back(*c);
  }
  Polytope local = hull(coords);
  if (local.ambient_dim() != d) throw Error(ErrorCode::kInternal, "lattice basis size");
  return volume(local);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  check_same_dim(p, q);
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<Vec> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return hull(pts);
}

Polytope intersect(const Polytope& p, const Polytope& q) {
  check_same_dim(p, q);
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<Halfspace> ineqs = p.facets();
  ineqs.insert(ineqs.end(), q.facets().begin(), q.facets().end());
  std::vector<Hyperplane> eqs = p.equations();
  eqs.insert(eqs.end(), q.equations().begin(), q.equations().end());
  return from_halfspaces(p.ambient_dim(), ineqs, eqs);
}

Polytope translate(const Polytope& p, const Vec& v) {
  if (v.size() != p.ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch, "translation vector dimension");
  if (p.is_empty()) return p;
  std::vector<Vec> pts;
  for (const auto& x : p.vertices()) pts.push_back(x + v);
  return hull(pts);
}

Polytope scale(const Polytope& p, const Rational& lambda) {
  if (lambda < 0) throw Error(ErrorCode::kOutOfRange, "negative scale factor");
  if (p.is_empty()) return p;
  std::vector<Vec> pts;
  for (const auto& x : p.vertices()) pts.push_back(lambda * x);
  return hull(pts);
}

Polytope apply_unimodular(const Polytope& p, const Matrix& g) {
  const std::size_t n = p.ambient_dim();
  if (g.size() != n || std::any_of(g.begin(), g.end(), [&](const Vec& r) { return r.size() != n; }))
    throw Error(ErrorCode::kDimensionMismatch, "matrix size differs from polytope dimension");
  for (const auto& row : g)
    for (const auto& x : row)
      if (x.get_den() != 1) throw Error(ErrorCode::kNotUnimodular, "non-integer matrix entry");
  if (abs(linalg::determinant(g)) != 1)
    throw Error(ErrorCode::kNotUnimodular, "determinant is not ±1");
  if (p.is_empty()) return p;
  std::vector<Vec> pts;
  for (const auto& x : p.vertices()) pts.push_back(linalg::row_times(x, g));
  return hull(pts);
}

Polytope affine_image(const Polytope& p, const Matrix& m, const Vec& shift) {
  if (p.is_empty()) return Polytope::empty(shift.size());
  std::vector<Vec> pts;
  for (const auto& x : p.vertices()) {
    if (m.empty() || m[0].size() != x.size())
      throw Error(ErrorCode::kDimensionMismatch, "affine map domain");
    pts.push_back(linalg::times_col(m, x) + shift);
  }
  return hull(pts);
}

bool contains(const Polytope& outer, const Polytope& inner) {
  check_same_dim(outer, inner);
  if (inner.is_empty()) return true;
  if (outer.is_empty()) return false;
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Vec& v) { return outer.contains_point(v); });
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (p.dim() < 1) return out;
  const auto incidence = vertex_facets(p);
  const std::size_t target = static_cast<std::size_t>(p.dim()) - 1;
  for (std::size_t a = 0; a < p.vertices().size(); ++a) {
    for (std::size_t b = a + 1; b < p.vertices().size(); ++b) {
      auto common = intersect_ids(incidence[a], incidence[b]);
      if (common.size() < target) continue;
      Matrix normals;
      for (auto f : common) normals.push_back(p.facets()[f].normal);
      if (linalg::rank(normals) == target) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> faces(const Polytope& p) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  auto push = [&](std::vector<std::size_t> f) {
    if (!f.empty() && seen.insert(f).second) queue.push_back(std::move(f));
  };
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  push(all);
  for (std::size_t i = 0; i < all.size(); ++i) push({i});
  for (const auto& fv : p.facet_vertices()) push(fv);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& fv : p.facet_vertices()) push(intersect_ids(queue[i], fv));
  }
  return {seen.begin(), seen.end()};
}

Polytope section(const Polytope& p, const Vec& normal, const Rational& offset) {
  if (normal.size() != p.ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch, "hyperplane dimension");
  if (p.is_empty()) return p;
  return section_with_edges(p, edges(p), normal, offset);
}

Polytope slice(const Polytope& p, const Rational& t) {
  if (p.ambient_dim() < 2) throw Error(ErrorCode::kDimensionMismatch, "slice needs n >= 2");
  Vec e1 = zero_vec(p.ambient_dim());
  e1[0] = 1;
  return drop_first(section(p, e1, t));
}

std::pair<Rational, Rational> projection_range(const Polytope& p, std::size_t axis) {
  if (p.is_empty()) throw Error(ErrorCode::kEmptyInput, "projection of an empty polytope");
  if (axis >= p.ambient_dim()) throw Error(ErrorCode::kBadAxis, "axis out of range");
  Rational lo = p.vertices().front()[axis], hi = lo;
  for (const auto& v : p.vertices()) {
    if (v[axis] < lo) lo = v[axis];
    if (v[axis] > hi) hi = v[axis];
  }
  return {lo, hi};
}

Rational fubini_volume(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  if (n < 2) throw Error(ErrorCode::kDimensionMismatch, "fubini_volume needs n >= 2");
  if (p.is_empty()) return 0;
  std::set<Rational> levels;
  for (const auto& v : p.vertices()) levels.insert(v[0]);
  Vec breaks(levels.begin(), levels.end());
  if (breaks.size() < 2) return 0;
  const auto es = edges(p);
  Vec e1 = zero_vec(n);
  e1[0] = 1;
  auto slice_volume = [&](const Rational& t) {
    return volume(drop_first(section_with_edges(p, es, e1, t)));
  };
  return fit_piecewise(breaks, static_cast<unsigned>(n - 1), slice_volume).integral();
}

Rational squared_distance(const Polytope& p, const Vec& x) {
  if (p.is_empty()) throw Error(ErrorCode::kEmptyInput, "distance to an empty polytope");
  if (p.contains_point(x)) return 0;
  std::optional<Rational> best;
  for (const auto& face : faces(p)) {
    const Vec& base = p.vertices()[face.front()];
    Matrix diffs;
    for (std::size_t i = 1; i < face.size(); ++i) diffs.push_back(p.vertices()[face[i]] - base);
    Matrix span = linalg::row_reduce(diffs).rref;
    Vec proj = base;
    if (!span.empty()) {
      // Normal equations (B B^T) c = B (x - base).
      Matrix gram(span.size(), zero_vec(span.size()));
      Vec rhs(span.size());
      const Vec rel = x - base;
      for (std::size_t i = 0; i < span.size(); ++i) {
        rhs[i] = dot(span[i], rel);
        for (std::size_t j = 0; j < span.size(); ++j) gram[i][j] = dot(span[i], span[j]);
      }
      auto c = linalg::solve(gram, rhs);
      if (!c) throw Error(ErrorCode::kInternal, "singular face Gram matrix");
      for (std::size_t i = 0; i < span.size(); ++i) proj = proj + (*c)[i] * span[i];
    }
    if (!p.contains_point(proj)) continue;
    const Vec diff = x - proj;
    Rational d2 = dot(diff, diff);
    if (!best || d2 < *best) best = d2;
  }
  if (!best) throw Error(ErrorCode::kInternal, "no face realizes the distance");
  return *best;
}

Rational hausdorff_distance(const Polytope& p, const Polytope& q, const Rational& tol) {
  check_same_dim(p, q);
  if (p.is_empty() || q.is_empty())
    throw Error(ErrorCode::kEmptyInput, "Hausdorff distance with an empty polytope");
  if (tol <= 0) throw Error(ErrorCode::kOutOfRange, "tolerance must be positive");
  Rational worst = 0;
  for (const auto& v : p.vertices()) worst = std::max(worst, squared_distance(q, v));
  for (const auto& v : q.vertices()) worst = std::max(worst, squared_distance(p, v));
  RootBracket r = kth_root(worst, 2, tol);
  return (r.lo + r.hi) / 2;
}

}  // namespace okb::geom
