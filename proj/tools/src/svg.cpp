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

#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "okbody/error.hpp"

namespace okb::cli {

namespace {

constexpr double kPanel = 400.0;
constexpr double kMargin = 50.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Counterclockwise order of the vertices of a planar polygon, exactly.
std::vector<Vec> cyclic_order(std::vector<Vec> pts) {
  if (pts.size() < 3) return pts;
  Vec c = zero_vec(2);
  for (const auto& p : pts) c = c + p;
  c = make_rational(1, static_cast<std::int64_t>(pts.size())) * c;
  auto half = [&](const Vec& p) {
    Rational dx = p[0] - c[0], dy = p[1] - c[1];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    return cross > 0;
  });
  return pts;
}

void panel(std::ostringstream& os, const std::vector<Vec>& verts, double x0, const std::string& label) {
  os << "  <g>\n";
  os << "    <rect x=\"" << fmt(x0) << "\" y=\"0.000\" width=\"" << fmt(kPanel) << "\" height=\"" << fmt(kPanel)
     << "\" fill=\"white\" stroke=\"#999999\"/>\n";
  os << "    <text x=\"" << fmt(x0 + 10) << "\" y=\"20.000\" font-size=\"14\">" << escape(label) << "</text>\n";
  if (verts.empty()) {
    os << "  </g>\n";
    return;
  }
  Rational lo0 = verts[0][0], hi0 = lo0, lo1 = verts[0][1], hi1 = lo1;
  for (const auto& v : verts) {
    lo0 = std::min(lo0, v[0]);
    hi0 = std::max(hi0, v[0]);
    lo1 = std::min(lo1, v[1]);
    hi1 = std::max(hi1, v[1]);
  }
  double span = std::max({Rational(hi0 - lo0).get_d(), Rational(hi1 - lo1).get_d(), 1e-9});
  if ((hi0 - lo0) == 0 && (hi1 - lo1) == 0) span = 1.0;
  const double scale = (kPanel - 2 * kMargin) / span;
  auto px = [&](const Vec& v) { return x0 + kMargin + Rational(v[0] - lo0).get_d() * scale; };
  auto py = [&](const Vec& v) { return kPanel - kMargin - Rational(v[1] - lo1).get_d() * scale; };

  auto ordered = cyclic_order(verts);
  if (ordered.size() >= 2) {
    os << "    <polygon points=\"";
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (i) os << ' ';
      os << fmt(px(ordered[i])) << ',' << fmt(py(ordered[i]));
    }
    os << "\" fill=\"#cfe2f3\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }
  for (const auto& v : verts) {
    os << "    <circle cx=\"" << fmt(px(v)) << "\" cy=\"" << fmt(py(v)) << "\" r=\"3\" fill=\"#1f4e79\"/>\n";
    os << "    <text x=\"" << fmt(px(v) + 5) << "\" y=\"" << fmt(py(v) - 5) << "\" font-size=\"10\">("
       << escape(to_string(v[0])) << ", " << escape(to_string(v[1])) << ")</text>\n";
  }
  os << "  </g>\n";
}

std::vector<Vec> projected_vertices(const geom::Polytope& p, std::size_t i, std::size_t j) {
  if (p.is_empty()) return {};
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back({v[i], v[j]});
  geom::Polytope q = geom::hull(pts);
  return q.vertices();
}

}  // namespace

std::string render_svg(const geom::Polytope& p, const std::string& title) {
  const std::size_t n = p.ambient_dim();
  if (n != 2 && n != 3)
    throw Error(ErrorCode::kDimensionMismatch, "plot supports dimension 2 or 3, got " + std::to_string(n));
  const std::size_t panels = n == 2 ? 1 : 3;
  const double width = kPanel * static_cast<double>(panels);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(kPanel + 30)
     << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(kPanel + 30) << "\">\n";
  os << "  <title>" << escape(title) << "</title>\n";
  if (n == 2) {
    panel(os, p.is_empty() ? std::vector<Vec>{} : p.vertices(), 0, "x1, x2");
  } else {
    const std::array<std::array<std::size_t, 2>, 3> axes{{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = axes[k];
      panel(os, projected_vertices(p, i, j), kPanel * static_cast<double>(k),
            "x" + std::to_string(i + 1) + ", x" + std::to_string(j + 1));
    }
  }
  os << "  <text x=\"10.000\" y=\"" << fmt(kPanel + 20) << "\" font-size=\"12\">" << escape(title) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace okb::cli
