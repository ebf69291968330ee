#pragma once

// SVG picture of a rank 2 coroot lattice near the origin: lattice dots,
// alcove walls, the region S(b) and the cores labeled by size.  Coordinates
// come from the ambient models; three-dimensional ambients (A_2, G_2) are
// projected onto the plane x1 + x2 + x3 = 0.

#include "corelat/models.hpp"
#include "corelat/sommers.hpp"

#include <cmath>
#include <cstdio>

namespace corelat {

namespace detail {

struct Plane {
  double m[2][2];  // simple-coroot coordinates -> plane
  double inv[2][2];

  std::array<double, 2> at(double k0, double k1) const {
    return {m[0][0] * k0 + m[0][1] * k1, m[1][0] * k0 + m[1][1] * k1};
  }
};

inline Plane plane_of(const RootSystemData& rs) {
  const auto am = ambient_model(rs.cartan_type);
  Plane p{};
  const double s = std::sqrt(static_cast<double>(am.scale));
  for (int j = 0; j < 2; ++j) {
    if (am.basis.rows() == 3) {
      const double y0 = am.basis(0, j), y1 = am.basis(1, j), y2 = am.basis(2, j);
      p.m[0][j] = (y0 - y1) / std::sqrt(2.0);
      p.m[1][j] = (y0 + y1 - 2 * y2) / std::sqrt(6.0);
    } else {
      p.m[0][j] = s * am.basis(0, j);
      p.m[1][j] = s * am.basis(1, j);
    }
  }
  const double det = p.m[0][0] * p.m[1][1] - p.m[0][1] * p.m[1][0];
  p.inv[0][0] = p.m[1][1] / det;
  p.inv[0][1] = -p.m[0][1] / det;
  p.inv[1][0] = -p.m[1][0] / det;
  p.inv[1][1] = p.m[0][0] / det;
  return p;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

}  // namespace detail

/// Throws Error for rank other than 2 or b not coprime to h.
inline std::string draw_svg(const RootSystemData& rs, std::int64_t b, std::uint64_t cap = default_cap()) {
  if (rs.rank != 2) throw Error("draw needs a rank 2 type, got " + rs.name());
  const CoreSet cs = enumerate_cores(rs, b, cap);
  const detail::Plane pl = detail::plane_of(rs);
  auto to_plane = [&](const RatVec& k) {
    return pl.at(static_cast<double>(k[0]), static_cast<double>(k[1]));
  };

  // window: the region's vertices and the origin, padded
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const auto& v : cs.vertex_images) {
    const auto p = to_plane(v);
    x0 = std::min(x0, p[0]), x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]), y1 = std::max(y1, p[1]);
  }
  const double pad = 1.5;
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const double unit = 60;
  const double width = (x1 - x0) * unit, height = (y1 - y0) * unit;
  auto sx = [&](double x) { return detail::fmt((x - x0) * unit); };
  auto sy = [&](double y) { return detail::fmt((y1 - y) * unit); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(width) + "\" height=\"" +
         detail::fmt(height) + "\" viewBox=\"0 0 " + detail::fmt(width) + " " + detail::fmt(height) + "\">\n";
  out += "<title>" + rs.name() + " cores, b=" + std::to_string(b) + "</title>\n";
  out += "<style>.wall{stroke:#bbb;stroke-width:1}.region{fill:#fde9b5;stroke:#c77c00;stroke-width:2}"
         ".lattice{fill:#888}.core{fill:#b00}.size{font:11px sans-serif;fill:#222}</style>\n";

  // alcove walls <x, alpha> = m, clipped to the window
  out += "<g class=\"walls\">\n";
  for (const auto& root : rs.positive_roots) {
    // functional on the plane: g(x) = c . inv(x)
    const double c0 = static_cast<double>(pairing(rs, IntVec{1, 0}, root.coeffs));
    const double c1 = static_cast<double>(pairing(rs, IntVec{0, 1}, root.coeffs));
    const double g0 = c0 * pl.inv[0][0] + c1 * pl.inv[1][0];
    const double g1 = c0 * pl.inv[0][1] + c1 * pl.inv[1][1];
    const double corners[4] = {g0 * x0 + g1 * y0, g0 * x0 + g1 * y1, g0 * x1 + g1 * y0, g0 * x1 + g1 * y1};
    const auto lo = static_cast<std::int64_t>(std::ceil(*std::min_element(corners, corners + 4)));
    const auto hi = static_cast<std::int64_t>(std::floor(*std::max_element(corners, corners + 4)));
    for (std::int64_t m = lo; m <= hi; ++m) {
      std::vector<std::array<double, 2>> hits;
      auto keep = [&](double x, double y) {
        const double e = 1e-9;
        if (x < x0 - e || x > x1 + e || y < y0 - e || y > y1 + e) return;
        for (const auto& h : hits)
          if (std::abs(h[0] - x) < e && std::abs(h[1] - y) < e) return;
        hits.push_back({x, y});
      };
      if (std::abs(g1) > 1e-12) {
        keep(x0, (m - g0 * x0) / g1);
        keep(x1, (m - g0 * x1) / g1);
      }
      if (std::abs(g0) > 1e-12) {
        keep((m - g1 * y0) / g0, y0);
        keep((m - g1 * y1) / g0, y1);
      }
      if (hits.size() < 2) continue;
      out += "<line class=\"wall\" x1=\"" + sx(hits[0][0]) + "\" y1=\"" + sy(hits[0][1]) + "\" x2=\"" +
             sx(hits[1][0]) + "\" y2=\"" + sy(hits[1][1]) + "\"/>\n";
    }
  }
  out += "</g>\n";

  // the region, vertices in angular order around their centroid
  std::vector<std::array<double, 2>> poly;
  for (const auto& v : cs.vertex_images) poly.push_back(to_plane(v));
  double cx = 0, cy = 0;
  for (const auto& p : poly) cx += p[0], cy += p[1];
  cx /= static_cast<double>(poly.size()), cy /= static_cast<double>(poly.size());
  std::sort(poly.begin(), poly.end(), [&](const auto& a, const auto& c) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(c[1] - cy, c[0] - cx);
  });
  out += "<polygon class=\"region\" points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) out += (i ? " " : "") + sx(poly[i][0]) + "," + sy(poly[i][1]);
  out += "\"/>\n";

  // lattice points inside the window
  out += "<g class=\"points\">\n";
  const double reach = std::max({std::abs(x0), std::abs(x1), std::abs(y0), std::abs(y1)});
  const double norm = std::abs(pl.inv[0][0]) + std::abs(pl.inv[0][1]) + std::abs(pl.inv[1][0]) + std::abs(pl.inv[1][1]);
  const auto K = static_cast<std::int64_t>(std::ceil(reach * norm)) + 1;
  const std::set<IntVec> cores(cs.points.begin(), cs.points.end());
  for (std::int64_t k0 = -K; k0 <= K; ++k0)
    for (std::int64_t k1 = -K; k1 <= K; ++k1) {
      const auto p = pl.at(static_cast<double>(k0), static_cast<double>(k1));
      if (p[0] < x0 || p[0] > x1 || p[1] < y0 || p[1] > y1) continue;
      if (cores.count(IntVec{k0, k1})) continue;
      out += "<circle class=\"lattice\" cx=\"" + sx(p[0]) + "\" cy=\"" + sy(p[1]) + "\" r=\"2.5\"/>\n";
    }
  out += "</g>\n<g class=\"cores\">\n";
  for (std::size_t i = 0; i < cs.points.size(); ++i) {
    const auto p = to_plane(to_rational(cs.points[i]));
    out += "<circle class=\"core\" cx=\"" + sx(p[0]) + "\" cy=\"" + sy(p[1]) + "\" r=\"5\"><title>" +
           vec_to_string(cs.points[i]) + "</title></circle>\n";
    out += "<text class=\"size\" x=\"" + sx(p[0] + 0.12) + "\" y=\"" + sy(p[1] + 0.12) + "\">" +
           to_string(size_lattice(rs, cs.points[i])) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace corelat
