#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's solvers; only plain data types are shared.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

#include "glued/diagram.hpp"
#include "glued/geom3.hpp"
#include "glued/laurent.hpp"

namespace oracle {

using glued::Ellipse;
using glued::Vec2;
using glued::Vec3;

inline std::vector<Vec3> polyline(const Ellipse& e, int n) {
  std::vector<Vec3> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    pts.push_back(e.center + std::cos(t) * e.u + std::sin(t) * e.v);
  }
  return pts;
}

/// Gauss linking integral by the midpoint rule, rounded.
inline int gauss_linking(const Ellipse& a, const Ellipse& b, int n = 600) {
  double sum = 0.0;
  const double h = 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i) {
    const double s = (i + 0.5) * h;
    const Vec3 p = a.center + std::cos(s) * a.u + std::sin(s) * a.v;
    const Vec3 dp = a.orientation * (-std::sin(s) * a.u + std::cos(s) * a.v);
    for (int j = 0; j < n; ++j) {
      const double t = (j + 0.5) * h;
      const Vec3 q = b.center + std::cos(t) * b.u + std::sin(t) * b.v;
      const Vec3 dq = b.orientation * (-std::sin(t) * b.u + std::cos(t) * b.v);
      const Vec3 r = p - q;
      sum += r.dot(dp.cross(dq)) / std::pow(r.norm(), 3);
    }
  }
  return static_cast<int>(std::lround(sum * h * h / (4.0 * std::numbers::pi)));
}

/// Signed count of b passing through the flat elliptic disk bounded by a.
/// Stays exact when the curves nearly touch, where the Gauss sum does not.
inline int disk_linking(const Ellipse& a, const Ellipse& b, int n = 40000) {
  const Vec3 normal = a.orientation * a.u.cross(a.v);
  // Dual basis of the ellipse plane for in-disk coordinates.
  const double uu = a.u.dot(a.u), uv = a.u.dot(a.v), vv = a.v.dot(a.v);
  const double det = uu * vv - uv * uv;
  int count = 0;
  auto at = [&](int k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    return Vec3(b.center + std::cos(t) * b.u + std::sin(t) * b.v);
  };
  Vec3 prev = at(0);
  for (int k = 1; k <= n; ++k) {
    const Vec3 cur = at(k % n);
    const double h0 = normal.dot(prev - a.center), h1 = normal.dot(cur - a.center);
    if ((h0 < 0) != (h1 < 0)) {
      const Vec3 x = prev + (cur - prev) * (h0 / (h0 - h1)) - a.center;
      const double xu = x.dot(a.u), xv = x.dot(a.v);
      const double c = (vv * xu - uv * xv) / det, s = (uu * xv - uv * xu) / det;
      if (c * c + s * s < 1.0) count += (h1 > h0 ? 1 : -1) * b.orientation;
    }
    prev = cur;
  }
  return count;
}

/// Unsigned count of b passing through the open disk of a, ignoring passes
/// within `skip_radius` of `skip` (a glue point sits on the boundary).
inline int pierce_count(const Ellipse& a, const Ellipse& b, const Vec3& skip = Vec3::Constant(1e300),
                        double skip_radius = 0.0, int n = 20000) {
  const Vec3 normal = a.u.cross(a.v);
  const double uu = a.u.dot(a.u), uv = a.u.dot(a.v), vv = a.v.dot(a.v);
  const double det = uu * vv - uv * uv;
  auto at = [&](int k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    return Vec3(b.center + std::cos(t) * b.u + std::sin(t) * b.v);
  };
  int count = 0;
  Vec3 prev = at(0);
  for (int k = 1; k <= n; ++k) {
    const Vec3 cur = at(k % n);
    const double h0 = normal.dot(prev - a.center), h1 = normal.dot(cur - a.center);
    if ((h0 < 0) != (h1 < 0)) {
      const Vec3 p = prev + (cur - prev) * (h0 / (h0 - h1));
      const Vec3 x = p - a.center;
      const double xu = x.dot(a.u), xv = x.dot(a.v);
      const double c = (vv * xu - uv * xv) / det, s = (uu * xv - uv * xu) / det;
      if (c * c + s * s < 1.0 && (p - skip).norm() > skip_radius) ++count;
    }
    prev = cur;
  }
  return count;
}

/// Dense grid over the disk of a: does any grid segment cross the open disk of b?
inline bool disks_meet_dense(const Ellipse& a, const Ellipse& b, int n = 160) {
  const Vec3 normal = b.u.cross(b.v);
  const double uu = b.u.dot(b.u), uv = b.u.dot(b.v), vv = b.v.dot(b.v);
  const double det = uu * vv - uv * uv;
  auto inside_b = [&](const Vec3& p) {
    const Vec3 x = p - b.center;
    const double xu = x.dot(b.u), xv = x.dot(b.v);
    const double c = (vv * xu - uv * xv) / det, s = (uu * xv - uv * xu) / det;
    return c * c + s * s < 1.0;
  };
  auto grid = [&](int i, int j) { return Vec3(a.center + (-1.0 + 2.0 * i / n) * a.u + (-1.0 + 2.0 * j / n) * a.v); };
  auto in_a = [&](int i, int j) {
    const double c = -1.0 + 2.0 * i / n, s = -1.0 + 2.0 * j / n;
    return c * c + s * s < 1.0;
  };
  auto crosses = [&](const Vec3& p, const Vec3& q) {
    const double h0 = normal.dot(p - b.center), h1 = normal.dot(q - b.center);
    if ((h0 < 0) == (h1 < 0)) return false;
    return inside_b(p + (q - p) * (h0 / (h0 - h1)));
  };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (!in_a(i, j)) continue;
      if (i < n && in_a(i + 1, j) && crosses(grid(i, j), grid(i + 1, j))) return true;
      if (j < n && in_a(i, j + 1) && crosses(grid(i, j), grid(i, j + 1))) return true;
    }
  }
  return false;
}

/// Minimum distance between the curves by dense sampling.
inline double min_distance(const Ellipse& a, const Ellipse& b, int n = 1500) {
  const auto pa = polyline(a, n), pb = polyline(b, n);
  double best = INFINITY;
  for (const Vec3& p : pa) {
    for (const Vec3& q : pb) best = std::min(best, (p - q).squaredNorm());
  }
  return std::sqrt(best);
}

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Number of intersections of the projected polylines along direction d.
inline int image_crossing_count(const Ellipse& a, const Ellipse& b, const Vec3& d, int n = 720) {
  Vec3 e1 = d.unitOrthogonal();
  Vec3 e2 = d.normalized().cross(e1);
  auto img = [&](const Vec3& x) { return Vec2(e1.dot(x), e2.dot(x)); };
  std::vector<Vec2> pa, pb;
  for (const Vec3& x : polyline(a, n)) pa.push_back(img(x));
  for (const Vec3& x : polyline(b, n)) pb.push_back(img(x));
  int count = 0;
  for (int i = 0; i < n; ++i) {
    const Vec2 p = pa[i], r = pa[(i + 1) % n] - p;
    for (int j = 0; j < n; ++j) {
      const Vec2 q = pb[j], s = pb[(j + 1) % n] - q;
      const double den = cross2(r, s);
      if (den == 0.0) continue;
      const double t = cross2(q - p, s) / den, u = cross2(q - p, r) / den;
      if (t >= 0 && t < 1 && u >= 0 && u < 1) ++count;
    }
  }
  return count;
}

/// Fox 3-colorings from PD tuples by Gaussian elimination over Z/3.
inline std::int64_t tricolorings_from_pd(const std::vector<glued::PdCrossing>& pd, int empty_components = 0) {
  if (pd.empty()) {
    std::int64_t c = 1;
    for (int i = 0; i < std::max(1, empty_components); ++i) c *= 3;
    return c;
  }
  int max_label = 0;
  for (const auto& x : pd) {
    for (int l : x) max_label = std::max(max_label, l);
  }
  std::vector<int> parent(max_label + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : pd) parent[find(x[1])] = find(x[3]);
  std::map<int, int> arc;
  for (int l = 1; l <= max_label; ++l) arc.emplace(find(l), static_cast<int>(arc.size()));
  const int n = static_cast<int>(arc.size());
  std::vector<std::vector<int>> rows;
  for (const auto& x : pd) {
    std::vector<int> row(n, 0);
    row[arc[find(x[1])]] += 2;
    row[arc[find(x[0])]] += 2;  // -1 mod 3
    row[arc[find(x[2])]] += 2;
    for (int& v : row) v %= 3;
    rows.push_back(row);
  }
  int rank = 0;
  for (int c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) piv = r;
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const int inv = rows[rank][c] == 1 ? 1 : 2;
    for (int& v : rows[rank]) v = v * inv % 3;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (int k = 0; k < n; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % 3 + 3) % 3;
    }
    ++rank;
  }
  std::int64_t c = 1;
  for (int i = 0; i < n - rank + empty_components; ++i) c *= 3;
  return c;
}

/// Jones polynomial of the torus knot T(p,q) as exponent -> coefficient:
/// t^{(p-1)(q-1)/2} (1 - t^{p+1} - t^{q+1} + t^{p+q}) / (1 - t^2).
inline std::map<int, std::int64_t> torus_jones(int p, int q) {
  std::vector<std::int64_t> num(p + q + 1, 0);
  num[0] += 1;
  num[p + 1] -= 1;
  num[q + 1] -= 1;
  num[p + q] += 1;
  // Divide by 1 - t^2 via the series quotient[k] = num[k] + quotient[k-2].
  std::vector<std::int64_t> quo(num.size(), 0);
  for (std::size_t k = 0; k < num.size(); ++k) quo[k] = num[k] + (k >= 2 ? quo[k - 2] : 0);
  std::map<int, std::int64_t> out;
  const int shift = (p - 1) * (q - 1) / 2;
  for (std::size_t k = 0; k + 2 < quo.size(); ++k) {
    if (quo[k] != 0) out[static_cast<int>(k) + shift] = quo[k];
  }
  return out;
}

/// Over/under alternate along every component of the Gauss code.
inline bool alternating_by_gauss(const glued::Diagram& d) {
  for (const auto& comp : d.components()) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i].over == comp[(i + 1) % comp.size()].over) return false;
    }
  }
  return true;
}

/// Builds an integer-exponent polynomial from exponent -> coefficient.
inline glued::LaurentPoly poly(const std::map<int, std::int64_t>& terms) {
  glued::LaurentPoly out;
  for (const auto& [e, c] : terms) out = out + glued::LaurentPoly::monomial(c, e);
  return out;
}


}  // namespace oracle
