#include "glued/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

namespace glued {

namespace {

constexpr int kSamplesPerRadian = 80;
constexpr double kCanvas = 600.0;
constexpr double kMargin = 30.0;

}  // namespace

std::string render_svg(const PregluedConfig& cfg, const ProjectionSpec& spec_in) {
  ProjectionSpec spec = spec_in;
  const auto xs = project_crossings(cfg.ellipses, cfg.glue_points, spec);
  const ClosedCurve curve = smooth(cfg);

  // Polyline pieces of the curve in image coordinates, broken at under-passes.
  std::vector<std::vector<Vec2>> pieces(1);
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
  double extent = 0.0;
  for (const Ellipse& e : cfg.ellipses) extent = std::max(extent, e.major_radius());
  const double gap = 0.04 * std::max(extent, 1e-9);

  for (const ArcSegment& arc : curve.arcs) {
    const Ellipse& e = cfg.ellipses[arc.ellipse];
    const int steps = std::max(2, static_cast<int>(arc.length * kSamplesPerRadian));
    for (int k = 0; k <= steps; ++k) {
      const double theta = arc.theta_start + e.orientation * arc.length * k / steps;
      const Vec2 p = spec.frame.image(e.point(theta));
      bool hidden = false;
      for (const auto& x : xs) {
        const bool under = (x.a == arc.ellipse && !x.a_over) || (x.b == arc.ellipse && x.a_over);
        if (under && (p - x.image).norm() < gap) hidden = true;
      }
      if (hidden) {
        if (!pieces.back().empty()) pieces.emplace_back();
        continue;
      }
      pieces.back().push_back(p);
      lo_x = std::min(lo_x, p.x());
      hi_x = std::max(hi_x, p.x());
      lo_y = std::min(lo_y, p.y());
      hi_y = std::max(hi_y, p.y());
    }
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = (kCanvas - 2 * kMargin) / span;
  const double off_x = (kCanvas - (hi_x - lo_x) * scale) / 2;
  const double off_y = (kCanvas - (hi_y - lo_y) * scale) / 2;
  auto sx = [&](const Vec2& p) { return off_x + (p.x() - lo_x) * scale; };
  auto sy = [&](const Vec2& p) { return kCanvas - off_y - (p.y() - lo_y) * scale; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& piece : pieces) {
    if (piece.size() < 2) continue;
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (const Vec2& p : piece) out << sx(p) << "," << sy(p) << " ";
    out << "\"/>\n";
  }
  for (const auto& [edge, g] : cfg.glue_points) {
    const Vec2 p = spec.frame.image(g.point);
    out << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"3\" fill=\"red\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace glued
