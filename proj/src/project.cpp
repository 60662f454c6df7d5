#include "glued/project.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "glued/error.hpp"

namespace glued {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kParamSeparation = 1e-6;

double forward_distance(double from, double to, int orientation) {
  double d = orientation > 0 ? to - from : from - to;
  d = std::fmod(d, kTwoPi);
  if (d < 0) d += kTwoPi;
  return d;
}

double angular_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

double scale_of(const std::vector<Ellipse>& ellipses) {
  double s = 1.0;
  for (const Ellipse& e : ellipses) s = std::max({s, e.u.norm(), e.v.norm(), e.center.norm()});
  return s;
}

struct Event {
  int crossing;
  double theta;
  bool over;
};

std::vector<std::vector<Event>> events_by_ellipse(int m, const std::vector<ProjectedCrossing>& xs) {
  std::vector<std::vector<Event>> ev(m);
  for (int k = 0; k < static_cast<int>(xs.size()); ++k) {
    ev[xs[k].a].push_back({k, xs[k].theta_a, xs[k].a_over});
    ev[xs[k].b].push_back({k, xs[k].theta_b, !xs[k].a_over});
  }
  return ev;
}

Diagram make_diagram(const std::vector<ProjectedCrossing>& xs, std::vector<std::vector<Visit>> comps) {
  std::vector<int> signs;
  std::vector<std::pair<int, int>> sources;
  for (const auto& x : xs) {
    signs.push_back(x.sign);
    sources.push_back({x.a, x.b});
  }
  return Diagram(std::move(signs), std::move(comps), std::move(sources));
}

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const Vec3 v(n(rng), n(rng), n(rng));
    if (v.norm() > 1e-6) return v.normalized();
  }
}

}  // namespace

ProjectionSpec ProjectionSpec::from_direction(const Vec3& d) {
  ProjectionSpec s;
  s.frame = Frame::from_direction(d);
  return s;
}

ProjectionSpec ProjectionSpec::random(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return from_direction(random_direction(rng));
}

std::vector<ProjectedCrossing> project_crossings(const std::vector<Ellipse>& ellipses,
                                                 const std::map<Edge, GluePoint>& glue, ProjectionSpec& spec) {
  const Frame& f = spec.frame;
  const int m = static_cast<int>(ellipses.size());
  const double scale = scale_of(ellipses);
  const double tol_contact = 1e-6 * scale;
  const double tol_depth = 1e-7 * scale;
  const double tol_image = 1e-7 * scale;
  std::vector<ProjectedCrossing> out;
  std::vector<Vec2> glue_images;
  std::vector<std::vector<double>> glue_params(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Ellipse& a = ellipses[i];
      const Ellipse& b = ellipses[j];
      const ImageCrossings ic = image_crossings(a, b, f);
      if (ic.ambiguous) throw Error(ErrorKind::NonGenericProjection, "tangential image crossing");
      const auto g = glue.find({i, j});
      int glue_hits = 0;
      for (const auto& c : ic.crossings) {
        const Vec3 pa = a.point(c.theta_a), pb = b.point(c.theta_b);
        if (g != glue.end() && (pa - g->second.point).norm() < tol_contact &&
            (pb - g->second.point).norm() < tol_contact) {
          ++glue_hits;
          glue_images.push_back(f.image(g->second.point));
          glue_params[i].push_back(g->second.theta_first);
          glue_params[j].push_back(g->second.theta_second);
          const Vec2 ta = f.image(a.derivative(c.theta_a)), tb = f.image(b.derivative(c.theta_b));
          if (std::abs(ta.x() * tb.y() - ta.y() * tb.x()) < 1e-9 * ta.norm() * tb.norm()) {
            throw Error(ErrorKind::NonGenericProjection, "glue point strands are parallel in the image");
          }
          continue;
        }
        const double gap = f.depth(pa) - f.depth(pb);
        if (std::abs(gap) < tol_depth) throw Error(ErrorKind::NonGenericProjection, "crossing with no depth separation");
        ProjectedCrossing x;
        x.a = i;
        x.b = j;
        x.theta_a = c.theta_a;
        x.theta_b = c.theta_b;
        x.a_over = gap > 0;
        const Vec2 ta = f.image(a.tangent(c.theta_a)), tb = f.image(b.tangent(c.theta_b));
        const Vec2 to = x.a_over ? ta : tb, tu = x.a_over ? tb : ta;
        const double det = to.x() * tu.y() - to.y() * tu.x();
        if (std::abs(det) < 1e-9 * ta.norm() * tb.norm()) throw Error(ErrorKind::NonGenericProjection, "parallel strands");
        x.sign = det > 0 ? 1 : -1;
        x.image = f.image(pa);
        out.push_back(x);
      }
      if (g != glue.end() && glue_hits != 1) {
        throw Error(ErrorKind::NonGenericProjection, "glue point not resolved as a single image crossing");
      }
    }
  }
  double clearance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t l = k + 1; l < out.size(); ++l) clearance = std::min(clearance, (out[k].image - out[l].image).norm());
    for (const Vec2& gi : glue_images) clearance = std::min(clearance, (out[k].image - gi).norm());
  }
  if (clearance < tol_image) throw Error(ErrorKind::NonGenericProjection, "coincident image events");
  const auto ev = events_by_ellipse(m, out);
  for (int i = 0; i < m; ++i) {
    std::vector<double> params = glue_params[i];
    for (const Event& e : ev[i]) params.push_back(e.theta);
    for (std::size_t k = 0; k < params.size(); ++k) {
      for (std::size_t l = k + 1; l < params.size(); ++l) {
        if (angular_gap(params[k], params[l]) < kParamSeparation) {
          throw Error(ErrorKind::NonGenericProjection, "events too close along an ellipse");
        }
      }
    }
  }
  spec.min_clearance = clearance;
  return out;
}

Diagram project_knot(const PregluedConfig& cfg, ProjectionSpec& spec) {
  const auto xs = project_crossings(cfg.ellipses, cfg.glue_points, spec);
  const auto ev = events_by_ellipse(cfg.size(), xs);
  const ClosedCurve curve = smooth(cfg);
  std::vector<Visit> comp;
  std::vector<int> visits(xs.size(), 0);
  for (const ArcSegment& arc : curve.arcs) {
    const int o = cfg.ellipses[arc.ellipse].orientation;
    std::vector<std::pair<double, const Event*>> on_arc;
    for (const Event& e : ev[arc.ellipse]) {
      const double d = forward_distance(arc.theta_start, e.theta, o);
      if (d > 0.0 && d < arc.length) on_arc.push_back({d, &e});
    }
    std::sort(on_arc.begin(), on_arc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [d, e] : on_arc) {
      comp.push_back({e->crossing, e->over});
      ++visits[e->crossing];
    }
  }
  for (int v : visits) {
    if (v != 2) throw Error(ErrorKind::InternalInconsistency, "smoothed curve does not visit every crossing twice");
  }
  return make_diagram(xs, {comp});
}

Diagram project_link(const std::vector<Ellipse>& ellipses, ProjectionSpec& spec) {
  const auto xs = project_crossings(ellipses, {}, spec);
  const auto ev = events_by_ellipse(static_cast<int>(ellipses.size()), xs);
  std::vector<std::vector<Visit>> comps;
  for (std::size_t i = 0; i < ellipses.size(); ++i) {
    std::vector<std::pair<double, const Event*>> order;
    for (const Event& e : ev[i]) order.push_back({forward_distance(0.0, e.theta, ellipses[i].orientation), &e});
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Visit> comp;
    for (const auto& [d, e] : order) comp.push_back({e->crossing, e->over});
    comps.push_back(std::move(comp));
  }
  return make_diagram(xs, std::move(comps));
}

namespace {

template <class F>
Projected retry_projection(std::uint64_t seed, F&& f) {
  std::mt19937_64 rng(seed);
  std::string last;
  for (int attempt = 1; attempt <= kProjectionRetries; ++attempt) {
    ProjectionSpec spec = ProjectionSpec::from_direction(random_direction(rng));
    try {
      Diagram d = f(spec);
      return Projected{std::move(d), spec, attempt};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericProjection) throw;
      last = e.what();
    }
  }
  throw Error(ErrorKind::MaxRetriesExceeded, "no generic projection in " + std::to_string(kProjectionRetries) +
                                                 " directions (last: " + last + ")");
}

}  // namespace

Projected project_knot_generic(const PregluedConfig& cfg, std::uint64_t seed) {
  return retry_projection(seed, [&](ProjectionSpec& s) { return project_knot(cfg, s); });
}

Projected project_link_generic(const std::vector<Ellipse>& ellipses, std::uint64_t seed) {
  return retry_projection(seed, [&](ProjectionSpec& s) { return project_link(ellipses, s); });
}

std::map<Edge, int> pair_crossing_counts(const Diagram& d) {
  std::map<Edge, int> out;
  for (const auto& s : d.sources()) out[normalized(s)]++;
  return out;
}

std::map<Edge, int> pair_writhe(const Diagram& d) {
  std::map<Edge, int> out;
  for (int k = 0; k < d.crossing_count(); ++k) out[normalized(d.sources()[k])] += d.signs()[k];
  return out;
}

}  // namespace glued
