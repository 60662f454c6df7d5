#pragma once

#include <cstdint>
#include <vector>

#include "glued/config.hpp"
#include "glued/diagram.hpp"
#include "glued/geom3.hpp"

namespace glued {

inline constexpr int kProjectionRetries = 32;

struct ProjectionSpec {
  Frame frame;
  /// Smallest separation between image events seen by the last projection.
  double min_clearance = 0.0;

  static ProjectionSpec from_direction(const Vec3& d);
  static ProjectionSpec random(std::uint64_t seed);
};

/// One genuine crossing of the image.
struct ProjectedCrossing {
  int a = 0, b = 0;  // ellipse indices, a < b
  double theta_a = 0.0, theta_b = 0.0;
  bool a_over = false;
  int sign = 0;
  Vec2 image;
};

/// Crossings of a family of ellipses; glue points (exact curve contacts) are
/// excluded. Throws NonGenericProjection.
std::vector<ProjectedCrossing> project_crossings(const std::vector<Ellipse>& ellipses,
                                                 const std::map<Edge, GluePoint>& glue, ProjectionSpec& spec);

/// Diagram of the smoothed configuration. Throws NonGenericProjection.
Diagram project_knot(const PregluedConfig& cfg, ProjectionSpec& spec);
/// One component per ellipse, each starting at theta = 0.
Diagram project_link(const std::vector<Ellipse>& ellipses, ProjectionSpec& spec);

struct Projected {
  Diagram diagram;
  ProjectionSpec spec;
  int attempts = 0;
};

/// Tries `kProjectionRetries` seeded random directions. Throws
/// MaxRetriesExceeded when all are non-generic.
Projected project_knot_generic(const PregluedConfig& cfg, std::uint64_t seed);
Projected project_link_generic(const std::vector<Ellipse>& ellipses, std::uint64_t seed);

/// Crossing count between each pair of ellipses in a diagram with sources.
std::map<Edge, int> pair_crossing_counts(const Diagram& d);
/// Sum of crossing signs per ellipse pair.
std::map<Edge, int> pair_writhe(const Diagram& d);

}  // namespace glued
