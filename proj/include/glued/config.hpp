#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "glued/geom3.hpp"

namespace glued {

using Edge = std::pair<int, int>;

struct GluePoint {
  Vec3 point;
  double theta_first = 0.0;   // parameter on ellipse edge.first
  double theta_second = 0.0;  // parameter on ellipse edge.second
};

struct PregluedConfig {
  std::vector<Ellipse> ellipses;
  std::vector<Edge> edges;                 // i < j, in input order
  std::map<Edge, GluePoint> glue_points;   // keyed by normalized edge
  int size() const { return static_cast<int>(ellipses.size()); }
  int degree() const { return 2 * size(); }
};

struct GluingTreeSummary {
  std::vector<std::vector<int>> adjacency;
  std::map<Edge, int> linking;                    // non-glued pairs
  std::map<Edge, std::pair<int, int>> pierce;     // (i pierced by j, j pierced by i), all pairs
};

Edge normalized(Edge e);

/// Throws NotATree, UnexpectedIntersection, MissingGluePoint, Degenerate, ...
PregluedConfig validate(const std::vector<Ellipse>& ellipses, const std::vector<Edge>& edges);

GluingTreeSummary summarize(const PregluedConfig& cfg);
std::string format_summary(const PregluedConfig& cfg, const GluingTreeSummary& s);

/// Arc of the smoothed curve: ellipse `ellipse` from `theta_start` travelling
/// in its orientation for an angle of `length`.
struct ArcSegment {
  int ellipse = 0;
  double theta_start = 0.0;
  double length = 0.0;
};

struct ClosedCurve {
  std::vector<ArcSegment> arcs;
  /// Position of theta = 0 on ellipse 0 inside arcs[0], as an angle from its start.
  double start_offset = 0.0;
};

ClosedCurve smooth(const PregluedConfig& cfg);

using SignAssignment = std::map<Edge, int>;

struct RigidPureLink {
  std::vector<Ellipse> ellipses;
};


/// Pulls glued pairs apart along the projection direction so each glue point
/// becomes a crossing of the requested sign in that projection. Throws
/// PerturbationTooLarge.
RigidPureLink perturb(const PregluedConfig& cfg, const SignAssignment& s, const Vec3& direction);

/// Sweep a rigid pure link into a preglued configuration by translating the
/// growing cluster along `v`. Throws NonGenericDirection, MaxRetriesExceeded.
struct SweepResult {
  PregluedConfig config;
  SignAssignment signs;  // perturbation signs reproducing the input linking matrix
  Vec3 direction;        // the sweep direction finally used
};
SweepResult sweep_to_preglued(const RigidPureLink& link, const Vec3& v, std::uint64_t seed = 1);

std::vector<std::vector<int>> linking_matrix(const std::vector<Ellipse>& ellipses);

/// Random ellipse near `parent`, translated along a random line until it first
/// touches `parent` (and nothing else). One attempt; nullopt on rejection.
std::optional<PregluedConfig> try_attach(const PregluedConfig& cfg, int parent, std::mt19937_64& rng,
                                         double reach = 1.6);

enum class SampleStrategy { Chain, Cluster };
PregluedConfig random_config(int m, std::uint64_t seed, SampleStrategy strategy = SampleStrategy::Chain);

/// Deterministic text form: ellipse lines then glue lines.
std::string format_config(const PregluedConfig& cfg, const std::string& comment = "");
/// Parses and validates.
PregluedConfig parse_config(std::istream& in);
PregluedConfig load_config(const std::string& path);
void save_config(const PregluedConfig& cfg, const std::string& path, const std::string& comment = "");

/// Minimum distance scale of the configuration (smallest semi-axis and the
/// smallest separation between non-glued curves).
double feature_size(const PregluedConfig& cfg);

/// Translate `moving` along w until it first touches `fixed`, snapped so the
/// contact is exact. Returns the translated ellipse.
std::optional<Ellipse> glue_by_translation(const Ellipse& moving, const Ellipse& fixed, const Vec3& w);

}  // namespace glued
