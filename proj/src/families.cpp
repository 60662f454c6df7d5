#include "glued/families.hpp"

#include <bundled_configs.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "glued/diagram.hpp"
#include "glued/error.hpp"
#include "glued/invariants.hpp"
#include "glued/project.hpp"

namespace glued {

namespace {

constexpr std::uint64_t kFamilyProjectionSeed = 5;
// Runtime continuation beyond the bundled range is cheaper than the offline search.
constexpr long kRuntimeAttemptsPerLevel = 100000;

void require_param(Family f, int param) {
  if (param < family_min_param(f)) {
    throw Error(ErrorKind::PreconditionViolated, std::string(family_name(f)) + " needs parameter >= " +
                                                     std::to_string(family_min_param(f)));
  }
}

std::string bundle_key(Family f, int param) { return std::string(family_name(f)) + "_" + std::to_string(param); }

bool has_bundled(std::string_view name) {
  for (const auto& [key, body] : kBundledConfigs) {
    if (!key.empty() && key == name) return true;
  }
  return false;
}

std::optional<Diagram> diagram_of(const PregluedConfig& cfg) {
  try {
    return project_knot_generic(cfg, kFamilyProjectionSeed).diagram;
  } catch (const Error&) {
    return std::nullopt;
  }
}

long long pow3(int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

// Point of e extremal along w (maximal when sign = +1).
double extreme_param(const Ellipse& e, const Vec3& w, int sign) {
  return std::atan2(sign * w.dot(e.v), sign * w.dot(e.u));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::MaxWrithe: return "max_writhe";
    case Family::ThreeColor: return "three_color";
    case Family::LowCrossing: return "low_crossing";
    case Family::ConnectSumTrefoils: return "connect_sum_trefoils";
  }
  return "";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::MaxWrithe, Family::ThreeColor, Family::LowCrossing, Family::ConnectSumTrefoils}) {
    if (family_name(f) == name) return f;
  }
  if (name == "connect_sum") return Family::ConnectSumTrefoils;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

int family_min_param(Family f) {
  switch (f) {
    case Family::MaxWrithe: return 1;
    case Family::ThreeColor: return 3;
    case Family::LowCrossing: return 3;
    case Family::ConnectSumTrefoils: return 1;
  }
  return 1;
}

PregluedConfig gen_max_writhe(int m) {
  require_param(Family::MaxWrithe, m);
  // Tilted circles through the z-axis, rotated copies of each other; any two link once.
  const double radius = 1.0;
  const double offset = 0.5;
  const double tilt = std::asin(offset / radius);
  std::vector<Ellipse> es;
  for (int k = 0; k < m; ++k) {
    Eigen::Matrix3d rot = Eigen::AngleAxisd(k * std::numbers::pi / m, Vec3::UnitZ()).toRotationMatrix();
    Ellipse base{Vec3(0, offset, 0), radius * Vec3(std::cos(tilt), 0, std::sin(tilt)), Vec3(0, radius, 0), 1};
    es.push_back(RigidMotion{rot, Vec3::Zero()}.apply(base));
  }
  std::vector<Edge> edges;
  for (int k = 0; k + 1 < m; ++k) {
    // Slide the tail k+1.. towards the head 0..k until the first touch.
    auto [s, t] = closest_params(es[k], es[k + 1]);
    Vec3 w = es[k].point(s) - es[k + 1].point(t);
    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    Contact bc;
    for (int i = 0; i <= k; ++i) {
      for (int j = k + 1; j < m; ++j) {
        for (const Contact& c : contacts_along(es[j], es[i], w)) {
          if (c.t < best) {
            best = c.t;
            bi = i;
            bj = j;
            bc = c;
          }
        }
      }
    }
    if (bi < 0) throw Error(ErrorKind::InternalInconsistency, "max_writhe: circles never meet");
    Vec3 shift = es[bi].point(bc.phi_fixed) - es[bj].point(bc.theta_moving);
    for (int j = k + 1; j < m; ++j) es[j] = es[j].translated(shift);
    edges.push_back({bi, bj});
  }
  return validate(es, edges);
}

PregluedConfig gen_connect_sum_trefoils(int k) {
  require_param(Family::ConnectSumTrefoils, k);
  const PregluedConfig block = gen_max_writhe(3);
  const Vec3 w = Vec3(1.0, 0.37, 0.21).normalized();

  auto extreme = [&](const std::vector<Ellipse>& es, int first, int sign) {
    int best = first;
    double best_val = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (int i = first; i < first + 3; ++i) {
      double th = extreme_param(es[i], w, sign);
      double val = sign * w.dot(es[i].point(th));
      if (val > best_val) {
        best_val = val;
        best = i;
        best_theta = th;
      }
    }
    return std::pair{best, es[best].point(best_theta)};
  };

  std::vector<Ellipse> es;
  std::vector<Edge> edges;
  for (int b = 0; b < k; ++b) {
    int first = 3 * b;
    for (const Ellipse& e : block.ellipses) es.push_back(e);
    for (const Edge& e : block.edges) edges.push_back({e.first + first, e.second + first});
    if (b == 0) continue;
    auto [top, top_point] = extreme(es, first - 3, +1);
    auto [bottom, bottom_point] = extreme(es, first, -1);
    Vec3 shift = top_point - bottom_point;
    for (int i = first; i < first + 3; ++i) es[i] = es[i].translated(shift);
    edges.push_back({top, bottom});
  }
  return validate(es, edges);
}

bool family_target_met(Family f, int param, const PregluedConfig& cfg) {
  auto d = diagram_of(cfg);
  if (!d) return false;
  switch (f) {
    case Family::ThreeColor:
      return cfg.size() == param + 2 && tricolorings(*d) == pow3(param);
    case Family::LowCrossing: {
      Diagram s = simplify(*d);
      return cfg.size() == param && s.crossing_count() == 2 * param - 2 && is_alternating(s) && is_reduced(s) &&
             is_prime_diagram(s);
    }
    case Family::MaxWrithe:
      return d->writhe() == (param - 1) * (param - 1);
    case Family::ConnectSumTrefoils:
      return tricolorings(*d) == pow3(param + 1);
  }
  return false;
}

std::vector<PregluedConfig> search_seed_beam(Family f, const SearchOptions& opts) {
  if (f != Family::ThreeColor && f != Family::LowCrossing) {
    throw Error(ErrorKind::InvalidArgument, "family is constructed directly, not searched");
  }
  std::mt19937_64 rng(opts.seed);
  const int base = family_min_param(f);
  const int m = f == Family::ThreeColor ? base + 2 : base;
  std::vector<PregluedConfig> beam;
  for (long attempt = 0; static_cast<int>(beam.size()) < opts.beam_width; ++attempt) {
    if (attempt >= opts.attempts_per_level) {
      if (beam.empty()) throw Error(ErrorKind::MaxRetriesExceeded, "no seed configuration found");
      break;
    }
    PregluedConfig c;
    try {
      c = random_config(m, rng(), SampleStrategy::Chain);
    } catch (const Error&) {
      continue;
    }
    if (!family_target_met(f, base, c)) continue;
    if (f == Family::LowCrossing && identify(*diagram_of(c)).name != "4_1") continue;
    beam.push_back(c);
  }
  return beam;
}

int search_family(Family f, std::vector<PregluedConfig> beam, int start_param, int max_param,
                  const SearchOptions& opts, const std::function<void(int, const PregluedConfig&)>& found) {
  if (f != Family::ThreeColor && f != Family::LowCrossing) {
    throw Error(ErrorKind::InvalidArgument, "family is constructed directly, not searched");
  }
  if (beam.empty()) throw Error(ErrorKind::PreconditionViolated, "empty search beam");
  std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(start_param) << 32));
  // three_color grows a path, so new ellipses hang off the last one.
  const bool path_only = f == Family::ThreeColor;
  int param = start_param;
  while (param < max_param) {
    std::vector<PregluedConfig> next;
    for (long t = 0; t < opts.attempts_per_level && static_cast<int>(next.size()) < opts.beam_width; ++t) {
      const PregluedConfig& base = beam[t % beam.size()];
      int m = base.size();
      int parent = path_only ? m - 1 : static_cast<int>(rng() % m);
      auto cand = try_attach(base, parent, rng);
      if (cand && family_target_met(f, param + 1, *cand)) next.push_back(std::move(*cand));
    }
    if (next.empty()) break;
    beam = std::move(next);
    ++param;
    found(param, beam.front());
  }
  return param;
}

namespace {

PregluedConfig searched_family(Family f, int param) {
  require_param(f, param);
  std::string key = bundle_key(f, param);
  if (has_bundled(key)) return bundled_config(key);
  int top = param;
  while (top > family_min_param(f) && !has_bundled(bundle_key(f, top))) --top;
  if (!has_bundled(bundle_key(f, top))) {
    throw Error(ErrorKind::InternalInconsistency, "no bundled configuration for " + key);
  }
  SearchOptions opts;
  opts.attempts_per_level = kRuntimeAttemptsPerLevel;
  opts.seed = static_cast<std::uint64_t>(param);
  PregluedConfig result;
  int reached = search_family(f, {bundled_config(bundle_key(f, top))}, top, param, opts,
                              [&](int p, const PregluedConfig& c) {
                                if (p == param) result = c;
                              });
  if (reached < param) {
    throw Error(ErrorKind::MaxRetriesExceeded, key + ": search stopped at parameter " + std::to_string(reached));
  }
  return result;
}

}  // namespace

PregluedConfig gen_three_color(int k) { return searched_family(Family::ThreeColor, k); }
PregluedConfig gen_low_crossing(int n) { return searched_family(Family::LowCrossing, n); }

PregluedConfig generate(Family f, int param) {
  switch (f) {
    case Family::MaxWrithe: return gen_max_writhe(param);
    case Family::ThreeColor: return gen_three_color(param);
    case Family::LowCrossing: return gen_low_crossing(param);
    case Family::ConnectSumTrefoils: return gen_connect_sum_trefoils(param);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

std::vector<std::string> bundled_config_names() {
  std::vector<std::string> names;
  for (const auto& [key, body] : kBundledConfigs) {
    if (!key.empty()) names.emplace_back(key);
  }
  return names;
}

PregluedConfig bundled_config(std::string_view name) {
  for (const auto& [key, body] : kBundledConfigs) {
    if (!key.empty() && key == name) {
      std::istringstream in{std::string(body)};
      return parse_config(in);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no bundled configuration named '" + std::string(name) + "'");
}

}  // namespace glued
