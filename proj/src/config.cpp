#include "glued/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "glued/error.hpp"

namespace glued {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSweepRetries = 32;

double forward_distance(double from, double to, int orientation) {
  double d = orientation > 0 ? to - from : from - to;
  d = std::fmod(d, kTwoPi);
  if (d < 0) d += kTwoPi;
  return d;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Vec3 v(n(rng), n(rng), n(rng));
    if (v.norm() > 1e-6) return v.normalized();
  }
}

Ellipse random_ellipse(std::mt19937_64& rng, const Vec3& center) {
  std::uniform_real_distribution<double> major(0.6, 1.4), ratio(0.35, 1.0), angle(0.0, kTwoPi);
  const Vec3 n = random_unit(rng);
  Ellipse base = Ellipse::circle(center, n, 1.0);
  const double a = major(rng), b = a * ratio(rng), phi = angle(rng);
  const Vec3 e1 = base.u, e2 = base.v;
  Ellipse e;
  e.center = center;
  e.u = a * (std::cos(phi) * e1 + std::sin(phi) * e2);
  e.v = b * (-std::sin(phi) * e1 + std::cos(phi) * e2);
  e.orientation = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  return e;
}

bool curves_disjoint(const Ellipse& a, const Ellipse& b) {
  try {
    return classify_pair(a, b).glue_points.empty();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

PregluedConfig validate(const std::vector<Ellipse>& ellipses, const std::vector<Edge>& edges) {
  const int m = static_cast<int>(ellipses.size());
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "configuration needs at least one ellipse");
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= m || e.second >= m) {
      throw Error(ErrorKind::InvalidArgument, "glue edge index out of range");
    }
    if (e.first == e.second) throw Error(ErrorKind::NotATree, "self-loop on ellipse " + std::to_string(e.first));
    if (!seen.insert(normalized(e)).second) throw Error(ErrorKind::NotATree, "repeated glue edge");
    const int a = find(e.first), b = find(e.second);
    if (a == b) throw Error(ErrorKind::NotATree, "glue edges contain a cycle");
    parent[a] = b;
  }
  if (static_cast<int>(edges.size()) != m - 1) throw Error(ErrorKind::NotATree, "glue graph is not connected");
  for (const Ellipse& e : ellipses) check_ellipse(e);

  PregluedConfig cfg;
  cfg.ellipses = ellipses;
  for (const Edge& e : edges) cfg.edges.push_back(normalized(e));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const PairClassification pc = classify_pair(ellipses[i], ellipses[j]);
      const int count = static_cast<int>(pc.glue_points.size());
      const std::string pair = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
      if (seen.count({i, j})) {
        if (count == 0) throw Error(ErrorKind::MissingGluePoint, "ellipses " + pair + " do not meet");
        if (count > 1) {
          throw Error(ErrorKind::UnexpectedIntersection, "ellipses " + pair + " meet in " + std::to_string(count) + " points");
        }
        const GlueContact& g = pc.glue_points.front();
        const Vec3 ti = ellipses[i].derivative(g.theta1).normalized();
        const Vec3 tj = ellipses[j].derivative(g.theta2).normalized();
        if (ti.cross(tj).norm() < 1e3 * epsilon()) {
          throw Error(ErrorKind::Degenerate, "ellipses " + pair + " are tangent at their glue point");
        }
        cfg.glue_points[{i, j}] = GluePoint{g.point, g.theta1, g.theta2};
      } else if (count > 0) {
        throw Error(ErrorKind::UnexpectedIntersection, "ellipses " + pair + " meet in " + std::to_string(count) + " point(s)");
      }
    }
  }
  return cfg;
}

GluingTreeSummary summarize(const PregluedConfig& cfg) {
  GluingTreeSummary s;
  const int m = cfg.size();
  s.adjacency.assign(m, {});
  for (const Edge& e : cfg.edges) {
    s.adjacency[e.first].push_back(e.second);
    s.adjacency[e.second].push_back(e.first);
  }
  for (auto& a : s.adjacency) std::sort(a.begin(), a.end());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const PairClassification pc = classify_pair(cfg.ellipses[i], cfg.ellipses[j]);
      s.pierce[{i, j}] = {pc.pierce_1_by_2, pc.pierce_2_by_1};
      if (!cfg.glue_points.count({i, j})) s.linking[{i, j}] = linking_number(cfg.ellipses[i], cfg.ellipses[j]);
    }
  }
  return s;
}

std::string format_summary(const PregluedConfig& cfg, const GluingTreeSummary& s) {
  std::ostringstream os;
  os << "ellipses " << cfg.size() << "\n";
  os << "degree " << cfg.degree() << "\n";
  for (int i = 0; i < cfg.size(); ++i) {
    os << "adjacent " << i << ":";
    for (int j : s.adjacency[i]) os << ' ' << j;
    os << "\n";
  }
  char buf[256];
  for (const auto& [e, g] : cfg.glue_points) {
    std::snprintf(buf, sizeof buf, "glue %d %d at %.12g %.12g %.12g\n", e.first, e.second, g.point.x(), g.point.y(),
                  g.point.z());
    os << buf;
  }
  for (const auto& [e, p] : s.pierce) {
    os << "pair " << e.first << ' ' << e.second << " pierce " << p.first << ' ' << p.second;
    if (const auto it = s.linking.find(e); it != s.linking.end()) {
      os << " linking " << it->second;
    } else {
      os << " glued";
    }
    os << "\n";
  }
  return os.str();
}

ClosedCurve smooth(const PregluedConfig& cfg) {
  const int m = cfg.size();
  struct Stop {
    double theta;
    int partner;
    double partner_theta;
  };
  std::vector<std::vector<Stop>> stops(m);
  for (const auto& [e, g] : cfg.glue_points) {
    stops[e.first].push_back({g.theta_first, e.second, g.theta_second});
    stops[e.second].push_back({g.theta_second, e.first, g.theta_first});
  }
  ClosedCurve curve;
  if (stops[0].empty()) {
    if (m != 1) throw Error(ErrorKind::InternalInconsistency, "ellipse 0 has no glue point");
    curve.arcs.push_back({0, 0.0, kTwoPi});
    return curve;
  }
  // Next stop strictly ahead of theta along the orientation (a full turn if none).
  auto next_stop = [&](int i, double theta) {
    const int o = cfg.ellipses[i].orientation;
    const Stop* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const Stop& s : stops[i]) {
      double d = forward_distance(theta, s.theta, o);
      if (d < 1e-12) d = kTwoPi;
      if (d < best_d) {
        best_d = d;
        best = &s;
      }
    }
    return std::make_pair(best, best_d);
  };
  // Start at the glue point on ellipse 0 just behind theta = 0.
  const int o0 = cfg.ellipses[0].orientation;
  const Stop* start = nullptr;
  double behind = std::numeric_limits<double>::infinity();
  for (const Stop& s : stops[0]) {
    const double d = forward_distance(s.theta, 0.0, o0);
    if (d < behind) {
      behind = d;
      start = &s;
    }
  }
  curve.start_offset = behind;
  int cur = 0;
  double theta = start->theta;
  int expected = 0;
  for (const auto& s : stops) expected += std::max<int>(1, static_cast<int>(s.size()));
  for (int guard = 0; guard <= expected; ++guard) {
    const auto [stop, len] = next_stop(cur, theta);
    curve.arcs.push_back({cur, theta, len});
    cur = stop->partner;
    theta = stop->partner_theta;
    if (cur == 0 && std::abs(forward_distance(theta, start->theta, o0)) < 1e-12) break;
    if (cur == 0 && kTwoPi - forward_distance(theta, start->theta, o0) < 1e-12) break;
  }
  if (static_cast<int>(curve.arcs.size()) != expected) {
    throw Error(ErrorKind::InternalInconsistency, "smoothing produced " + std::to_string(curve.arcs.size()) +
                                                      " arcs in the first component, expected " +
                                                      std::to_string(expected));
  }
  return curve;
}

double feature_size(const PregluedConfig& cfg) {
  double f = std::numeric_limits<double>::infinity();
  for (const Ellipse& e : cfg.ellipses) f = std::min(f, e.minor_radius());
  for (int i = 0; i < cfg.size(); ++i) {
    for (int j = i + 1; j < cfg.size(); ++j) {
      if (cfg.glue_points.count({i, j})) continue;
      const auto [s, t] = closest_params(cfg.ellipses[i], cfg.ellipses[j]);
      f = std::min(f, (cfg.ellipses[i].point(s) - cfg.ellipses[j].point(t)).norm());
    }
  }
  return f;
}

RigidPureLink perturb(const PregluedConfig& cfg, const SignAssignment& s, const Vec3& direction) {
  const int m = cfg.size();
  const Frame frame = Frame::from_direction(direction);
  for (const Edge& e : cfg.edges) {
    const auto it = s.find(e);
    if (it == s.end() || (it->second != 1 && it->second != -1)) {
      throw Error(ErrorKind::InvalidArgument, "sign assignment must give +1 or -1 for every glue edge");
    }
  }
  // Smallest depth separation among genuine crossings of the image.
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Ellipse& a = cfg.ellipses[i];
      const Ellipse& b = cfg.ellipses[j];
      const ImageCrossings ic = image_crossings(a, b, frame);
      if (ic.ambiguous) throw Error(ErrorKind::NonGenericProjection, "tangential image crossing");
      const auto g = cfg.glue_points.find({i, j});
      for (const auto& c : ic.crossings) {
        const Vec3 pa = a.point(c.theta_a), pb = b.point(c.theta_b);
        if (g != cfg.glue_points.end() && (pa - g->second.point).norm() < 1e-6 && (pb - g->second.point).norm() < 1e-6) {
          continue;
        }
        min_gap = std::min(min_gap, std::abs(frame.depth(pa) - frame.depth(pb)));
      }
    }
  }
  // Over/under choice per glue edge: true when the first ellipse goes over.
  std::map<Edge, bool> first_over;
  for (const auto& [e, g] : cfg.glue_points) {
    const Vec2 ti = frame.image(cfg.ellipses[e.first].tangent(g.theta_first));
    const Vec2 tj = frame.image(cfg.ellipses[e.second].tangent(g.theta_second));
    const double det = ti.x() * tj.y() - ti.y() * tj.x();
    if (std::abs(det) < 1e-9 * ti.norm() * tj.norm()) {
      throw Error(ErrorKind::NonGenericProjection, "glue point strands are parallel in the image");
    }
    first_over[e] = (det > 0 ? 1 : -1) == s.at(e);
  }
  std::vector<std::vector<int>> adj(m);
  for (const Edge& e : cfg.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  // Depth levels in units of eta along the tree from ellipse 0.
  std::vector<int> level(m, 0);
  std::vector<bool> seen(m, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int max_level = 0;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      const Edge e = normalized({x, y});
      const bool x_over = e.first == x ? first_over[e] : !first_over[e];
      level[y] = level[x] + (x_over ? -1 : 1);
      max_level = std::max(max_level, std::abs(level[y]));
      q.push(y);
    }
  }
  double eta = 1e-3 * feature_size(cfg);
  for (int halving = 0;; ++halving) {
    if (2.0 * eta * max_level < min_gap) break;
    if (halving >= 20) throw Error(ErrorKind::PerturbationTooLarge, "depth offsets collide with existing crossings");
    eta *= 0.5;
  }
  RigidPureLink link;
  for (int i = 0; i < m; ++i) link.ellipses.push_back(cfg.ellipses[i].translated(eta * level[i] * frame.direction));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!classify_pair(link.ellipses[i], link.ellipses[j]).glue_points.empty()) {
        throw Error(ErrorKind::PerturbationTooLarge, "perturbed components still meet");
      }
    }
  }
  return link;
}

std::vector<std::vector<int>> linking_matrix(const std::vector<Ellipse>& ellipses) {
  const int m = static_cast<int>(ellipses.size());
  std::vector<std::vector<int>> lk(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) lk[i][j] = lk[j][i] = linking_number(ellipses[i], ellipses[j]);
  }
  return lk;
}

std::optional<Ellipse> glue_by_translation(const Ellipse& moving, const Ellipse& fixed, const Vec3& w) {
  const auto c = first_contact(moving, fixed, w);
  if (!c || c->ambiguous) return std::nullopt;
  return moving.translated(fixed.point(c->phi_fixed) - moving.point(c->theta_moving));
}

namespace {

// One sweep along dir; throws NonGenericDirection on simultaneous or
// tangential first touches.
PregluedConfig sweep_once(std::vector<Ellipse> cur, Vec3 dir) {
  const int m = static_cast<int>(cur.size());
  std::vector<bool> in(m, false);
  in[0] = true;
  std::vector<Edge> edges;
  for (int grown = 1; grown < m; ++grown) {
    struct Hit {
      Contact c;
      int i, j;
    };
    auto collect = [&](const Vec3& d) {
      std::vector<Hit> hits;
      for (int i = 0; i < m; ++i) {
        if (!in[i]) continue;
        for (int j = 0; j < m; ++j) {
          if (in[j]) continue;
          for (const Contact& c : contacts_along(cur[i], cur[j], d)) hits.push_back({c, i, j});
        }
      }
      std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.c.t < b.c.t; });
      return hits;
    };
    auto hits = collect(dir);
    if (hits.empty()) {
      // Aim from the cluster at the nearest outside curve.
      double best = std::numeric_limits<double>::infinity();
      Vec3 aim = dir;
      for (int i = 0; i < m; ++i) {
        if (!in[i]) continue;
        for (int j = 0; j < m; ++j) {
          if (in[j]) continue;
          const auto [s, t] = closest_params(cur[i], cur[j]);
          const Vec3 d = cur[j].point(t) - cur[i].point(s);
          if (d.norm() < best) {
            best = d.norm();
            aim = d.normalized();
          }
        }
      }
      dir = aim;
      hits = collect(dir);
      if (hits.empty()) throw Error(ErrorKind::NonGenericDirection, "cluster never touches the rest");
    }
    const Hit& h = hits.front();
    if (h.c.ambiguous) throw Error(ErrorKind::NonGenericDirection, "tangential first touch");
    if (hits.size() > 1 && hits[1].c.t - h.c.t < 1e-7 * (1.0 + h.c.t)) {
      throw Error(ErrorKind::NonGenericDirection, "simultaneous first touches");
    }
    const Vec3 shift = cur[h.j].point(h.c.phi_fixed) - cur[h.i].point(h.c.theta_moving);
    for (int i = 0; i < m; ++i) {
      if (in[i]) cur[i] = cur[i].translated(shift);
    }
    in[h.j] = true;
    edges.push_back({h.i, h.j});
  }
  try {
    return validate(cur, edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::NonGenericDirection, std::string("sweep result invalid: ") + e.what());
  }
}

}  // namespace

SweepResult sweep_to_preglued(const RigidPureLink& link, const Vec3& v, std::uint64_t seed) {
  const int m = static_cast<int>(link.ellipses.size());
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "empty link");
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!classify_pair(link.ellipses[i], link.ellipses[j]).glue_points.empty()) {
        throw Error(ErrorKind::NotDisjoint, "rigid pure link components must be disjoint");
      }
    }
  }
  const auto target = linking_matrix(link.ellipses);
  std::mt19937_64 rng(seed);
  Vec3 dir = v.normalized();
  for (int attempt = 0; attempt < kSweepRetries; ++attempt, dir = random_unit(rng)) {
    PregluedConfig cfg;
    try {
      cfg = sweep_once(link.ellipses, dir);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericDirection && e.kind() != ErrorKind::Degenerate) throw;
      continue;
    }
    const int k = static_cast<int>(cfg.edges.size());
    for (int tries = 0; tries < 4; ++tries) {
      const Vec3 ref = random_unit(rng);
      try {
        for (int mask = 0; mask < (1 << k); ++mask) {
          SignAssignment s;
          for (int b = 0; b < k; ++b) s[cfg.edges[b]] = (mask >> b) & 1 ? -1 : 1;
          if (linking_matrix(perturb(cfg, s, ref).ellipses) == target) return SweepResult{cfg, s, dir};
        }
        throw Error(ErrorKind::InternalInconsistency, "no perturbation of the swept configuration matches the link");
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InternalInconsistency) throw;
      }
    }
  }
  throw Error(ErrorKind::MaxRetriesExceeded, "no generic sweep direction found");
}

std::optional<PregluedConfig> try_attach(const PregluedConfig& cfg, int parent, std::mt19937_64& rng, double reach) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto& ells = cfg.ellipses;
  const int k = cfg.size();
  const Vec3 c = ells[parent].center + random_unit(rng) * (0.3 + (reach - 0.3) * unit(rng));
  const Ellipse e = random_ellipse(rng, c);
  if (!std::all_of(ells.begin(), ells.end(), [&](const Ellipse& o) { return curves_disjoint(o, e); })) {
    return std::nullopt;
  }
  const Vec3 target = ells[parent].point(kTwoPi * unit(rng));
  const Vec3 w = target - e.point(kTwoPi * unit(rng));
  if (w.norm() < 1e-6) return std::nullopt;
  double best = std::numeric_limits<double>::infinity(), second = best;
  int who = -1;
  Contact hit;
  for (int i = 0; i < k; ++i) {
    for (const Contact& cc : contacts_along(e, ells[i], w)) {
      if (cc.t < best) {
        second = best;
        best = cc.t;
        who = i;
        hit = cc;
      } else {
        second = std::min(second, cc.t);
      }
    }
  }
  if (who != parent || hit.ambiguous || second - best < 1e-6 * (1.0 + best)) return std::nullopt;
  std::vector<Ellipse> next = ells;
  next.push_back(e.translated(ells[parent].point(hit.phi_fixed) - e.point(hit.theta_moving)));
  std::vector<Edge> edges = cfg.edges;
  edges.push_back({parent, k});
  try {
    return validate(next, edges);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::InvalidArgument) throw;
    return std::nullopt;
  }
}

PregluedConfig random_config(int m, std::uint64_t seed, SampleStrategy strategy) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (m == 1) return validate({random_ellipse(rng, Vec3::Zero())}, {});
  for (int attempt = 0; attempt < 200; ++attempt) {
    try {
      if (strategy == SampleStrategy::Cluster) {
        std::vector<Ellipse> ells;
        for (int tries = 0; static_cast<int>(ells.size()) < m && tries < 500; ++tries) {
          const Vec3 c = random_unit(rng) * 1.2 * std::cbrt(unit(rng));
          const Ellipse e = random_ellipse(rng, c);
          if (std::all_of(ells.begin(), ells.end(), [&](const Ellipse& o) { return curves_disjoint(o, e); })) {
            ells.push_back(e);
          }
        }
        if (static_cast<int>(ells.size()) < m) continue;
        return sweep_to_preglued(RigidPureLink{ells}, random_unit(rng), rng()).config;
      }
      PregluedConfig cfg = validate({random_ellipse(rng, Vec3::Zero())}, {});
      bool ok = true;
      for (int k = 1; k < m && ok; ++k) {
        ok = false;
        for (int tries = 0; tries < 60 && !ok; ++tries) {
          if (auto next = try_attach(cfg, k - 1, rng)) {
            cfg = std::move(*next);
            ok = true;
          }
        }
      }
      if (ok) return cfg;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument) throw;
    }
  }
  throw Error(ErrorKind::MaxRetriesExceeded, "random configuration sampling failed");
}

std::string format_config(const PregluedConfig& cfg, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) os << "# " << line << "\n";
  }
  for (const Ellipse& e : cfg.ellipses) os << format_ellipse(e) << "\n";
  for (const Edge& e : cfg.edges) os << "glue " << e.first << ' ' << e.second << "\n";
  return os.str();
}

PregluedConfig parse_config(std::istream& in) {
  std::vector<Ellipse> ellipses;
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "ellipse") {
      ellipses.push_back(parse_ellipse(line));
    } else if (word == "glue") {
      long long i = -1, j = -1;
      std::string extra;
      if (!(ls >> i >> j) || (ls >> extra)) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'glue <i> <j>'");
      }
      edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    } else {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unknown keyword '" + word + "'");
    }
  }
  return validate(ellipses, edges);
}

PregluedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_config(in);
}

void save_config(const PregluedConfig& cfg, const std::string& path, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << format_config(cfg, comment);
}

}  // namespace glued
