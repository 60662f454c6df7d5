#include "glued/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "glued/config.hpp"
#include "glued/error.hpp"
#include "glued/families.hpp"
#include "glued/invariants.hpp"
#include "glued/project.hpp"
#include "glued/skein.hpp"

namespace glued {

namespace {

constexpr std::uint64_t kProjectionSeed = 1;

struct Sampled {
  PregluedConfig cfg;
  Diagram diagram;
  std::uint64_t config_seed = 0;
};

// Draws the next random configuration and its generic projection. Nullopt when
// no generic projection exists within the retry budget.
std::optional<Sampled> draw(int m, std::mt19937_64& rng) {
  Sampled s;
  s.config_seed = rng();
  s.cfg = random_config(m, s.config_seed);
  try {
    s.diagram = project_knot_generic(s.cfg, s.config_seed ^ kProjectionSeed).diagram;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MaxRetriesExceeded) return std::nullopt;
    throw;
  }
  return s;
}

void add_failure(VerifyReport& r, const Sampled& s, const std::string& note) {
  r.witnesses.push_back({"sample seed " + std::to_string(s.config_seed), s.cfg, note, true});
}

std::string fmt(double x) {
  std::ostringstream o;
  o << x;
  return o.str();
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const Vec3 v(n(rng), n(rng), n(rng));
    if (v.norm() > 1e-6) return v.normalized();
  }
}

Ellipse random_ellipse(std::mt19937_64& rng, const Vec3& center) {
  std::uniform_real_distribution<double> len(0.4, 1.2);
  for (;;) {
    const Vec3 u = len(rng) * random_unit(rng);
    const Vec3 v = len(rng) * random_unit(rng);
    if (u.cross(v).norm() < 0.2 * u.norm() * v.norm()) continue;
    return Ellipse{center, u, v, rng() % 2 == 0 ? 1 : -1};
  }
}

// Dense sampling oracle: a grid over the disk of `a` is scanned for sign
// changes of the distance to b's plane, and each crossing point is tested
// against b's disk. Returns true when a common interior point is found.
bool disks_meet_sampled(const Ellipse& a, const Ellipse& b, int radial = 120, int angular = 240) {
  const Vec3 nb = b.unit_normal();
  auto at = [&](int i, int j) {
    const double r = (i + 0.5) / radial;
    const double t = 2.0 * std::numbers::pi * j / angular;
    return Vec3(a.center + r * (std::cos(t) * a.u + std::sin(t) * a.v));
  };
  auto inside_b = [&](const Vec3& q) {
    const Vec2 c = b.plane_coords(q);
    return c.squaredNorm() < 1.0 - 1e-9;
  };
  for (int i = 0; i < radial; ++i) {
    for (int j = 0; j < angular; ++j) {
      const Vec3 p = at(i, j);
      const double dp = nb.dot(p - b.center);
      for (const auto& [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
        if (i + di >= radial) continue;
        const Vec3 q = at(i + di, (j + dj) % angular);
        const double dq = nb.dot(q - b.center);
        if ((dp > 0) == (dq > 0)) continue;
        const Vec3 x = p + (dp / (dp - dq)) * (q - p);
        if (inside_b(x)) return true;
      }
    }
  }
  return false;
}

std::string pierce_case(const PregluedConfig& cfg, const GluingTreeSummary& s) {
  // Middle ellipse of the path, then the two ends.
  int mid = 0;
  for (int i = 0; i < cfg.size(); ++i) {
    if (s.adjacency[i].size() == 2) mid = i;
  }
  const int e1 = s.adjacency[mid][0], e3 = s.adjacency[mid][1];
  auto meets = [&](int a, int b) {
    const auto p = s.pierce.at(normalized({a, b}));
    return p.first > 0 || p.second > 0;
  };
  const bool x12 = meets(e1, mid), x23 = meets(mid, e3), x13 = meets(e1, e3);
  // Cases (ii)/(iii) and (vi)/(vii) differ only by relabeling the ends.
  static const char* names[8] = {"(i)", "(ii)/(iii)", "(ii)/(iii)", "(iv)", "(v)", "(vi)/(vii)", "(vi)/(vii)", "(viii)"};
  return names[(x12 ? 1 : 0) + (x23 ? 2 : 0) + (x13 ? 4 : 0)];
}

}  // namespace

VerifyReport verify_writhe_bound(int m, int samples, std::uint64_t seed) {
  VerifyReport r;
  r.suite = "writhe_bound_m" + std::to_string(m);
  r.seed = seed;
  std::mt19937_64 rng(seed);
  const int bound = (m - 1) * (m - 1);
  int max_abs = 0;
  std::map<int, int> hist;
  for (int i = 0; i < samples; ++i) {
    auto s = draw(m, rng);
    if (!s) {
      ++r.skipped;
      continue;
    }
    const int w = s->diagram.writhe();
    max_abs = std::max(max_abs, std::abs(w));
    hist[w]++;
    bool ok = std::abs(w) <= bound;
    std::string why;
    const auto pw = pair_writhe(s->diagram);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const auto it = pw.find({a, b});
        const int v = it == pw.end() ? 0 : it->second;
        const int lim = s->cfg.glue_points.count({a, b}) ? 1 : 2;
        if (std::abs(v) > lim) {
          ok = false;
          why += " pair(" + std::to_string(a) + "," + std::to_string(b) + ")=" + std::to_string(v);
        }
      }
    }
    r.record(ok, "sample " + std::to_string(i) + " writhe " + std::to_string(w) + why);
    if (!ok) add_failure(r, *s, "writhe " + std::to_string(w) + why);
  }
  r.stats["max_abs_writhe"] = std::to_string(max_abs);
  r.stats["bound"] = std::to_string(bound);
  std::string h;
  for (const auto& [w, c] : hist) h += std::to_string(w) + ":" + std::to_string(c) + " ";
  r.stats["writhe_histogram"] = h;
  return r;
}

VerifyReport verify_parity(int m, int samples, std::uint64_t seed) {
  VerifyReport r;
  r.suite = "parity_m" + std::to_string(m);
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::map<int, int> hist;
  for (int i = 0; i < samples; ++i) {
    auto s = draw(m, rng);
    if (!s) {
      ++r.skipped;
      continue;
    }
    const int c = s->diagram.crossing_count();
    hist[c]++;
    const bool ok = (c - (m - 1)) % 2 == 0;
    r.record(ok, "sample " + std::to_string(i) + " crossings " + std::to_string(c));
    if (!ok) add_failure(r, *s, "crossings " + std::to_string(c));
  }
  std::string h;
  for (const auto& [c, k] : hist) h += std::to_string(c) + ":" + std::to_string(k) + " ";
  r.stats["crossing_histogram"] = h;
  return r;
}

VerifyReport verify_classification(int m, int samples, std::uint64_t seed) {
  if (m < 1 || m > 3) throw Error(ErrorKind::PreconditionViolated, "classification covers m <= 3");
  VerifyReport r;
  r.suite = "classification_m" + std::to_string(m);
  r.seed = seed;
  std::mt19937_64 rng(seed);
  const std::set<std::string> allowed = m < 3 ? std::set<std::string>{"unknot"}
                                              : std::set<std::string>{"unknot", "3_1", "4_1"};
  std::map<std::string, int> outcomes, cases;
  for (int i = 0; i < samples; ++i) {
    auto s = draw(m, rng);
    if (!s) {
      ++r.skipped;
      continue;
    }
    const KnotId id = identify(s->diagram);
    outcomes[id.name + (id.chirality == "mirror" ? " (mirror)" : "")]++;
    std::string pc;
    if (m == 3) {
      pc = pierce_case(s->cfg, summarize(s->cfg));
      cases[pc]++;
    }
    const bool ok = allowed.count(id.name) > 0;
    r.record(ok, "sample " + std::to_string(i) + " " + id.name + (pc.empty() ? "" : " case " + pc));
    if (!ok) add_failure(r, *s, "identified as " + id.name);
  }
  for (const auto& [name, c] : outcomes) r.stats["outcome " + name] = std::to_string(c);
  for (const auto& [name, c] : cases) r.stats["pierce case " + name] = std::to_string(c);
  if (m == 3) {
    r.record(cases.size() >= 2, "at least two distinct pierce cases occurred (" + std::to_string(cases.size()) + ")");
    for (const auto& [name, want] : {std::pair{"trefoil", "3_1"}, std::pair{"figure_eight", "4_1"}}) {
      const PregluedConfig cfg = bundled_config(name);
      const Diagram d = project_knot_generic(cfg, kProjectionSeed).diagram;
      const std::string got = identify(d).name;
      r.record(got == want, std::string("bundled witness ") + name + " identifies as " + got);
      r.witnesses.push_back({std::string("bundled ") + name, cfg, "identifies as " + got, got != want});
    }
  }
  return r;
}

VerifyReport verify_nonalternating_projection(int samples, std::uint64_t seed) {
  VerifyReport r;
  r.suite = "nonalternating_projection";
  r.seed = seed;
  std::mt19937_64 rng(seed);
  int applicable = 0, vacuous = 0;

  // Searches near edge-on projections of an unpierced glued ellipse.
  auto lemma_projection = [&](const PregluedConfig& cfg, std::string& detail) -> std::optional<bool> {
    const GluingTreeSummary sum = summarize(cfg);
    for (const Edge& e : cfg.edges) {
      for (const auto& [thin, other] : {std::pair{e.first, e.second}, std::pair{e.second, e.first}}) {
        bool unpierced = true;
        for (int k = 0; k < cfg.size(); ++k) {
          if (k == thin) continue;
          const auto p = sum.pierce.at(normalized({thin, k}));
          if ((thin < k ? p.first : p.second) > 0) unpierced = false;
        }
        if (!unpierced) continue;
        const Ellipse& el = cfg.ellipses[thin];
        const Vec3 n = el.unit_normal();
        for (int attempt = 0; attempt < kProjectionRetries; ++attempt) {
          Vec3 t = random_unit(rng);
          t = (t - t.dot(n) * n).normalized();
          double eta = 0.05;
          for (int halving = 0; halving < 6; ++halving, eta /= 2) {
            ProjectionSpec spec = ProjectionSpec::from_direction(std::cos(eta) * t + std::sin(eta) * n);
            Diagram d;
            try {
              d = project_knot(cfg, spec);
            } catch (const Error& err) {
              if (err.kind() != ErrorKind::NonGenericProjection) throw;
              continue;
            }
            const auto counts = pair_crossing_counts(d);
            const auto it = counts.find(normalized({thin, other}));
            const int pair_cr = it == counts.end() ? 0 : it->second;
            if (pair_cr < 3) break;
            detail = "thin ellipse " + std::to_string(thin) + ", " + std::to_string(pair_cr) +
                     " pair crossings, eta " + fmt(eta);
            return !is_alternating(d);
          }
        }
      }
    }
    return std::nullopt;
  };

  for (int i = 0; i < samples; ++i) {
    Sampled s;
    s.config_seed = rng();
    s.cfg = random_config(3, s.config_seed);
    std::string detail;
    const auto res = lemma_projection(s.cfg, detail);
    if (!res) {
      ++vacuous;
      r.note("sample " + std::to_string(i) + " vacuous (no unpierced glued ellipse with >= 3 pair crossings)");
      continue;
    }
    ++applicable;
    r.record(*res, "sample " + std::to_string(i) + " " + detail);
    if (!*res) add_failure(r, s, "alternating near edge-on projection: " + detail);
  }

  // gen_max_writhe(3): any non-alternating projection among 32 directions.
  {
    const PregluedConfig cfg = gen_max_writhe(3);
    std::string detail;
    auto res = lemma_projection(cfg, detail);
    bool found = res && *res;
    std::mt19937_64 dir_rng(seed);
    for (int a = 0; !found && a < kProjectionRetries; ++a) {
      ProjectionSpec spec = ProjectionSpec::from_direction(random_unit(dir_rng));
      try {
        found = !is_alternating(project_knot(cfg, spec));
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NonGenericProjection) throw;
      }
    }
    r.record(found, "max_writhe(3) has a non-alternating projection");
  }
  // Bundled figure-eight: its default projection and the lemma's projection.
  {
    const PregluedConfig cfg = bundled_config("figure_eight");
    const Diagram d = project_knot_generic(cfg, kProjectionSeed).diagram;
    r.note(std::string("figure_eight default projection alternating: ") + (is_alternating(d) ? "yes" : "no") +
           " (" + std::to_string(d.crossing_count()) + " crossings); simplified alternating: " +
           (is_alternating(simplify(d)) ? "yes" : "no"));
    std::string detail;
    auto res = lemma_projection(cfg, detail);
    r.note(std::string("figure_eight lemma projection: ") +
           (res ? (*res ? "non-alternating, " : "alternating, ") + detail : "not applicable"));
  }
  r.stats["applicable"] = std::to_string(applicable);
  r.stats["vacuous"] = std::to_string(vacuous);
  return r;
}

VerifyReport verify_geometry_lemmas(int pairs, std::uint64_t seed) {
  VerifyReport r;
  r.suite = "geometry_lemmas";
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::map<std::string, int> patterns;
  int disjoint_checked = 0;
  for (int i = 0; r.samples < pairs; ++i) {
    if (i > 4 * pairs) throw Error(ErrorKind::MaxRetriesExceeded, "too many rejected ellipse pairs");
    const bool glued = i % 2 == 1;
    const Ellipse fixed = random_ellipse(rng, Vec3::Zero());
    Ellipse moving = random_ellipse(rng, 1.2 * Vec3(unit(rng), unit(rng), unit(rng)));
    if (glued) {
      const Vec3 w = fixed.point(2 * std::numbers::pi * (unit(rng) + 1) / 2) - moving.center +
                     0.3 * Vec3(unit(rng), unit(rng), unit(rng));
      const auto g = glue_by_translation(moving, fixed, w);
      if (!g) {
        ++r.skipped;
        continue;
      }
      moving = *g;
    }
    PairClassification pc;
    try {
      pc = classify_pair(fixed, moving);
    } catch (const Error& e) {
      ++r.skipped;
      r.note("pair " + std::to_string(i) + " skipped: " + e.what());
      continue;
    }
    const int p12 = pc.pierce_1_by_2, p21 = pc.pierce_2_by_1;
    const std::string pat = std::string(glued ? "glued" : "disjoint") + " {" + std::to_string(p12) + "," +
                            std::to_string(p21) + "}";
    patterns[pat]++;
    bool ok;
    if (glued) {
      ok = pc.glue_points.size() == 1 && p12 <= 1 && p21 <= 1 && !(p12 > 0 && p21 > 0);
    } else {
      const int lo = std::min(p12, p21), hi = std::max(p12, p21);
      ok = pc.glue_points.empty() && ((lo == 0 && hi == 0) || (lo == 0 && hi == 2) || (lo == 1 && hi == 1));
      if (ok && lo == 0 && hi == 0) {
        ++disjoint_checked;
        const bool analytic = interiors_disjoint(fixed, moving);
        const bool sampled = !disks_meet_sampled(fixed, moving) && !disks_meet_sampled(moving, fixed);
        ok = analytic && sampled;
      }
    }
    r.record(ok, "pair " + std::to_string(i) + " " + pat);
    if (!ok) {
      PregluedConfig c;
      c.ellipses = {fixed, moving};
      if (glued) c.edges = {{0, 1}};
      r.witnesses.push_back({"pair " + std::to_string(i), c, pat, true});
    }
  }
  for (const auto& [p, c] : patterns) r.stats["pattern " + p] = std::to_string(c);
  r.stats["interior_disjointness_checked"] = std::to_string(disjoint_checked);
  return r;
}

VerifyReport verify_families() {
  VerifyReport r;
  r.suite = "families";
  auto projected = [](const PregluedConfig& cfg) { return project_knot_generic(cfg, kProjectionSeed).diagram; };
  auto roundtrip_ok = [](const PregluedConfig& cfg) {
    std::istringstream in(format_config(cfg));
    return parse_config(in).size() == cfg.size();
  };
  for (int m = 1; m <= 5; ++m) {
    const PregluedConfig cfg = gen_max_writhe(m);
    const Diagram d = projected(cfg);
    const int want = (m - 1) * (m - 1);
    r.record(d.writhe() == want && roundtrip_ok(cfg),
             "max_writhe " + std::to_string(m) + " writhe " + std::to_string(d.writhe()) + " (want " +
                 std::to_string(want) + ")");
    if (m == 3 || m == 4) {
      const bool ok = jones(d) == torus_jones(m, m - 1);
      r.record(ok, "max_writhe " + std::to_string(m) + " jones " + jones(d).to_string("t") + " equals T(" +
                       std::to_string(m) + "," + std::to_string(m - 1) + ")");
    }
  }
  for (int k = 3; k <= 6; ++k) {
    const PregluedConfig cfg = gen_three_color(k);
    const auto c = tricolorings(projected(cfg));
    long long want = 1;
    for (int i = 0; i < k; ++i) want *= 3;
    r.record(c == want && cfg.size() == k + 2 && roundtrip_ok(cfg),
             "three_color " + std::to_string(k) + " tricolorings " + std::to_string(c) + " (want " +
                 std::to_string(want) + ")");
  }
  for (int k = 1; k <= 3; ++k) {
    const PregluedConfig cfg = gen_connect_sum_trefoils(k);
    const auto c = tricolorings(projected(cfg));
    long long want = 3;
    for (int i = 0; i < k; ++i) want *= 3;
    r.record(c == want && cfg.degree() == 6 * k && roundtrip_ok(cfg),
             "connect_sum_trefoils " + std::to_string(k) + " tricolorings " + std::to_string(c) + " (want " +
                 std::to_string(want) + ")");
  }
  for (int n = 3; n <= 6; ++n) {
    const PregluedConfig cfg = gen_low_crossing(n);
    const Diagram s = simplify(projected(cfg));
    const bool ok = s.crossing_count() == 2 * n - 2 && is_alternating(s) && is_reduced(s) && roundtrip_ok(cfg);
    std::string line = "low_crossing " + std::to_string(n) + " simplifies to " + std::to_string(s.crossing_count()) +
                       " crossings, alternating " + (is_alternating(s) ? "yes" : "no") + ", reduced " +
                       (is_reduced(s) ? "yes" : "no");
    r.record(ok, line);
    if (n == 3) {
      const std::string name = identify(s).name;
      r.record(name == "4_1", "low_crossing 3 identifies as " + name);
    }
  }
  return r;
}

VerifyReport verify_skein(int samples_per_m, std::uint64_t seed) {
  VerifyReport r;
  r.suite = "skein";
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::map<std::string, int> exponents;
  auto check = [&](const PregluedConfig& cfg, const std::string& label) -> bool {
    ProjectionSpec spec;
    try {
      spec = common_generic_spec(cfg, rng());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::MaxRetriesExceeded) return false;
      throw;
    }
    try {
      const VerifyReport c = check_conway_expansion(cfg, spec);
      const VerifyReport b = check_bracket_expansion(cfg, {}, spec);
      std::vector<int> sigma;
      for (const Ellipse& e : cfg.ellipses) sigma.push_back(e.orientation);
      sigma[0] = -sigma[0];
      const VerifyReport b2 = check_bracket_expansion(cfg, sigma, spec);
      exponents[b.stats.at("exponent")]++;
      exponents[b2.stats.at("exponent")]++;
      const bool ok = c.pass() && b.pass() && b2.pass();
      r.record(ok, label + " conway " + c.stats.at("lhs") + " = " + c.stats.at("rhs") + "; bracket exponents " +
                       b.stats.at("exponent") + ", " + b2.stats.at("exponent"));
      if (!ok) {
        r.witnesses.push_back({label, cfg, "skein identity failed", true});
        for (const auto* rep : {&c, &b, &b2}) {
          for (const auto& l : rep->lines) r.note("  " + l);
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooManyCrossings) throw;
      return false;
    }
    return true;
  };
  check(gen_max_writhe(3), "max_writhe(3)");
  for (int m = 2; m <= 3; ++m) {
    int done = 0;
    for (int attempt = 0; done < samples_per_m && attempt < 4 * samples_per_m; ++attempt) {
      const std::uint64_t cs = rng();
      if (check(random_config(m, cs), "m=" + std::to_string(m) + " seed " + std::to_string(cs))) {
        ++done;
      } else {
        ++r.skipped;
      }
    }
    r.record(done == samples_per_m, "m=" + std::to_string(m) + ": " + std::to_string(done) + " configurations checked");
  }
  for (const auto& [e, c] : exponents) r.stats["bracket exponent " + e] = std::to_string(c);
  return r;
}

VerifyReport verify_degree(int samples, std::uint64_t seed) {
  VerifyReport r;
  r.suite = "degree";
  r.seed = seed;
  for (int m = 2; m <= 3; ++m) {
    const VerifyReport d = degree_bound_report(m, samples, seed + m);
    r.samples += d.samples;
    r.passed += d.passed;
    r.failed += d.failed;
    r.skipped += d.skipped;
    for (const auto& [k, v] : d.stats) r.stats["m=" + std::to_string(m) + " " + k] = v;
    for (const auto& l : d.lines) r.lines.push_back("m=" + std::to_string(m) + " " + l);
  }
  return r;
}

VerifyReport verify_invariant_engine() {
  VerifyReport r;
  r.suite = "invariant_engine";
  for (const TableKnot& k : knot_table()) {
    const Diagram d = Diagram::from_pd_text(k.pd);
    const LaurentPoly c = conway(d);
    const bool alex_ok = conway_to_alexander(c) == alexander(d) || conway_to_alexander(c) == -alexander(d);
    const bool mirror_ok = jones(d.mirror()) == jones(d).substitute_power(-1);
    r.record(alex_ok && mirror_ok, k.name + " conway/alexander " + (alex_ok ? "consistent" : "INCONSISTENT") +
                                       ", jones mirror " + (mirror_ok ? "ok" : "MISMATCH"));
  }
  auto colorings = [&](const std::string& name) -> std::int64_t {
    if (name == "unknot") return tricolorings(Diagram::unknot());
    for (const TableKnot& k : knot_table()) {
      if (k.name == name) return tricolorings(Diagram::from_pd_text(k.pd));
    }
    throw Error(ErrorKind::InvalidArgument, "no table knot " + name);
  };
  for (const auto& [name, want] : {std::pair{"3_1", 9}, std::pair{"4_1", 3}, std::pair{"unknot", 3}}) {
    const auto got = colorings(name);
    r.record(got == want, std::string(name) + " tricolorings " + std::to_string(got));
  }
  // Kinked unknots: one, two and three curls of mixed signs.
  const std::vector<Diagram> kinks = {
      Diagram({1}, {{{0, true}, {0, false}}}),
      Diagram({-1}, {{{0, false}, {0, true}}}),
      Diagram({1, -1}, {{{0, true}, {0, false}, {1, false}, {1, true}}}),
      Diagram({1, 1, -1}, {{{0, true}, {0, false}, {1, true}, {1, false}, {2, false}, {2, true}}}),
  };
  for (std::size_t i = 0; i < kinks.size(); ++i) {
    const LaurentPoly j = jones(kinks[i]);
    r.record(j == LaurentPoly(1), "kinked unknot " + std::to_string(i) + " jones " + j.to_string("t"));
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"writhe_bound_m2", "writhe_bound_m3", "writhe_bound_m4", "parity_m2",        "parity_m3",
          "parity_m4",       "classification_m2", "classification_m3", "nonalternating_projection",
          "geometry_lemmas", "families",        "skein",             "degree",            "invariant_engine"};
}

bool is_suite_name(const std::string& name) {
  for (const auto& n : suite_names()) {
    if (n == name) return true;
  }
  for (const std::string prefix : {"writhe_bound_m", "parity_m", "classification_m"}) {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) continue;
    const std::string rest = name.substr(prefix.size());
    if (rest.size() <= 2 && std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int m = std::stoi(rest);
      return m >= 1 && (prefix != "classification_m" || m <= 3);
    }
  }
  return false;
}

VerifyReport run_suite(const std::string& name, std::uint64_t seed) {
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad suite parameter in '" + name + "'");
    }
  };
  if (auto m = param("writhe_bound_m")) return verify_writhe_bound(*m, kDefaultWritheSamples, seed);
  if (auto m = param("parity_m")) return verify_parity(*m, kDefaultWritheSamples, seed);
  if (auto m = param("classification_m")) return verify_classification(*m, kDefaultClassificationSamples, seed);
  if (name == "nonalternating_projection") return verify_nonalternating_projection(100, seed);
  if (name == "geometry_lemmas") return verify_geometry_lemmas(kDefaultGeometryPairs, seed);
  if (name == "families") return verify_families();
  if (name == "skein") return verify_skein(kDefaultSkeinSamples, seed);
  if (name == "degree") return verify_degree(30, seed);
  if (name == "invariant_engine") return verify_invariant_engine();
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

int run_all(const std::string& results_dir, std::uint64_t seed, const std::vector<std::string>& suites) {
  namespace fs = std::filesystem;
  const std::vector<std::string> names = suites.empty() ? suite_names() : suites;
  const fs::path root(results_dir);
  fs::create_directories(root / "reports");
  bool all = true;
  for (const auto& name : names) {
    VerifyReport rep = run_suite(name, seed);
    if (rep.seed == 0) rep.seed = seed;
    all = all && rep.pass();
    std::ofstream(root / "reports" / (name + ".txt")) << rep.to_text();
    if (!rep.witnesses.empty()) {
      const fs::path wdir = root / "witnesses" / name;
      fs::create_directories(wdir);
      for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
        const Witness& w = rep.witnesses[i];
        const std::string comment = name + " " + w.label + (w.failure ? " [failure]" : "") +
                                    (w.note.empty() ? "" : ": " + w.note);
        std::ofstream(wdir / (std::to_string(i) + ".cfg")) << format_config(w.config, comment);
      }
    }
  }
  return all ? 0 : 1;
}

}  // namespace glued
