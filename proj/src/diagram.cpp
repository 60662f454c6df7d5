#include "glued/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "glued/error.hpp"

namespace glued {

Diagram::Diagram(std::vector<int> signs, std::vector<std::vector<Visit>> components,
                 std::vector<std::pair<int, int>> sources)
    : signs_(std::move(signs)), components_(std::move(components)), sources_(std::move(sources)) {
  check();
}

void Diagram::check() const {
  const int n = crossing_count();
  if (!sources_.empty() && static_cast<int>(sources_.size()) != n) {
    throw Error(ErrorKind::InternalInconsistency, "crossing source list has wrong length");
  }
  std::vector<int> over(n, 0);
  std::vector<int> under(n, 0);
  for (const auto& comp : components_) {
    for (const Visit& v : comp) {
      if (v.crossing < 0 || v.crossing >= n) {
        throw Error(ErrorKind::InternalInconsistency, "visit refers to unknown crossing");
      }
      (v.over ? over : under)[v.crossing]++;
    }
  }
  for (int c = 0; c < n; ++c) {
    if (over[c] != 1 || under[c] != 1) {
      throw Error(ErrorKind::InternalInconsistency,
                  "crossing " + std::to_string(c) + " is not visited once over and once under");
    }
    if (signs_[c] != 1 && signs_[c] != -1) {
      throw Error(ErrorKind::InternalInconsistency, "crossing sign must be +1 or -1");
    }
  }
}

Diagram Diagram::renumbered() const {
  std::vector<int> remap(signs_.size(), -1);
  std::vector<int> signs;
  std::vector<std::pair<int, int>> sources;
  auto comps = components_;
  for (auto& comp : comps) {
    for (Visit& v : comp) {
      if (remap[v.crossing] < 0) {
        remap[v.crossing] = static_cast<int>(signs.size());
        signs.push_back(signs_[v.crossing]);
        if (!sources_.empty()) sources.push_back(sources_[v.crossing]);
      }
      v.crossing = remap[v.crossing];
    }
  }
  return Diagram(std::move(signs), std::move(comps), std::move(sources));
}

int Diagram::writhe() const {
  int w = 0;
  for (int s : signs_) w += s;
  return w;
}

int writhe(const Diagram& d) { return d.writhe(); }

std::vector<PdCrossing> Diagram::pd_code() const {
  const int n = crossing_count();
  std::vector<PdCrossing> pd(n);
  std::vector<int> in_under(n), out_under(n), in_over(n), out_over(n);
  int base = 0;
  for (const auto& comp : components_) {
    const int len = static_cast<int>(comp.size());
    for (int j = 0; j < len; ++j) {
      const int in_label = base + (j - 1 + len) % len + 1;
      const int out_label = base + j + 1;
      const Visit& v = comp[j];
      if (v.over) {
        in_over[v.crossing] = in_label;
        out_over[v.crossing] = out_label;
      } else {
        in_under[v.crossing] = in_label;
        out_under[v.crossing] = out_label;
      }
    }
    base += len;
  }
  for (int c = 0; c < n; ++c) {
    if (signs_[c] > 0) {
      pd[c] = {in_under[c], out_over[c], out_under[c], in_over[c]};
    } else {
      pd[c] = {in_under[c], in_over[c], out_under[c], out_over[c]};
    }
  }
  return pd;
}

std::string Diagram::pd_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : pd_code()) {
    if (!first) os << ',';
    first = false;
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return os.str();
}

std::string Diagram::gauss_text() const {
  std::ostringstream os;
  bool first_comp = true;
  for (const auto& comp : components_) {
    if (!first_comp) os << " | ";
    first_comp = false;
    bool first = true;
    for (const Visit& v : comp) {
      if (!first) os << ' ';
      first = false;
      os << (v.over ? 'O' : 'U') << v.crossing + 1 << (signs_[v.crossing] > 0 ? '+' : '-');
    }
  }
  return os.str();
}

std::string Diagram::key() const {
  std::string k;
  k.reserve(4 * signs_.size() + 4 * components_.size());
  for (int s : signs_) k.push_back(s > 0 ? '+' : '-');
  for (const auto& comp : components_) {
    k.push_back('|');
    for (const Visit& v : comp) {
      k += std::to_string(v.crossing);
      k.push_back(v.over ? 'o' : 'u');
    }
  }
  return k;
}

Diagram Diagram::mirror() const {
  Diagram out = *this;
  for (int& s : out.signs_) s = -s;
  for (auto& comp : out.components_) {
    for (Visit& v : comp) v.over = !v.over;
  }
  return out;
}

Diagram Diagram::with_crossing_switched(int crossing) const {
  Diagram out = *this;
  out.signs_.at(crossing) = -out.signs_.at(crossing);
  for (auto& comp : out.components_) {
    for (Visit& v : comp) {
      if (v.crossing == crossing) v.over = !v.over;
    }
  }
  return out;
}

Diagram Diagram::without_crossings(const std::vector<int>& crossings) const {
  std::set<int> drop(crossings.begin(), crossings.end());
  Diagram out;
  out.signs_ = signs_;
  out.sources_ = sources_;
  for (const auto& comp : components_) {
    std::vector<Visit> kept;
    for (const Visit& v : comp) {
      if (!drop.count(v.crossing)) kept.push_back(v);
    }
    out.components_.push_back(std::move(kept));
  }
  return out.renumbered();
}

Diagram Diagram::smoothed_unnumbered(int crossing) const {
  int k1 = -1, p1 = -1, k2 = -1, p2 = -1;
  for (int k = 0; k < component_count(); ++k) {
    for (int j = 0; j < static_cast<int>(components_[k].size()); ++j) {
      if (components_[k][j].crossing != crossing) continue;
      if (k1 < 0) {
        k1 = k;
        p1 = j;
      } else {
        k2 = k;
        p2 = j;
      }
    }
  }
  if (k1 < 0 || k2 < 0) throw Error(ErrorKind::InvalidArgument, "no such crossing");

  Diagram out;
  out.signs_ = signs_;
  out.sources_ = sources_;
  out.components_ = components_;
  if (k1 == k2) {
    const auto& v = components_[k1];
    std::vector<Visit> x(v.begin() + p1 + 1, v.begin() + p2);
    std::vector<Visit> y(v.begin() + p2 + 1, v.end());
    y.insert(y.end(), v.begin(), v.begin() + p1);
    out.components_[k1] = std::move(x);
    out.components_.insert(out.components_.begin() + k1 + 1, std::move(y));
  } else {
    auto rotated_after = [](const std::vector<Visit>& v, int p) {
      std::vector<Visit> r(v.begin() + p + 1, v.end());
      r.insert(r.end(), v.begin(), v.begin() + p);
      return r;
    };
    std::vector<Visit> merged = rotated_after(components_[k1], p1);
    const auto tail = rotated_after(components_[k2], p2);
    merged.insert(merged.end(), tail.begin(), tail.end());
    out.components_[k1] = std::move(merged);
    out.components_.erase(out.components_.begin() + k2);
  }
  for (auto& comp : out.components_) {
    comp.erase(std::remove_if(comp.begin(), comp.end(),
                              [&](const Visit& v) { return v.crossing == crossing; }),
               comp.end());
  }
  return out;
}

Diagram Diagram::smoothed_at(int crossing) const { return smoothed_unnumbered(crossing).renumbered(); }

Diagram Diagram::smoothed_at(const std::vector<int>& crossings) const {
  Diagram out = *this;
  for (int c : crossings) out = out.smoothed_unnumbered(c);
  return out.renumbered();
}

std::pair<int, int> Diagram::edge_origin(int label) const {
  int base = 0;
  for (int k = 0; k < component_count(); ++k) {
    const int len = static_cast<int>(components_[k].size());
    if (label > base && label <= base + len) return {k, label - base - 1};
    base += len;
  }
  throw Error(ErrorKind::InvalidArgument, "edge label out of range");
}

Diagram Diagram::with_triangle_moved(const std::array<int, 3>& edge_labels) const {
  Diagram out = *this;
  for (int label : edge_labels) {
    const auto [k, j] = edge_origin(label);
    auto& comp = out.components_[k];
    std::swap(comp[j], comp[(j + 1) % comp.size()]);
  }
  out.check();
  return out;
}

Diagram Diagram::from_pd(const std::vector<PdCrossing>& pd) {
  const int n = static_cast<int>(pd.size());
  if (n == 0) return unknot();
  // role: +1 incoming, -1 outgoing, 0 unknown
  std::vector<std::array<int, 4>> role(n, {1, 0, -1, 0});
  std::map<int, std::vector<std::pair<int, int>>> slots;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) slots[pd[c][s]].push_back({c, s});
  }
  for (const auto& [label, occ] : slots) {
    if (occ.size() != 2) {
      throw Error(ErrorKind::ParseError, "PD label " + std::to_string(label) + " must occur exactly twice");
    }
  }
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < n; ++c) {
        for (int s = 0; s < 4; ++s) {
          if (role[c][s] == 0) continue;
          for (const auto& [c2, s2] : slots[pd[c][s]]) {
            if (c2 == c && s2 == s) continue;
            if (role[c2][s2] == 0) {
              role[c2][s2] = -role[c][s];
              changed = true;
            } else if (role[c2][s2] == role[c][s]) {
              throw Error(ErrorKind::ParseError, "inconsistent PD orientation");
            }
          }
          if (s == 1 || s == 3) {
            const int other = s == 1 ? 3 : 1;
            if (role[c][other] == 0) {
              role[c][other] = -role[c][s];
              changed = true;
            }
          }
        }
      }
    }
  };
  propagate();
  for (int c = 0; c < n; ++c) {
    if (role[c][1] != 0) continue;
    // Orphan over-strand loop: prefer consecutive labels d -> b.
    const bool d_in = pd[c][1] == pd[c][3] + 1;
    role[c][3] = d_in ? 1 : -1;
    role[c][1] = -role[c][3];
    propagate();
  }

  std::map<int, std::pair<int, int>> in_slot;  // label -> (crossing, slot) where it enters
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (role[c][s] == 1) in_slot[pd[c][s]] = {c, s};
    }
  }
  auto out_slot_of = [](int s) { return s == 0 ? 2 : (s == 1 ? 3 : 1); };

  std::vector<int> signs(n);
  for (int c = 0; c < n; ++c) signs[c] = role[c][3] == 1 ? 1 : -1;

  std::set<std::pair<int, int>> used;
  std::vector<std::vector<Visit>> comps;
  for (const auto& [label, start] : in_slot) {
    if (used.count(start)) continue;
    std::vector<Visit> comp;
    std::vector<int> out_labels;
    auto cur = start;
    while (!used.count(cur)) {
      used.insert(cur);
      comp.push_back({cur.first, cur.second == 1 || cur.second == 3});
      const int next_label = pd[cur.first][out_slot_of(cur.second)];
      out_labels.push_back(next_label);
      cur = in_slot.at(next_label);
    }
    // Start at the visit left by the smallest label so labels round-trip.
    const auto first = std::min_element(out_labels.begin(), out_labels.end()) - out_labels.begin();
    std::rotate(comp.begin(), comp.begin() + first, comp.end());
    comps.push_back(std::move(comp));
  }
  return Diagram(std::move(signs), std::move(comps));
}

Diagram Diagram::from_pd_text(std::string_view text) {
  std::vector<PdCrossing> pd;
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorKind::ParseError, "malformed PD code '" + std::string(text) + "'"); };
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != 'X' && text[i] != 'x') fail();
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) fail();
    ++i;
    PdCrossing x{};
    for (int s = 0; s < 4; ++s) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      x[s] = v;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (s < 3) {
        if (i >= text.size() || text[i] != ',') fail();
        ++i;
      }
    }
    if (i >= text.size() || (text[i] != ')' && text[i] != ']')) fail();
    ++i;
    pd.push_back(x);
    skip();
  }
  return from_pd(pd);
}

std::vector<std::vector<Corner>> faces(const Diagram& d) {
  const auto pd = d.pd_code();
  const int n = static_cast<int>(pd.size());
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) occ[pd[c][s]].push_back({c, s});
  }
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  std::vector<std::vector<Corner>> out;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (seen[c][s]) continue;
      std::vector<Corner> face;
      int x = c, i = s;
      while (!seen[x][i]) {
        seen[x][i] = true;
        face.push_back({x, i});
        const int exit_slot = (i + 1) % 4;
        const int label = pd[x][exit_slot];
        std::pair<int, int> next{-1, -1};
        for (const auto& o : occ[label]) {
          if (o.first == x && o.second == exit_slot) continue;
          next = o;
        }
        x = next.first;
        i = next.second;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

bool is_alternating(const Diagram& d) {
  for (const auto& comp : d.components()) {
    const std::size_t len = comp.size();
    for (std::size_t j = 0; j < len; ++j) {
      if (comp[j].over == comp[(j + 1) % len].over) return false;
    }
  }
  return true;
}

bool is_reduced(const Diagram& d) {
  const auto fs = faces(d);
  std::vector<std::array<int, 4>> face_of(d.crossing_count());
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    for (const Corner& c : fs[f]) face_of[c.crossing][c.slot] = f;
  }
  for (const auto& fc : face_of) {
    if (fc[0] == fc[2] || fc[1] == fc[3]) return false;
  }
  return true;
}

bool is_prime_diagram(const Diagram& d) {
  if (d.crossing_count() == 0) return true;
  const auto pd = d.pd_code();
  const auto fs = faces(d);
  std::map<int, std::vector<int>> edge_faces;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    for (const Corner& c : fs[f]) edge_faces[pd[c.crossing][(c.slot + 1) % 4]].push_back(f);
  }
  std::map<std::pair<int, int>, int> shared;
  for (const auto& [label, fl] : edge_faces) {
    if (fl.size() != 2 || fl[0] == fl[1]) return false;
    if (++shared[{std::min(fl[0], fl[1]), std::max(fl[0], fl[1])}] > 1) return false;
  }
  return true;
}

namespace {

std::optional<Diagram> try_r1(const Diagram& d) {
  for (const auto& comp : d.components()) {
    const std::size_t len = comp.size();
    for (std::size_t j = 0; j < len; ++j) {
      if (comp[j].crossing == comp[(j + 1) % len].crossing) return d.without_crossings({comp[j].crossing});
    }
  }
  return std::nullopt;
}

struct FaceEdges {
  std::vector<int> labels;
  std::vector<int> crossings;
};

std::vector<FaceEdges> face_edges(const Diagram& d, std::size_t max_len) {
  const auto pd = d.pd_code();
  std::vector<FaceEdges> out;
  for (const auto& face : faces(d)) {
    if (face.size() > max_len) continue;
    FaceEdges fe;
    for (const Corner& c : face) {
      fe.labels.push_back(pd[c.crossing][(c.slot + 1) % 4]);
      fe.crossings.push_back(c.crossing);
    }
    out.push_back(std::move(fe));
  }
  return out;
}

// Over-status of an edge at its tail and head visits.
std::pair<bool, bool> edge_status(const Diagram& d, int label) {
  const auto [k, j] = d.edge_origin(label);
  const auto& comp = d.components()[k];
  return {comp[j].over, comp[(j + 1) % comp.size()].over};
}

std::optional<Diagram> try_r2(const Diagram& d) {
  for (const auto& fe : face_edges(d, 2)) {
    if (fe.labels.size() != 2 || fe.crossings[0] == fe.crossings[1]) continue;
    const auto [a, b] = edge_status(d, fe.labels[0]);
    if (a != b) continue;
    if (d.signs()[fe.crossings[0]] == d.signs()[fe.crossings[1]]) continue;
    return d.without_crossings({fe.crossings[0], fe.crossings[1]});
  }
  return std::nullopt;
}

std::vector<Diagram> r3_neighbours(const Diagram& d) {
  std::vector<Diagram> out;
  for (const auto& fe : face_edges(d, 3)) {
    if (fe.labels.size() != 3) continue;
    const auto& cr = fe.crossings;
    if (cr[0] == cr[1] || cr[1] == cr[2] || cr[0] == cr[2]) continue;
    int top = 0, bottom = 0;
    for (int label : fe.labels) {
      const auto [a, b] = edge_status(d, label);
      if (a && b) ++top;
      if (!a && !b) ++bottom;
    }
    if (top != 1 || bottom != 1) continue;
    out.push_back(d.with_triangle_moved({fe.labels[0], fe.labels[1], fe.labels[2]}));
  }
  return out;
}

std::optional<Diagram> reduce_once(const Diagram& d) {
  if (auto r = try_r1(d)) return r;
  return try_r2(d);
}

std::optional<Diagram> r3_search(const Diagram& start) {
  std::deque<Diagram> queue{start};
  std::unordered_set<std::string> seen{start.key()};
  int explored = 0;
  while (!queue.empty() && explored < kR3SearchBreadth) {
    Diagram cur = std::move(queue.front());
    queue.pop_front();
    ++explored;
    for (auto& next : r3_neighbours(cur)) {
      if (!seen.insert(next.key()).second) continue;
      if (auto reduced = reduce_once(next)) return reduced;
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace

Diagram reduce_r1_r2(const Diagram& d) {
  Diagram cur = d;
  while (auto r = reduce_once(cur)) cur = std::move(*r);
  return cur;
}

Diagram simplify(const Diagram& d, int max_iters) {
  Diagram cur = d;
  for (int iter = 0; iter < max_iters; ++iter) {
    if (auto r = reduce_once(cur)) {
      cur = std::move(*r);
      continue;
    }
    if (auto r = r3_search(cur)) {
      cur = std::move(*r);
      continue;
    }
    break;
  }
  return cur;
}

}  // namespace glued

namespace glued {

std::string canonical_knot_code(const Diagram& d) {
  if (d.component_count() != 1) throw Error(ErrorKind::InvalidArgument, "canonical code needs a knot diagram");
  const auto& comp = d.components()[0];
  const int len = static_cast<int>(comp.size());
  std::string best;
  for (int start = 0; start < len; ++start) {
    std::vector<int> label(d.crossing_count(), -1);
    int next = 0;
    std::string code;
    for (int j = 0; j < len; ++j) {
      const Visit& v = comp[(start + j) % len];
      if (label[v.crossing] < 0) label[v.crossing] = next++;
      code += (v.over ? 'O' : 'U') + std::to_string(label[v.crossing]) + (d.signs()[v.crossing] > 0 ? '+' : '-');
    }
    if (start == 0 || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace glued
