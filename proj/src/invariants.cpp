#include "glued/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "glued/error.hpp"
#include "knot_table_data.hpp"

namespace glued {

namespace {

// Over-arcs: a new arc starts after every under-visit.
struct ArcData {
  int arcs = 0;
  std::vector<int> over_arc, in_arc, out_arc;
};

ArcData arc_data(const Diagram& d) {
  const int n = d.crossing_count();
  ArcData a;
  a.over_arc.assign(n, -1);
  a.in_arc.assign(n, -1);
  a.out_arc.assign(n, -1);
  for (const auto& comp : d.components()) {
    const int len = static_cast<int>(comp.size());
    if (len == 0) {
      ++a.arcs;
      continue;
    }
    std::vector<int> edge_arc(len, -1);
    const auto first_under = std::find_if(comp.begin(), comp.end(), [](const Visit& v) { return !v.over; });
    if (first_under == comp.end()) {
      std::fill(edge_arc.begin(), edge_arc.end(), a.arcs++);
    } else {
      const int u0 = static_cast<int>(first_under - comp.begin());
      int cur = -1;
      for (int step = 0; step < len; ++step) {
        const int j = (u0 + step) % len;
        if (!comp[j].over) cur = a.arcs++;
        edge_arc[j] = cur;
      }
    }
    for (int j = 0; j < len; ++j) {
      const Visit& v = comp[j];
      const int before = edge_arc[(j - 1 + len) % len];
      const int after = edge_arc[j];
      if (v.over) {
        a.over_arc[v.crossing] = after;
      } else {
        a.in_arc[v.crossing] = before;
        a.out_arc[v.crossing] = after;
      }
    }
  }
  return a;
}

int rank_mod3(std::vector<std::vector<int>> m, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] % 3 != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const int inv = m[rank][c] == 1 ? 1 : 2;  // 2*2 = 4 = 1 mod 3
    for (int& x : m[rank]) x = (x * inv) % 3;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const int f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % 3 + 3) % 3;
    }
    ++rank;
  }
  return rank;
}

LaurentPoly delta_poly() { return -(LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, -2)); }

// Exact division by delta = -A^2 - A^-2 (integer exponents in A).
LaurentPoly divide_by_delta(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  if (p.unit() != 1) throw Error(ErrorKind::InternalInconsistency, "bracket exponents must be integral");
  // p = q * delta  <=>  -A^2 p' ... work with p = -q (A^2 + A^-2).
  std::map<int, LaurentPoly::Coeff> rem(p.terms().begin(), p.terms().end());
  std::map<int, LaurentPoly::Coeff> q;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const int e = top->first;
    const auto c = top->second;
    // leading term of -q_k A^k (A^2 + A^-2) is -q_k A^{k+2}
    const int k = e - 2;
    const auto qk = -c;
    q[k] += qk;
    rem[e] += qk;  // subtract -qk A^{k+2}
    rem[k - 2] += qk;
    for (auto it = rem.begin(); it != rem.end();) it = it->second == 0 ? rem.erase(it) : std::next(it);
    if (!rem.empty() && rem.begin()->first < p.terms().begin()->first - 4) {
      throw Error(ErrorKind::InternalInconsistency, "bracket not divisible by loop value");
    }
  }
  LaurentPoly out;
  for (const auto& [e, c] : q) out += LaurentPoly::monomial(c, e);
  return out;
}

using Pairing = std::vector<int>;  // sorted flat list of (a, b) with a < b

LaurentPoly bracket_raw(const Diagram& d, const std::map<int, Smoothing>& forced = {}) {
  const auto pd = d.pd_code();
  const int n = static_cast<int>(pd.size());
  int empty_components = 0;
  for (const auto& comp : d.components()) empty_components += comp.empty() ? 1 : 0;
  const LaurentPoly delta = delta_poly();
  if (n == 0) return delta.pow(static_cast<unsigned>(std::max(0, empty_components - 1)));

  std::map<Pairing, LaurentPoly> states;
  states[{}] = LaurentPoly(1);
  std::vector<bool> done(n, false);
  std::vector<int> open_count;
  std::unordered_map<int, int> seen;  // label -> number of processed occurrences

  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int s = 0; s < 4; ++s) score += seen.count(pd[c][s]) ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    done[best] = true;
    const auto& x = pd[best];
    for (int s = 0; s < 4; ++s) seen[x[s]]++;

    const std::array<std::array<std::pair<int, int>, 2>, 2> smoothings{{
        {{{x[0], x[1]}, {x[2], x[3]}}},  // A
        {{{x[0], x[3]}, {x[1], x[2]}}},  // B
    }};
    std::map<Pairing, LaurentPoly> next;
    for (const auto& [pairing, poly] : states) {
      for (int which = 0; which < 2; ++which) {
        if (const auto f = forced.find(best); f != forced.end() && static_cast<int>(f->second) != which) continue;
        std::map<int, int> partner;
        for (std::size_t i = 0; i < pairing.size(); i += 2) {
          partner[pairing[i]] = pairing[i + 1];
          partner[pairing[i + 1]] = pairing[i];
        }
        int loops = 0;
        for (const auto& [p, q] : smoothings[which]) {
          if (p == q) {
            ++loops;
            continue;
          }
          const auto ip = partner.find(p);
          const auto iq = partner.find(q);
          if (ip != partner.end() && iq != partner.end()) {
            const int pp = ip->second, qq = iq->second;
            partner.erase(p);
            partner.erase(q);
            if (pp == q) {
              ++loops;
            } else {
              partner[pp] = qq;
              partner[qq] = pp;
            }
          } else if (ip != partner.end()) {
            const int pp = ip->second;
            partner.erase(p);
            partner[pp] = q;
            partner[q] = pp;
          } else if (iq != partner.end()) {
            const int qq = iq->second;
            partner.erase(q);
            partner[qq] = p;
            partner[p] = qq;
          } else {
            partner[p] = q;
            partner[q] = p;
          }
        }
        Pairing key;
        for (const auto& [a, b] : partner) {
          if (a < b) {
            key.push_back(a);
            key.push_back(b);
          }
        }
        LaurentPoly term = poly * LaurentPoly::monomial(1, which == 0 ? 1 : -1);
        for (int l = 0; l < loops; ++l) term *= delta;
        next[key] += term;
      }
    }
    states = std::move(next);
  }
  LaurentPoly total = states[{}];
  return divide_by_delta(total) * delta.pow(static_cast<unsigned>(empty_components));
}

// Dense integer polynomials in t for the Alexander determinant.
using Dense = std::vector<std::int64_t>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Dense dense_sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Dense dense_div_exact(Dense a, const Dense& b) {
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  Dense q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const std::int64_t top = a[i + b.size() - 1];
    if (top % b.back() != 0) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
    q[i] = top / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  trim(a);
  if (!a.empty()) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  trim(q);
  return q;
}

Dense bareiss_det(std::vector<std::vector<Dense>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return {1};
  int sign = 1;
  Dense prev{1};
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].empty()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!m[r][k].empty()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = dense_div_exact(dense_sub(dense_mul(m[i][j], m[k][k]), dense_mul(m[i][k], m[k][j])), prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  Dense det = m[n - 1][n - 1];
  if (sign < 0) {
    for (auto& c : det) c = -c;
  }
  return det;
}

LaurentPoly conway_rec(const Diagram& d, std::unordered_map<std::string, LaurentPoly>& memo) {
  const Diagram r = reduce_r1_r2(d);
  const std::string key = r.key();
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<bool> met(r.crossing_count(), false);
  int target = -1;
  for (const auto& comp : r.components()) {
    for (const Visit& v : comp) {
      if (met[v.crossing]) continue;
      met[v.crossing] = true;
      if (!v.over) {
        target = v.crossing;
        break;
      }
    }
    if (target >= 0) break;
  }
  LaurentPoly result;
  if (target < 0) {
    result = LaurentPoly(r.component_count() == 1 ? 1 : 0);
  } else {
    const int s = r.signs()[target];
    result = conway_rec(r.with_crossing_switched(target), memo);
    LaurentPoly smoothed = conway_rec(r.smoothed_at(target), memo) * LaurentPoly::monomial(1, 1);
    if (s > 0) {
      result += smoothed;
    } else {
      result -= smoothed;
    }
  }
  memo.emplace(key, result);
  return result;
}

std::string canonical_jones(const LaurentPoly& j) {
  const std::string a = j.to_string("t");
  const std::string b = j.substitute_power(-1).to_string("t");
  return std::min(a, b);
}

struct TableEntry {
  std::string name;
  LaurentPoly jones;
  std::string canonical;
  std::int64_t colorings = 0;
  std::int64_t det = 0;
};

const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> entries = [] {
    std::vector<TableEntry> out;
    for (const auto& k : knot_table()) {
      const Diagram d = k.pd.empty() ? Diagram::unknot() : Diagram::from_pd_text(k.pd);
      TableEntry e;
      e.name = k.name == "0_1" ? "unknot" : k.name;
      e.jones = jones(d);
      e.canonical = canonical_jones(e.jones);
      e.colorings = tricolorings(d);
      e.det = determinant(d);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

}  // namespace

const std::vector<TableKnot>& knot_table() {
  static const std::vector<TableKnot> table = [] {
    std::vector<TableKnot> out;
    std::istringstream in(kKnotTableData);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      TableKnot k;
      ls >> k.name;
      std::getline(ls, k.pd);
      k.pd.erase(0, k.pd.find_first_not_of(" \t"));
      out.push_back(std::move(k));
    }
    return out;
  }();
  return table;
}

std::int64_t tricolorings(const Diagram& d) {
  const ArcData a = arc_data(d);
  std::vector<std::vector<int>> rows;
  for (int c = 0; c < d.crossing_count(); ++c) {
    std::vector<int> row(a.arcs, 0);
    row[a.over_arc[c]] += 2;
    row[a.in_arc[c]] += 2;  // -1 = 2 mod 3
    row[a.out_arc[c]] += 2;
    for (int& x : row) x %= 3;
    rows.push_back(std::move(row));
  }
  const int nullity = a.arcs - rank_mod3(rows, a.arcs);
  std::int64_t count = 1;
  for (int i = 0; i < nullity; ++i) count *= 3;
  return count;
}

LaurentPoly kauffman_bracket(const Diagram& d, int cap) {
  const Diagram s = simplify(d);
  if (s.crossing_count() > cap) {
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(s.crossing_count()) + " crossings after simplification (cap " + std::to_string(cap) + ")");
  }
  // R1 moves change the bracket by -A^{+-3}; compensate through the writhe.
  LaurentPoly b = bracket_raw(s);
  const int dw = d.writhe() - s.writhe();
  if (dw != 0) {
    b *= LaurentPoly::monomial(dw % 2 == 0 ? 1 : -1, 3 * dw);
  }
  return b;
}

LaurentPoly bracket_state_sum(const Diagram& d, const std::map<int, Smoothing>& forced, int cap) {
  if (d.crossing_count() > cap) {
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(d.crossing_count()) + " crossings (cap " + std::to_string(cap) + ")");
  }
  for (const auto& [c, which] : forced) {
    if (c < 0 || c >= d.crossing_count()) throw Error(ErrorKind::InvalidArgument, "forced crossing out of range");
  }
  return bracket_raw(d, forced);
}

LaurentPoly jones(const Diagram& d, int cap) {
  const Diagram s = simplify(d);
  if (s.crossing_count() > cap) {
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(s.crossing_count()) + " crossings after simplification (cap " + std::to_string(cap) + ")");
  }
  const int w = s.writhe();
  LaurentPoly v = bracket_raw(s) * LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return v.substitute_power(-1, 4);
}

LaurentPoly conway(const Diagram& d, int cap) {
  const Diagram r = reduce_r1_r2(d);
  if (r.crossing_count() > cap) {
    const Diagram s = simplify(r);
    if (s.crossing_count() > cap) {
      throw Error(ErrorKind::TooManyCrossings,
                  std::to_string(s.crossing_count()) + " crossings after simplification (cap " + std::to_string(cap) + ")");
    }
    std::unordered_map<std::string, LaurentPoly> memo;
    return conway_rec(s, memo);
  }
  std::unordered_map<std::string, LaurentPoly> memo;
  return conway_rec(r, memo);
}

LaurentPoly alexander(const Diagram& d) {
  if (d.component_count() != 1) throw Error(ErrorKind::InvalidArgument, "Alexander polynomial needs a knot");
  const Diagram s = reduce_r1_r2(d);
  const int n = s.crossing_count();
  if (n == 0) return LaurentPoly(1);
  const ArcData a = arc_data(s);
  std::vector<std::vector<Dense>> m(n, std::vector<Dense>(a.arcs));
  auto add = [&](int r, int c, Dense p) {
    Dense& cell = m[r][c];
    if (cell.size() < p.size()) cell.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) cell[i] += p[i];
    trim(cell);
  };
  for (int c = 0; c < n; ++c) {
    add(c, a.over_arc[c], {1, -1});
    if (s.signs()[c] > 0) {
      add(c, a.in_arc[c], {0, 1});
      add(c, a.out_arc[c], {-1});
    } else {
      add(c, a.in_arc[c], {-1});
      add(c, a.out_arc[c], {0, 1});
    }
  }
  Dense det;
  for (int strike = n - 1; strike >= 0 && det.empty(); --strike) {
    std::vector<std::vector<Dense>> minor;
    for (int r = 0; r < n; ++r) {
      if (r == strike) continue;
      std::vector<Dense> row;
      for (int c = 0; c < a.arcs; ++c) {
        if (c != strike) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    det = bareiss_det(std::move(minor));
  }
  if (det.empty()) throw Error(ErrorKind::SingularPresentation, "all principal minors vanish");
  LaurentPoly p;
  for (std::size_t i = 0; i < det.size(); ++i) p += LaurentPoly::monomial(det[i], static_cast<int>(i));
  const Exponent lo = p.min_exponent(), hi = p.max_exponent();
  if ((lo.num + hi.num) % 2 != 0) throw Error(ErrorKind::InternalInconsistency, "Alexander polynomial not symmetrizable");
  p = p.shifted(-(lo.num + hi.num) / 2);
  if (p.at_one() < 0) p = -p;
  if (p.at_one() != 1) throw Error(ErrorKind::InternalInconsistency, "Alexander polynomial has |Delta(1)| != 1");
  return p;
}

std::int64_t determinant(const Diagram& d) { return std::llabs(alexander(d).at_minus_one()); }

LaurentPoly torus_jones(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorKind::InvalidArgument, "torus parameters must be positive");
  // numerator 1 - t^{p+1} - t^{q+1} + t^{p+q}, divided by 1 - t^2
  Dense num(p + q + 1, 0);
  num[0] += 1;
  num[p + 1] -= 1;
  num[q + 1] -= 1;
  num[p + q] += 1;
  Dense quot(num.size(), 0);
  for (std::size_t i = 0; i < num.size(); ++i) quot[i] = num[i] + (i >= 2 ? quot[i - 2] : 0);
  trim(quot);
  LaurentPoly out;
  const int shift = (p - 1) * (q - 1);  // in half steps
  for (std::size_t i = 0; i < quot.size(); ++i) out += LaurentPoly::monomial(quot[i], 2 * static_cast<int>(i) + shift, 2);
  return out;
}

LaurentPoly conway_to_alexander(const LaurentPoly& conway_poly) {
  if (conway_poly.unit() != 1) throw Error(ErrorKind::InvalidArgument, "Conway polynomial must have integer exponents");
  const LaurentPoly z = LaurentPoly::monomial(1, 1, 2) - LaurentPoly::monomial(1, -1, 2);
  LaurentPoly out;
  for (const auto& [e, c] : conway_poly.terms()) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "Conway polynomial has negative powers");
    out += LaurentPoly(c) * z.pow(static_cast<unsigned>(e));
  }
  return out;
}

KnotId identify(const Diagram& d) {
  KnotId id;
  if (d.component_count() != 1) {
    id.name = "link(" + std::to_string(d.component_count()) + ")";
    return id;
  }
  LaurentPoly j;
  try {
    j = jones(d);
  } catch (const Error&) {
    id.name = "unidentified";
    return id;
  }
  const std::string canon = canonical_jones(j);
  const std::int64_t col = tricolorings(d);
  const std::int64_t det = determinant(d);

  std::vector<const TableEntry*> hits;
  for (const auto& e : table_entries()) {
    if (e.canonical == canon && e.colorings == col && e.det == det) hits.push_back(&e);
  }
  std::vector<std::string> torus;
  std::string torus_chirality;
  const int span_half = static_cast<int>(2 * j.span().value() + 0.5);
  for (int p = 2; p <= 12; ++p) {
    for (int q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if ((p - 1) * (q - 1) > 2 * span_half + 4) continue;
      const LaurentPoly tj = torus_jones(p, q);
      if (canonical_jones(tj) != canon) continue;
      torus.push_back("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
      torus_chirality = tj == j ? "positive" : "mirror";
    }
  }
  if (hits.size() == 1) {
    const TableEntry& e = *hits.front();
    id.name = e.name;
    if (e.jones == e.jones.substitute_power(-1)) {
      id.chirality = "amphichiral";
    } else {
      id.chirality = e.jones == j ? "tabulated" : "mirror";
    }
    id.aliases = torus;
  } else if (hits.empty() && torus.size() == 1) {
    id.name = torus.front();
    id.chirality = torus_chirality;
  } else {
    id.name = "unidentified";
    for (const auto* h : hits) id.aliases.push_back(h->name);
    id.aliases.insert(id.aliases.end(), torus.begin(), torus.end());
  }
  return id;
}

}  // namespace glued
