#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glued {

/// One passage of a strand through a crossing.
struct Visit {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Visit&, const Visit&) = default;
};

/// PD tuple: edge labels counterclockwise starting at the incoming under-strand.
using PdCrossing = std::array<int, 4>;

/// A corner of a face: the wedge at `crossing` between PD slots `slot` and
/// `slot + 1` (counterclockwise).
struct Corner {
  int crossing = 0;
  int slot = 0;
};

/// Oriented planar knot or link diagram stored as a signed Gauss code: one
/// cyclic visit sequence per component plus a sign per crossing. The signed
/// Gauss code determines the diagram on the 2-sphere, which is all the
/// invariants need. Components without crossings are empty sequences.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<int> signs, std::vector<std::vector<Visit>> components,
          std::vector<std::pair<int, int>> sources = {});

  static Diagram unknot() { return Diagram({}, {{}}); }
  /// Builds a diagram from PD tuples; orientation is recovered from the
  /// under-strand convention and propagated along over-strands.
  static Diagram from_pd(const std::vector<PdCrossing>& pd);
  static Diagram from_pd_text(std::string_view text);

  int crossing_count() const { return static_cast<int>(signs_.size()); }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<int>& signs() const { return signs_; }
  const std::vector<std::vector<Visit>>& components() const { return components_; }
  /// Ellipse index pair each crossing came from; empty when unknown.
  const std::vector<std::pair<int, int>>& sources() const { return sources_; }

  int writhe() const;
  std::vector<PdCrossing> pd_code() const;
  /// `X(a,b,c,d),X(...)`
  std::string pd_text() const;
  /// `O1+ U2- ...`, components separated by ` | `.
  std::string gauss_text() const;
  /// Compact structural key (used for memoization).
  std::string key() const;

  Diagram mirror() const;
  Diagram with_crossing_switched(int crossing) const;
  /// Orientation-respecting smoothing of one crossing.
  Diagram smoothed_at(int crossing) const;
  /// Smooths several crossings, indices referring to this diagram.
  Diagram smoothed_at(const std::vector<int>& crossings) const;
  /// Removes the listed crossings (their visits vanish) and renumbers.
  Diagram without_crossings(const std::vector<int>& crossings) const;
  /// Applies an R3 move on a triangular face given by its three PD edge labels.
  Diagram with_triangle_moved(const std::array<int, 3>& edge_labels) const;

  /// Component and position of the visit an edge label leaves from.
  std::pair<int, int> edge_origin(int label) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.signs_ == b.signs_ && a.components_ == b.components_;
  }

 private:
  void check() const;
  Diagram smoothed_unnumbered(int crossing) const;
  Diagram renumbered() const;

  std::vector<int> signs_;
  std::vector<std::vector<Visit>> components_;
  std::vector<std::pair<int, int>> sources_;
};

/// Signed Gauss code of a knot diagram, independent of crossing numbering and
/// of the traversal start. Equal strings mean identical diagrams.
std::string canonical_knot_code(const Diagram& d);

/// Faces of the planar diagram as corner cycles (one list per face).
std::vector<std::vector<Corner>> faces(const Diagram& d);

int writhe(const Diagram& d);
bool is_alternating(const Diagram& d);
/// True when no crossing is nugatory.
bool is_reduced(const Diagram& d);

/// No simple closed curve meets the diagram in two points unless it encloses
/// a plain arc: no two faces share more than one edge and no face borders
/// itself. Connected diagrams only.
bool is_prime_diagram(const Diagram& d);

/// Greedy crossing-reducing Reidemeister I/II moves with a bounded search over
/// Reidemeister III variants to unlock further reductions. Never increases the
/// crossing count.
Diagram simplify(const Diagram& d, int max_iters = 10000);

/// Only the crossing-removing moves (R1, R2) until none applies. Keeps the
/// component order and the traversal start of every surviving visit.
Diagram reduce_r1_r2(const Diagram& d);

/// Number of R3 variants examined per stuck state.
inline constexpr int kR3SearchBreadth = 64;

}  // namespace glued
