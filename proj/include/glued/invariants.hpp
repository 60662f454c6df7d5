#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glued/diagram.hpp"
#include "glued/laurent.hpp"

namespace glued {

inline constexpr int kBracketCrossingCap = 24;
inline constexpr int kConwayCrossingCap = 20;

/// Number of Fox 3-colorings, constant colorings included.
std::int64_t tricolorings(const Diagram& d);

/// Kauffman bracket in A, normalized so the crossingless circle is 1.
/// Throws TooManyCrossings when the simplified diagram exceeds `cap`.
LaurentPoly kauffman_bracket(const Diagram& d, int cap = kBracketCrossingCap);

enum class Smoothing { A = 0, B = 1 };

inline constexpr int kStateSumCrossingCap = 48;

/// Bracket state sum of d exactly as drawn (no simplification), with the
/// crossings in `forced` restricted to one smoothing. With nothing forced this
/// equals kauffman_bracket(d).
LaurentPoly bracket_state_sum(const Diagram& d, const std::map<int, Smoothing>& forced = {},
                              int cap = kStateSumCrossingCap);

/// Jones polynomial in t (half-integer exponents for even-component links).
LaurentPoly jones(const Diagram& d, int cap = kBracketCrossingCap);

/// Conway polynomial in z by a resolving tree.
LaurentPoly conway(const Diagram& d, int cap = kConwayCrossingCap);

/// Symmetric Alexander polynomial with Delta(1) = 1 (knots only).
LaurentPoly alexander(const Diagram& d);

/// |Delta(-1)|.
std::int64_t determinant(const Diagram& d);

/// Jones polynomial of the torus knot T(p, q), closed form.
LaurentPoly torus_jones(int p, int q);

/// z -> t^{1/2} - t^{-1/2}.
LaurentPoly conway_to_alexander(const LaurentPoly& conway_poly);

struct KnotId {
  std::string name;       // "unknot", "3_1", "T(5,4)", "unidentified", ...
  std::string chirality;  // "tabulated", "mirror", "amphichiral" or empty
  std::vector<std::string> aliases;
  bool is_unknot() const { return name == "unknot"; }
};

/// Fingerprint lookup against the bundled table and the torus closed form.
KnotId identify(const Diagram& d);

/// Names and PD codes of the bundled table.
struct TableKnot {
  std::string name;
  std::string pd;
};
const std::vector<TableKnot>& knot_table();

}  // namespace glued
