#pragma once

#include <cstdint>
#include <vector>

#include "glued/config.hpp"
#include "glued/diagram.hpp"
#include "glued/laurent.hpp"
#include "glued/project.hpp"
#include "glued/report.hpp"

namespace glued {

/// One perturbation of the glued knot: the rigid link G_s and its polynomial.
struct SkeinBranch {
  SignAssignment signs;
  Diagram diagram;
  LaurentPoly value;
  int negatives = 0;  // n_-(s)
};

struct SkeinExpansion {
  PregluedConfig base;
  Diagram knot;                       // projection of the glued knot K
  std::vector<SkeinBranch> branches;  // 2^{m-1} entries, sign vectors in binary order
  std::vector<int> glue_crossings;    // glue crossing index per edge (shared by all branches)
  LaurentPoly lhs;                    // z^{m-1} conway(K)
  LaurentPoly rhs;                    // signed sum over branches
};

inline constexpr int kSkeinMaxEllipses = 5;

/// All sign assignments of the glue edges, in binary order (+ before -).
std::vector<SignAssignment> all_sign_assignments(const PregluedConfig& cfg);

/// Direction for which K and every perturbation G_s project generically.
/// Throws MaxRetriesExceeded.
ProjectionSpec common_generic_spec(const PregluedConfig& cfg, std::uint64_t seed);

/// Projects every G_s with `spec` and evaluates the Conway expansion by the
/// recursive skein relation at the glue crossings.
SkeinExpansion conway_expansion(const PregluedConfig& cfg, const ProjectionSpec& spec);

/// z^{m-1} conway(K) = sum_s (-1)^{n_-(s)} conway(G_s), plus the diagram-diff
/// and per-node skein relation checks.
VerifyReport check_conway_expansion(const PregluedConfig& cfg, const ProjectionSpec& spec);

/// Bracket identity for the orientation assignment `sigma` (one +-1 per
/// ellipse; empty keeps the configuration's orientations): the state sum of
/// G with glue crossings forced to their orientation-compatible smoothing
/// equals A^{n_+ - n_-} <K>, and summing all forced smoothings recovers <G>.
VerifyReport check_bracket_expansion(const PregluedConfig& cfg, const std::vector<int>& sigma,
                                     const ProjectionSpec& spec);

/// Degree statistics over sampled glued knots of m ellipses and all their
/// perturbations.
VerifyReport degree_bound_report(int m, int samples, std::uint64_t seed);

}  // namespace glued
