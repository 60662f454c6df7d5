#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "glued/config.hpp"

namespace glued {

enum class Family { MaxWrithe, ThreeColor, LowCrossing, ConnectSumTrefoils };

std::string_view family_name(Family f);
/// Throws InvalidArgument for unknown names.
Family parse_family(std::string_view name);
/// Smallest admissible parameter.
int family_min_param(Family f);

/// m round circles with pairwise linking +1, pulled into a path of single
/// point contacts. Writhe (m-1)^2, knot type T(m, m-1).
PregluedConfig gen_max_writhe(int m);
/// k+2 ellipses on a path tree with 3^k tricolorings.
PregluedConfig gen_three_color(int k);
/// Degree 2n configuration whose diagram simplifies to a reduced alternating
/// diagram with 2n-2 crossings. n = 3 is the figure-eight knot.
PregluedConfig gen_low_crossing(int n);
/// k trefoil blocks, consecutive blocks touching at a single point.
PregluedConfig gen_connect_sum_trefoils(int k);

PregluedConfig generate(Family f, int param);

/// Acceptance test used by the search for three_color and low_crossing.
bool family_target_met(Family f, int param, const PregluedConfig& cfg);

/// Beam search that grows `start` (parameter `start_param`) one ellipse at a
/// time up to `max_param`, calling `found` for each level reached. Returns the
/// last parameter reached. Only ThreeColor and LowCrossing are searchable.
struct SearchOptions {
  int beam_width = 12;
  long attempts_per_level = 400000;
  std::uint64_t seed = 1;
};
int search_family(Family f, std::vector<PregluedConfig> start, int start_param, int max_param,
                  const SearchOptions& opts,
                  const std::function<void(int, const PregluedConfig&)>& found);
/// Initial beam for a search from scratch: random configurations of the
/// family's base size meeting its base target.
std::vector<PregluedConfig> search_seed_beam(Family f, const SearchOptions& opts);

/// Configurations shipped with the library (family results and witnesses).
std::vector<std::string> bundled_config_names();
/// Throws InvalidArgument for unknown names.
PregluedConfig bundled_config(std::string_view name);

}  // namespace glued
