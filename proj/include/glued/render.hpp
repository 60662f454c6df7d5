#pragma once

#include <string>

#include "glued/config.hpp"
#include "glued/project.hpp"

namespace glued {

/// SVG drawing of the smoothed configuration's diagram under `spec`, with
/// gaps in the under-strand at each crossing. Throws NonGenericProjection.
std::string render_svg(const PregluedConfig& cfg, const ProjectionSpec& spec);

}  // namespace glued
