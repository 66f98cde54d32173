#pragma once

#include <string>

#include "wedge/geometry.hpp"

namespace wedge {

struct SvgOptions {
  /// Fill the triangles with a two-color checker cycled over the canonical
  /// enumeration order.
  bool shade = false;
};

/// Deterministic SVG 1.1: viewBox "0 0 side side" in user units, y axis
/// flipped so the origin corner renders bottom-left. Every coordinate goes
/// through approx_decimal with 6 fractional digits; identical figures give
/// byte-identical output.
std::string render_svg(const Figure& fig, const SvgOptions& options = {});

}  // namespace wedge
