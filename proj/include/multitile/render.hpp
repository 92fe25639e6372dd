#pragma once

// SVG pictures of translate families, faces shaded by covering number.

#include <optional>
#include <string>

#include "multitile/oracle.hpp"

namespace multitile {

// The window drawn when none is requested: the verification region padded by
// the polygon's extent.
Box default_render_window(const Polygon& polygon, const TranslateSet& lambda);

// Deterministic SVG. Throws WindowError for an empty window, or when the
// window reaches outside an explicit translate set's window.
std::string render_svg(const Polygon& polygon, const TranslateSet& lambda, const Box& window);

}  // namespace multitile
