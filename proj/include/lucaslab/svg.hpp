#pragma once

#include "lucaslab/geometry.hpp"
#include "lucaslab/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lucaslab {

inline constexpr double kLargeDotRadius = 3.0;
inline constexpr double kSmallDotRadius = 1.5;

/// Zeros of a polynomial (large dots) and of its derivative (small dots).
struct ScatterPlot
{
	std::string title;
	std::vector<Complex> large;
	std::vector<Complex> small;
	std::optional<ConvexDomain> outline;
};

/**
 * Renders a 640x640 SVG. The viewport is the bounding box of the points and
 * the outline, padded and rounded outward to integers, with equal scales on
 * both axes. Large dots carry class "zero-p", small dots class "zero-dp";
 * every dot records its exact coordinates in a data-z attribute.
 */
std::string render_svg(const ScatterPlot& plot);

} // namespace lucaslab
