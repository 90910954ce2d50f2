#pragma once

#include "lucaslab/geometry.hpp"

#include <vector>

namespace lucaslab {

/// A straight segment or a circular arc, parameterized by t in [0, 1].
struct ContourPiece
{
	enum class Kind { Segment, Arc };

	Kind kind = Kind::Segment;
	Complex start, end;        // segment endpoints
	Complex center;            // arc
	double radius = 0.0;       // arc
	double theta0 = 0.0;       // arc start angle
	double theta1 = 0.0;       // arc end angle (theta1 >= theta0, ccw)

	static ContourPiece segment(Complex a, Complex b);
	static ContourPiece arc(Complex center, double radius, double theta0, double theta1);

	double length() const;
	Complex point(double t) const;
	/// dz/dt
	Complex velocity(double t) const;
};

/**
 * Counterclockwise boundary of the eps-neighborhood of d: the circle of
 * radius r + eps for a disk; for a polygon, the edges pushed out by eps
 * joined by circular corner arcs (the level set {distance_to = eps}).
 * eps = 0 gives the boundary of d itself.
 */
std::vector<ContourPiece> eps_contour(const ConvexDomain& d, double eps);

/// Points along the contour, at most `step` apart in arclength, each piece
/// sampled including both endpoints.
std::vector<Complex> sample_contour(const std::vector<ContourPiece>& contour, double step);

} // namespace lucaslab
