#pragma once

#include "lucaslab/poly.hpp"

#include <span>
#include <variant>
#include <vector>

namespace lucaslab {

struct Disk
{
	Complex center;
	double radius = 1.0;
};

/// Convex polygon, vertices counterclockwise.
struct ConvexPolygon
{
	std::vector<Complex> vertices;
};

/**
 * Bounded convex domain with nonempty interior. Construct through the
 * factories, which validate the invariants (polygon orientation and
 * convexity with 1e-12 slack for collinear vertices).
 */
class ConvexDomain
{
  public:
	using Shape = std::variant<Disk, ConvexPolygon>;

	static ConvexDomain disk(Complex center, double radius);
	static ConvexDomain polygon(std::vector<Complex> vertices);
	/// Open axis-aligned rectangle (x0, x1) x (y0, y1).
	static ConvexDomain rectangle(double x0, double x1, double y0, double y1);
	static ConvexDomain unit_disk() { return disk(0.0, 1.0); }

	const Shape& shape() const noexcept { return shape_; }
	bool is_disk() const noexcept { return std::holds_alternative<Disk>(shape_); }
	const Disk& as_disk() const { return std::get<Disk>(shape_); }
	const ConvexPolygon& as_polygon() const { return std::get<ConvexPolygon>(shape_); }

	/// Axis-aligned bounding box: {min corner, max corner}.
	std::pair<Complex, Complex> bounding_box() const;
	/// Boundary length.
	double perimeter() const;

  private:
	explicit ConvexDomain(Shape s) : shape_(std::move(s)) {}
	Shape shape_;
};

/// Negative inside, zero on the boundary, positive outside.
double signed_distance(const ConvexDomain& d, Complex z);

/**
 * Open-domain membership: true iff the signed distance of z is
 * < -boundary_tol, so boundary_tol > 0 shrinks the domain.
 * With boundary_tol = 0 boundary points are outside.
 */
bool contains(const ConvexDomain& d, Complex z, double boundary_tol = 0.0);

/// Euclidean distance from z to the closure of d.
double distance_to(const ConvexDomain& d, Complex z);

/// Membership in the open eps-neighborhood: distance_to(d, z) < eps.
bool in_eps_neighborhood(const ConvexDomain& d, Complex z, double eps);

struct HullResult
{
	/// Counterclockwise, collinear points dropped. One vertex for a point
	/// hull, two for a segment.
	std::vector<Complex> vertices;
};

HullResult convex_hull(std::span<const Complex> points);

/// True iff z is within distance tol of the closed hull.
bool hull_contains(const HullResult& h, Complex z, double tol);

/// Distance from z to segment [a, b].
double segment_distance(Complex a, Complex b, Complex z);

} // namespace lucaslab
