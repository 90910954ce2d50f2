#include "lucaslab/geometry.hpp"

#include "lucaslab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lucaslab {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Signed distance to a convex ccw polygon (vertices.size() >= 3).
double polygon_signed_distance(const std::vector<Complex>& v, Complex z)
{
	const size_t n = v.size();
	bool inside = true;
	double inner = std::numeric_limits<double>::infinity();
	double outer = std::numeric_limits<double>::infinity();
	for (size_t i = 0; i < n; ++i)
	{
		Complex a = v[i], b = v[(i + 1) % n];
		Complex e = b - a;
		double len = std::abs(e);
		// distance to the edge's supporting line, positive on the left
		double side = cross(e, z - a) / len;
		if (!(side > 0.0))
			inside = false;
		inner = std::min(inner, side);
		outer = std::min(outer, segment_distance(a, b, z));
	}
	return inside ? -inner : outer;
}

} // namespace

ConvexDomain ConvexDomain::disk(Complex center, double radius)
{
	if (!finite(center) || !std::isfinite(radius) || !(radius > 0.0))
		throw Error(ErrorKind::InvalidInput, "disk: radius must be positive and finite");
	return ConvexDomain(Disk{center, radius});
}

ConvexDomain ConvexDomain::polygon(std::vector<Complex> vertices)
{
	const size_t n = vertices.size();
	if (n < 3)
		throw Error(ErrorKind::InvalidInput, "polygon: need at least 3 vertices");
	double area2 = 0.0;
	for (size_t i = 0; i < n; ++i)
	{
		if (!finite(vertices[i]))
			throw Error(ErrorKind::InvalidInput, "polygon: non-finite vertex");
		Complex a = vertices[i], b = vertices[(i + 1) % n], c = vertices[(i + 2) % n];
		if (a == b)
			throw Error(ErrorKind::InvalidInput, "polygon: repeated vertex");
		double turn = cross(b - a, c - b) / (std::abs(b - a) * std::abs(c - b));
		if (turn < -1e-12)
			throw Error(ErrorKind::InvalidInput,
			            "polygon: vertices must be counterclockwise and convex");
		area2 += cross(a, b);
	}
	if (!(area2 > 0.0))
		throw Error(ErrorKind::InvalidInput, "polygon: empty interior or clockwise order");
	return ConvexDomain(ConvexPolygon{std::move(vertices)});
}

ConvexDomain ConvexDomain::rectangle(double x0, double x1, double y0, double y1)
{
	return polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

std::pair<Complex, Complex> ConvexDomain::bounding_box() const
{
	if (is_disk())
	{
		const auto& d = as_disk();
		Complex r{d.radius, d.radius};
		return {d.center - r, d.center + r};
	}
	const auto& v = as_polygon().vertices;
	double x0 = v[0].real(), x1 = x0, y0 = v[0].imag(), y1 = y0;
	for (auto p : v)
	{
		x0 = std::min(x0, p.real());
		x1 = std::max(x1, p.real());
		y0 = std::min(y0, p.imag());
		y1 = std::max(y1, p.imag());
	}
	return {{x0, y0}, {x1, y1}};
}

double ConvexDomain::perimeter() const
{
	if (is_disk())
		return 2.0 * std::numbers::pi * as_disk().radius;
	const auto& v = as_polygon().vertices;
	double len = 0.0;
	for (size_t i = 0; i < v.size(); ++i)
		len += std::abs(v[(i + 1) % v.size()] - v[i]);
	return len;
}

double segment_distance(Complex a, Complex b, Complex z)
{
	Complex e = b - a;
	double len2 = std::norm(e);
	if (len2 == 0.0)
		return std::abs(z - a);
	double t = std::clamp(((z - a) * std::conj(e)).real() / len2, 0.0, 1.0);
	return std::abs(z - (a + t * e));
}

double signed_distance(const ConvexDomain& d, Complex z)
{
	if (d.is_disk())
	{
		const auto& disk = d.as_disk();
		return std::abs(z - disk.center) - disk.radius;
	}
	return polygon_signed_distance(d.as_polygon().vertices, z);
}

bool contains(const ConvexDomain& d, Complex z, double boundary_tol)
{
	if (d.is_disk())
	{
		const auto& disk = d.as_disk();
		return std::abs(z - disk.center) - disk.radius < -boundary_tol;
	}
	return signed_distance(d, z) < -boundary_tol;
}

double distance_to(const ConvexDomain& d, Complex z)
{
	return std::max(0.0, signed_distance(d, z));
}

bool in_eps_neighborhood(const ConvexDomain& d, Complex z, double eps)
{
	if (d.is_disk())
	{
		// same expression as contains() on the disk of radius r + eps
		const auto& disk = d.as_disk();
		return std::abs(z - disk.center) - (disk.radius + eps) < 0.0;
	}
	return distance_to(d, z) < eps;
}

HullResult convex_hull(std::span<const Complex> points)
{
	std::vector<Complex> p(points.begin(), points.end());
	std::sort(p.begin(), p.end(), [](Complex a, Complex b) {
		return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
	});
	p.erase(std::unique(p.begin(), p.end()), p.end());
	if (p.size() <= 2)
		return {p};

	// Andrew's monotone chain; strict turns only, so collinear points drop out
	std::vector<Complex> h(2 * p.size());
	size_t k = 0;
	for (size_t i = 0; i < p.size(); ++i)
	{
		while (k >= 2 && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0.0)
			--k;
		h[k++] = p[i];
	}
	for (size_t i = p.size() - 1, t = k + 1; i-- > 0;)
	{
		while (k >= t && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0.0)
			--k;
		h[k++] = p[i];
	}
	h.resize(k - 1);
	return {h};
}

bool hull_contains(const HullResult& h, Complex z, double tol)
{
	const auto& v = h.vertices;
	if (v.empty())
		return false;
	if (v.size() == 1)
		return std::abs(z - v[0]) <= tol;
	if (v.size() == 2)
		return segment_distance(v[0], v[1], z) <= tol;
	return polygon_signed_distance(v, z) <= tol;
}

} // namespace lucaslab
