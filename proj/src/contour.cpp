#include "lucaslab/contour.hpp"

#include <cmath>
#include <numbers>

namespace lucaslab {

ContourPiece ContourPiece::segment(Complex a, Complex b)
{
	ContourPiece c;
	c.kind = Kind::Segment;
	c.start = a;
	c.end = b;
	return c;
}

ContourPiece ContourPiece::arc(Complex center, double radius, double theta0, double theta1)
{
	ContourPiece c;
	c.kind = Kind::Arc;
	c.center = center;
	c.radius = radius;
	c.theta0 = theta0;
	c.theta1 = theta1;
	c.start = center + std::polar(radius, theta0);
	c.end = center + std::polar(radius, theta1);
	return c;
}

double ContourPiece::length() const
{
	if (kind == Kind::Segment)
		return std::abs(end - start);
	return radius * (theta1 - theta0);
}

Complex ContourPiece::point(double t) const
{
	if (kind == Kind::Segment)
		return start + t * (end - start);
	return center + std::polar(radius, theta0 + t * (theta1 - theta0));
}

Complex ContourPiece::velocity(double t) const
{
	if (kind == Kind::Segment)
		return end - start;
	double dtheta = theta1 - theta0;
	return Complex{0.0, dtheta} * std::polar(radius, theta0 + t * dtheta);
}

std::vector<ContourPiece> eps_contour(const ConvexDomain& d, double eps)
{
	std::vector<ContourPiece> out;
	if (d.is_disk())
	{
		const auto& disk = d.as_disk();
		out.push_back(ContourPiece::arc(disk.center, disk.radius + eps, 0.0,
		                                2.0 * std::numbers::pi));
		return out;
	}
	const auto& v = d.as_polygon().vertices;
	const size_t n = v.size();
	auto outward = [&](size_t i) {
		Complex e = v[(i + 1) % n] - v[i];
		e /= std::abs(e);
		return Complex{e.imag(), -e.real()};
	};
	for (size_t i = 0; i < n; ++i)
	{
		Complex a = v[i], b = v[(i + 1) % n];
		if (eps > 0.0)
		{
			// corner arc at v[i] from the previous edge normal to this one
			Complex n_prev = outward((i + n - 1) % n), n_cur = outward(i);
			double t0 = std::arg(n_prev);
			double turn = std::arg(n_cur / n_prev); // >= 0 up to collinear slack
			double t1 = t0 + turn;
			if (turn > 0.0)
				out.push_back(ContourPiece::arc(a, eps, t0, t1));
			Complex shift = eps * n_cur;
			out.push_back(ContourPiece::segment(a + shift, b + shift));
		}
		else
		{
			out.push_back(ContourPiece::segment(a, b));
		}
	}
	return out;
}

std::vector<Complex> sample_contour(const std::vector<ContourPiece>& contour, double step)
{
	std::vector<Complex> pts;
	for (const auto& piece : contour)
	{
		int m = std::max(1, static_cast<int>(std::ceil(piece.length() / step)));
		for (int k = 0; k <= m; ++k)
			pts.push_back(piece.point(static_cast<double>(k) / m));
	}
	return pts;
}

} // namespace lucaslab
