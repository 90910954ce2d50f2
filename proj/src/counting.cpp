#include "lucaslab/counting.hpp"

#include "lucaslab/contour.hpp"
#include "lucaslab/error.hpp"
#include "lucaslab/quadrature.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace lucaslab {

namespace {

constexpr double kRoundingGuard = 1e-3;
constexpr double kClearance = 1e-6;

class LogDerivativeIntegrator
{
  public:
	explicit LogDerivativeIntegrator(const Polynomial& p)
	    : p_(p), deg_(p.degree()), rule_(gauss_legendre(8))
	{}

	Complex piece(const ContourPiece& c, int nodes_per_unit) const
	{
		int panels = std::max(
		    1, static_cast<int>(std::ceil(c.length() * nodes_per_unit / rule_.nodes.size())));
		Complex total{};
		for (int k = 0; k < panels; ++k)
		{
			double a = static_cast<double>(k) / panels, b = static_cast<double>(k + 1) / panels;
			total += adaptive(c, a, b, panel(c, a, b), 0);
		}
		return total;
	}

  private:
	Complex integrand(const ContourPiece& c, double t) const
	{
		Complex z = c.point(t);
		Complex ld = log_derivative(p_, z);
		// a zero lies within deg * |p/p'| of z
		if (!std::isfinite(ld.real()) || !std::isfinite(ld.imag()) ||
		    deg_ / std::abs(ld) < kClearance)
			throw Error(ErrorKind::ContourTooClose,
			            fmt::format("zero of p within {} of the contour near ({}, {})",
			                        kClearance, z.real(), z.imag()));
		return ld * c.velocity(t);
	}

	Complex panel(const ContourPiece& c, double a, double b) const
	{
		Complex s{};
		for (size_t i = 0; i < rule_.nodes.size(); ++i)
			s += rule_.weights[i] * integrand(c, a + (b - a) * rule_.nodes[i]);
		return s * (b - a);
	}

	Complex adaptive(const ContourPiece& c, double a, double b, Complex whole, int depth) const
	{
		double m = 0.5 * (a + b);
		Complex left = panel(c, a, m), right = panel(c, m, b);
		Complex halves = left + right;
		if (std::abs(halves - whole) <= 1e-10 || depth >= 40)
			return halves;
		return adaptive(c, a, m, left, depth + 1) + adaptive(c, m, b, right, depth + 1);
	}

	const Polynomial& p_;
	int deg_;
	QuadratureRule rule_;
};

WindingResult winding(const Polynomial& p, const std::vector<ContourPiece>& contour,
                      int nodes_per_unit)
{
	LogDerivativeIntegrator integrator(p);
	Complex integral{};
	for (const auto& piece : contour)
		integral += integrator.piece(piece, nodes_per_unit);
	WindingResult w;
	w.raw = integral / Complex{0.0, 2.0 * std::numbers::pi};
	w.count = static_cast<int>(std::lround(w.raw.real()));
	w.residual = std::abs(w.raw - static_cast<double>(w.count));
	w.nodes_per_unit = nodes_per_unit;
	return w;
}

} // namespace

CountResult count_in(std::span<const Complex> points, const ConvexDomain& domain, double eps)
{
	if (eps < 0.0)
		throw Error(ErrorKind::InvalidInput, "count_in: eps must be >= 0");
	CountResult r;
	for (auto z : points)
	{
		if (eps > 0.0)
		{
			if (in_eps_neighborhood(domain, z, eps))
				++r.count;
			if (std::abs(distance_to(domain, z) - eps) < kGrazingTol)
				++r.grazing;
		}
		else
		{
			if (contains(domain, z, 0.0))
				++r.count;
			if (std::abs(signed_distance(domain, z)) < kGrazingTol)
				++r.grazing;
		}
	}
	return r;
}

WindingResult argument_principle(const Polynomial& p, const ConvexDomain& domain, double eps,
                                 int nodes_per_unit)
{
	if (p.is_zero())
		throw Error(ErrorKind::InvalidInput, "argument_principle: zero polynomial");
	if (eps < 0.0 || nodes_per_unit < 1)
		throw Error(ErrorKind::InvalidInput,
		            "argument_principle: need eps >= 0 and nodes_per_unit >= 1");
	if (p.degree() == 0)
		return {0, {}, 0.0, nodes_per_unit};

	const auto contour = eps_contour(domain, eps);
	WindingResult w = winding(p, contour, nodes_per_unit);
	if (w.residual > kRoundingGuard)
		w = winding(p, contour, 4 * nodes_per_unit);
	if (w.residual > kRoundingGuard)
		throw Error(ErrorKind::NonIntegerWinding,
		            fmt::format("winding number {}+{}i is {} from an integer", w.raw.real(),
		                        w.raw.imag(), w.residual));
	return w;
}

RatioReport ratio_report(std::span<const Complex> p_roots, std::span<const Complex> dp_roots,
                         const ConvexDomain& domain, double eps, int n)
{
	if (p_roots.size() < 2 || dp_roots.size() + 1 != p_roots.size())
		throw Error(ErrorKind::InvalidInput,
		            fmt::format("ratio_report: {} roots and {} derivative roots", p_roots.size(),
		                        dp_roots.size()));
	if (!(eps > 0.0))
		throw Error(ErrorKind::InvalidInput, "ratio_report: eps must be positive");

	auto p_in = count_in(p_roots, domain, 0.0);
	auto dp_in = count_in(dp_roots, domain, 0.0);
	auto dp_eps = count_in(dp_roots, domain, eps);

	RatioReport r;
	r.n = n;
	r.m_n = static_cast<int>(p_roots.size());
	r.count_p_in_domain = p_in.count;
	r.count_dp_in_domain = dp_in.count;
	r.count_dp_in_eps = dp_eps.count;
	const double denom = r.m_n - 1;
	r.ratio_problem = r.count_dp_in_domain / denom;
	r.ratio_theorem = r.count_dp_in_eps / denom;
	r.boundary_grazing = p_in.grazing + dp_in.grazing + dp_eps.grazing;
	return r;
}

bool gauss_lucas_check(std::span<const Complex> p_roots, std::span<const Complex> dp_roots,
                       double tol)
{
	const HullResult hull = convex_hull(p_roots);
	for (auto w : dp_roots)
		if (!hull_contains(hull, w, tol))
			return false;
	return true;
}

int hurwitz_deficit(const RatioReport& report, int k_n)
{
	return std::max(0, (k_n - 1) - report.count_dp_in_eps);
}

} // namespace lucaslab
