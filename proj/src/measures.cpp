#include "lucaslab/measures.hpp"

#include "lucaslab/contour.hpp"
#include "lucaslab/error.hpp"
#include "lucaslab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

namespace lucaslab {

namespace {

constexpr double kPi = std::numbers::pi;

/// |mu_hat(z)|^p; infinite exactly on an atom.
double transform_power(const AtomicMeasure& mu, Complex z, double p)
{
	Complex s{};
	for (const auto& a : mu.atoms)
		s += a.weight / (z - a.point);
	return std::pow(std::abs(s), p);
}

/// Integral of |mu_hat|^p dx dy over the square [x0, x0+h] x [y0, y0+h] in
/// polar coordinates about `pole`, which lies in the closed square.
double polar_cell_integral(const AtomicMeasure& mu, Complex pole, double x0, double y0,
                           double h, double p)
{
	static const QuadratureRule rule = gauss_legendre(16);
	const std::array<Complex, 4> corners{Complex{x0, y0}, Complex{x0 + h, y0},
	                                     Complex{x0 + h, y0 + h}, Complex{x0, y0 + h}};

	// angular sectors split at the corner directions; in each sector the ray
	// leaves the square through a single edge
	std::vector<double> cuts;
	for (auto c : corners)
		if (c != pole)
			cuts.push_back(std::arg(c - pole));
	std::sort(cuts.begin(), cuts.end());
	cuts.push_back(cuts.front() + 2.0 * kPi);

	auto exit_radius = [&](double theta) {
		Complex dir = std::polar(1.0, theta);
		double best = std::numeric_limits<double>::infinity();
		// t == 0: the pole sits on that edge and the ray points outward
		auto consider = [&](double t) { best = std::min(best, std::max(t, 0.0)); };
		if (dir.real() > 0.0)
			consider((x0 + h - pole.real()) / dir.real());
		if (dir.real() < 0.0)
			consider((x0 - pole.real()) / dir.real());
		if (dir.imag() > 0.0)
			consider((y0 + h - pole.imag()) / dir.imag());
		if (dir.imag() < 0.0)
			consider((y0 - pole.imag()) / dir.imag());
		return std::isfinite(best) ? best : 0.0;
	};

	double total = 0.0;
	for (size_t s = 0; s + 1 < cuts.size(); ++s)
	{
		double a = cuts[s], b = cuts[s + 1];
		if (b - a <= 0.0)
			continue;
		for (size_t i = 0; i < rule.nodes.size(); ++i)
		{
			double theta = a + (b - a) * rule.nodes[i];
			double rmax = exit_radius(theta);
			if (rmax <= 0.0)
				continue;
			Complex dir = std::polar(1.0, theta);
			// rho = rmax t^2: rho drho = 2 rmax^2 t^3 dt
			double radial = 0.0;
			for (size_t j = 0; j < rule.nodes.size(); ++j)
			{
				double t = rule.nodes[j];
				double rho = rmax * t * t;
				radial += rule.weights[j] * transform_power(mu, pole + rho * dir, p) * 2.0 *
				          rmax * rmax * t * t * t;
			}
			total += (b - a) * rule.weights[i] * radial;
		}
	}
	return total;
}

/// 4x4 tensor Gauss-Legendre over a pole-free square near an atom.
double tensor_gauss(const AtomicMeasure& mu, double x0, double y0, double h, double p)
{
	static const QuadratureRule rule = gauss_legendre(4);
	double s = 0.0;
	for (size_t i = 0; i < rule.nodes.size(); ++i)
		for (size_t j = 0; j < rule.nodes.size(); ++j)
			s += rule.weights[i] * rule.weights[j] *
			     transform_power(mu, {x0 + h * rule.nodes[i], y0 + h * rule.nodes[j]}, p);
	return s * h * h;
}

Complex outer_sum(std::span<const Complex> roots_outer, Complex z)
{
	Complex s{};
	for (auto b : roots_outer)
		s += 1.0 / (z - b);
	return s;
}

} // namespace

double AtomicMeasure::total_mass() const
{
	double m = 0.0;
	for (const auto& a : atoms)
		m += a.weight;
	return m;
}

AtomicMeasure AtomicMeasure::scaled(double t) const
{
	AtomicMeasure out = *this;
	for (auto& a : out.atoms)
		a.weight *= t;
	return out;
}

AtomicMeasure root_counting_measure(std::span<const Complex> roots)
{
	if (roots.empty())
		throw Error(ErrorKind::InvalidInput, "root_counting_measure: no roots");
	AtomicMeasure mu;
	const double w = 1.0 / static_cast<double>(roots.size());
	for (auto r : roots)
		mu.atoms.push_back({r, w});
	return mu;
}

Complex cauchy_transform(const AtomicMeasure& mu, Complex z)
{
	Complex s{};
	for (const auto& a : mu.atoms)
	{
		if (std::abs(z - a.point) < 1e-13)
			throw Error(ErrorKind::Pole,
			            fmt::format("cauchy_transform: z = ({}, {}) sits on an atom",
			                        z.real(), z.imag()));
		s += a.weight / (z - a.point);
	}
	return s;
}

FactorSplit split_factor(std::span<const Complex> roots, const ConvexDomain& domain,
                         double eps)
{
	if (!(eps > 0.0))
		throw Error(ErrorKind::InvalidInput, "split_factor: eps must be positive");
	FactorSplit s;
	for (auto r : roots)
	{
		double d = distance_to(domain, r);
		if (std::abs(d - eps) < 1e-9)
			++s.near_boundary;
		if (in_eps_neighborhood(domain, r, eps))
			s.inner_roots.push_back(r);
		else
			s.outer_roots.push_back(r);
	}
	s.k_n = static_cast<int>(s.inner_roots.size());
	s.m_n = static_cast<int>(roots.size());
	return s;
}

TransformDecomposition decompose_transform(const FactorSplit& split, Complex z)
{
	if (split.m_n < 1)
		throw Error(ErrorKind::InvalidInput, "decompose_transform: empty split");
	const double m = split.m_n;
	TransformDecomposition d;
	// (k/m) nu_hat = (1/m) sum over inner roots; the k cancels
	d.inner_part = outer_sum(split.inner_roots, z) / m;
	d.outer_part = outer_sum(split.outer_roots, z) / m;
	d.total = d.inner_part + d.outer_part;
	return d;
}

double outer_mass_ratio(const FactorSplit& split)
{
	if (split.m_n < 1)
		throw Error(ErrorKind::InvalidInput, "outer_mass_ratio: m_n must be >= 1");
	return static_cast<double>(split.m_n - split.k_n) / split.m_n;
}

double lp_area_norm(const AtomicMeasure& mu, const ConvexDomain& K, double p,
                    double grid_step)
{
	if (!(p >= 1.0 && p < 2.0))
		throw Error(ErrorKind::UnsupportedExponent,
		            fmt::format("lp_area_norm: p = {} outside [1, 2)", p));
	if (!(grid_step > 0.0))
		throw Error(ErrorKind::InvalidInput, "lp_area_norm: grid_step must be positive");

	const auto [lo, hi] = K.bounding_box();
	const double h = grid_step;
	const int nx = static_cast<int>(std::ceil((hi.real() - lo.real()) / h));
	const int ny = static_cast<int>(std::ceil((hi.imag() - lo.imag()) / h));
	constexpr int kSplit = 4;
	const double hs = h / kSplit;

	double integral = 0.0;
	long cells = 0;
	for (int iy = 0; iy < ny; ++iy)
	{
		for (int ix = 0; ix < nx; ++ix)
		{
			const double x0 = lo.real() + ix * h, y0 = lo.imag() + iy * h;
			const Complex mid{x0 + 0.5 * h, y0 + 0.5 * h};
			if (signed_distance(K, mid) > 0.0)
				continue;
			++cells;
			bool near = std::any_of(mu.atoms.begin(), mu.atoms.end(), [&](const Atom& a) {
				return std::abs(a.point - mid) < 2.0 * h;
			});
			if (!near)
			{
				integral += transform_power(mu, mid, p) * h * h;
				continue;
			}
			for (int sy = 0; sy < kSplit; ++sy)
			{
				for (int sx = 0; sx < kSplit; ++sx)
				{
					const double sx0 = x0 + sx * hs, sy0 = y0 + sy * hs;
					const Atom* pole = nullptr;
					for (const auto& a : mu.atoms)
					{
						if (a.point.real() >= sx0 && a.point.real() <= sx0 + hs &&
						    a.point.imag() >= sy0 && a.point.imag() <= sy0 + hs)
						{
							pole = &a;
							break;
						}
					}
					if (pole)
						integral += polar_cell_integral(mu, pole->point, sx0, sy0, hs, p);
					else
						integral += tensor_gauss(mu, sx0, sy0, hs, p);
				}
			}
		}
	}
	if (cells < 100)
		throw Error(ErrorKind::InvalidInput,
		            fmt::format("lp_area_norm: only {} grid cells cover K", cells));
	return integral / kPi;
}

double area_bound_constant(double p, double R)
{
	if (!(p < 2.0))
		throw Error(ErrorKind::UnsupportedExponent, "area_bound_constant: p must be < 2");
	return 2.0 * std::pow(R, 2.0 - p) / (2.0 - p);
}

double lp_circle_norm(std::span<const Complex> roots_outer, int m_n, double r, double p,
                      int nodes)
{
	if (nodes < 256)
		throw Error(ErrorKind::InvalidInput, "lp_circle_norm: need at least 256 nodes");
	if (m_n < 1 || !(r > 0.0))
		throw Error(ErrorKind::InvalidInput, "lp_circle_norm: need m_n >= 1 and r > 0");
	for (auto b : roots_outer)
		if (std::abs(std::abs(b) - r) < 1e-6)
			throw Error(ErrorKind::DegenerateRadius,
			            fmt::format("lp_circle_norm: outer root within 1e-6 of |z| = {}", r));
	if (roots_outer.empty())
		return 0.0;

	double sum = 0.0;
	for (int j = 0; j < nodes; ++j)
	{
		Complex z = std::polar(r, 2.0 * kPi * j / nodes);
		sum += std::pow(std::abs(outer_sum(roots_outer, z)), p);
	}
	const double ds = 2.0 * kPi * r / nodes;
	return sum * ds / m_n;
}

double sup_grid_norm_diff(std::span<const Complex> roots_outer, int m_n,
                          const ConvexDomain& domain, double eps, double grid_step)
{
	if (m_n < 1 || !(grid_step > 0.0) || !(eps > 0.0))
		throw Error(ErrorKind::InvalidInput,
		            "sup_grid_norm_diff: need m_n >= 1, eps > 0, grid_step > 0");
	for (auto b : roots_outer)
		if (!(distance_to(domain, b) > eps))
			throw Error(ErrorKind::AnalyticityViolated,
			            fmt::format("sup_grid_norm_diff: outer root ({}, {}) within eps",
			                        b.real(), b.imag()));
	if (roots_outer.empty())
		return 0.0;

	auto value = [&](Complex z) { return std::abs(outer_sum(roots_outer, z)) / m_n; };

	double best = 0.0;
	auto [lo, hi] = domain.bounding_box();
	lo -= Complex{eps, eps};
	hi += Complex{eps, eps};
	const int nx = static_cast<int>(std::ceil((hi.real() - lo.real()) / grid_step));
	const int ny = static_cast<int>(std::ceil((hi.imag() - lo.imag()) / grid_step));
	for (int iy = 0; iy <= ny; ++iy)
		for (int ix = 0; ix <= nx; ++ix)
		{
			Complex z{lo.real() + ix * grid_step, lo.imag() + iy * grid_step};
			if (distance_to(domain, z) <= eps)
				best = std::max(best, value(z));
		}
	for (auto z : sample_contour(eps_contour(domain, eps), grid_step))
		best = std::max(best, value(z));
	return best;
}

double regular_radius(double requested, std::span<const Complex> roots_outer, int max_tries,
                      double step)
{
	for (int attempt = 0; attempt <= max_tries; ++attempt)
	{
		const double r = requested + attempt * step;
		bool clear = std::none_of(roots_outer.begin(), roots_outer.end(), [&](Complex b) {
			return std::abs(std::abs(b) - r) < 1e-6;
		});
		if (clear)
			return r;
	}
	throw Error(ErrorKind::DegenerateRadius,
	            fmt::format("no regular radius near {} after {} resamples", requested,
	                        max_tries));
}

} // namespace lucaslab
