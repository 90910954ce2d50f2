#pragma once

#include "lucaslab/geometry.hpp"
#include "lucaslab/poly.hpp"

#include <span>

namespace lucaslab {

/// Points this close to a counting boundary are reported as grazing.
inline constexpr double kGrazingTol = 1e-9;
inline constexpr int kDefaultNodesPerUnit = 512;

struct CountResult
{
	int count = 0;
	int grazing = 0;
};

/**
 * eps > 0: points with distance_to(domain, z) < eps.
 * eps = 0: points of the open domain.
 * grazing counts points within kGrazingTol of the decision boundary.
 */
CountResult count_in(std::span<const Complex> points, const ConvexDomain& domain,
                     double eps);

struct WindingResult
{
	int count = 0;
	Complex raw;           // (1 / 2 pi i) * contour integral of p'/p
	double residual = 0.0; // |raw - count|
	int nodes_per_unit = 0;
};

/**
 * Zeros of p inside the eps-neighborhood of domain (the domain itself for
 * eps = 0) by the argument principle over eps_contour(domain, eps).
 *
 * Composite 8-point Gauss-Legendre panels, about nodes_per_unit nodes per
 * unit length, each panel bisected until it agrees with its halves. If the
 * result is more than 1e-3 from an integer, the node density is raised x4
 * once before giving up with Error(NonIntegerWinding). A zero within 1e-6
 * of the contour (detected as deg * |p/p'| < 1e-6 at a node) raises
 * Error(ContourTooClose).
 */
WindingResult argument_principle(const Polynomial& p, const ConvexDomain& domain, double eps,
                                 int nodes_per_unit = kDefaultNodesPerUnit);

inline int argument_principle_count(const Polynomial& p, const ConvexDomain& domain,
                                    double eps, int nodes_per_unit = kDefaultNodesPerUnit)
{
	return argument_principle(p, domain, eps, nodes_per_unit).count;
}

/// Per-n zero counts of p_n and p_n' and the two ratios over (m_n - 1).
struct RatioReport
{
	int n = 0;
	int m_n = 0;
	int count_p_in_domain = 0;
	int count_dp_in_domain = 0;
	int count_dp_in_eps = 0;
	double ratio_theorem = 0.0; // count_dp_in_eps / (m_n - 1)
	double ratio_problem = 0.0; // count_dp_in_domain / (m_n - 1)
	int boundary_grazing = 0;

	friend bool operator==(const RatioReport&, const RatioReport&) = default;
};

/// Throws Error(InvalidInput) unless dp_roots.size() + 1 == p_roots.size() >= 2.
RatioReport ratio_report(std::span<const Complex> p_roots, std::span<const Complex> dp_roots,
                         const ConvexDomain& domain, double eps, int n);

/// Every dp root lies within tol of the convex hull of the p roots.
bool gauss_lucas_check(std::span<const Complex> p_roots, std::span<const Complex> dp_roots,
                       double tol);

/// D(n) = max(0, (k_n - 1) - count_dp_in_eps): critical points of q_n that
/// went missing from the eps-neighborhood.
int hurwitz_deficit(const RatioReport& report, int k_n);

} // namespace lucaslab
