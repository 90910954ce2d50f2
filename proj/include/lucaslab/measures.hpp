#pragma once

#include "lucaslab/geometry.hpp"

#include <span>
#include <vector>

namespace lucaslab {

struct Atom
{
	Complex point;
	double weight = 0.0;
};

/// Finite collection of weighted point masses.
struct AtomicMeasure
{
	std::vector<Atom> atoms;

	double total_mass() const;
	/// Copy with every weight multiplied by t.
	AtomicMeasure scaled(double t) const;
};

/// Mass 1/m on each of the m roots. Throws Error(InvalidInput) when empty.
AtomicMeasure root_counting_measure(std::span<const Complex> roots);

/// sum w_k / (z - a_k). Throws Error(Pole) when z is within 1e-13 of an atom.
Complex cauchy_transform(const AtomicMeasure& mu, Complex z);

/**
 * Splits roots into the factors q_n (roots inside the eps-neighborhood) and
 * r_n (the rest). Roots exactly at distance eps land in the outer factor.
 */
struct FactorSplit
{
	std::vector<Complex> inner_roots;
	std::vector<Complex> outer_roots;
	int k_n = 0;
	int m_n = 0;
	/// roots within 1e-9 of the split boundary (counted, not moved)
	int near_boundary = 0;
};

FactorSplit split_factor(std::span<const Complex> roots, const ConvexDomain& domain,
                         double eps);

/// mu_hat_n(z) = (k_n/m_n) nu_hat_n(z) + ((m_n - k_n)/m_n) psi_hat_n(z)
struct TransformDecomposition
{
	Complex total;       // mu_hat_n(z)
	Complex inner_part;  // (k_n/m_n) nu_hat_n(z) = q_n'/(m_n q_n)
	Complex outer_part;  // ((m_n-k_n)/m_n) psi_hat_n(z) = r_n'/(m_n r_n)
};

TransformDecomposition decompose_transform(const FactorSplit& split, Complex z);

/// (m_n - k_n) / m_n, the outer factor's share of the root-counting mass.
double outer_mass_ratio(const FactorSplit& split);

/**
 * Approximates the integral of |mu_hat|^p over K with the normalized area
 * dA = dx dy / pi, for 1 <= p < 2. Cells with midpoint in K form the grid;
 * cells near an atom are split 4x4 and the sub-cells holding an atom are
 * integrated in polar coordinates around it.
 * Throws Error(UnsupportedExponent) for p outside [1, 2) and
 * Error(InvalidInput) when fewer than 100 cells cover K.
 */
double lp_area_norm(const AtomicMeasure& mu, const ConvexDomain& K, double p,
                    double grid_step);

/// Closed form of the integral of |xi|^(-p) dA over |xi| < R: 2 R^(2-p) / (2-p).
double area_bound_constant(double p, double R);

/**
 * Trapezoidal approximation of (1/m_n) * integral over |z| = r of
 * |sum_k 1/(z - b_k)|^p ds. Throws Error(DegenerateRadius) when an outer
 * root is within 1e-6 of the circle and Error(InvalidInput) for nodes < 256.
 */
double lp_circle_norm(std::span<const Complex> roots_outer, int m_n, double r, double p,
                      int nodes);

/**
 * Sampled maximum of |(1/m_n) sum_k 1/(z - b_k)| over a grid of step
 * grid_step covering the closed eps-neighborhood of the domain, together
 * with samples along its boundary at the same arclength step.
 * Throws Error(AnalyticityViolated) when an outer root is at distance
 * <= eps from the domain.
 */
double sup_grid_norm_diff(std::span<const Complex> roots_outer, int m_n,
                          const ConvexDomain& domain, double eps, double grid_step);

/**
 * First radius in requested, requested + step, ..., requested + max_tries
 * step that stays 1e-6 away from every outer-root modulus; throws
 * Error(DegenerateRadius) when the requested radius and all max_tries
 * resamples fail.
 */
double regular_radius(double requested, std::span<const Complex> roots_outer,
                      int max_tries = 10, double step = 1e-4);

} // namespace lucaslab
