#pragma once

#include "lucaslab/poly.hpp"

#include <span>
#include <vector>

namespace lucaslab {

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr int kDefaultMaxIter = 200;

struct RootSolveResult
{
	std::vector<Complex> roots;
	std::vector<double> residuals;
	int iterations = 0;
	bool converged = false;
};

/**
 * All roots of p by Aberth-Ehrlich iteration on Horner-evaluated p'/p,
 * followed by two Newton polishing steps per root.
 *
 * residual_j = |p(root_j)| / (max_k |c_k| * (1 + |root_j|)^deg). The result
 * is converged iff every residual is <= tol; on failure the best iterate
 * is still returned. Throws Error(InvalidInput) for degree < 1.
 */
RootSolveResult solve(const Polynomial& p, double tol = kDefaultRootTol,
                      int max_iter = kDefaultMaxIter);

/**
 * Roots of T_n, with T_n and T_n' evaluated by the three-term recurrence
 * (stable on [-1, 1], unlike the monomial coefficients for large n).
 * The residual is |T_n(root)|, which is relative to sup |T_n| = 1 on [-1, 1].
 */
RootSolveResult solve_chebyshev(int n, double tol = kDefaultRootTol,
                                int max_iter = kDefaultMaxIter);

/**
 * Zeros of p' for p = c * prod (z - roots_k), working from the root form
 * only: p'/p = L = sum 1/(z - a_k) and p''/p' = L + L'/L.
 * The residual is |L(w)| / sum |1/(w - a_k)|.
 * Requires at least two roots.
 */
RootSolveResult solve_critical_points(std::span<const Complex> roots,
                                      double tol = kDefaultRootTol, int max_iter = 500);

struct PolishResult
{
	Complex point;
	bool derivative_vanished = false;
};

/// Newton steps from approx. Returns approx itself if p' vanishes on the way
/// or if the final residual is larger than the starting one.
PolishResult polish(const Polynomial& p, Complex approx, int steps);

/// The scaled residual used by solve().
double scaled_residual(const Polynomial& p, Complex z);

} // namespace lucaslab
