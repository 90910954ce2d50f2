#pragma once

#include "lucaslab/poly.hpp"
#include "lucaslab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace testing {

using lucaslab::Complex;
using lucaslab::Rng;

inline Complex random_in_box(Rng& rng, double half = 1.0)
{
	return {rng.uniform(-half, half), rng.uniform(-half, half)};
}

inline Complex random_in_disk(Rng& rng, double radius)
{
	// sqrt of a uniform radius fraction gives the uniform area density
	double r = radius * std::sqrt(rng.uniform());
	double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
	return std::polar(r, t);
}

inline lucaslab::Polynomial random_polynomial(Rng& rng, int degree)
{
	std::vector<Complex> c(degree + 1);
	for (auto& x : c)
		x = random_in_box(rng);
	while (std::abs(c.back()) < 0.1)
		c.back() = random_in_box(rng);
	return lucaslab::Polynomial(c);
}

/// Roots in the disk of the given radius, pairwise at least `sep` apart.
inline std::vector<Complex> separated_roots(Rng& rng, int count, double radius, double sep)
{
	std::vector<Complex> out;
	while (static_cast<int>(out.size()) < count)
	{
		Complex z = random_in_disk(rng, radius);
		bool ok = std::all_of(out.begin(), out.end(),
		                      [&](Complex w) { return std::abs(z - w) >= sep; });
		if (ok)
			out.push_back(z);
	}
	return out;
}

/// Hausdorff distance between two finite point sets.
inline double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
	auto directed = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
		double worst = 0.0;
		for (auto p : x)
		{
			double best = std::numeric_limits<double>::infinity();
			for (auto q : y)
				best = std::min(best, std::abs(p - q));
			worst = std::max(worst, best);
		}
		return worst;
	};
	return std::max(directed(a, b), directed(b, a));
}

/// Greedy one-to-one matching; true when every point of a pairs with a
/// distinct point of b within tol.
inline bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol)
{
	if (a.size() != b.size())
		return false;
	for (auto p : a)
	{
		auto it = std::min_element(b.begin(), b.end(), [&](Complex x, Complex y) {
			return std::abs(x - p) < std::abs(y - p);
		});
		if (std::abs(*it - p) > tol)
			return false;
		b.erase(it);
	}
	return true;
}

inline double relative_error(Complex got, Complex want)
{
	return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace testing
