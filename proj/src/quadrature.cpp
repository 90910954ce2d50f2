#include "lucaslab/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace lucaslab {

QuadratureRule gauss_legendre(int n)
{
	QuadratureRule rule;
	rule.nodes.resize(n);
	rule.weights.resize(n);
	for (int i = 0; i < n; ++i)
	{
		// Newton on P_n from the Chebyshev-like initial guess
		double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
		double dp = 1.0;
		for (int it = 0; it < 100; ++it)
		{
			double p0 = 1.0, p1 = x;
			for (int k = 2; k <= n; ++k)
			{
				double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
				p0 = p1;
				p1 = p2;
			}
			dp = n * (x * p1 - p0) / (x * x - 1.0);
			double dx = p1 / dp;
			x -= dx;
			if (std::abs(dx) < 1e-16)
				break;
		}
		rule.nodes[i] = 0.5 * (1.0 - x);
		rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
	}
	return rule;
}

} // namespace lucaslab
