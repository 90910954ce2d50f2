#pragma once

#include <vector>

namespace lucaslab {

struct QuadratureRule
{
	std::vector<double> nodes;   // on [0, 1]
	std::vector<double> weights; // sum to 1
};

/// n-point Gauss-Legendre rule mapped to [0, 1].
QuadratureRule gauss_legendre(int n);

} // namespace lucaslab
