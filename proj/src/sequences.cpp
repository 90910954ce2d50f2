#include "lucaslab/sequences.hpp"

#include "lucaslab/error.hpp"
#include "lucaslab/rootfind.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace lucaslab {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Coefficient form when it fits the double-precision guard.
Polynomial coefficients_if_representable(const std::vector<Complex>& roots, Complex leading)
{
	if (roots.size() > static_cast<size_t>(kDegreeGuard))
		return {};
	try
	{
		return from_roots(roots, leading);
	}
	catch (const Error& e)
	{
		if (e.kind() == ErrorKind::CoefficientOverflow)
			return {};
		throw;
	}
}

constexpr int kMaxRejections = 1'000'000;

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
	std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

Complex sample_in_domain(Rng& rng, const ConvexDomain& domain)
{
	auto [lo, hi] = domain.bounding_box();
	for (int i = 0; i < kMaxRejections; ++i)
	{
		Complex z{rng.uniform(lo.real(), hi.real()), rng.uniform(lo.imag(), hi.imag())};
		if (contains(domain, z))
			return z;
	}
	throw Error(ErrorKind::InvalidInput, "sample_in_domain: rejection sampling failed");
}

ConvexDomain example1_rectangle() { return ConvexDomain::rectangle(-2.0, 2.0, -4.0, 0.0); }

GeneratedInstance chebyshev_counterexample(int n, double eps_cap)
{
	if (n < 2)
		throw Error(ErrorKind::InvalidInput, "chebyshev_counterexample: n must be >= 2");
	if (!(eps_cap > 0.0))
		throw Error(ErrorKind::InvalidInput, "chebyshev_counterexample: eps_cap must be > 0");

	// g(z) = (z - i) T_n(z), leading coefficient 2^(n-1)
	std::vector<Complex> g_roots{kI};
	for (auto x : chebyshev_nodes(n))
		g_roots.push_back(x);

	auto crit = solve_critical_points(g_roots);
	if (!crit.converged)
		throw Error(ErrorKind::ConstructionInvariant,
		            fmt::format("chebyshev_counterexample: critical points of (z-i)T_{} "
		                        "did not converge",
		                        n));
	double min_im = std::numeric_limits<double>::infinity();
	for (auto w : crit.roots)
		min_im = std::min(min_im, w.imag());
	if (!(min_im > 0.0))
		throw Error(ErrorKind::ConstructionInvariant,
		            fmt::format("chebyshev_counterexample: critical point of (z-i)T_{} with "
		                        "Im = {} <= 0",
		                        n, min_im));
	const double a_n = std::min(0.5 * min_im, 0.5 * eps_cap);

	// p(z) = g(z + i a_n): every root moves down by a_n
	GeneratedInstance inst;
	inst.n = n;
	inst.leading = std::ldexp(1.0, n - 1);
	for (auto r : g_roots)
		inst.roots.push_back(r - Complex{0.0, a_n});
	inst.a_n = a_n;
	inst.domain_of_interest = example1_rectangle();
	inst.p = coefficients_if_representable(inst.roots, inst.leading);
	inst.metadata = {{"a_n", a_n}, {"min_critical_im", min_im}, {"eps_cap", eps_cap}};
	return inst;
}

GeneratedInstance strict_convex_counterexample(int n, double M, double eps_cap)
{
	if (!(M >= 2.0))
		throw Error(ErrorKind::InvalidInput, "strict_convex_counterexample: M must be >= 2");
	GeneratedInstance base = chebyshev_counterexample(n, eps_cap);
	const double a_n = *base.a_n;
	const double chord = std::sqrt(1.0 - 1.0 / (M * M));

	GeneratedInstance inst;
	inst.n = n;
	// p_M(w) = p(M (w - i chord)) has leading coefficient leading * M^deg
	inst.leading = base.leading * std::pow(M, base.degree());
	for (auto z : base.roots)
		inst.roots.push_back(z / M + Complex{0.0, chord});
	inst.a_n = a_n;
	inst.domain_of_interest = ConvexDomain::unit_disk();

	// roots[0] is the image of i(1 - a_n); the rest are the scaled Chebyshev roots
	if (!(std::abs(inst.roots[0]) > 1.0))
		throw Error(ErrorKind::ConstructionInvariant,
		            "strict_convex_counterexample: outer root is not outside the unit disk");
	for (size_t k = 1; k < inst.roots.size(); ++k)
		if (!(std::abs(inst.roots[k]) < 1.0))
			throw Error(ErrorKind::ConstructionInvariant,
			            "strict_convex_counterexample: inner root outside the unit disk");

	inst.p = coefficients_if_representable(inst.roots, inst.leading);
	inst.metadata = {{"a_n", a_n},
	                 {"M_n", M},
	                 {"chord_height", chord},
	                 {"delta_n", a_n / M},
	                 {"inner_offset_below_circle", 1.0 - chord + a_n / M}};
	return inst;
}

GeneratedInstance random_outlier_sequence(int n, const ConvexDomain& domain, int outlier_count,
                                          OutlierShell shell, std::uint64_t seed)
{
	if (n < 1 || outlier_count < 0 || outlier_count >= n)
		throw Error(ErrorKind::InvalidInput,
		            fmt::format("random_outlier_sequence: need 0 <= outlier_count ({}) < n ({})",
		                        outlier_count, n));
	if (!(shell.inner >= 0.0) || !(shell.outer > shell.inner) || !std::isfinite(shell.outer))
		throw Error(ErrorKind::InvalidShell,
		            fmt::format("random_outlier_sequence: shell [{}, {}] is empty or misordered",
		                        shell.inner, shell.outer));

	Rng rng(seed);
	GeneratedInstance inst;
	inst.n = n;
	inst.domain_of_interest = domain;
	for (int k = 0; k < n - outlier_count; ++k)
		inst.roots.push_back(sample_in_domain(rng, domain));

	auto [lo, hi] = domain.bounding_box();
	lo -= Complex{shell.outer, shell.outer};
	hi += Complex{shell.outer, shell.outer};
	for (int k = 0; k < outlier_count; ++k)
	{
		int tries = 0;
		for (;; ++tries)
		{
			if (tries == kMaxRejections)
				throw Error(ErrorKind::InvalidShell,
				            "random_outlier_sequence: rejection sampling in shell failed");
			Complex z{rng.uniform(lo.real(), hi.real()), rng.uniform(lo.imag(), hi.imag())};
			double d = distance_to(domain, z);
			if (d >= shell.inner && d <= shell.outer)
			{
				inst.roots.push_back(z);
				break;
			}
		}
	}
	inst.p = coefficients_if_representable(inst.roots, inst.leading);
	inst.metadata = {{"outlier_count", static_cast<double>(outlier_count)},
	                 {"shell_inner", shell.inner},
	                 {"shell_outer", shell.outer}};
	return inst;
}

GeneratedInstance figure2_left()
{
	GeneratedInstance inst;
	inst.n = 14;
	for (int k = 0; k < 10; ++k)
		inst.roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 10.0));
	inst.roots.insert(inst.roots.end(), {{3.0, -2.0}, {-3.0, 2.0}, {1.0, -5.0}, {-5.0, 0.0}});
	inst.p = from_roots(inst.roots);
	return inst;
}

GeneratedInstance figure2_right()
{
	GeneratedInstance inst;
	inst.n = 32;
	// corner-exclusive: 8 intervals of length 1/4 per side, interior points only
	const std::array<std::pair<Complex, Complex>, 4> sides{{{{-1.0, -1.0}, {1.0, -1.0}},
	                                                        {{1.0, -1.0}, {1.0, 1.0}},
	                                                        {{1.0, 1.0}, {-1.0, 1.0}},
	                                                        {{-1.0, 1.0}, {-1.0, -1.0}}}};
	for (const auto& [a, b] : sides)
		for (int k = 1; k <= 7; ++k)
			inst.roots.push_back(a + (b - a) * (k / 8.0));
	inst.roots.insert(inst.roots.end(), {{3.0, 0.0}, {-2.0, 2.0}, {1.0, -1.0}, {-2.0, 0.0}});
	inst.domain_of_interest = ConvexDomain::rectangle(-1.0, 1.0, -1.0, 1.0);
	inst.p = from_roots(inst.roots);
	return inst;
}

const char* to_string(SequenceKind kind) noexcept
{
	switch (kind)
	{
	case SequenceKind::ChebyshevCounterexample: return "ChebyshevCounterexample";
	case SequenceKind::StrictConvexCounterexample: return "StrictConvexCounterexample";
	case SequenceKind::RandomOutlier: return "RandomOutlier";
	case SequenceKind::Figure2Left: return "Figure2Left";
	case SequenceKind::Figure2Right: return "Figure2Right";
	}
	return "unknown";
}

std::optional<SequenceKind> parse_sequence_kind(const std::string& name)
{
	for (auto k : {SequenceKind::ChebyshevCounterexample, SequenceKind::StrictConvexCounterexample,
	               SequenceKind::RandomOutlier, SequenceKind::Figure2Left,
	               SequenceKind::Figure2Right})
		if (name == to_string(k))
			return k;
	return std::nullopt;
}

int OutlierSchedule::at(int n) const
{
	if (mode == Mode::Constant)
		return count;
	return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
}

std::vector<int> SequenceSpec::indices() const
{
	if (kind == SequenceKind::Figure2Left)
		return {14};
	if (kind == SequenceKind::Figure2Right)
		return {32};
	if (!n_values.empty())
	{
		auto v = n_values;
		std::sort(v.begin(), v.end());
		v.erase(std::unique(v.begin(), v.end()), v.end());
		return v;
	}
	std::vector<int> v;
	for (int n = n_min; n <= n_max; ++n)
		v.push_back(n);
	return v;
}

void SequenceSpec::validate() const
{
	if (!(eps > 0.0))
		throw Error(ErrorKind::InvalidInput, "sequence spec: eps must be positive");
	const auto idx = indices();
	if (idx.empty())
		throw Error(ErrorKind::InvalidInput, "sequence spec: empty n range");
	switch (kind)
	{
	case SequenceKind::ChebyshevCounterexample:
	case SequenceKind::StrictConvexCounterexample:
		if (idx.front() < 2 || idx.back() > kDegreeGuard - 1)
			throw Error(ErrorKind::InvalidInput, "sequence spec: n must be in [2, 511]");
		if (kind == SequenceKind::StrictConvexCounterexample && !(M >= 2.0))
			throw Error(ErrorKind::InvalidInput, "sequence spec: M must be >= 2");
		break;
	case SequenceKind::RandomOutlier:
		if (idx.front() < 2)
			throw Error(ErrorKind::InvalidInput, "sequence spec: n must be >= 2");
		for (int n : idx)
			if (outliers.at(n) < 0 || outliers.at(n) >= n)
				throw Error(ErrorKind::InvalidInput,
				            fmt::format("sequence spec: outlier count {} invalid for n = {}",
				                        outliers.at(n), n));
		if (!(shell.inner >= 0.0) || !(shell.outer > shell.inner))
			throw Error(ErrorKind::InvalidShell, "sequence spec: shell empty or misordered");
		if (!(shell.inner > eps))
			throw Error(ErrorKind::InvalidShell,
			            "sequence spec: shell must stay outside the eps-neighborhood");
		break;
	case SequenceKind::Figure2Left:
	case SequenceKind::Figure2Right: break;
	}
}

GeneratedInstance generate(const SequenceSpec& spec, int n)
{
	switch (spec.kind)
	{
	case SequenceKind::ChebyshevCounterexample: return chebyshev_counterexample(n, spec.eps);
	case SequenceKind::StrictConvexCounterexample:
		return strict_convex_counterexample(n, spec.M, spec.eps);
	case SequenceKind::RandomOutlier:
		return random_outlier_sequence(n, spec.domain, spec.outliers.at(n), spec.shell,
		                               derive_seed(spec.seed, static_cast<std::uint64_t>(n)));
	case SequenceKind::Figure2Left: return figure2_left();
	case SequenceKind::Figure2Right: return figure2_right();
	}
	throw Error(ErrorKind::InvalidInput, "generate: unknown sequence kind");
}

ConvexDomain counting_domain(const SequenceSpec& spec)
{
	if (spec.kind == SequenceKind::StrictConvexCounterexample)
		return ConvexDomain::unit_disk();
	return spec.domain;
}

} // namespace lucaslab
