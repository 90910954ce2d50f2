#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lucaslab/counting.hpp"
#include "lucaslab/error.hpp"
#include "lucaslab/io.hpp"
#include "lucaslab/rootfind.hpp"
#include "lucaslab/sequences.hpp"
#include "support.hpp"

using namespace lucaslab;

namespace {

const Complex I{0.0, 1.0};

ErrorKind kind_of(auto&& f)
{
	try
	{
		f();
	}
	catch (const Error& e)
	{
		return e.kind();
	}
	FAIL("no lucaslab::Error thrown");
	return ErrorKind::InvalidInput;
}

/// max |p - s q| / max|p| with the best scalar s fitted on the leading terms
double scalar_mismatch(const Polynomial& p, const Polynomial& q)
{
	REQUIRE(p.degree() == q.degree());
	Complex s = p.coeffs().back() / q.coeffs().back();
	double err = 0.0;
	for (int j = 0; j <= p.degree(); ++j)
		err = std::max(err, std::abs(p.coeffs()[j] - s * q.coeffs()[j]));
	return err / p.max_abs_coeff();
}

} // namespace

TEST_CASE("chebyshev_counterexample n = 2 against the quadratic formula")
{
	// g = (z - i)(2z^2 - 1) = 2z^3 - 2i z^2 - z + i, g' = 6z^2 - 4i z - 1
	Complex disc = std::sqrt(Complex{-16.0, 0.0} + 24.0);
	Complex w1 = (4.0 * I + disc) / 12.0, w2 = (4.0 * I - disc) / 12.0;
	double min_im = std::min(w1.imag(), w2.imag());
	REQUIRE(min_im > 0.0);

	auto inst = chebyshev_counterexample(2);
	REQUIRE(inst.a_n);
	CHECK(*inst.a_n == doctest::Approx(std::min(0.5 * min_im, 0.025)).epsilon(1e-12));
	CHECK(inst.degree() == 3);

	auto O = example1_rectangle();
	CHECK(count_in(inst.roots, O, 0.0).count == 2);
	auto crit = solve_critical_points(inst.roots);
	CHECK(testing::same_multiset(crit.roots, {w1 - *inst.a_n * I, w2 - *inst.a_n * I}, 1e-12));
	CHECK(count_in(crit.roots, O, 0.0).count == 0);
}

TEST_CASE("chebyshev_counterexample n = 30")
{
	auto inst = chebyshev_counterexample(30);
	CHECK(inst.degree() == 31);
	CHECK(inst.p.degree() == 31);
	auto O = example1_rectangle();
	CHECK(count_in(inst.roots, O, 0.0).count == 30);
	auto crit = solve_critical_points(inst.roots);
	CHECK(count_in(crit.roots, O, 0.0).count == 0);
	// the critical point near 0.954i stays out of O_0.05
	CHECK(count_in(crit.roots, O, 0.05).count == 29);

	// roots are i(1 - a_n) and the Chebyshev nodes moved down by a_n
	double a = *inst.a_n;
	CHECK(inst.roots[0] == Complex{0.0, 1.0 - a});
	for (int k = 1; k <= 30; ++k)
		CHECK(std::abs(inst.roots[k] - Complex{std::cos((2 * k - 1) * std::numbers::pi / 60), -a}) <=
		      1e-15);
}

TEST_CASE("property: counterexample invariants for n = 2..64")
{
	auto O = example1_rectangle();
	for (int n = 2; n <= 64; ++n)
	{
		auto inst = chebyshev_counterexample(n);
		CHECK(inst.degree() == n + 1);
		CHECK(*inst.a_n > 0.0);
		CHECK(*inst.a_n <= 0.025);
		CHECK(count_in(inst.roots, O, 0.0).count == n);
		auto crit = solve_critical_points(inst.roots);
		REQUIRE(crit.converged);
		auto r = count_in(crit.roots, O, 0.0);
		CHECK(r.count == 0);
		CHECK(r.grazing == 0);
	}
}

TEST_CASE("strict_convex_counterexample")
{
	auto disk = ConvexDomain::unit_disk();
	auto inst = strict_convex_counterexample(30, 10.0);
	CHECK(inst.degree() == 31);
	CHECK(std::abs(inst.roots[0]) > 1.0);
	for (size_t k = 1; k < inst.roots.size(); ++k)
		CHECK(std::abs(inst.roots[k]) < 1.0);
	CHECK(count_in(inst.roots, disk, 0.0).count == 30);
	auto crit = solve_critical_points(inst.roots);
	CHECK(count_in(crit.roots, disk, 0.0).count < 30);

	CHECK_THROWS_AS(strict_convex_counterexample(30, 1.5), Error);
}

TEST_CASE("strict convex inner roots approach the circle as M grows")
{
	auto gap = [](double M) {
		auto inst = strict_convex_counterexample(20, M);
		double g = 0.0;
		for (size_t k = 1; k < inst.roots.size(); ++k)
			g = std::max(g, 1.0 - std::abs(inst.roots[k]));
		return g;
	};
	double g10 = gap(10.0), g100 = gap(100.0);
	CHECK(g10 > 0.0);
	CHECK(g100 > 0.0);
	CHECK(g100 < g10 / 10.0);
}

TEST_CASE("strict convex root map is the affine image of the base roots")
{
	const double M = 10.0;
	auto base = chebyshev_counterexample(12);
	auto inst = strict_convex_counterexample(12, M);
	REQUIRE(inst.roots.size() == base.roots.size());
	double chord = std::sqrt(1.0 - 1.0 / (M * M));
	for (size_t k = 0; k < base.roots.size(); ++k)
	{
		// removing the translation leaves the scaled roots
		CHECK(inst.roots[k].real() == base.roots[k].real() / M);
		CHECK(std::abs((inst.roots[k] - chord * I) - base.roots[k] / M) <= 1e-15);
	}
}

TEST_CASE("random_outlier_sequence")
{
	auto disk = ConvexDomain::unit_disk();
	auto a = random_outlier_sequence(40, disk, 6, {0.5, 1.5}, 99);
	auto b = random_outlier_sequence(40, disk, 6, {0.5, 1.5}, 99);
	CHECK(a.roots == b.roots);
	CHECK(a.p == b.p);
	auto c = random_outlier_sequence(40, disk, 6, {0.5, 1.5}, 100);
	CHECK(a.roots != c.roots);

	CHECK(count_in(a.roots, disk, 0.0).count == 34);
	for (size_t k = 34; k < a.roots.size(); ++k)
	{
		double d = distance_to(disk, a.roots[k]);
		CHECK(d >= 0.5);
		CHECK(d <= 1.5);
	}

	CHECK(kind_of([&] { random_outlier_sequence(10, disk, 2, {1.0, 0.5}, 1); }) ==
	      ErrorKind::InvalidShell);
	CHECK(kind_of([&] { random_outlier_sequence(10, disk, 10, {0.5, 1.0}, 1); }) ==
	      ErrorKind::InvalidInput);
}

TEST_CASE("random outlier sequence without outliers keeps every critical point")
{
	auto square = ConvexDomain::rectangle(-1.0, 1.0, -1.0, 1.0);
	for (std::uint64_t seed = 1; seed <= 10; ++seed)
	{
		auto inst = random_outlier_sequence(30, square, 0, {0.5, 1.0}, seed);
		CHECK(count_in(inst.roots, square, 0.0).count == 30);
		auto crit = solve_critical_points(inst.roots);
		auto r = ratio_report(inst.roots, crit.roots, square, 0.05, 30);
		CHECK(r.count_dp_in_eps == 29);
		CHECK(r.ratio_theorem == 1.0);
	}
}

TEST_CASE("figure2_left")
{
	auto inst = figure2_left();
	CHECK(inst.degree() == 14);
	CHECK(inst.p.degree() == 14);
	CHECK(std::abs(evaluate(inst.p, 1.0)) <= 1e-12);

	// the caption's factored form, multiplied out independently
	Polynomial z10({-1.0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1.0});
	Polynomial expected = z10;
	for (Complex r : {Complex{3.0, -2.0}, Complex{-3.0, 2.0}, Complex{1.0, -5.0}, Complex{-5.0}})
		expected = multiply(expected, Polynomial({-r, 1.0}));
	CHECK(scalar_mismatch(inst.p, expected) <= 1e-12);

	auto disk = ConvexDomain::disk(0.0, 1.01);
	CHECK(count_in(inst.roots, disk, 0.0).count == 10);
	CHECK(argument_principle_count(inst.p, disk, 0.0) == 10);

	auto crit = solve(derivative(inst.p));
	REQUIRE(crit.converged);
	auto counted = count_in(crit.roots, disk, 0.3);
	CHECK(counted.grazing == 0);
	CHECK(argument_principle_count(derivative(inst.p), disk, 0.3) == counted.count);
}

TEST_CASE("figure2_right")
{
	auto inst = figure2_right();
	CHECK(inst.degree() == 32);
	CHECK(inst.p.degree() == 32);
	std::vector<Complex> bottom;
	for (int k = 1; k <= 7; ++k)
		bottom.push_back({-1.0 + k / 4.0, -1.0});
	for (auto z : bottom)
		CHECK(std::find(inst.roots.begin(), inst.roots.end(), z) != inst.roots.end());

	// every side zero lies on the boundary of the open square
	auto square = ConvexDomain::rectangle(-1.0, 1.0, -1.0, 1.0);
	std::vector<Complex> side(inst.roots.begin(), inst.roots.begin() + 28);
	auto open = count_in(side, square, 0.0);
	CHECK(open.count == 0);
	CHECK(open.grazing == 28);
	auto grown = count_in(side, square, 0.1);
	CHECK(grown.count == 28);
	CHECK(grown.grazing == 0);
}

void check_round_trip(const GeneratedInstance& inst)
{
	INFO("n = ", inst.n, ", degree ", inst.degree());
	CHECK(scalar_mismatch(inst.p, from_roots(inst.roots)) <= 1e-9);
	auto r = solve(inst.p);
	CHECK(r.converged);
	CHECK(testing::hausdorff(r.roots, inst.roots) <= 1e-7);
}

TEST_CASE("property: generated instances match from_roots and survive a solve round trip")
{
	check_round_trip(figure2_left());
	check_round_trip(figure2_right());
	for (std::uint64_t seed : {3, 4, 5})
		check_round_trip(random_outlier_sequence(50, ConvexDomain::unit_disk(), 8, {0.5, 1.5}, seed));
	for (int n : {2, 5, 10, 20, 30})
		check_round_trip(chebyshev_counterexample(n));
}

// Coefficient forms that cannot carry their roots to 1e-7: the exact roots
// of the rounded coefficients are already off by 0.02 (strict convex n = 10),
// 0.28 (strict convex n = 20) and 0.105 (counterexample n = 64). The strict
// convex cluster has width 2/M; the counterexample degrades from 3e-8 at
// n = 30 to 1e-3 at n = 40. Kept as a record; the root forms are exact.
TEST_CASE("ill-conditioned coefficient round trips" * doctest::should_fail())
{
	for (int n : {10, 20})
		check_round_trip(strict_convex_counterexample(n, 10.0));
	for (int n : {40, 64})
		check_round_trip(chebyshev_counterexample(n));
}

TEST_CASE("sequence spec JSON round trip")
{
	SequenceSpec spec;
	spec.kind = SequenceKind::RandomOutlier;
	spec.n_values = {25, 50, 100};
	spec.domain = ConvexDomain::disk({0.5, -0.25}, 1.5);
	spec.eps = 0.1;
	spec.outliers = {OutlierSchedule::Mode::Constant, 4};
	spec.shell = {0.25, 0.75};
	spec.seed = 12345678901234ULL;
	auto back = io::sequence_spec_from_json(io::to_json(spec));
	CHECK(io::to_json(back) == io::to_json(spec));
	CHECK(back.indices() == std::vector<int>{25, 50, 100});
	CHECK(back.seed == spec.seed);

	auto defaults = io::sequence_spec_from_json(io::json::parse(R"({"kind":"Figure2Left"})"));
	CHECK(defaults.kind == SequenceKind::Figure2Left);
	CHECK_THROWS_AS(io::sequence_spec_from_json(io::json::parse(R"({"kind":"Nope"})")), Error);
	CHECK_THROWS_AS(io::sequence_spec_from_json(io::json::parse(R"({"n_min":3})")), Error);
}

TEST_CASE("generate follows the sequence spec")
{
	SequenceSpec spec;
	spec.kind = SequenceKind::RandomOutlier;
	spec.domain = ConvexDomain::unit_disk();
	spec.n_min = 10;
	spec.n_max = 12;
	CHECK(spec.indices() == std::vector<int>{10, 11, 12});
	auto a = generate(spec, 11), b = generate(spec, 11);
	CHECK(a.roots == b.roots);
	CHECK(a.degree() == 11);
	CHECK(count_in(a.roots, spec.domain, 0.0).count == 11 - spec.outliers.at(11));

	spec.n_min = 5;
	spec.n_max = 4;
	CHECK_THROWS_AS(spec.validate(), Error);
	CHECK(parse_sequence_kind("ChebyshevCounterexample") == SequenceKind::ChebyshevCounterexample);
	CHECK_FALSE(parse_sequence_kind("chebyshev"));
}
