#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lucaslab/error.hpp"
#include "lucaslab/measures.hpp"
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

FactorSplit example1_split(int n)
{
	auto inst = chebyshev_counterexample(n);
	return split_factor(inst.roots, example1_rectangle(), 0.05);
}

/// Trapezoid sum of (1/m) |sum 1/(z - b)|^p ds on |z| = r, written out here
/// as a reference independent of the library.
double reference_circle_norm(const std::vector<Complex>& outer, int m, double r, double p,
                             int nodes)
{
	double sum = 0.0;
	for (int k = 0; k < nodes; ++k)
	{
		Complex z = std::polar(r, 2.0 * std::numbers::pi * k / nodes);
		Complex s{};
		for (auto b : outer)
			s += 1.0 / (z - b);
		sum += std::pow(std::abs(s), p);
	}
	return sum * 2.0 * std::numbers::pi * r / nodes / m;
}

} // namespace

TEST_CASE("root_counting_measure")
{
	auto one = root_counting_measure(std::vector<Complex>{0.0});
	REQUIRE(one.atoms.size() == 1);
	CHECK(one.atoms[0].weight == 1.0);

	auto two = root_counting_measure(std::vector<Complex>{1.0, -1.0});
	CHECK(two.atoms[0].weight == 0.5);
	CHECK(two.atoms[1].weight == 0.5);

	auto inst = chebyshev_counterexample(30);
	REQUIRE(inst.roots.size() == 31);
	CHECK(std::abs(root_counting_measure(inst.roots).total_mass() - 1.0) <= 1e-14);

	CHECK(kind_of([] { root_counting_measure(std::vector<Complex>{}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("cauchy_transform")
{
	auto delta = root_counting_measure(std::vector<Complex>{0.0});
	CHECK(cauchy_transform(delta, 2.0) == Complex{0.5});
	CHECK(std::abs(cauchy_transform(root_counting_measure(std::vector<Complex>{1.0, -1.0}), 0.0)) ==
	      0.0);
	CHECK(kind_of([&] { cauchy_transform(delta, 1e-14); }) == ErrorKind::Pole);
}

TEST_CASE("property: Cauchy transform of the root measure is p'/(m p)")
{
	testing::Rng rng(23);
	int checked = 0;
	for (int trial = 0; trial < 30; ++trial)
	{
		int m = 1 + static_cast<int>(rng.uniform() * 60);
		std::vector<Complex> roots;
		for (int k = 0; k < m; ++k)
			roots.push_back(testing::random_in_disk(rng, 1.0));
		auto p = from_roots(roots);
		auto mu = root_counting_measure(roots);
		for (int k = 0; k < 50; ++k)
		{
			Complex z = testing::random_in_box(rng, 2.0);
			double gap = 1e300;
			for (auto a : roots)
				gap = std::min(gap, std::abs(z - a));
			if (gap < 0.1)
				continue;
			Complex want = log_derivative(p, z) / static_cast<double>(m);
			CHECK(testing::relative_error(cauchy_transform(mu, z), want) <= 1e-9);
			++checked;
		}
	}
	CHECK(checked > 500);
}

TEST_CASE("split_factor")
{
	auto s = split_factor(std::vector<Complex>{0.0, 3.0}, ConvexDomain::unit_disk(), 0.5);
	CHECK(s.inner_roots == std::vector<Complex>{0.0});
	CHECK(s.outer_roots == std::vector<Complex>{3.0});
	CHECK(s.k_n == 1);
	CHECK(s.m_n == 2);

	auto all = split_factor(std::vector<Complex>{0.1, -0.2 * I}, ConvexDomain::unit_disk(), 0.1);
	CHECK(all.outer_roots.empty());
	CHECK(all.k_n == all.m_n);

	// exactly at distance eps goes to the outer factor
	auto edge = split_factor(std::vector<Complex>{1.5}, ConvexDomain::unit_disk(), 0.5);
	CHECK(edge.k_n == 0);
	CHECK(edge.near_boundary == 1);

	auto ex = example1_split(30);
	CHECK(ex.k_n == 30);
	REQUIRE(ex.outer_roots.size() == 1);
	CHECK(std::abs(ex.outer_roots[0] - I) < 0.05);
	for (auto a : ex.inner_roots)
		CHECK(std::abs(a.imag()) < 0.05);
}

TEST_CASE("decomposition of the transform")
{
	testing::Rng rng(24);
	for (int trial = 0; trial < 20; ++trial)
	{
		std::vector<Complex> roots;
		for (int k = 0; k < 20; ++k)
			roots.push_back(testing::random_in_disk(rng, k < 15 ? 1.0 : 4.0));
		auto split = split_factor(roots, ConvexDomain::unit_disk(), 0.1);
		auto p = from_roots(roots);
		for (int k = 0; k < 20; ++k)
		{
			Complex z = testing::random_in_box(rng, 3.0);
			double gap = 1e300;
			for (auto a : roots)
				gap = std::min(gap, std::abs(z - a));
			if (gap < 0.1)
				continue;
			auto d = decompose_transform(split, z);
			Complex want = log_derivative(p, z) / 20.0;
			CHECK(testing::relative_error(d.total, want) <= 1e-9);
			CHECK(testing::relative_error(d.inner_part + d.outer_part, want) <= 1e-9);
		}
	}
}

TEST_CASE("outer_mass_ratio")
{
	auto all = split_factor(std::vector<Complex>{0.0, 0.1}, ConvexDomain::unit_disk(), 0.1);
	CHECK(outer_mass_ratio(all) == 0.0);
	CHECK(outer_mass_ratio(example1_split(30)) == doctest::Approx(1.0 / 31.0));

	double previous = 1.0;
	for (int m : {25, 50, 100, 200})
	{
		auto inst = random_outlier_sequence(m, ConvexDomain::unit_disk(),
		                                    static_cast<int>(std::ceil(std::sqrt(m))), {0.5, 1.5}, 3);
		double ratio = outer_mass_ratio(split_factor(inst.roots, ConvexDomain::unit_disk(), 0.1));
		CHECK(ratio == doctest::Approx(std::ceil(std::sqrt(m)) / m));
		CHECK(ratio < previous);
		previous = ratio;
	}
}

TEST_CASE("lp_area_norm of a point mass")
{
	auto delta = root_counting_measure(std::vector<Complex>{0.0});
	auto K = ConvexDomain::unit_disk();
	// the integral of |z|^-1 over the unit disk, divided by pi, is 2
	CHECK(std::abs(lp_area_norm(delta, K, 1.0, 0.02) - 2.0) <= 0.02 * 2.0);
	// and of |z|^-1.5 it is 4
	CHECK(std::abs(lp_area_norm(delta, K, 1.5, 0.02) - 4.0) <= 0.02 * 4.0);

	// homogeneity: scaling weights by t scales the result by t^p
	testing::Rng rng(25);
	std::vector<Complex> pts;
	for (int k = 0; k < 5; ++k)
		pts.push_back(testing::random_in_disk(rng, 1.5));
	auto mu = root_counting_measure(pts);
	for (double p : {1.0, 1.5})
	{
		double full = lp_area_norm(mu, K, p, 0.05);
		double half = lp_area_norm(mu.scaled(0.5), K, p, 0.05);
		CHECK(half == doctest::Approx(std::pow(0.5, p) * full).epsilon(1e-12));
	}

	CHECK(kind_of([&] { lp_area_norm(delta, K, 2.0, 0.02); }) == ErrorKind::UnsupportedExponent);
	CHECK(kind_of([&] { lp_area_norm(delta, K, 0.5, 0.02); }) == ErrorKind::UnsupportedExponent);
	CHECK(kind_of([&] { lp_area_norm(delta, K, 1.0, 0.5); }) == ErrorKind::InvalidInput);
}

TEST_CASE("lp_area_norm of the outer factor scales like 1/m_n")
{
	auto O = example1_rectangle();
	auto quantity = [&](int n) {
		auto s = example1_split(n);
		auto psi = root_counting_measure(s.outer_roots);
		double prefactor = static_cast<double>(s.m_n - s.k_n) / s.m_n;
		return lp_area_norm(psi.scaled(prefactor), O, 1.0, 0.05);
	};
	CHECK(quantity(100) <= 0.5 * quantity(50) * 1.25);
}

TEST_CASE("property: area norm bound with a disk of radius 3")
{
	testing::Rng rng(26);
	auto K = ConvexDomain::unit_disk();
	// integral of |xi|^-p over |xi| < 3 with dA = dx dy / pi: 2 * 3^(2-p) / (2-p)
	const double bound_p1 = 6.0, bound_p15 = 4.0 * std::sqrt(3.0);
	CHECK(area_bound_constant(1.0, 3.0) == doctest::Approx(bound_p1));
	CHECK(area_bound_constant(1.5, 3.0) == doctest::Approx(bound_p15));
	for (int trial = 0; trial < 20; ++trial)
	{
		int atoms = 1 + static_cast<int>(rng.uniform() * 10);
		AtomicMeasure mu;
		double total = 0.0;
		for (int k = 0; k < atoms; ++k)
		{
			double w = rng.uniform(0.1, 1.0);
			mu.atoms.push_back({testing::random_in_disk(rng, 2.0), w});
			total += w;
		}
		mu = mu.scaled(1.0 / total);
		CHECK(lp_area_norm(mu, K, 1.0, 0.05) <= bound_p1);
		CHECK(lp_area_norm(mu, K, 1.5, 0.05) <= bound_p15);
	}
}

TEST_CASE("lp_circle_norm")
{
	std::vector<Complex> outer{3.0};
	double got = lp_circle_norm(outer, 10, 1.0, 1.0, 1024);
	double want = reference_circle_norm(outer, 10, 1.0, 1.0, 8192);
	CHECK(std::abs(got - want) <= 0.01 * want);

	CHECK(lp_circle_norm({}, 10, 1.0, 1.0, 1024) == 0.0);
	CHECK(kind_of([&] { lp_circle_norm(outer, 10, 3.0 - 1e-7, 1.0, 1024); }) ==
	      ErrorKind::DegenerateRadius);
	CHECK(kind_of([&] { lp_circle_norm(outer, 10, 1.0, 1.0, 128); }) == ErrorKind::InvalidInput);

	auto s100 = example1_split(100), s200 = example1_split(200);
	double v100 = lp_circle_norm(s100.outer_roots, s100.m_n, 1.1, 1.0, 2048);
	double v200 = lp_circle_norm(s200.outer_roots, s200.m_n, 1.1, 1.0, 2048);
	CHECK(v200 <= (100.0 / 200.0) * v100 * 1.2);
}

TEST_CASE("property: lp_circle_norm self-converges")
{
	testing::Rng rng(27);
	for (int trial = 0; trial < 20; ++trial)
	{
		std::vector<Complex> outer;
		for (int k = 0; k < 4; ++k)
			outer.push_back(std::polar(rng.uniform(1.5, 3.0), rng.uniform(0.0, 6.28)));
		double r = rng.uniform(0.5, 1.3);
		for (double p : {1.0, 1.5})
		{
			double a = lp_circle_norm(outer, 10, r, p, 2048);
			double b = lp_circle_norm(outer, 10, r, p, 4096);
			CHECK(std::abs(a - b) <= 0.005 * b);
		}
	}
}

TEST_CASE("regular_radius")
{
	std::vector<Complex> outer{1.1};
	double r = regular_radius(1.1, outer);
	CHECK(r == doctest::Approx(1.1001));
	CHECK(regular_radius(1.2, outer) == 1.2);
	CHECK(kind_of([&] { regular_radius(1.1, outer, 0); }) == ErrorKind::DegenerateRadius);
	std::vector<Complex> crowded{1.1, 1.1001};
	CHECK(kind_of([&] { regular_radius(1.1, crowded, 1); }) == ErrorKind::DegenerateRadius);
	CHECK(regular_radius(1.1, crowded, 2) == doctest::Approx(1.1002));
}

TEST_CASE("sup_grid_norm_diff")
{
	auto K = ConvexDomain::unit_disk();
	CHECK(sup_grid_norm_diff({}, 10, K, 0.1, 0.05) == 0.0);

	// one pole at distance d = 2 from the closed disk of radius 1.1
	std::vector<Complex> outer{{3.1, 0.0}};
	double got = sup_grid_norm_diff(outer, 10, K, 0.1, 0.02);
	CHECK(std::abs(got - 1.0 / (10 * 2.0)) <= 0.05 / 20.0);

	CHECK(kind_of([&] { sup_grid_norm_diff(std::vector<Complex>{1.05}, 10, K, 0.1, 0.05); }) ==
	      ErrorKind::AnalyticityViolated);

	auto O = example1_rectangle();
	auto s100 = example1_split(100), s200 = example1_split(200);
	double v100 = sup_grid_norm_diff(s100.outer_roots, s100.m_n, O, 0.05, 0.02);
	double v200 = sup_grid_norm_diff(s200.outer_roots, s200.m_n, O, 0.05, 0.02);
	CHECK(v200 <= 0.55 * v100);
}
