#pragma once

#include "lucaslab/geometry.hpp"
#include "lucaslab/poly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lucaslab {

/**
 * Seeded generator with a platform-independent stream: mt19937_64 is fully
 * specified by the standard, and doubles are formed from the top 53 bits
 * (std::uniform_real_distribution is implementation-defined).
 */
class Rng
{
  public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	/// Uniform on [0, 1).
	double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
	std::mt19937_64 engine_;
};

/// Per-index seed derived from a run seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform point of the domain by bounding-box rejection.
Complex sample_in_domain(Rng& rng, const ConvexDomain& domain);

struct OutlierShell
{
	double inner = 0.0; // min distance to the domain
	double outer = 0.0; // max distance to the domain
};

struct GeneratedInstance
{
	int n = 0;
	/// Coefficient form; zero polynomial when the degree exceeds kDegreeGuard.
	Polynomial p;
	Complex leading{1.0, 0.0};
	/// Roots known by construction, with multiplicity.
	std::vector<Complex> roots;
	/// Downward shift of the counterexample kinds.
	std::optional<double> a_n;
	/// Domain the construction is about (rectangle O, unit disk, ...).
	std::optional<ConvexDomain> domain_of_interest;
	std::vector<std::pair<std::string, double>> metadata;

	RootForm root_form() const { return {leading, roots}; }
	int degree() const { return static_cast<int>(roots.size()); }
};

/// The open rectangle (-2, 2) x (-4, 0).
ConvexDomain example1_rectangle();

/**
 * (z - i) T_n(z) shifted down by a_n, where a_n is half the smallest
 * imaginary part of its critical points, capped at eps_cap / 2. Throws
 * Error(ConstructionInvariant) when a critical point is not strictly in the
 * upper half plane.
 */
GeneratedInstance chebyshev_counterexample(int n, double eps_cap = 0.05);

/**
 * The counterexample mapped by w = z / M + i sqrt(1 - 1/M^2): the shifted
 * Chebyshev roots land a_n / M below the chord of the unit circle at height
 * sqrt(1 - 1/M^2), the remaining root lands outside the disk.
 */
GeneratedInstance strict_convex_counterexample(int n, double M, double eps_cap = 0.05);

/**
 * n roots: n - outlier_count uniform in the domain and outlier_count
 * uniform in {z : shell.inner <= distance_to(domain, z) <= shell.outer}.
 */
GeneratedInstance random_outlier_sequence(int n, const ConvexDomain& domain, int outlier_count,
                                          OutlierShell shell, std::uint64_t seed);

/// (z^10 - 1)(z - 3 + 2i)(z + 3 - 2i)(z - 1 + 5i)(z + 5)
GeneratedInstance figure2_left();

/// Q (z - 3)(z + 2 - 2i)(z - 1 + i)(z + 2), Q with 7 interior equispaced
/// zeros on each side of the square with vertices (+-1, +-1).
GeneratedInstance figure2_right();

enum class SequenceKind {
	ChebyshevCounterexample,
	StrictConvexCounterexample,
	RandomOutlier,
	Figure2Left,
	Figure2Right,
};

const char* to_string(SequenceKind kind) noexcept;
std::optional<SequenceKind> parse_sequence_kind(const std::string& name);

struct OutlierSchedule
{
	enum class Mode { Constant, Sqrt };
	Mode mode = Mode::Sqrt;
	int count = 0; // used by Constant

	int at(int n) const;
};

struct SequenceSpec
{
	SequenceKind kind = SequenceKind::ChebyshevCounterexample;
	int n_min = 2;
	int n_max = 64;
	/// Explicit indices; overrides the n_min..n_max range when nonempty.
	std::vector<int> n_values;
	ConvexDomain domain = example1_rectangle();
	double eps = 0.05;
	double M = 10.0;
	OutlierSchedule outliers;
	OutlierShell shell{0.5, 1.5};
	std::uint64_t seed = 1;

	std::vector<int> indices() const;
	/// Throws Error(InvalidInput) when the range is empty or a parameter is
	/// outside the range of the generator it feeds.
	void validate() const;
};

/// The instance of the sequence at index n.
GeneratedInstance generate(const SequenceSpec& spec, int n);

/// Domain the counts of a sequence refer to.
ConvexDomain counting_domain(const SequenceSpec& spec);

} // namespace lucaslab
