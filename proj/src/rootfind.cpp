#include "lucaslab/rootfind.hpp"

#include "lucaslab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lucaslab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Step
{
	Complex ratio;           // f / f'
	bool exact = false;      // f(z) evaluated to exactly zero
	bool negligible = false; // |f(z)| within the rounding error of its evaluation
};

constexpr double kRoundingSlack = 8.0;

/// Coefficient-form evaluator; switches to the reversed polynomial for |z| > 1
/// so high degrees never overflow.
class HornerEvaluator
{
  public:
	explicit HornerEvaluator(const Polynomial& p) : deg_(p.degree())
	{
		double scale = p.max_abs_coeff();
		for (auto c : p.coeffs())
			c_.push_back(c / scale);
	}

	int degree() const { return deg_; }

	Step step(Complex z) const
	{
		if (std::abs(z) <= 1.0)
		{
			Complex v{}, d{};
			double bound = 0.0, az = std::abs(z);
			for (auto it = c_.rbegin(); it != c_.rend(); ++it)
			{
				d = d * z + v;
				v = v * z + *it;
				bound = bound * az + std::abs(*it);
			}
			if (v == Complex{})
				return {{}, true};
			return {v / d, false, std::abs(v) <= kRoundingSlack * kEps * bound};
		}
		// p(z) = z^n R(1/z), p'/p = (n R - w R') / (z R)
		Complex w = 1.0 / z, v{}, d{};
		double bound = 0.0, aw = std::abs(w);
		for (auto c : c_)
		{
			d = d * w + v;
			v = v * w + c;
			bound = bound * aw + std::abs(c);
		}
		if (v == Complex{})
			return {{}, true};
		return {z * v / (static_cast<double>(deg_) * v - w * d), false,
		        std::abs(v) <= kRoundingSlack * kEps * bound};
	}

	double residual(Complex z) const
	{
		double az = std::abs(z);
		if (az <= 1.0)
		{
			Complex v{};
			for (auto it = c_.rbegin(); it != c_.rend(); ++it)
				v = v * z + *it;
			return std::abs(v) / std::pow(1.0 + az, deg_);
		}
		Complex w = 1.0 / z, v{};
		for (auto c : c_)
			v = v * w + c;
		return std::abs(v) / std::pow(1.0 + std::abs(w), deg_);
	}

  private:
	int deg_;
	std::vector<Complex> c_;
};

class ChebyshevEvaluator
{
  public:
	explicit ChebyshevEvaluator(int n) : n_(n) {}

	int degree() const { return n_; }

	Step step(Complex z) const
	{
		auto [t, dt] = eval(z);
		if (t == Complex{})
			return {{}, true};
		// the recurrence loses about n ulps near [-1, 1]
		return {t / dt, false, std::abs(t) <= kRoundingSlack * kEps * n_};
	}

	double residual(Complex z) const
	{
		auto [t, dt] = eval(z);
		(void)dt;
		return std::abs(t);
	}

  private:
	// (T_n, T_n') up to a common positive factor when rescaling kicked in;
	// the unscaled value is returned whenever it is representable.
	std::pair<Complex, Complex> eval(Complex z) const
	{
		Complex t0 = 1.0, t1 = z, d0 = 0.0, d1 = 1.0;
		if (n_ == 0)
			return {t0, d0};
		for (int k = 1; k < n_; ++k)
		{
			Complex t2 = 2.0 * z * t1 - t0;
			Complex d2 = 2.0 * t1 + 2.0 * z * d1 - d0;
			t0 = t1;
			t1 = t2;
			d0 = d1;
			d1 = d2;
			double m = std::max(std::abs(t1), std::abs(d1));
			if (m > 1e200)
			{
				t0 /= m;
				t1 /= m;
				d0 /= m;
				d1 /= m;
			}
		}
		return {t1, d1};
	}

	int n_;
};

class CriticalEvaluator
{
  public:
	explicit CriticalEvaluator(std::span<const Complex> roots)
	    : roots_(roots.begin(), roots.end())
	{}

	int degree() const { return static_cast<int>(roots_.size()) - 1; }

	Step step(Complex z) const
	{
		Complex l{}, dl{};
		double scale = 0.0;
		for (auto a : roots_)
		{
			Complex d = z - a;
			if (d == Complex{})
			{
				// sitting on a root; only a critical point if it is repeated
				if (multiplicity(a) > 1)
					return {{}, true};
				return {Complex{1e-8 * (1.0 + std::abs(z)), 0.0}, false};
			}
			Complex inv = 1.0 / d;
			l += inv;
			dl -= inv * inv;
			scale += std::abs(inv);
		}
		if (l == Complex{})
			return {{}, true};
		// p'/p'' = L / (L^2 + L')
		return {l / (l * l + dl), false, std::abs(l) <= kRoundingSlack * kEps * scale};
	}

	double residual(Complex z) const
	{
		Complex l{};
		double scale = 0.0;
		for (auto a : roots_)
		{
			Complex d = z - a;
			if (d == Complex{})
				return multiplicity(a) > 1 ? 0.0 : 1.0;
			Complex inv = 1.0 / d;
			l += inv;
			scale += std::abs(inv);
		}
		return std::abs(l) / scale;
	}

  private:
	int multiplicity(Complex a) const
	{
		return static_cast<int>(std::count(roots_.begin(), roots_.end(), a));
	}

	std::vector<Complex> roots_;
};

std::vector<Complex> circle_guesses(Complex center, double radius, int count)
{
	std::vector<Complex> w;
	w.reserve(count);
	for (int k = 0; k < count; ++k)
		w.push_back(center +
		            std::polar(radius, 2.0 * std::numbers::pi * k / count + 0.4));
	return w;
}

template <class Evaluator>
RootSolveResult aberth(const Evaluator& f, std::vector<Complex> w, double tol,
                       int max_iter)
{
	const size_t n = w.size();
	std::vector<bool> frozen(n, false);
	RootSolveResult result;

	int iter = 0;
	for (; iter < max_iter; ++iter)
	{
		size_t active = 0;
		for (size_t j = 0; j < n; ++j)
		{
			if (frozen[j])
				continue;
			Step s = f.step(w[j]);
			if (s.exact)
			{
				frozen[j] = true;
				continue;
			}
			Complex repulsion{};
			for (size_t k = 0; k < n; ++k)
				if (k != j && w[j] != w[k])
					repulsion += 1.0 / (w[j] - w[k]);
			Complex denom = 1.0 - s.ratio * repulsion;
			Complex corr = denom == Complex{} ? s.ratio : s.ratio / denom;
			if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag()))
				corr = s.ratio;
			w[j] -= corr;
			if (s.negligible || std::abs(corr) <= 4.0 * kEps * (1.0 + std::abs(w[j])))
				frozen[j] = true;
			else
				++active;
		}
		if (active == 0)
		{
			++iter;
			break;
		}
	}

	// Newton polishing, accepted only when the residual does not grow
	for (auto& z : w)
	{
		double r0 = f.residual(z);
		Complex cand = z;
		for (int s = 0; s < 2; ++s)
		{
			Step st = f.step(cand);
			if (st.exact)
				break;
			cand -= st.ratio;
		}
		if (std::isfinite(cand.real()) && std::isfinite(cand.imag()) &&
		    f.residual(cand) <= r0)
			z = cand;
	}

	result.roots = std::move(w);
	result.residuals.reserve(n);
	result.converged = true;
	for (auto z : result.roots)
	{
		double r = f.residual(z);
		result.residuals.push_back(r);
		if (!(r <= tol))
			result.converged = false;
	}
	result.iterations = iter;
	return result;
}

} // namespace

double scaled_residual(const Polynomial& p, Complex z)
{
	if (p.is_zero())
		return 0.0;
	return HornerEvaluator(p).residual(z);
}

RootSolveResult solve(const Polynomial& p, double tol, int max_iter)
{
	if (p.degree() < 1)
		throw Error(ErrorKind::InvalidInput, "solve: polynomial degree must be >= 1");
	const int deg = p.degree();
	const auto& c = p.coeffs();
	// Fujiwara bound: within a factor 2 of the largest root modulus, unlike
	// 1 + max |c_j / c_n|, which grows like the coefficients themselves
	double bound = 0.0;
	for (int j = 1; j <= deg; ++j)
	{
		double q = std::abs(c[deg - j] / c[deg]);
		if (j == deg)
			q *= 0.5;
		bound = std::max(bound, std::pow(q, 1.0 / j));
	}
	if (!(bound > 0.0))
		bound = 1.0;
	return aberth(HornerEvaluator(p), circle_guesses(0.0, 2.0 * bound, deg), tol,
	              max_iter);
}

RootSolveResult solve_chebyshev(int n, double tol, int max_iter)
{
	if (n < 1 || n > kDegreeGuard)
		throw Error(ErrorKind::InvalidInput, "solve_chebyshev: n must be in [1, 512]");
	return aberth(ChebyshevEvaluator(n), circle_guesses(0.0, 1.0, n), tol, max_iter);
}

RootSolveResult solve_critical_points(std::span<const Complex> roots, double tol,
                                      int max_iter)
{
	if (roots.size() < 2)
		throw Error(ErrorKind::InvalidInput,
		            "solve_critical_points: need at least two roots");
	// critical points share the centroid of the roots and lie in their hull
	Complex centroid{};
	for (auto a : roots)
		centroid += a;
	centroid /= static_cast<double>(roots.size());
	double radius = 0.0;
	for (auto a : roots)
		radius = std::max(radius, std::abs(a - centroid));
	if (radius == 0.0)
	{
		// all roots coincide: p' vanishes only there
		RootSolveResult r;
		r.roots.assign(roots.size() - 1, roots.front());
		r.residuals.assign(roots.size() - 1, 0.0);
		r.converged = true;
		return r;
	}
	return aberth(CriticalEvaluator(roots),
	              circle_guesses(centroid, radius, static_cast<int>(roots.size()) - 1),
	              tol, max_iter);
}

PolishResult polish(const Polynomial& p, Complex approx, int steps)
{
	if (p.degree() < 1)
		return {approx, false};
	HornerEvaluator f(p);
	const double r0 = f.residual(approx);
	Complex z = approx;
	for (int s = 0; s < steps; ++s)
	{
		if (f.residual(z) == 0.0)
			break;
		auto [v, d] = evaluate_with_derivative(p, z);
		if (d == Complex{})
			return {approx, true};
		z -= v / d;
	}
	if (!(f.residual(z) <= r0))
		return {approx, false};
	return {z, false};
}

} // namespace lucaslab
