#include "lucaslab/poly.hpp"

#include "lucaslab/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

namespace lucaslab {

namespace {

bool is_finite(Complex z)
{
	return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_finite(const std::vector<Complex>& coeffs, const char* op)
{
	for (auto c : coeffs)
		if (!is_finite(c))
			throw Error(ErrorKind::CoefficientOverflow,
			            fmt::format("{}: coefficient overflow; evaluate in root "
			                        "form instead",
			                        op));
}

} // namespace

const char* to_string(ErrorKind kind) noexcept
{
	switch (kind)
	{
	case ErrorKind::InvalidInput: return "invalid-input";
	case ErrorKind::EvaluationOverflow: return "evaluation-overflow";
	case ErrorKind::CoefficientOverflow: return "coefficient-overflow";
	case ErrorKind::UnsupportedDegree: return "unsupported-degree";
	case ErrorKind::InvalidSubstitution: return "invalid-substitution";
	case ErrorKind::Pole: return "pole";
	case ErrorKind::UnsupportedExponent: return "unsupported-exponent";
	case ErrorKind::DegenerateRadius: return "degenerate-radius";
	case ErrorKind::AnalyticityViolated: return "analyticity-violated";
	case ErrorKind::ContourTooClose: return "contour-too-close";
	case ErrorKind::NonIntegerWinding: return "non-integer-winding";
	case ErrorKind::ConstructionInvariant: return "construction-invariant-violated";
	case ErrorKind::InvalidShell: return "invalid-shell";
	case ErrorKind::NonConvergence: return "non-convergence";
	}
	return "unknown";
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
	while (!coeffs_.empty() && coeffs_.back() == Complex{})
		coeffs_.pop_back();
}

Polynomial Polynomial::generator() { return Polynomial({0.0, 1.0}); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

double Polynomial::max_abs_coeff() const noexcept
{
	double m = 0.0;
	for (auto c : coeffs_)
		m = std::max(m, std::abs(c));
	return m;
}

Complex ScaledComplex::value() const
{
	return {std::ldexp(mantissa.real(), exponent),
	        std::ldexp(mantissa.imag(), exponent)};
}

double ScaledComplex::log2_abs() const
{
	return std::log2(std::abs(mantissa)) + exponent;
}

namespace {

// error-free transformations: a + b = s + e and a * b = p + e exactly
void two_sum(double& a, double& b)
{
	double s = a + b;
	double bb = s - a;
	double e = (a - (s - bb)) + (b - bb);
	a = e;
	b = s;
}

void two_prod(double a, double b, double& p, double& e)
{
	p = a * b;
	e = std::fma(a, b, -p);
}

/// A real number carried as the unevaluated sum hi + mid + lo.
struct Triple
{
	double hi = 0.0, mid = 0.0, lo = 0.0;
};

/// Compresses a list of exact terms into a Triple. Three error-free
/// summation sweeps leave the sum in the last slot and the residual terms,
/// now small, ahead of it.
Triple compress(double* v, int m)
{
	for (int pass = 0; pass < 3; ++pass)
		for (int i = 1; i < m; ++i)
			two_sum(v[i - 1], v[i]);
	Triple t;
	t.hi = v[m - 1];
	for (int pass = 0; pass < 2; ++pass)
		for (int i = 1; i < m - 1; ++i)
			two_sum(v[i - 1], v[i]);
	t.mid = m > 1 ? v[m - 2] : 0.0;
	for (int i = 0; i < m - 2; ++i)
		t.lo += v[i];
	return t;
}

/// Appends the exact products of every part of a by b, times sign.
int push_products(const Triple& a, double b, double sign, double* out)
{
	int k = 0;
	for (double part : {a.hi, a.mid, a.lo})
	{
		two_prod(sign * part, b, out[k], out[k + 1]);
		k += 2;
	}
	return k;
}

struct TripleComplex
{
	Triple re, im;

	Complex value() const { return {re.hi + (re.mid + re.lo), im.hi + (im.mid + im.lo)}; }
};

/// a * z + b with a triple-length a and b.
TripleComplex mul_add(const TripleComplex& a, Complex z, const TripleComplex& b)
{
	const double x = z.real(), y = z.imag();
	double buf[15];
	int k = push_products(a.re, x, 1.0, buf);
	k += push_products(a.im, y, -1.0, buf + k);
	for (double part : {b.re.hi, b.re.mid, b.re.lo})
		buf[k++] = part;
	TripleComplex out;
	out.re = compress(buf, k);
	k = push_products(a.re, y, 1.0, buf);
	k += push_products(a.im, x, 1.0, buf + k);
	for (double part : {b.im.hi, b.im.mid, b.im.lo})
		buf[k++] = part;
	out.im = compress(buf, k);
	return out;
}

TripleComplex lift(Complex c) { return {{c.real(), 0.0, 0.0}, {c.imag(), 0.0, 0.0}}; }

/// Horner over [first, last) from the highest coefficient down, carrying
/// value and derivative in triple length. The monomial basis can be badly
/// conditioned (about 1e24 for T_64 at z = 1), so working precision is not
/// enough to resolve values of order one.
template <class It>
HornerPair accurate_horner(It first, It last, Complex z, bool with_derivative)
{
	TripleComplex v, d;
	for (; first != last; ++first)
	{
		if (with_derivative)
			d = mul_add(d, z, v);
		v = mul_add(v, z, lift(*first));
	}
	return {v.value(), d.value()};
}

} // namespace

Complex evaluate(const Polynomial& p, Complex z)
{
	const auto& c = p.coeffs();
	Complex acc = accurate_horner(c.rbegin(), c.rend(), z, false).value;
	if (!is_finite(acc))
		throw Error(ErrorKind::EvaluationOverflow,
		            fmt::format("evaluation overflow at z = ({}, {})", z.real(),
		                        z.imag()));
	return acc;
}

HornerPair evaluate_with_derivative(const Polynomial& p, Complex z)
{
	Complex value{}, deriv{};
	const auto& c = p.coeffs();
	for (auto it = c.rbegin(); it != c.rend(); ++it)
	{
		deriv = deriv * z + value;
		value = value * z + *it;
	}
	return {value, deriv};
}

Complex log_derivative(const Polynomial& p, Complex z)
{
	const auto& c = p.coeffs();
	const double n = static_cast<double>(p.degree());
	if (std::abs(z) <= 1.0)
	{
		auto [v, d] = accurate_horner(c.rbegin(), c.rend(), z, true);
		if (v == Complex{})
			return {std::numeric_limits<double>::infinity(), 0.0};
		return d / v;
	}
	// p(z) = z^n R(w), w = 1/z  =>  p'/p = (n R - w R') / (z R)
	Complex w = 1.0 / z;
	auto [v, d] = accurate_horner(c.begin(), c.end(), w, true);
	if (v == Complex{})
		return {std::numeric_limits<double>::infinity(), 0.0};
	return (n * v - w * d) / (z * v);
}

ScaledComplex evaluate(const RootForm& p, Complex z)
{
	// renormalize the running product every step so it never leaves range
	Complex acc = p.leading;
	int exponent = 0;
	auto renormalize = [&] {
		double m = std::max(std::abs(acc.real()), std::abs(acc.imag()));
		if (m == 0.0 || !std::isfinite(m))
			return;
		int e = 0;
		std::frexp(m, &e);
		acc = {std::ldexp(acc.real(), -e), std::ldexp(acc.imag(), -e)};
		exponent += e;
	};
	renormalize();
	for (auto r : p.roots)
	{
		acc *= z - r;
		renormalize();
	}
	return {acc, exponent};
}

Polynomial derivative(const Polynomial& p)
{
	const auto& c = p.coeffs();
	if (c.size() <= 1)
		return {};
	std::vector<Complex> d(c.size() - 1);
	for (size_t j = 1; j < c.size(); ++j)
		d[j - 1] = c[j] * static_cast<double>(j);
	return Polynomial(std::move(d));
}

Polynomial from_roots(std::span<const Complex> roots, Complex leading)
{
	if (leading == Complex{})
		throw Error(ErrorKind::InvalidInput, "from_roots: leading coefficient is zero");
	if (roots.size() > static_cast<size_t>(kDegreeGuard))
		throw Error(ErrorKind::UnsupportedDegree,
		            fmt::format("from_roots: degree {} above guard {}", roots.size(),
		                        kDegreeGuard));

	// incremental convolution with (z - r), monic until the end, in triple
	// length so that only the final rounding of each coefficient remains
	std::vector<TripleComplex> t{lift(1.0)};
	t.reserve(roots.size() + 1);
	const TripleComplex zero;
	for (auto r : roots)
	{
		t.push_back(t.back());
		for (size_t j = t.size() - 2; j > 0; --j)
			t[j] = mul_add(t[j], -r, t[j - 1]);
		t[0] = mul_add(t[0], -r, zero);
	}
	std::vector<Complex> c;
	c.reserve(t.size());
	for (const auto& x : t)
		c.push_back(mul_add(x, leading, zero).value());
	check_finite(c, "from_roots");
	return Polynomial(std::move(c));
}

Polynomial multiply(const Polynomial& p, const Polynomial& q)
{
	if (p.is_zero() || q.is_zero())
		return {};
	const auto& a = p.coeffs();
	const auto& b = q.coeffs();
	std::vector<Complex> c(a.size() + b.size() - 1);
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j)
			c[i + j] += a[i] * b[j];
	check_finite(c, "multiply");
	return Polynomial(std::move(c));
}

Polynomial chebyshev_t(int n)
{
	if (n < 0 || n > kDegreeGuard)
		throw Error(ErrorKind::UnsupportedDegree,
		            fmt::format("chebyshev_t: degree {} outside [0, {}]", n,
		                        kDegreeGuard));
	std::vector<Complex> prev{1.0};
	if (n == 0)
		return Polynomial(std::move(prev));
	std::vector<Complex> cur{0.0, 1.0};
	for (int k = 1; k < n; ++k)
	{
		// T_{k+1} = 2 z T_k - T_{k-1}
		std::vector<Complex> next(cur.size() + 1);
		for (size_t j = 0; j < cur.size(); ++j)
			next[j + 1] = 2.0 * cur[j];
		for (size_t j = 0; j < prev.size(); ++j)
			next[j] -= prev[j];
		prev = std::move(cur);
		cur = std::move(next);
	}
	return Polynomial(std::move(cur));
}

Polynomial affine_substitute(const Polynomial& p, Complex a, Complex b)
{
	if (a == Complex{})
		throw Error(ErrorKind::InvalidSubstitution, "affine_substitute: a = 0");
	const auto& c = p.coeffs();
	if (c.empty())
		return {};

	// Horner in the polynomial ring: acc = acc * (a z + b) + c_j
	std::vector<Complex> acc{c.back()};
	acc.reserve(c.size());
	for (size_t j = c.size() - 1; j-- > 0;)
	{
		acc.push_back(0.0);
		for (size_t k = acc.size() - 1; k > 0; --k)
			acc[k] = acc[k] * b + acc[k - 1] * a;
		acc[0] = acc[0] * b + c[j];
	}
	check_finite(acc, "affine_substitute");
	return Polynomial(std::move(acc));
}

std::vector<Complex> chebyshev_nodes(int n)
{
	std::vector<Complex> nodes;
	nodes.reserve(n);
	for (int k = 1; k <= n; ++k)
		nodes.emplace_back(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n)), 0.0);
	return nodes;
}

} // namespace lucaslab
