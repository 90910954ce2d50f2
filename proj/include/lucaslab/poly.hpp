#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lucaslab {

using Complex = std::complex<double>;

/// Largest degree accepted by chebyshev_t and from_roots in double precision.
inline constexpr int kDegreeGuard = 512;

/**
 * Complex univariate polynomial in coefficient form, ascending degree
 * (coeffs()[j] multiplies z^j). Trailing exact zeros are trimmed on
 * construction, so the empty list is the zero polynomial.
 */
class Polynomial
{
  public:
	Polynomial() = default;
	explicit Polynomial(std::vector<Complex> coeffs);

	/// z, the identity polynomial
	static Polynomial generator();
	static Polynomial constant(Complex c);

	const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
	bool is_zero() const noexcept { return coeffs_.empty(); }

	/// Degree; -1 for the zero polynomial.
	int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

	/// Leading coefficient; 0 for the zero polynomial.
	Complex leading() const noexcept
	{
		return coeffs_.empty() ? Complex{} : coeffs_.back();
	}

	double max_abs_coeff() const noexcept;

	friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
	std::vector<Complex> coeffs_;
};

/// Root-factored form: leading * prod (z - root_j).
struct RootForm
{
	Complex leading{1.0, 0.0};
	std::vector<Complex> roots;
};

/**
 * A complex value carried as mantissa * 2^exponent, so that products of
 * hundreds of factors stay representable.
 */
struct ScaledComplex
{
	Complex mantissa;
	int exponent = 0;

	/// mantissa * 2^exponent; may overflow to infinity.
	Complex value() const;
	/// log2 |value|; -inf for zero.
	double log2_abs() const;
};

struct HornerPair
{
	Complex value;
	Complex derivative;
};

/// Horner evaluation with a triple-length accumulator, accurate even where
/// the monomial coefficients cancel heavily. Throws Error(EvaluationOverflow)
/// on a non-finite result.
Complex evaluate(const Polynomial& p, Complex z);

/// p(z) and p'(z) in a single Horner pass, without the overflow check.
HornerPair evaluate_with_derivative(const Polynomial& p, Complex z);

ScaledComplex evaluate(const RootForm& p, Complex z);

/// p'(z)/p(z) from the coefficients, with the accumulation of evaluate(); for
/// |z| > 1 the reversed polynomial is used so that high degrees do not
/// overflow. Infinite when p(z) == 0.
Complex log_derivative(const Polynomial& p, Complex z);

Polynomial derivative(const Polynomial& p);

Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// First-kind Chebyshev polynomial by the three-term recurrence.
Polynomial chebyshev_t(int n);

/// q(z) = p(a z + b). Throws Error(InvalidSubstitution) when a == 0.
Polynomial affine_substitute(const Polynomial& p, Complex a, Complex b);

/// Zeros of T_n, cos((2k-1) pi / (2n)) for k = 1..n (descending).
std::vector<Complex> chebyshev_nodes(int n);

} // namespace lucaslab
