#pragma once

#include <stdexcept>
#include <string>

namespace lucaslab {

enum class ErrorKind {
	InvalidInput,
	EvaluationOverflow,
	CoefficientOverflow,
	UnsupportedDegree,
	InvalidSubstitution,
	Pole,
	UnsupportedExponent,
	DegenerateRadius,
	AnalyticityViolated,
	ContourTooClose,
	NonIntegerWinding,
	ConstructionInvariant,
	InvalidShell,
	NonConvergence,
};

class Error : public std::runtime_error
{
  public:
	Error(ErrorKind kind, const std::string& what)
	    : std::runtime_error(what), kind_(kind)
	{}

	ErrorKind kind() const noexcept { return kind_; }

  private:
	ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

} // namespace lucaslab
