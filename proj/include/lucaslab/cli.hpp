#pragma once

#include "lucaslab/counting.hpp"
#include "lucaslab/error.hpp"
#include "lucaslab/io.hpp"
#include "lucaslab/sequences.hpp"
#include "lucaslab/svg.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lucaslab::cli {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitNonConvergence = 2, kExitDegenerate = 3 };

int exit_code_for(ErrorKind kind) noexcept;

// roots

struct RootsOptions
{
	std::string input; // polynomial JSON (inline or path)
	std::optional<int> chebyshev;
	std::string out; // empty or "-" for stdout
	double tol = 1e-10;
	int max_iter = 200;
};

/// Returns the exit code: 0 when the solver converged, 2 otherwise.
int cmd_roots(const RootsOptions& opt, std::ostream& stdout_);

// converge

struct ConvergeRun
{
	SequenceSpec spec;
	std::vector<RatioReport> rows; // ascending n
	std::vector<int> k_n;
};

/// Instances in parallel, rows in ascending n. Throws Error(NonConvergence)
/// when a critical-point solve fails.
ConvergeRun run_converge(const SequenceSpec& spec);

std::string converge_csv(const ConvergeRun& run);
io::json converge_json(const ConvergeRun& run);
/// Final ratios, max grazing, flagged n values and the certifying flag.
io::json converge_summary(const ConvergeRun& run);

struct ConvergeOptions
{
	SequenceSpec spec;
	std::string out;
	std::string format = "csv";
	std::string summary; // defaults to <out>.summary.json when out is a file
};

int cmd_converge(const ConvergeOptions& opt, std::ostream& stdout_);

// figure

enum class Figure { Fig1, Fig2Left, Fig2Right };

std::optional<Figure> parse_figure(const std::string& name);
ScatterPlot figure_plot(Figure which);

int cmd_figure(Figure which, const std::string& out, std::ostream& stdout_);

// diag

struct DiagRow
{
	int n = 0;
	int m_n = 0;
	int k_n = 0;
	double outer_mass_ratio = 0.0;
	std::vector<double> radii;      // after resampling
	std::vector<double> lp_circle;  // one per radius
	double sup_grid_norm_diff = 0.0;
};

struct DiagOptions
{
	SequenceSpec spec;
	std::vector<double> radii; // empty means {1 + 2 eps}
	double p = 1.0;
	int nodes = 2048;
	double grid_step = 0.02;
	std::string out;
	std::string format = "csv";
};

std::vector<double> effective_radii(const DiagOptions& opt);
std::vector<DiagRow> run_diag(const DiagOptions& opt);
std::string diag_csv(const DiagOptions& opt, const std::vector<DiagRow>& rows);
io::json diag_json(const DiagOptions& opt, const std::vector<DiagRow>& rows);

int cmd_diag(const DiagOptions& opt, std::ostream& stdout_);

/// Full command line front end; never throws.
int run(int argc, const char* const* argv, std::ostream& stdout_, std::ostream& stderr_);

} // namespace lucaslab::cli
