#include "lucaslab/cli.hpp"

#include "lucaslab/measures.hpp"
#include "lucaslab/rootfind.hpp"
#include "parallel.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lucaslab::cli {

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& stdout_)
{
	if (path.empty() || path == "-")
	{
		stdout_ << text;
		return;
	}
	std::ofstream f(path, std::ios::binary);
	if (!f)
		throw Error(ErrorKind::InvalidInput, fmt::format("cannot write {}", path));
	f << text;
	if (!f)
		throw Error(ErrorKind::InvalidInput, fmt::format("write to {} failed", path));
}

std::string params_line(const io::json& params) { return "# params: " + params.dump() + "\n"; }

} // namespace

int exit_code_for(ErrorKind kind) noexcept
{
	switch (kind)
	{
	case ErrorKind::NonConvergence:
	case ErrorKind::ConstructionInvariant: return kExitNonConvergence;
	case ErrorKind::DegenerateRadius:
	case ErrorKind::AnalyticityViolated:
	case ErrorKind::ContourTooClose:
	case ErrorKind::NonIntegerWinding: return kExitDegenerate;
	default: return kExitUsage;
	}
}

int cmd_roots(const RootsOptions& opt, std::ostream& stdout_)
{
	RootSolveResult r;
	io::json input;
	if (opt.chebyshev)
	{
		r = solve_chebyshev(*opt.chebyshev, opt.tol, opt.max_iter);
		input = {{"chebyshev", *opt.chebyshev}};
	}
	else
	{
		if (opt.input.empty())
			throw Error(ErrorKind::InvalidInput, "roots: need a polynomial file or --chebyshev N");
		auto p = io::polynomial_from_json(io::load_json_argument(opt.input));
		r = solve(p, opt.tol, opt.max_iter);
		input = io::to_json(p);
	}
	io::json j = io::to_json(r);
	j["input"] = input;
	j["parameters"] = {{"tol", opt.tol}, {"max_iter", opt.max_iter}};
	write_output(opt.out, j.dump(2) + "\n", stdout_);
	return r.converged ? kExitOk : kExitNonConvergence;
}

ConvergeRun run_converge(const SequenceSpec& spec)
{
	spec.validate();
	const auto idx = spec.indices();
	const ConvexDomain domain = counting_domain(spec);
	ConvergeRun run{spec, std::vector<RatioReport>(idx.size()), std::vector<int>(idx.size())};
	detail::parallel_for(idx.size(), [&](size_t i) {
		const int n = idx[i];
		auto inst = generate(spec, n);
		auto crit = solve_critical_points(inst.roots);
		if (!crit.converged)
			throw Error(ErrorKind::NonConvergence,
			            fmt::format("critical points of instance n = {} did not converge", n));
		run.rows[i] = ratio_report(inst.roots, crit.roots, domain, spec.eps, n);
		run.k_n[i] = split_factor(inst.roots, domain, spec.eps).k_n;
	});
	return run;
}

std::string converge_csv(const ConvergeRun& run)
{
	std::string s = std::string(io::kFormatTag) + "\n" + params_line(io::to_json(run.spec));
	s += io::ratio_csv_header() + "\n";
	for (const auto& r : run.rows)
		s += io::ratio_csv_row(r) + "\n";
	return s;
}

io::json converge_json(const ConvergeRun& run)
{
	io::json rows = io::json::array();
	for (size_t i = 0; i < run.rows.size(); ++i)
	{
		auto j = io::to_json(run.rows[i]);
		j["k_n"] = run.k_n[i];
		j["flagged"] = run.rows[i].boundary_grazing > 0;
		rows.push_back(j);
	}
	return {{"format", "lucaslab-v1"}, {"params", io::to_json(run.spec)}, {"rows", rows}};
}

io::json converge_summary(const ConvergeRun& run)
{
	io::json flagged = io::json::array(), deficits = io::json::array();
	int max_grazing = 0;
	for (size_t i = 0; i < run.rows.size(); ++i)
	{
		const auto& r = run.rows[i];
		max_grazing = std::max(max_grazing, r.boundary_grazing);
		if (r.boundary_grazing > 0)
			flagged.push_back(r.n);
		deficits.push_back({{"n", r.n}, {"k_n", run.k_n[i]}, {"deficit", hurwitz_deficit(r, run.k_n[i])}});
	}
	io::json j{{"format", "lucaslab-v1"},
	           {"params", io::to_json(run.spec)},
	           {"rows", run.rows.size()},
	           {"max_grazing", max_grazing},
	           {"flagged", flagged},
	           {"certifying", flagged.empty()},
	           {"hurwitz_deficit", deficits}};
	if (!run.rows.empty())
	{
		j["final_n"] = run.rows.back().n;
		j["final_ratio_theorem"] = run.rows.back().ratio_theorem;
		j["final_ratio_problem"] = run.rows.back().ratio_problem;
	}
	return j;
}

int cmd_converge(const ConvergeOptions& opt, std::ostream& stdout_)
{
	if (opt.format != "csv" && opt.format != "json")
		throw Error(ErrorKind::InvalidInput, "--format must be csv or json");
	auto run = run_converge(opt.spec);
	write_output(opt.out, opt.format == "csv" ? converge_csv(run) : converge_json(run).dump(2) + "\n",
	             stdout_);
	std::string summary = opt.summary;
	if (summary.empty() && !opt.out.empty() && opt.out != "-")
		summary = opt.out + ".summary.json";
	if (!summary.empty())
		write_output(summary, converge_summary(run).dump(2) + "\n", stdout_);
	return kExitOk;
}

std::optional<Figure> parse_figure(const std::string& name)
{
	if (name == "fig1")
		return Figure::Fig1;
	if (name == "fig2-left")
		return Figure::Fig2Left;
	if (name == "fig2-right")
		return Figure::Fig2Right;
	return std::nullopt;
}

ScatterPlot figure_plot(Figure which)
{
	ScatterPlot plot;
	switch (which)
	{
	case Figure::Fig1:
	{
		plot.title = "Zeros of (z - i) T_30(z) and of its derivative";
		plot.large.push_back({0.0, 1.0});
		for (Complex x : chebyshev_nodes(30))
			plot.large.push_back(x);
		break;
	}
	case Figure::Fig2Left:
	{
		auto inst = figure2_left();
		plot.title = "Zeros of P (degree 14) and P'";
		plot.large = inst.roots;
		plot.outline = ConvexDomain::unit_disk();
		break;
	}
	case Figure::Fig2Right:
	{
		auto inst = figure2_right();
		plot.title = "Zeros of P (degree 32) and P'";
		plot.large = inst.roots;
		plot.outline = ConvexDomain::rectangle(-1.0, 1.0, -1.0, 1.0);
		break;
	}
	}
	auto crit = solve_critical_points(plot.large);
	if (!crit.converged)
		throw Error(ErrorKind::NonConvergence, "figure: critical points did not converge");
	plot.small = crit.roots;
	return plot;
}

int cmd_figure(Figure which, const std::string& out, std::ostream& stdout_)
{
	write_output(out, render_svg(figure_plot(which)), stdout_);
	return kExitOk;
}

std::vector<double> effective_radii(const DiagOptions& opt)
{
	if (!opt.radii.empty())
		return opt.radii;
	return {1.0 + 2.0 * opt.spec.eps};
}

std::vector<DiagRow> run_diag(const DiagOptions& opt)
{
	opt.spec.validate();
	if (!(opt.grid_step > 0.0))
		throw Error(ErrorKind::InvalidInput, "diag: grid step must be positive");
	const auto radii = effective_radii(opt);
	for (double r : radii)
		if (!(r > 0.0))
			throw Error(ErrorKind::InvalidInput, "diag: radii must be positive");
	const auto idx = opt.spec.indices();
	const ConvexDomain domain = counting_domain(opt.spec);
	std::vector<DiagRow> rows(idx.size());
	detail::parallel_for(idx.size(), [&](size_t i) {
		auto inst = generate(opt.spec, idx[i]);
		auto split = split_factor(inst.roots, domain, opt.spec.eps);
		DiagRow row;
		row.n = idx[i];
		row.m_n = split.m_n;
		row.k_n = split.k_n;
		row.outer_mass_ratio = outer_mass_ratio(split);
		for (double r : radii)
		{
			double used = regular_radius(r, split.outer_roots);
			row.radii.push_back(used);
			row.lp_circle.push_back(
			    lp_circle_norm(split.outer_roots, split.m_n, used, opt.p, opt.nodes));
		}
		row.sup_grid_norm_diff = sup_grid_norm_diff(split.outer_roots, split.m_n, domain,
		                                            opt.spec.eps, opt.grid_step);
		rows[i] = std::move(row);
	});
	return rows;
}

namespace {

io::json diag_params(const DiagOptions& opt)
{
	return {{"spec", io::to_json(opt.spec)},
	        {"radii", effective_radii(opt)},
	        {"p", opt.p},
	        {"nodes", opt.nodes},
	        {"grid_step", opt.grid_step}};
}

} // namespace

std::string diag_csv(const DiagOptions& opt, const std::vector<DiagRow>& rows)
{
	const auto radii = effective_radii(opt);
	std::string s = std::string(io::kFormatTag) + "\n" + params_line(diag_params(opt));
	s += "n,m_n,k_n,outer_mass_ratio";
	for (double r : radii)
		s += ",lp_circle_r" + io::format_number(r);
	s += ",sup_grid_norm_diff\n";
	for (const auto& row : rows)
	{
		s += fmt::format("{},{},{},{}", row.n, row.m_n, row.k_n,
		                 io::format_number(row.outer_mass_ratio));
		for (double v : row.lp_circle)
			s += "," + io::format_number(v);
		s += "," + io::format_number(row.sup_grid_norm_diff) + "\n";
	}
	return s;
}

io::json diag_json(const DiagOptions& opt, const std::vector<DiagRow>& rows)
{
	io::json records = io::json::array();
	const double eps = opt.spec.eps;
	for (const auto& row : rows)
	{
		records.push_back(io::diagnostic_record(row.n, row.m_n, row.k_n, "outer_mass_ratio",
		                                        row.outer_mass_ratio, 0.0, 0.0, eps, 0));
		for (size_t k = 0; k < row.radii.size(); ++k)
			records.push_back(io::diagnostic_record(row.n, row.m_n, row.k_n, "lp_circle_norm",
			                                        row.lp_circle[k], row.radii[k], opt.p, eps,
			                                        opt.nodes));
		auto sup = io::diagnostic_record(row.n, row.m_n, row.k_n, "sup_grid_norm_diff",
		                                 row.sup_grid_norm_diff, 0.0, 0.0, eps, 0);
		sup["parameters"]["grid_step"] = opt.grid_step;
		records.push_back(sup);
	}
	return {{"format", "lucaslab-v1"}, {"params", diag_params(opt)}, {"records", records}};
}

int cmd_diag(const DiagOptions& opt, std::ostream& stdout_)
{
	if (opt.format != "csv" && opt.format != "json")
		throw Error(ErrorKind::InvalidInput, "--format must be csv or json");
	auto rows = run_diag(opt);
	write_output(opt.out,
	             opt.format == "csv" ? diag_csv(opt, rows) : diag_json(opt, rows).dump(2) + "\n",
	             stdout_);
	return kExitOk;
}

namespace {

struct SequenceFlags
{
	std::string spec;
	std::string domain;
	std::optional<double> eps;
	std::optional<int> n_min, n_max;
	std::optional<std::uint64_t> seed;

	void add_to(CLI::App* app, bool with_spec = true)
	{
		if (with_spec)
			app->add_option("--spec", spec, "SequenceSpec as inline JSON or a file path");
		app->add_option("--domain", domain, "domain as inline JSON or a file path");
		app->add_option("--eps", eps, "neighborhood radius");
		app->add_option("--n-min", n_min, "first index");
		app->add_option("--n-max", n_max, "last index");
		app->add_option("--seed", seed, "run seed");
	}

	SequenceSpec resolve(std::optional<SequenceKind> forced = std::nullopt) const
	{
		SequenceSpec s;
		if (!spec.empty())
			s = io::sequence_spec_from_json(io::load_json_argument(spec));
		if (forced)
		{
			s.kind = *forced;
			if (spec.empty())
				s.domain = io::default_domain(*forced);
		}
		if (!domain.empty())
			s.domain = io::domain_from_json(io::load_json_argument(domain));
		if (eps)
			s.eps = *eps;
		if (n_min || n_max)
			s.n_values.clear();
		if (n_min)
			s.n_min = *n_min;
		if (n_max)
			s.n_max = *n_max;
		if (seed)
			s.seed = *seed;
		return s;
	}
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& stdout_, std::ostream& stderr_)
{
	CLI::App app{"lucaslab: zeros of polynomials and their derivatives near convex domains"};
	app.require_subcommand(1);

	RootsOptions roots;
	auto* c_roots = app.add_subcommand("roots", "find all roots of a polynomial");
	c_roots->add_option("input", roots.input, "polynomial JSON (inline or file)");
	c_roots->add_option("--chebyshev", roots.chebyshev, "use T_N instead of a file");
	c_roots->add_option("--out", roots.out, "output path (default stdout)");
	c_roots->add_option("--tol", roots.tol, "convergence tolerance");
	c_roots->add_option("--max-iter", roots.max_iter, "iteration limit");

	ConvergeOptions converge;
	SequenceFlags converge_seq;
	auto* c_converge = app.add_subcommand("converge", "ratio report per n for a sequence");
	converge_seq.add_to(c_converge);
	c_converge->add_option("--out", converge.out, "output path (default stdout)");
	c_converge->add_option("--format", converge.format, "csv or json")
	    ->check(CLI::IsMember({"csv", "json"}));
	c_converge->add_option("--summary", converge.summary, "summary JSON path");

	ConvergeOptions counter;
	SequenceFlags counter_seq;
	auto* c_counter =
	    app.add_subcommand("counterexample", "converge on the Chebyshev counterexample sequence");
	counter_seq.add_to(c_counter, false);
	c_counter->add_option("--out", counter.out, "output path (default stdout)");
	c_counter->add_option("--format", counter.format, "csv or json")
	    ->check(CLI::IsMember({"csv", "json"}));
	c_counter->add_option("--summary", counter.summary, "summary JSON path");

	std::string figure_name, figure_out;
	auto* c_figure = app.add_subcommand("figure", "SVG plot of zeros and critical points");
	c_figure->add_option("which", figure_name, "fig1, fig2-left or fig2-right")
	    ->required()
	    ->check(CLI::IsMember({"fig1", "fig2-left", "fig2-right"}));
	c_figure->add_option("--out", figure_out, "output path (default stdout)");

	DiagOptions diag;
	SequenceFlags diag_seq;
	auto* c_diag = app.add_subcommand("diag", "Cauchy transform diagnostics per n");
	diag_seq.add_to(c_diag);
	c_diag->add_option("--r", diag.radii, "circle radii (default 1 + 2 eps)")->delimiter(',');
	c_diag->add_option("--p", diag.p, "exponent");
	c_diag->add_option("--nodes", diag.nodes, "nodes on each circle");
	c_diag->add_option("--grid-step", diag.grid_step, "grid step of the sup norm");
	c_diag->add_option("--out", diag.out, "output path (default stdout)");
	c_diag->add_option("--format", diag.format, "csv or json")
	    ->check(CLI::IsMember({"csv", "json"}));

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		std::ostringstream out, err;
		int code = app.exit(e, out, err);
		stdout_ << out.str();
		stderr_ << err.str();
		return code == 0 ? kExitOk : kExitUsage;
	}

	try
	{
		if (*c_roots)
			return cmd_roots(roots, stdout_);
		if (*c_converge)
		{
			converge.spec = converge_seq.resolve();
			return cmd_converge(converge, stdout_);
		}
		if (*c_counter)
		{
			counter.spec = counter_seq.resolve(SequenceKind::ChebyshevCounterexample);
			return cmd_converge(counter, stdout_);
		}
		if (*c_figure)
			return cmd_figure(*parse_figure(figure_name), figure_out, stdout_);
		if (*c_diag)
		{
			diag.spec = diag_seq.resolve();
			return cmd_diag(diag, stdout_);
		}
	}
	catch (const Error& e)
	{
		stderr_ << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
		return exit_code_for(e.kind());
	}
	catch (const std::exception& e)
	{
		stderr_ << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}

} // namespace lucaslab::cli
