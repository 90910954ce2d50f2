#include "lucaslab/io.hpp"

#include "lucaslab/error.hpp"

#include <fmt/format.h>
#include <fstream>
#include <sstream>

namespace lucaslab::io {

namespace {

[[noreturn]] void bad(const std::string& what)
{
	throw Error(ErrorKind::InvalidInput, what);
}

double number(const json& j, const char* what)
{
	if (!j.is_number())
		bad(fmt::format("expected a number for {}", what));
	return j.get<double>();
}

std::vector<Complex> complex_list(const json& j, const char* what)
{
	if (!j.is_array())
		bad(fmt::format("expected an array for {}", what));
	std::vector<Complex> out;
	for (const auto& x : j)
		out.push_back(complex_from_json(x));
	return out;
}

json complex_list(const std::vector<Complex>& v)
{
	json a = json::array();
	for (auto z : v)
		a.push_back(to_json(z));
	return a;
}

} // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j)
{
	if (j.is_number())
		return {j.get<double>(), 0.0};
	if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
		bad("expected a complex number as [re, im]");
	Complex z{j[0].get<double>(), j[1].get<double>()};
	if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
		bad("complex number must be finite");
	return z;
}

json to_json(const Polynomial& p) { return {{"coeffs", complex_list(p.coeffs())}}; }

json to_json(const RootForm& p)
{
	return {{"leading", to_json(p.leading)}, {"roots", complex_list(p.roots)}};
}

Polynomial polynomial_from_json(const json& j)
{
	if (!j.is_object())
		bad("polynomial JSON must be an object");
	if (j.contains("coeffs"))
		return Polynomial(complex_list(j.at("coeffs"), "coeffs"));
	if (j.contains("roots"))
	{
		Complex leading = j.contains("leading") ? complex_from_json(j.at("leading")) : 1.0;
		auto roots = complex_list(j.at("roots"), "roots");
		return from_roots(roots, leading);
	}
	bad("polynomial JSON needs \"coeffs\" or \"roots\"");
}

json to_json(const ConvexDomain& d)
{
	if (d.is_disk())
	{
		const auto& disk = d.as_disk();
		return {{"disk", {{"center", to_json(disk.center)}, {"radius", disk.radius}}}};
	}
	return {{"polygon", {{"vertices", complex_list(d.as_polygon().vertices)}}}};
}

ConvexDomain domain_from_json(const json& j)
{
	if (!j.is_object())
		bad("domain JSON must be an object");
	if (j.contains("disk"))
	{
		const auto& d = j.at("disk");
		if (!d.is_object() || !d.contains("radius"))
			bad("disk needs \"radius\"");
		Complex c = d.contains("center") ? complex_from_json(d.at("center")) : 0.0;
		return ConvexDomain::disk(c, number(d.at("radius"), "radius"));
	}
	if (j.contains("polygon"))
	{
		const auto& p = j.at("polygon");
		if (!p.is_object() || !p.contains("vertices"))
			bad("polygon needs \"vertices\"");
		return ConvexDomain::polygon(complex_list(p.at("vertices"), "vertices"));
	}
	if (j.contains("rectangle"))
	{
		const auto& r = j.at("rectangle");
		if (!r.is_array() || r.size() != 4)
			bad("rectangle needs [xmin, xmax, ymin, ymax]");
		return ConvexDomain::rectangle(number(r[0], "xmin"), number(r[1], "xmax"),
		                               number(r[2], "ymin"), number(r[3], "ymax"));
	}
	bad("domain JSON needs \"disk\", \"rectangle\" or \"polygon\"");
}

json to_json(const RootSolveResult& r)
{
	return {{"roots", complex_list(r.roots)},
	        {"residuals", r.residuals},
	        {"iterations", r.iterations},
	        {"converged", r.converged}};
}

json to_json(const RatioReport& r)
{
	return {{"n", r.n},
	        {"m_n", r.m_n},
	        {"counts",
	         {{"p_in", r.count_p_in_domain},
	          {"dp_in", r.count_dp_in_domain},
	          {"dp_in_eps", r.count_dp_in_eps}}},
	        {"ratios", {{"problem", r.ratio_problem}, {"theorem", r.ratio_theorem}}},
	        {"grazing", r.boundary_grazing}};
}

json to_json(const GeneratedInstance& inst)
{
	json meta = json::object();
	for (const auto& [k, v] : inst.metadata)
		meta[k] = v;
	json j{{"n", inst.n},
	       {"leading", to_json(inst.leading)},
	       {"roots", complex_list(inst.roots)},
	       {"metadata", meta}};
	if (!inst.p.is_zero())
		j["coeffs"] = complex_list(inst.p.coeffs());
	j["a_n"] = inst.a_n ? json(*inst.a_n) : json(nullptr);
	if (inst.domain_of_interest)
		j["domain"] = to_json(*inst.domain_of_interest);
	return j;
}

ConvexDomain default_domain(SequenceKind kind)
{
	switch (kind)
	{
	case SequenceKind::ChebyshevCounterexample: return example1_rectangle();
	case SequenceKind::StrictConvexCounterexample:
	case SequenceKind::RandomOutlier: return ConvexDomain::unit_disk();
	case SequenceKind::Figure2Left: return ConvexDomain::disk(0.0, 1.01);
	case SequenceKind::Figure2Right: return ConvexDomain::rectangle(-1.0, 1.0, -1.0, 1.0);
	}
	return ConvexDomain::unit_disk();
}

json to_json(const SequenceSpec& spec)
{
	json outliers = spec.outliers.mode == OutlierSchedule::Mode::Sqrt
	                    ? json{{"mode", "sqrt"}}
	                    : json{{"mode", "constant"}, {"count", spec.outliers.count}};
	return {{"kind", to_string(spec.kind)},
	        {"n_min", spec.n_min},
	        {"n_max", spec.n_max},
	        {"n_values", spec.n_values},
	        {"domain", to_json(spec.domain)},
	        {"eps", spec.eps},
	        {"M", spec.M},
	        {"outliers", outliers},
	        {"shell", {spec.shell.inner, spec.shell.outer}},
	        {"seed", spec.seed}};
}

SequenceSpec sequence_spec_from_json(const json& j)
{
	if (!j.is_object())
		bad("sequence spec must be a JSON object");
	SequenceSpec s;
	if (!j.contains("kind") || !j.at("kind").is_string())
		bad("sequence spec needs a string \"kind\"");
	auto kind = parse_sequence_kind(j.at("kind").get<std::string>());
	if (!kind)
		bad(fmt::format("unknown sequence kind \"{}\"", j.at("kind").get<std::string>()));
	s.kind = *kind;
	s.domain = default_domain(s.kind);

	auto integer = [&](const char* key, int& out) {
		if (j.contains(key))
		{
			if (!j.at(key).is_number_integer())
				bad(fmt::format("\"{}\" must be an integer", key));
			out = j.at(key).get<int>();
		}
	};
	integer("n_min", s.n_min);
	integer("n_max", s.n_max);
	if (j.contains("n_values"))
	{
		if (!j.at("n_values").is_array())
			bad("\"n_values\" must be an array of integers");
		for (const auto& x : j.at("n_values"))
		{
			if (!x.is_number_integer())
				bad("\"n_values\" must be an array of integers");
			s.n_values.push_back(x.get<int>());
		}
	}
	if (j.contains("domain"))
		s.domain = domain_from_json(j.at("domain"));
	if (j.contains("eps"))
		s.eps = number(j.at("eps"), "eps");
	if (j.contains("M"))
		s.M = number(j.at("M"), "M");
	if (j.contains("outliers"))
	{
		const auto& o = j.at("outliers");
		std::string mode = o.is_object() && o.contains("mode") && o.at("mode").is_string()
		                       ? o.at("mode").get<std::string>()
		                       : "";
		if (mode == "sqrt")
			s.outliers.mode = OutlierSchedule::Mode::Sqrt;
		else if (mode == "constant")
		{
			s.outliers.mode = OutlierSchedule::Mode::Constant;
			if (!o.contains("count") || !o.at("count").is_number_integer())
				bad("constant outlier schedule needs an integer \"count\"");
			s.outliers.count = o.at("count").get<int>();
		}
		else
			bad("\"outliers.mode\" must be \"sqrt\" or \"constant\"");
	}
	if (j.contains("shell"))
	{
		const auto& sh = j.at("shell");
		if (!sh.is_array() || sh.size() != 2)
			bad("\"shell\" must be [inner, outer]");
		s.shell = {number(sh[0], "shell inner"), number(sh[1], "shell outer")};
	}
	if (j.contains("seed"))
	{
		if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
			bad("\"seed\" must be a non-negative integer");
		s.seed = j.at("seed").get<std::uint64_t>();
	}
	return s;
}

json diagnostic_record(int n, int m_n, int k_n, const std::string& quantity, double value,
                       double r, double p, double eps, int nodes)
{
	return {{"n", n},
	        {"m_n", m_n},
	        {"k_n", k_n},
	        {"quantity_name", quantity},
	        {"value", value},
	        {"parameters", {{"r", r}, {"p", p}, {"eps", eps}, {"nodes", nodes}}}};
}

std::string format_number(double x) { return fmt::format("{}", x); }

std::string ratio_csv_header()
{
	return "n,m_n,p_in,dp_in,dp_in_eps,ratio_problem,ratio_theorem,grazing,flagged";
}

std::string ratio_csv_row(const RatioReport& r)
{
	return fmt::format("{},{},{},{},{},{},{},{},{}", r.n, r.m_n, r.count_p_in_domain,
	                   r.count_dp_in_domain, r.count_dp_in_eps, format_number(r.ratio_problem),
	                   format_number(r.ratio_theorem), r.boundary_grazing,
	                   r.boundary_grazing > 0 ? 1 : 0);
}

json load_json_argument(const std::string& text_or_path)
{
	std::string text;
	auto first = text_or_path.find_first_not_of(" \t\r\n");
	if (first != std::string::npos &&
	    (text_or_path[first] == '{' || text_or_path[first] == '['))
		text = text_or_path;
	else
	{
		std::ifstream in(text_or_path);
		if (!in)
			bad(fmt::format("cannot read {}", text_or_path));
		std::ostringstream ss;
		ss << in.rdbuf();
		text = ss.str();
	}
	try
	{
		return json::parse(text);
	}
	catch (const json::exception& e)
	{
		bad(fmt::format("malformed JSON: {}", e.what()));
	}
}

} // namespace lucaslab::io
