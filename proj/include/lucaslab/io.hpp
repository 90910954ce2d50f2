#pragma once

#include "lucaslab/counting.hpp"
#include "lucaslab/geometry.hpp"
#include "lucaslab/poly.hpp"
#include "lucaslab/rootfind.hpp"
#include "lucaslab/sequences.hpp"

#include <json.hpp>
#include <string>

namespace lucaslab::io {

using json = nlohmann::json;

/// Header line of every CSV this library writes.
inline constexpr const char* kFormatTag = "# lucaslab-v1";

json to_json(Complex z);
Complex complex_from_json(const json& j);

/// {"coeffs": [[re, im], ...]}, ascending degree.
json to_json(const Polynomial& p);
/// {"leading": [re, im], "roots": [[re, im], ...]}
json to_json(const RootForm& p);
/// Accepts either form; a root form is expanded with from_roots.
Polynomial polynomial_from_json(const json& j);

/// {"disk": {"center": [re, im], "radius": r}} or
/// {"polygon": {"vertices": [[re, im], ...]}}
json to_json(const ConvexDomain& d);
/// {"disk": {"center", "radius"}}, {"rectangle": [xmin, xmax, ymin, ymax]} or
/// {"polygon": {"vertices": [...]}}; rectangles are written back as polygons.
ConvexDomain domain_from_json(const json& j);

json to_json(const RootSolveResult& r);
json to_json(const RatioReport& r);
json to_json(const GeneratedInstance& inst);

json to_json(const SequenceSpec& spec);
/// Missing fields keep the SequenceSpec defaults, except the domain, which
/// defaults per kind (rectangle O, unit disk, disk of radius 1.01, square).
SequenceSpec sequence_spec_from_json(const json& j);

ConvexDomain default_domain(SequenceKind kind);

/// {n, m_n, k_n, quantity_name, value, parameters{r, p, eps, nodes}}
json diagnostic_record(int n, int m_n, int k_n, const std::string& quantity, double value,
                       double r, double p, double eps, int nodes);

/// Column order: n, m_n, p_in, dp_in, dp_in_eps, ratio_problem,
/// ratio_theorem, grazing, flagged.
std::string ratio_csv_header();
std::string ratio_csv_row(const RatioReport& r);

/// Shortest round-trip decimal form of a double.
std::string format_number(double x);

/// Parses text that is either inline JSON (starts with '{' or '[') or the
/// path of a JSON file. Throws Error(InvalidInput) on failure.
json load_json_argument(const std::string& text_or_path);

} // namespace lucaslab::io
