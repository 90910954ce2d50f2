#include "lucaslab/svg.hpp"

#include "lucaslab/contour.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace lucaslab {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 40.0;

struct Viewport
{
	double x0, x1, y0, y1;
	double scale, ox, oy;

	double px(double x) const { return ox + (x - x0) * scale; }
	double py(double y) const { return oy + (y1 - y) * scale; }
};

Viewport fit(const ScatterPlot& plot)
{
	double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
	bool first = true;
	auto grow = [&](Complex z) {
		if (first)
		{
			x0 = x1 = z.real();
			y0 = y1 = z.imag();
			first = false;
			return;
		}
		x0 = std::min(x0, z.real());
		x1 = std::max(x1, z.real());
		y0 = std::min(y0, z.imag());
		y1 = std::max(y1, z.imag());
	};
	for (auto z : plot.large)
		grow(z);
	for (auto z : plot.small)
		grow(z);
	if (plot.outline)
	{
		auto [lo, hi] = plot.outline->bounding_box();
		grow(lo);
		grow(hi);
	}
	double pad = 0.1 * std::max({x1 - x0, y1 - y0, 1.0});
	Viewport v;
	v.x0 = std::floor(x0 - pad);
	v.x1 = std::ceil(x1 + pad);
	v.y0 = std::floor(y0 - pad);
	v.y1 = std::ceil(y1 + pad);
	double inner = kCanvas - 2 * kMargin;
	v.scale = std::min(inner / (v.x1 - v.x0), inner / (v.y1 - v.y0));
	v.ox = kMargin + 0.5 * (inner - (v.x1 - v.x0) * v.scale);
	v.oy = kMargin + 0.5 * (inner - (v.y1 - v.y0) * v.scale);
	return v;
}

std::string num(double x)
{
	// avoid "-0.000"
	if (std::abs(x) < 5e-4)
		x = 0.0;
	return fmt::format("{:.3f}", x);
}

void axes(std::string& s, const Viewport& v)
{
	s += "<g class=\"axes\" stroke=\"#888\" stroke-width=\"1\">\n";
	s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\"/>\n",
	                 num(v.px(v.x0)), num(v.py(v.y1)), num((v.x1 - v.x0) * v.scale),
	                 num((v.y1 - v.y0) * v.scale));
	if (v.y0 <= 0 && 0 <= v.y1)
		s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(v.px(v.x0)),
		                 num(v.py(0)), num(v.px(v.x1)), num(v.py(0)));
	if (v.x0 <= 0 && 0 <= v.x1)
		s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(v.px(0)),
		                 num(v.py(v.y0)), num(v.px(0)), num(v.py(v.y1)));
	s += "</g>\n<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
	int xstep = std::max(1, static_cast<int>(std::ceil((v.x1 - v.x0) / 10)));
	int ystep = std::max(1, static_cast<int>(std::ceil((v.y1 - v.y0) / 10)));
	for (int k = static_cast<int>(v.x0); k <= static_cast<int>(v.x1); k += xstep)
		s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
		                 num(v.px(k)), num(v.py(v.y0) + 14), k);
	for (int k = static_cast<int>(v.y0); k <= static_cast<int>(v.y1); k += ystep)
		s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
		                 num(v.px(v.x0) - 4), num(v.py(k) + 3), k);
	s += "</g>\n";
}

void dots(std::string& s, const Viewport& v, const std::vector<Complex>& pts, const char* cls,
          double r, const char* fill)
{
	s += fmt::format("<g class=\"{}\" fill=\"{}\">\n", cls, fill);
	for (auto z : pts)
		s += fmt::format("<circle class=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" data-z=\"{} {}\"/>\n",
		                 cls, num(v.px(z.real())), num(v.py(z.imag())), r, z.real(), z.imag());
	s += "</g>\n";
}

} // namespace

std::string render_svg(const ScatterPlot& plot)
{
	const Viewport v = fit(plot);
	std::string s;
	s += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" "
	                 "viewBox=\"0 0 {0} {0}\">\n",
	                 static_cast<int>(kCanvas));
	s += fmt::format("<title>{}</title>\n", plot.title);
	s += fmt::format("<desc>viewport x [{}, {}] y [{}, {}]; {} zeros of p, {} zeros of p'</desc>\n",
	                 v.x0, v.x1, v.y0, v.y1, plot.large.size(), plot.small.size());
	s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	axes(s, v);
	if (plot.outline)
	{
		s += "<polygon class=\"domain\" fill=\"none\" stroke=\"#3a7\" stroke-width=\"1\" points=\"";
		auto pts = sample_contour(eps_contour(*plot.outline, 0.0), 0.02 * (v.x1 - v.x0));
		for (size_t i = 0; i < pts.size(); ++i)
			s += fmt::format("{}{},{}", i ? " " : "", num(v.px(pts[i].real())),
			                 num(v.py(pts[i].imag())));
		s += "\"/>\n";
	}
	dots(s, v, plot.large, "zero-p", kLargeDotRadius, "#1f4e9c");
	dots(s, v, plot.small, "zero-dp", kSmallDotRadius, "#c0392b");
	s += "</svg>\n";
	return s;
}

} // namespace lucaslab
