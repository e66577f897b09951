#include "svg.hpp"

#include <algorithm>
#include <sstream>

namespace peglab::io {

std::string palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  return colors[i % 6];
}

void SvgFigure::extend(const DPoint& p) {
  if (!has_bounds_) {
    x0_ = x1_ = p.x;
    y0_ = y1_ = p.y;
    has_bounds_ = true;
    return;
  }
  x0_ = std::min(x0_, p.x);
  x1_ = std::max(x1_, p.x);
  y0_ = std::min(y0_, p.y);
  y1_ = std::max(y1_, p.y);
}

void SvgFigure::polyline(const std::vector<DPoint>& pts, const std::string& color, bool closed,
                         double width) {
  for (const auto& p : pts) extend(p);
  items_.push_back({pts, color, closed, false, width});
}

void SvgFigure::dots(const std::vector<DPoint>& pts, const std::string& color) {
  for (const auto& p : pts) extend(p);
  items_.push_back({pts, color, false, true, 1.0});
}

void SvgFigure::step_plot(const WindingProfile& w, double lo, double hi, const std::string& color) {
  std::vector<DPoint> pts;
  double at = lo;
  const auto& bps = w.breakpoints();
  for (std::size_t i = 0; i <= bps.size(); ++i) {
    const double v = to_double(w.plateaus()[i]);
    const double end = i < bps.size() ? std::clamp(to_double(bps[i]), lo, hi) : hi;
    pts.push_back({at, v});
    pts.push_back({end, v});
    at = end;
  }
  polyline(pts, color);
}

std::string SvgFigure::str() const {
  double x0 = x0_, x1 = x1_, y0 = y0_, y1 = y1_;
  if (x1 - x0 <= 0) {
    x0 -= 1;
    x1 += 1;
  }
  if (y1 - y0 <= 0) {
    y0 -= 1;
    y1 += 1;
  }
  const double mx = 0.05 * (x1 - x0), my = 0.05 * (y1 - y0);
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  const double r = 0.004 * std::max(x1 - x0, y1 - y0);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(x0) << ' '
      << format_double(-y1) << ' ' << format_double(x1 - x0) << ' ' << format_double(y1 - y0)
      << "\" width=\"800\" height=\"800\" preserveAspectRatio=\"xMidYMid meet\">\n";
  out << "<g transform=\"scale(1,-1)\" fill=\"none\">\n";
  for (const auto& it : items_) {
    if (it.dots) {
      for (const auto& p : it.pts)
        out << "<circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(p.y) << "\" r=\""
            << format_double(r) << "\" fill=\"" << it.color << "\"/>\n";
      continue;
    }
    out << '<' << (it.closed ? "polygon" : "polyline") << " points=\"";
    for (std::size_t i = 0; i < it.pts.size(); ++i)
      out << (i ? " " : "") << format_double(it.pts[i].x) << ',' << format_double(it.pts[i].y);
    out << "\" stroke=\"" << it.color << "\" stroke-width=\"" << format_double(it.width)
        << "\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace peglab::io
