#pragma once

#include <string>
#include <vector>

#include "peglab/adf.hpp"
#include "peglab/geom.hpp"

namespace peglab::io {

/// Minimal SVG writer in data coordinates.  The viewBox is the data
/// bounding box plus a 5% margin, with y pointing up.
class SvgFigure {
 public:
  void polyline(const std::vector<DPoint>& pts, const std::string& color, bool closed = false,
                double width = 1.5);
  void polyline(const DPolyline& p, const std::string& color, double width = 1.5) {
    polyline(p.vertices(), color, p.closed(), width);
  }
  void dots(const std::vector<DPoint>& pts, const std::string& color);
  /// Step plot of a profile over [lo, hi], vertical jumps included.
  void step_plot(const WindingProfile& w, double lo, double hi, const std::string& color);

  bool empty() const { return items_.empty(); }
  std::string str() const;

 private:
  void extend(const DPoint& p);

  struct Item {
    std::vector<DPoint> pts;
    std::string color;
    bool closed = false;
    bool dots = false;
    double width = 1.5;
  };
  std::vector<Item> items_;
  double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0;
  bool has_bounds_ = false;
};

std::string palette(std::size_t i);

}  // namespace peglab::io
