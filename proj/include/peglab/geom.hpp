#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "peglab/rational.hpp"

namespace peglab {

/// Absolute tolerance used by numeric-mode comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

template <class T>
struct Point {
  T x{};
  T y{};

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const T& s, const Point& a) { return {s * a.x, s * a.y}; }
};

using RPoint = Point<Rational>;
using DPoint = Point<double>;

template <class T>
T cross(const Point<T>& u, const Point<T>& v) {
  return u.x * v.y - u.y * v.x;
}

template <class T>
T dot(const Point<T>& u, const Point<T>& v) {
  return u.x * v.x + u.y * v.y;
}

DPoint to_double(const RPoint& p);
RPoint from_double(const DPoint& p);

/// Sign of the orientation of (a, b, c).  Exact for both instantiations:
/// the double version falls back to rational evaluation when the floating
/// point result is not certified.
int orientation(const RPoint& a, const RPoint& b, const RPoint& c);
int orientation(const DPoint& a, const DPoint& b, const DPoint& c);

/// True iff the closed segments [a,b] and [c,d] share a point.
template <class T>
bool segments_intersect(const Point<T>& a, const Point<T>& b, const Point<T>& c,
                        const Point<T>& d);

template <class T>
class Polyline {
 public:
  Polyline() = default;
  /// Requires at least two vertices and distinct consecutive vertices
  /// (including last/first when closed).
  explicit Polyline(std::vector<Point<T>> vertices, bool closed = false);

  const std::vector<Point<T>>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return closed_ ? vertices_.size() : vertices_.size() - 1; }
  const Point<T>& edge_start(std::size_t i) const { return vertices_[i]; }
  const Point<T>& edge_end(std::size_t i) const {
    return vertices_[i + 1 == vertices_.size() ? 0 : i + 1];
  }
  Polyline reversed() const;

 private:
  std::vector<Point<T>> vertices_;
  bool closed_ = false;
};

using RPolyline = Polyline<Rational>;
using DPolyline = Polyline<double>;

DPolyline to_double(const RPolyline& p);

/// Piecewise-linear function on an interval or on a circle of length L.
/// On an interval the value is held constant outside [t0, t1].
template <class T>
class PLFunction {
 public:
  PLFunction() = default;
  static PLFunction interval(std::vector<T> breakpoints, std::vector<T> values);
  static PLFunction circular(T period, std::vector<T> breakpoints, std::vector<T> values);

  T operator()(const T& t) const;

  const std::vector<T>& breakpoints() const { return breakpoints_; }
  const std::vector<T>& values() const { return values_; }
  bool is_circular() const { return circular_; }
  const T& period() const { return period_; }
  const T& lo() const { return breakpoints_.front(); }
  const T& hi() const { return breakpoints_.back(); }

  /// Graph over the domain as an open polyline (one period when circular).
  Polyline<T> graph() const;

 private:
  std::vector<T> breakpoints_;
  std::vector<T> values_;
  bool circular_ = false;
  T period_{};
};

using RFunction = PLFunction<Rational>;
using DFunction = PLFunction<double>;

DFunction to_double(const RFunction& f);

/// A closed curve on the cylinder (R / L Z) x R, stored as one period of
/// its lift.  The last lift vertex equals the first shifted by (degree*L, 0).
class CylCurve {
 public:
  CylCurve() = default;
  CylCurve(Rational L, std::vector<RPoint> lift);

  const Rational& L() const { return L_; }
  const std::vector<RPoint>& lift() const { return lift_; }
  int degree() const { return degree_; }
  std::size_t edge_count() const { return lift_.size() - 1; }

  /// Lift vertex with global index g (any integer); index g + edge_count()
  /// is vertex g shifted by (degree*L, 0).
  RPoint vertex(long long g) const;

  RPolyline lift_polyline() const { return RPolyline(lift_); }
  /// Lift over periods first..last inclusive, as an open polyline.
  RPolyline unrolled(int first, int last) const;
  /// Same curve with the lift re-based to start at vertex k.
  CylCurve rebased(std::size_t k) const;
  /// Curve translated by (dx, dy).
  CylCurve translated(const Rational& dx, const Rational& dy) const;

  Rational min_x() const;
  Rational max_x() const;
  Rational min_y() const;
  Rational max_y() const;

 private:
  Rational L_;
  std::vector<RPoint> lift_;
  int degree_ = 0;
};

/// Global indices g of lift edges (vertex g to vertex g + 1) whose
/// x-range meets [lo, hi], ascending.  Requires a nonzero degree.
std::vector<long long> lift_edges_in_range(const CylCurve& c, const Rational& lo,
                                           const Rational& hi);

/// Degree of a lift with the given circumference; throws InvalidInput when
/// the displacement is not an integer multiple of (L, 0).
int homology_degree(const Rational& L, const std::vector<RPoint>& lift);
inline int homology_degree(const CylCurve& c) { return c.degree(); }

template <class T>
T area_under(const Polyline<T>& curve);

/// Integral of y dx over the parts of the curve with lo <= x <= hi.
Rational area_under_strip(const RPolyline& curve, const Rational& lo, const Rational& hi);

template <class T>
T signed_area(const Polyline<T>& curve);

template <class T>
bool is_simple(const Polyline<T>& curve);

/// Simplicity on the cylinder: the lift and all of its translates are
/// pairwise disjoint apart from the shared joins.
bool is_simple(const CylCurve& curve);

template <class T>
int winding_number(const Polyline<T>& curve, const Point<T>& p, double tol = kDefaultTolerance);

template <class T>
T lipschitz_constant(const PLFunction<T>& f);

/// Description of the first general-position failure, if any.  Checks
/// distinct vertex abscissae (mod L), non-vertical edges and edge
/// directions of different curves not differing by a multiple of pi/4.
std::optional<std::string> general_position_violation(const std::vector<CylCurve>& curves);

std::vector<CylCurve> perturb_generic(const std::vector<CylCurve>& curves, std::uint64_t seed,
                                      const Rational& magnitude, int retry_budget = 64);

}  // namespace peglab
