#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "peglab/geom.hpp"

namespace peglab {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoCrossingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square with vertices (x,y), (x+a,y+b), (x+a-b,y+a+b), (x-b,y+a).
template <class T>
struct SquareQuad {
  T x{};
  T y{};
  T a{};
  T b{};
};

template <class T>
std::array<Point<T>, 4> square_vertices(const SquareQuad<T>& q) {
  return {Point<T>{q.x, q.y}, Point<T>{q.x + q.a, q.y + q.b},
          Point<T>{q.x + q.a - q.b, q.y + q.a + q.b}, Point<T>{q.x - q.b, q.y + q.a}};
}

/// Similar copy of the trapezoid (0,0), (1,0), (s+1,r), (-s,r) placed by
/// mapping the first side onto (a,b).  s = 0, r = 1 gives square_vertices.
template <class T>
std::array<Point<T>, 4> trapezoid_vertices(const SquareQuad<T>& q, const T& s, const T& r) {
  return {Point<T>{q.x, q.y}, Point<T>{q.x + q.a, q.y + q.b},
          Point<T>{q.x + (s + 1) * q.a - r * q.b, q.y + (s + 1) * q.b + r * q.a},
          Point<T>{q.x - s * q.a - r * q.b, q.y - s * q.b + r * q.a}};
}

/// Samples of x(t), y(t), a(t), b(t), interpolated linearly in t.
template <class T>
struct SquareTrace {
  std::vector<T> grid;
  std::vector<T> x;
  std::vector<T> y;
  std::vector<T> a;
  std::vector<T> b;

  std::size_t size() const { return grid.size(); }
  /// Throws InvalidInput on mismatched lengths or fewer than two samples.
  void validate() const;
};

/// Vertex paths of the traced quadrilaterals, one vector of points per
/// vertex.  Consecutive points may coincide.
template <class T>
std::array<std::vector<Point<T>>, 4> trace_paths(const SquareTrace<T>& trace, const T& s = T(0),
                                                 const T& r = T(1));

/// Integral of y dx along a point sequence (same formula as area_under).
template <class T>
T path_area(const std::vector<Point<T>>& path);

/// [int_1 - int_2 + int_3 - int_4] - [(a^2-b^2)/2 at the end - at the start].
template <class T>
T conserved_residual(const SquareTrace<T>& trace);

/// Weighted identity for the trapezoid family:
/// (2s+1)(int_1 - int_2) + int_3 - int_4 - r(2s+1)/2 * change of (a^2 - b^2).
template <class T>
T trapezoid_residual(const SquareTrace<T>& trace, const T& s, const T& r);

struct FixedPointOptions {
  double tol = 1e-12;
  int max_iter = 200;
};

/// Iterates (a,b) -> (g(t-b) - f(t), f(t+a) - f(t)) from `guess`.
std::pair<double, double> solve_vertex_fixed_point(const DFunction& f, const DFunction& g, double t,
                                                   double tol = 1e-12, int max_iter = 200,
                                                   std::pair<double, double> guess = {0.0, 0.0});

struct TrapezoidShape {
  double s = 0.0;
  double r = 1.0;
};

/// Solves for (a,b) with the first two trapezoid vertices on f and the
/// fourth on g.  The defining scalar equation is strictly increasing in a
/// under the Lipschitz precondition, so it is solved by bracketing.
std::pair<double, double> solve_trapezoid_vertex(const DFunction& f, const DFunction& g, double t,
                                                 const TrapezoidShape& shape, double tol = 1e-13);

struct SquareFamily {
  SquareTrace<double> trace;
  std::array<DPolyline, 4> curves;
};

SquareFamily trace_square_family(const DFunction& f, const DFunction& g, int N,
                                 const FixedPointOptions& options = {});
SquareFamily trace_trapezoid_family(const DFunction& f, const DFunction& g,
                                    const TrapezoidShape& shape, int N);

struct InscriptionResult {
  SquareQuad<double> square;
  std::array<double, 4> residuals{};
  double t_lo = 0;
  double t_hi = 0;
  double t = 0;
  double h = 0;
};

InscriptionResult find_inscribed_square(const DFunction& f, const DFunction& g, int N,
                                        double tol = 1e-12, const FixedPointOptions& options = {});
/// Every refined bracket, in increasing t.
std::vector<InscriptionResult> find_inscribed_squares(const DFunction& f, const DFunction& g, int N,
                                                      double tol = 1e-12,
                                                      const FixedPointOptions& options = {});

InscriptionResult find_inscribed_trapezoid(const DFunction& f, const DFunction& g,
                                           const TrapezoidShape& shape, int N, double tol = 1e-12);
std::vector<InscriptionResult> find_inscribed_trapezoids(const DFunction& f, const DFunction& g,
                                                         const TrapezoidShape& shape, int N,
                                                         double tol = 1e-12);

/// Euclidean distance from p to the graph of f over its domain.
double distance_to_graph(const DFunction& f, const DPoint& p);

/// Throws InvalidInput unless f, g satisfy the two-graph hypotheses with
/// Lipschitz constants below `lipschitz_bound`.
void check_graph_pair(const DFunction& f, const DFunction& g, double lipschitz_bound);

}  // namespace peglab
