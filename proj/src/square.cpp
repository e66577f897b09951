#include "peglab/square.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace peglab {

template <class T>
void SquareTrace<T>::validate() const {
  const std::size_t n = grid.size();
  if (x.size() != n || y.size() != n || a.size() != n || b.size() != n)
    throw InvalidInput("square trace lists have mismatched lengths");
  if (n < 2) throw InvalidInput("square trace needs at least two grid points");
}

template <class T>
std::array<std::vector<Point<T>>, 4> trace_paths(const SquareTrace<T>& trace, const T& s,
                                                 const T& r) {
  trace.validate();
  std::array<std::vector<Point<T>>, 4> paths;
  for (auto& p : paths) p.reserve(trace.size());
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const SquareQuad<T> q{trace.x[k], trace.y[k], trace.a[k], trace.b[k]};
    const auto v = trapezoid_vertices(q, s, r);
    for (int i = 0; i < 4; ++i) paths[i].push_back(v[i]);
  }
  return paths;
}

template <class T>
T path_area(const std::vector<Point<T>>& path) {
  T sum = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    sum += (path[i].y + path[i + 1].y) * (path[i + 1].x - path[i].x);
  return sum / 2;
}

template <class T>
T trapezoid_residual(const SquareTrace<T>& trace, const T& s, const T& r) {
  const auto paths = trace_paths(trace, s, r);
  const T w = 2 * s + 1;
  const T lhs = w * (path_area(paths[0]) - path_area(paths[1])) + path_area(paths[2]) -
                path_area(paths[3]);
  const std::size_t n = trace.size() - 1;
  const T q1 = trace.a[n] * trace.a[n] - trace.b[n] * trace.b[n];
  const T q0 = trace.a[0] * trace.a[0] - trace.b[0] * trace.b[0];
  const T rhs = r * w * (q1 - q0) / 2;
  return lhs - rhs;
}

template <class T>
T conserved_residual(const SquareTrace<T>& trace) {
  return trapezoid_residual(trace, T(0), T(1));
}

std::pair<double, double> solve_vertex_fixed_point(const DFunction& f, const DFunction& g, double t,
                                                   double tol, int max_iter,
                                                   std::pair<double, double> guess) {
  if (!(tol > 0)) throw InvalidInput("fixed point tolerance must be positive");
  auto [a, b] = guess;
  const double ft = f(t);
  for (int it = 0; it < max_iter; ++it) {
    const double na = g(t - b) - ft;
    const double nb = f(t + a) - ft;
    const double disp = std::max(std::abs(na - a), std::abs(nb - b));
    a = na;
    b = nb;
    if (disp < tol) return {a, b};
  }
  throw ConvergenceError("fixed point iteration did not converge (Lipschitz constant >= 1?)");
}

std::pair<double, double> solve_trapezoid_vertex(const DFunction& f, const DFunction& g, double t,
                                                 const TrapezoidShape& shape, double tol) {
  const double s = shape.s, r = shape.r;
  const double ft = f(t);
  auto b_of = [&](double a) { return f(t + a) - ft; };
  auto F = [&](double a) {
    const double b = b_of(a);
    return ft - s * b + r * a - g(t - s * a - r * b);
  };
  double lo = 0.0;
  double flo = F(lo);
  if (flo == 0) return {0.0, 0.0};
  if (flo > 0) throw InvalidInput("trapezoid solve: f lies above g at t");
  double hi = 1.0 + std::abs(f.hi() - f.lo());
  double fhi = F(hi);
  for (int i = 0; fhi <= 0; ++i) {
    if (i > 200) throw ConvergenceError("trapezoid solve: no bracket (Lipschitz bound violated?)");
    lo = hi;
    hi *= 2;
    fhi = F(hi);
  }
  for (int i = 0; i < 400 && hi - lo > tol * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = F(mid);
    if (fm == 0) return {mid, b_of(mid)};
    (fm < 0 ? lo : hi) = mid;
  }
  const double a = std::abs(F(lo)) <= std::abs(F(hi)) ? lo : hi;
  return {a, b_of(a)};
}

double distance_to_graph(const DFunction& f, const DPoint& p) {
  const DPolyline graph = f.graph();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const DPoint& a = graph.edge_start(i);
    const DPoint& b = graph.edge_end(i);
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double s = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, std::hypot(p.x - (a.x + s * dx), p.y - (a.y + s * dy)));
  }
  return best;
}

void check_graph_pair(const DFunction& f, const DFunction& g, double lipschitz_bound) {
  if (f.is_circular() || g.is_circular()) throw InvalidInput("graph pair needs interval domains");
  if (f.lo() != g.lo() || f.hi() != g.hi()) throw InvalidInput("f and g must share their domain");
  const double scale = 1.0 + std::abs(f.values().front()) + std::abs(f.values().back());
  if (std::abs(f(f.lo()) - g(g.lo())) > 1e-12 * scale || std::abs(f(f.hi()) - g(g.hi())) > 1e-12 * scale)
    throw InvalidInput("f and g must agree at both domain endpoints");
  std::vector<double> ts;
  for (double t : f.breakpoints()) ts.push_back(t);
  for (double t : g.breakpoints()) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  bool interior = false;
  for (double t : ts) {
    if (t <= f.lo() || t >= f.hi()) continue;
    interior = true;
    if (!(f(t) < g(t))) throw InvalidInput("f must lie strictly below g on the interior");
  }
  if (!interior) throw InvalidInput("f must lie strictly below g on the interior");
  if (!(lipschitz_constant(f) < lipschitz_bound) || !(lipschitz_constant(g) < lipschitz_bound))
    throw InvalidInput("Lipschitz constant of f or g is not below the required bound");
}

namespace {

using Guess = std::pair<double, double>;
using Solver = std::function<Guess(double t, Guess guess)>;

std::vector<double> uniform_grid(double lo, double hi, int N) {
  if (N < 2) throw InvalidInput("grid needs at least two points");
  std::vector<double> t(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) t[k] = lo + (hi - lo) * k / (N - 1);
  t.back() = hi;
  return t;
}

std::vector<DPoint> dedupe(const std::vector<DPoint>& pts) {
  std::vector<DPoint> out;
  for (const auto& p : pts)
    if (out.empty() || out.back() != p) out.push_back(p);
  if (out.size() == 1) out.push_back(out.front());
  return out;
}

SquareFamily trace_family(const DFunction& f, const DFunction& g, int N, const Solver& solve,
                          double s, double r) {
  SquareFamily fam;
  auto& tr = fam.trace;
  tr.grid = uniform_grid(f.lo(), f.hi(), N);
  Guess guess{0.0, 0.0};
  for (double t : tr.grid) {
    guess = solve(t, guess);
    tr.x.push_back(t);
    tr.y.push_back(f(t));
    tr.a.push_back(guess.first);
    tr.b.push_back(guess.second);
    const auto v = trapezoid_vertices(SquareQuad<double>{t, f(t), guess.first, guess.second}, s, r);
    const double scale = 1.0 + std::abs(v[1].y) + std::abs(v[3].y);
    if (std::abs(v[1].y - f(v[1].x)) > 1e-9 * scale || std::abs(v[3].y - g(v[3].x)) > 1e-9 * scale)
      throw ConvergenceError("traced vertex left its assigned graph");
  }
  auto paths = trace_paths(tr, s, r);
  for (int i = 0; i < 4; ++i) {
    auto pts = dedupe(paths[i]);
    if (pts.size() == 2 && pts[0] == pts[1]) throw InvalidInput("degenerate square family");
    fam.curves[i] = DPolyline(std::move(pts));
  }
  return fam;
}

std::vector<InscriptionResult> scan_crossings(const DFunction& f, const DFunction& g, int N,
                                              double tol, const Solver& solve, double s, double r) {
  if (!(tol > 0)) throw InvalidInput("tolerance must be positive");
  struct Probe {
    double t, a, b, h;
  };
  auto probe = [&](double t, Guess guess) {
    const Guess ab = solve(t, guess);
    const auto v = trapezoid_vertices(SquareQuad<double>{t, f(t), ab.first, ab.second}, s, r);
    return Probe{t, ab.first, ab.second, v[2].y - g(v[2].x)};
  };

  const auto grid = uniform_grid(f.lo(), f.hi(), N);
  std::vector<Probe> probes;
  Guess guess{0.0, 0.0};
  for (double t : grid) {
    probes.push_back(probe(t, guess));
    guess = {probes.back().a, probes.back().b};
  }

  std::vector<InscriptionResult> out;
  for (std::size_t k = 1; k + 3 <= probes.size(); ++k) {
    Probe lo = probes[k], hi = probes[k + 1];
    const bool exact_zero = lo.h == 0;
    if (!exact_zero && !((lo.h < 0 && hi.h > 0) || (lo.h > 0 && hi.h < 0))) continue;
    if (exact_zero) hi = lo;
    const double t_lo0 = lo.t, t_hi0 = hi.t;
    for (int step = 0; step < 60 && hi.t - lo.t > tol; ++step) {
      const double mid_t = 0.5 * (lo.t + hi.t);
      const Probe mid = probe(mid_t, {lo.a, lo.b});
      if (mid.h == 0) {
        lo = hi = mid;
        break;
      }
      if ((mid.h < 0) == (lo.h < 0))
        lo = mid;
      else
        hi = mid;
    }
    const Probe best = std::abs(lo.h) <= std::abs(hi.h) ? lo : hi;
    InscriptionResult res;
    res.square = {best.t, f(best.t), best.a, best.b};
    res.t = best.t;
    res.h = best.h;
    res.t_lo = t_lo0;
    res.t_hi = t_hi0;
    const auto v = trapezoid_vertices(res.square, s, r);
    res.residuals = {distance_to_graph(f, v[0]), distance_to_graph(f, v[1]),
                     distance_to_graph(g, v[2]), distance_to_graph(g, v[3])};
    const double size = std::max(std::abs(best.a), std::abs(best.b));
    const double span = f.hi() - f.lo();
    if (size <= 1e-9 * span) continue;
    if (v[2].x < f.lo() - 1e-9 * span || v[2].x > f.hi() + 1e-9 * span) continue;
    out.push_back(res);
  }
  return out;
}

InscriptionResult pick_best(const std::vector<InscriptionResult>& all) {
  if (all.empty()) throw NoCrossingError("no crossing found at this resolution; increase N");
  const InscriptionResult* best = &all.front();
  for (const auto& r : all)
    if (std::abs(r.h) < std::abs(best->h) || (std::abs(r.h) == std::abs(best->h) && r.t < best->t))
      best = &r;
  return *best;
}

Solver square_solver(const DFunction& f, const DFunction& g, const FixedPointOptions& options) {
  return [&f, &g, options](double t, Guess guess) {
    return solve_vertex_fixed_point(f, g, t, options.tol, options.max_iter, guess);
  };
}

Solver trapezoid_solver(const DFunction& f, const DFunction& g, const TrapezoidShape& shape) {
  return [&f, &g, shape](double t, Guess) { return solve_trapezoid_vertex(f, g, t, shape); };
}

double trapezoid_lipschitz_bound(const TrapezoidShape& shape) {
  if (shape.s < 0 || !(shape.r > 0)) throw InvalidInput("trapezoid needs s >= 0 and r > 0");
  const double alpha = std::atan2(shape.r, shape.s);
  return std::tan(alpha / 2);
}

}  // namespace

SquareFamily trace_square_family(const DFunction& f, const DFunction& g, int N,
                                 const FixedPointOptions& options) {
  check_graph_pair(f, g, 1.0);
  return trace_family(f, g, N, square_solver(f, g, options), 0.0, 1.0);
}

SquareFamily trace_trapezoid_family(const DFunction& f, const DFunction& g,
                                    const TrapezoidShape& shape, int N) {
  check_graph_pair(f, g, trapezoid_lipschitz_bound(shape));
  return trace_family(f, g, N, trapezoid_solver(f, g, shape), shape.s, shape.r);
}

std::vector<InscriptionResult> find_inscribed_squares(const DFunction& f, const DFunction& g, int N,
                                                      double tol, const FixedPointOptions& options) {
  check_graph_pair(f, g, 1.0);
  return scan_crossings(f, g, N, tol, square_solver(f, g, options), 0.0, 1.0);
}

InscriptionResult find_inscribed_square(const DFunction& f, const DFunction& g, int N, double tol,
                                        const FixedPointOptions& options) {
  return pick_best(find_inscribed_squares(f, g, N, tol, options));
}

std::vector<InscriptionResult> find_inscribed_trapezoids(const DFunction& f, const DFunction& g,
                                                         const TrapezoidShape& shape, int N,
                                                         double tol) {
  check_graph_pair(f, g, trapezoid_lipschitz_bound(shape));
  return scan_crossings(f, g, N, tol, trapezoid_solver(f, g, shape), shape.s, shape.r);
}

InscriptionResult find_inscribed_trapezoid(const DFunction& f, const DFunction& g,
                                           const TrapezoidShape& shape, int N, double tol) {
  return pick_best(find_inscribed_trapezoids(f, g, shape, N, tol));
}

template struct SquareTrace<Rational>;
template struct SquareTrace<double>;
template std::array<std::vector<RPoint>, 4> trace_paths(const SquareTrace<Rational>&,
                                                        const Rational&, const Rational&);
template std::array<std::vector<DPoint>, 4> trace_paths(const SquareTrace<double>&, const double&,
                                                        const double&);
template Rational path_area(const std::vector<RPoint>&);
template double path_area(const std::vector<DPoint>&);
template Rational conserved_residual(const SquareTrace<Rational>&);
template double conserved_residual(const SquareTrace<double>&);
template Rational trapezoid_residual(const SquareTrace<Rational>&, const Rational&, const Rational&);
template double trapezoid_residual(const SquareTrace<double>&, const double&, const double&);

}  // namespace peglab
