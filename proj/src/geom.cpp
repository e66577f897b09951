#include "peglab/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace peglab {

DPoint to_double(const RPoint& p) { return {p.x.get_d(), p.y.get_d()}; }
RPoint from_double(const DPoint& p) { return {from_double(p.x), from_double(p.y)}; }

int orientation(const RPoint& a, const RPoint& b, const RPoint& c) {
  return sgn(cross(b - a, c - a));
}

int orientation(const DPoint& a, const DPoint& b, const DPoint& c) {
  // Static filter with the orient2d error bound; undecided cases are
  // evaluated exactly.
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2;
  constexpr double bound = (3.0 + 16.0 * eps) * eps;
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double sum = std::abs(left) + std::abs(right);
  if (det > bound * sum) return 1;
  if (-det > bound * sum) return -1;
  if (sum == 0) return 0;
  return orientation(from_double(a), from_double(b), from_double(c));
}

namespace {

template <class T>
bool within_box(const Point<T>& a, const Point<T>& b, const Point<T>& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

template <class T>
int direction_sign(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

template <class T>
bool same_ray(const Point<T>& s, const Point<T>& a, const Point<T>& b) {
  return direction_sign<T>(a.x - s.x) == direction_sign<T>(b.x - s.x) &&
         direction_sign<T>(a.y - s.y) == direction_sign<T>(b.y - s.y);
}

template <class T>
double distance_to_segment(const Point<T>& p, const Point<T>& a, const Point<T>& b) {
  const double px = static_cast<double>(p.x), py = static_cast<double>(p.y);
  const double ax = static_cast<double>(a.x), ay = static_cast<double>(a.y);
  const double bx = static_cast<double>(b.x), by = static_cast<double>(b.y);
  const double dx = bx - ax, dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double s = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(px - (ax + s * dx), py - (ay + s * dy));
}

}  // namespace

template <class T>
bool segments_intersect(const Point<T>& a, const Point<T>& b, const Point<T>& c,
                        const Point<T>& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return false;
}

template <class T>
Polyline<T>::Polyline(std::vector<Point<T>> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.size() < 2) throw InvalidInput("polyline needs at least two vertices");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i + 1])
      throw InvalidInput("polyline has repeated consecutive vertex at index " +
                         std::to_string(i + 1));
  if (closed_ && vertices_.front() == vertices_.back())
    throw InvalidInput("closed polyline must not repeat its first vertex");
}

template <class T>
Polyline<T> Polyline<T>::reversed() const {
  std::vector<Point<T>> v(vertices_.rbegin(), vertices_.rend());
  return Polyline(std::move(v), closed_);
}

DPolyline to_double(const RPolyline& p) {
  std::vector<DPoint> v;
  v.reserve(p.size());
  for (const auto& q : p.vertices()) v.push_back(to_double(q));
  return DPolyline(std::move(v), p.closed());
}

template <class T>
PLFunction<T> PLFunction<T>::interval(std::vector<T> breakpoints, std::vector<T> values) {
  if (breakpoints.size() < 2 || breakpoints.size() != values.size())
    throw InvalidInput("PL function needs matching breakpoints and values (at least two)");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw InvalidInput("PL function breakpoints must be strictly increasing");
  PLFunction f;
  f.breakpoints_ = std::move(breakpoints);
  f.values_ = std::move(values);
  return f;
}

template <class T>
PLFunction<T> PLFunction<T>::circular(T period, std::vector<T> breakpoints, std::vector<T> values) {
  if (!(period > 0)) throw InvalidInput("circular PL function needs a positive period");
  if (breakpoints.empty() || breakpoints.size() != values.size())
    throw InvalidInput("PL function needs matching breakpoints and values");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw InvalidInput("PL function breakpoints must be strictly increasing");
  if (breakpoints.front() < 0 || !(breakpoints.back() < period))
    throw InvalidInput("circular breakpoints must lie in [0, L)");
  PLFunction f;
  f.breakpoints_ = std::move(breakpoints);
  f.values_ = std::move(values);
  f.circular_ = true;
  f.period_ = std::move(period);
  return f;
}

namespace {

template <class T>
T wrap(const T& t, const T& period);

template <>
Rational wrap(const Rational& t, const Rational& period) {
  return mod(t, period);
}

template <>
double wrap(const double& t, const double& period) {
  double r = std::fmod(t, period);
  return r < 0 ? r + period : r;
}

template <class T>
T lerp(const T& t0, const T& v0, const T& t1, const T& v1, const T& t) {
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

}  // namespace

template <class T>
T PLFunction<T>::operator()(const T& t) const {
  const auto& bp = breakpoints_;
  if (!circular_) {
    if (t <= bp.front()) return values_.front();
    if (t >= bp.back()) return values_.back();
    auto it = std::upper_bound(bp.begin(), bp.end(), t);
    std::size_t j = static_cast<std::size_t>(it - bp.begin());
    return lerp(bp[j - 1], values_[j - 1], bp[j], values_[j], t);
  }
  const T u = wrap(t, period_);
  if (bp.size() == 1) return values_.front();
  if (u < bp.front() || u >= bp.back()) {
    T t0 = bp.back();
    T t1 = bp.front() + period_;
    T uu = u < bp.front() ? T(u + period_) : u;
    return lerp(t0, values_.back(), t1, values_.front(), uu);
  }
  auto it = std::upper_bound(bp.begin(), bp.end(), u);
  std::size_t j = static_cast<std::size_t>(it - bp.begin());
  return lerp(bp[j - 1], values_[j - 1], bp[j], values_[j], u);
}

template <class T>
Polyline<T> PLFunction<T>::graph() const {
  std::vector<Point<T>> v;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) v.push_back({breakpoints_[i], values_[i]});
  if (circular_) v.push_back({breakpoints_.front() + period_, values_.front()});
  return Polyline<T>(std::move(v));
}

DFunction to_double(const RFunction& f) {
  std::vector<double> bp, vals;
  for (const auto& b : f.breakpoints()) bp.push_back(b.get_d());
  for (const auto& v : f.values()) vals.push_back(v.get_d());
  if (f.is_circular()) return DFunction::circular(f.period().get_d(), bp, vals);
  return DFunction::interval(bp, vals);
}

int homology_degree(const Rational& L, const std::vector<RPoint>& lift) {
  if (L <= 0) throw InvalidInput("cylinder circumference must be positive");
  if (lift.size() < 2) throw InvalidInput("lift needs at least two vertices");
  const RPoint disp = lift.back() - lift.front();
  if (disp.y != 0) throw InvalidInput("lift displacement is not horizontal");
  Rational d = disp.x / L;
  if (d.get_den() != 1) throw InvalidInput("lift displacement is not a multiple of L");
  if (!d.get_num().fits_sint_p()) throw InvalidInput("lift degree out of range");
  return static_cast<int>(d.get_num().get_si());
}

CylCurve::CylCurve(Rational L, std::vector<RPoint> lift) : L_(std::move(L)), lift_(std::move(lift)) {
  degree_ = homology_degree(L_, lift_);
  for (std::size_t i = 0; i + 1 < lift_.size(); ++i)
    if (lift_[i] == lift_[i + 1])
      throw InvalidInput("lift has repeated consecutive vertex at index " + std::to_string(i + 1));
}

RPoint CylCurve::vertex(long long g) const {
  const long long n = static_cast<long long>(edge_count());
  long long m = g / n;
  long long e = g % n;
  if (e < 0) {
    e += n;
    --m;
  }
  RPoint p = lift_[static_cast<std::size_t>(e)];
  if (m != 0) p.x += Rational(static_cast<long>(m * degree_)) * L_;
  return p;
}

RPolyline CylCurve::unrolled(int first, int last) const {
  const long long n = static_cast<long long>(edge_count());
  std::vector<RPoint> v;
  for (long long g = first * n; g <= (last + 1LL) * n; ++g) v.push_back(vertex(g));
  return RPolyline(std::move(v));
}

CylCurve CylCurve::rebased(std::size_t k) const {
  const long long n = static_cast<long long>(edge_count());
  std::vector<RPoint> v;
  for (long long g = static_cast<long long>(k); g <= static_cast<long long>(k) + n; ++g)
    v.push_back(vertex(g));
  return CylCurve(L_, std::move(v));
}

CylCurve CylCurve::translated(const Rational& dx, const Rational& dy) const {
  std::vector<RPoint> v = lift_;
  for (auto& p : v) {
    p.x += dx;
    p.y += dy;
  }
  return CylCurve(L_, std::move(v));
}

Rational CylCurve::min_x() const {
  return std::min_element(lift_.begin(), lift_.end(), [](auto& a, auto& b) { return a.x < b.x; })->x;
}
Rational CylCurve::max_x() const {
  return std::max_element(lift_.begin(), lift_.end(), [](auto& a, auto& b) { return a.x < b.x; })->x;
}
Rational CylCurve::min_y() const {
  return std::min_element(lift_.begin(), lift_.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}
Rational CylCurve::max_y() const {
  return std::max_element(lift_.begin(), lift_.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}

template <class T>
T area_under(const Polyline<T>& curve) {
  if (curve.size() < 2) throw InvalidInput("area_under needs at least two vertices");
  T sum = 0;
  for (std::size_t i = 0; i < curve.edge_count(); ++i) {
    const auto& a = curve.edge_start(i);
    const auto& b = curve.edge_end(i);
    sum += (a.y + b.y) * (b.x - a.x);
  }
  return sum / 2;
}

Rational area_under_strip(const RPolyline& curve, const Rational& lo, const Rational& hi) {
  Rational sum = 0;
  for (std::size_t i = 0; i < curve.edge_count(); ++i) {
    const RPoint& a = curve.edge_start(i);
    const RPoint& b = curve.edge_end(i);
    if (a.x == b.x) continue;
    const RPoint& l = a.x < b.x ? a : b;
    const RPoint& r = a.x < b.x ? b : a;
    Rational x0 = std::max(l.x, lo), x1 = std::min(r.x, hi);
    if (x0 >= x1) continue;
    Rational slope = (r.y - l.y) / (r.x - l.x);
    Rational y0 = l.y + slope * (x0 - l.x), y1 = l.y + slope * (x1 - l.x);
    Rational piece = (y0 + y1) * (x1 - x0) / 2;
    sum += a.x < b.x ? piece : Rational(-piece);
  }
  return sum;
}

template <class T>
bool is_simple(const Polyline<T>& curve) {
  const std::size_t n = curve.size();
  const std::size_t m = curve.edge_count();
  if (curve.closed() && n < 3) return false;

  struct Box {
    T xmin, xmax, ymin, ymax;
    std::size_t edge;
  };
  std::vector<Box> boxes;
  boxes.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = curve.edge_start(i);
    const auto& b = curve.edge_end(i);
    boxes.push_back({std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                     std::max(a.y, b.y), i});
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& u, const Box& v) {
    return u.xmin < v.xmin || (u.xmin == v.xmin && u.edge < v.edge);
  });

  auto adjacent = [&](std::size_t i, std::size_t j) -> int {
    // Returns 1 if edge j follows i, 2 if i follows j, 0 otherwise.
    if (j == i + 1) return 1;
    if (i == j + 1) return 2;
    if (curve.closed() && i == m - 1 && j == 0) return 1;
    if (curve.closed() && j == m - 1 && i == 0) return 2;
    return 0;
  };

  for (std::size_t u = 0; u < boxes.size(); ++u) {
    for (std::size_t v = u + 1; v < boxes.size() && boxes[v].xmin <= boxes[u].xmax; ++v) {
      const Box& A = boxes[u];
      const Box& B = boxes[v];
      if (B.ymin > A.ymax || A.ymin > B.ymax) continue;
      const std::size_t i = A.edge, j = B.edge;
      const int adj = adjacent(i, j);
      if (adj != 0) {
        const std::size_t first = adj == 1 ? i : j;
        const std::size_t second = adj == 1 ? j : i;
        const auto& s = curve.edge_end(first);
        const auto& a = curve.edge_start(first);
        const auto& b = curve.edge_end(second);
        if (orientation(s, a, b) == 0 && same_ray(s, a, b)) return false;
        continue;
      }
      if (segments_intersect(curve.edge_start(i), curve.edge_end(i), curve.edge_start(j),
                             curve.edge_end(j)))
        return false;
    }
  }
  return true;
}

std::vector<long long> lift_edges_in_range(const CylCurve& c, const Rational& lo,
                                           const Rational& hi) {
  if (c.degree() == 0) throw InvalidInput("lift edge ranges need a nonzero degree");
  const long long n = static_cast<long long>(c.edge_count());
  const Rational P = Rational(c.degree()) * c.L();
  std::vector<long long> out;
  for (long long e = 0; e < n; ++e) {
    const RPoint a = c.vertex(e), b = c.vertex(e + 1);
    const Rational xmin = std::min(a.x, b.x), xmax = std::max(a.x, b.x);
    // Shift m places the edge at x + m P; keep those meeting [lo, hi].
    Rational m_lo = (lo - xmax) / P, m_hi = (hi - xmin) / P;
    if (P < 0) std::swap(m_lo, m_hi);
    const long long m0 = -floor(Rational(-m_lo)).get_si();
    const long long m1 = floor(m_hi).get_si();
    for (long long m = m0; m <= m1; ++m) out.push_back(m * n + e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple(const CylCurve& curve) {
  const Rational width = curve.max_x() - curve.min_x();
  const int reach = static_cast<int>(floor(width / curve.L()).get_si()) + 1;
  if (curve.degree() == 0) {
    if (curve.lift().size() < 4) return false;
    std::vector<RPoint> v(curve.lift().begin(), curve.lift().end() - 1);
    return is_simple(RPolyline(std::move(v), true));
  }
  const int span = reach / std::abs(curve.degree()) + 1;
  return is_simple(curve.unrolled(-span, span));
}

template <class T>
T signed_area(const Polyline<T>& curve) {
  if (!curve.closed()) throw InvalidInput("signed_area needs a closed polyline");
  if (!is_simple(curve)) throw InvalidInput("signed_area needs a simple polyline");
  T sum = 0;
  for (std::size_t i = 0; i < curve.edge_count(); ++i) sum += cross(curve.edge_start(i), curve.edge_end(i));
  return sum / 2;
}

template <class T>
int winding_number(const Polyline<T>& curve, const Point<T>& p, double tol) {
  if (!curve.closed()) throw InvalidInput("winding_number needs a closed polyline");
  int wn = 0;
  for (std::size_t i = 0; i < curve.edge_count(); ++i) {
    const auto& a = curve.edge_start(i);
    const auto& b = curve.edge_end(i);
    const int o = orientation(a, b, p);
    bool on_curve;
    if constexpr (std::is_same_v<T, Rational>) {
      (void)tol;
      on_curve = o == 0 && within_box(a, b, p);
    } else {
      on_curve = distance_to_segment(p, a, b) <= tol;
    }
    if (on_curve) throw InvalidInput("winding_number: point lies on the curve");
    if (a.y <= p.y) {
      if (b.y > p.y && o > 0) ++wn;
    } else if (b.y <= p.y && o < 0) {
      --wn;
    }
  }
  return wn;
}

template <class T>
T lipschitz_constant(const PLFunction<T>& f) {
  const auto& t = f.breakpoints();
  const auto& v = f.values();
  T best = 0;
  auto consider = [&](const T& t0, const T& v0, const T& t1, const T& v1) {
    T s = (v1 - v0) / (t1 - t0);
    if (s < 0) s = -s;
    if (s > best) best = s;
  };
  for (std::size_t i = 0; i + 1 < t.size(); ++i) consider(t[i], v[i], t[i + 1], v[i + 1]);
  if (f.is_circular()) consider(t.back(), v.back(), T(t.front() + f.period()), v.front());
  return best;
}

std::optional<std::string> general_position_violation(const std::vector<CylCurve>& curves) {
  if (curves.empty()) return std::nullopt;
  const Rational& L = curves.front().L();
  for (const auto& c : curves)
    if (c.L() != L) return std::string("curves have different circumferences");

  std::vector<std::pair<Rational, std::size_t>> xs;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& v = curves[k].lift();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      xs.emplace_back(mod(v[i].x, L), k);
      if (v[i].x == v[i + 1].x)
        return "curve " + std::to_string(k) + " has a vertical edge at index " + std::to_string(i);
    }
  }
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i].first == xs[i + 1].first)
      return "vertex abscissa " + to_string(xs[i].first) + " is shared";

  for (std::size_t k = 0; k < curves.size(); ++k) {
    for (std::size_t l = k + 1; l < curves.size(); ++l) {
      const auto& u = curves[k].lift();
      const auto& w = curves[l].lift();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        const RPoint du = u[i + 1] - u[i];
        for (std::size_t j = 0; j + 1 < w.size(); ++j) {
          const RPoint dw = w[j + 1] - w[j];
          const Rational c = cross(du, dw);
          const Rational d = dot(du, dw);
          if (c == 0 || d == 0 || c == d || c == -d)
            return "edge directions of curves " + std::to_string(k) + " and " + std::to_string(l) +
                   " differ by a multiple of pi/4";
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<CylCurve> perturb_generic(const std::vector<CylCurve>& curves, std::uint64_t seed,
                                      const Rational& magnitude, int retry_budget) {
  if (magnitude <= 0) throw InvalidInput("perturbation magnitude must be positive");
  constexpr std::int64_t kGrid = std::int64_t{1} << 32;
  const Rational step = magnitude / Rational(Integer(static_cast<unsigned long>(kGrid)));
  std::vector<bool> was_simple;
  for (const auto& c : curves) was_simple.push_back(is_simple(c));

  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
    std::uniform_int_distribution<std::int64_t> jitter(-kGrid, kGrid);
    std::vector<CylCurve> out;
    out.reserve(curves.size());
    bool ok = true;
    for (const auto& c : curves) {
      std::vector<RPoint> v = c.lift();
      const std::size_t n = v.size() - 1;
      for (std::size_t i = 0; i < n; ++i) {
        v[i].x += step * Rational(Integer(static_cast<long>(jitter(rng))));
        v[i].y += step * Rational(Integer(static_cast<long>(jitter(rng))));
      }
      v[n] = v[0];
      v[n].x += Rational(c.degree()) * c.L();
      try {
        out.emplace_back(c.L(), std::move(v));
      } catch (const InvalidInput&) {
        ok = false;
        break;
      }
    }
    if (!ok || general_position_violation(out)) continue;
    for (std::size_t k = 0; k < out.size() && ok; ++k)
      if (was_simple[k] && !is_simple(out[k])) ok = false;
    if (ok) return out;
  }
  throw GeneralPositionError("perturb_generic: retry budget exhausted");
}

template class Polyline<Rational>;
template class Polyline<double>;
template class PLFunction<Rational>;
template class PLFunction<double>;
template bool segments_intersect(const RPoint&, const RPoint&, const RPoint&, const RPoint&);
template bool segments_intersect(const DPoint&, const DPoint&, const DPoint&, const DPoint&);
template Rational area_under(const RPolyline&);
template double area_under(const DPolyline&);
template Rational signed_area(const RPolyline&);
template double signed_area(const DPolyline&);
template bool is_simple(const RPolyline&);
template bool is_simple(const DPolyline&);
template int winding_number(const RPolyline&, const RPoint&, double);
template int winding_number(const DPolyline&, const DPoint&, double);
template Rational lipschitz_constant(const RFunction&);
template double lipschitz_constant(const DFunction&);

}  // namespace peglab
