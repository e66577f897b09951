#include "support.hpp"

#include <algorithm>
#include <cmath>

namespace peglab::testing {

bool parity_rule(const std::array<long, 2>& a, const std::array<long, 2>& b) {
  int count = 0;
  for (long ai : a)
    for (long bj : b) count += ai < bj;
  return count % 2 == 0;
}

bool inside_even_odd(const RPolyline& polygon, const RPoint& p) {
  bool inside = false;
  const auto& v = polygon.vertices();
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const Rational x = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

std::vector<Rational> brute_fiber(const CylCurve& c, const Rational& x) {
  const RPolyline u = c.unrolled(-4, 4);
  std::vector<Rational> ys;
  const auto& v = u.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const RPoint& a = v[i];
    const RPoint& b = v[i + 1];
    if ((a.x < x && x < b.x) || (b.x < x && x < a.x))
      ys.push_back(a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x));
  }
  return ys;
}

bool k111_hypotheses(const Rational& a, const Rational& b, const Rational& c) { return a + b + c < 0; }

double brute_symmetric_square_side(const DFunction& f, const DFunction& g, int samples) {
  double best = 0, best_err = 1e300;
  for (int i = 1; i <= samples; ++i) {
    const double s = 2.0 * i / samples;
    const double err = std::abs(g(s / 2) - f(s / 2) - s) + std::abs(g(-s / 2) - f(-s / 2) - s);
    if (err < best_err) {
      best_err = err;
      best = s;
    }
  }
  return best;
}

RFunction constant_function(const Rational& lo, const Rational& hi, const Rational& c) {
  return RFunction::interval({lo, hi}, {c, c});
}

std::pair<DFunction, DFunction> random_lipschitz_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pieces(2, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int m = pieces(rng);
  const double t0 = -1.0, t1 = 1.0, dt = (t1 - t0) / m;
  std::vector<double> t, fv, gv;
  double f = 0.0, d = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double ti = t0 + i * dt;
    if (i > 0) {
      f += (unit(rng) * 0.8 - 0.4) * dt;
      if (i == m) {
        d = 0.0;
      } else {
        const double hi = std::min(d + 0.45 * dt, 0.45 * (t1 - ti));
        const double lo = std::max(d - 0.45 * dt, 0.05 * dt);
        d = lo + unit(rng) * (hi - lo);
      }
    }
    t.push_back(ti);
    fv.push_back(f);
    gv.push_back(f + d);
  }
  t.back() = t1;
  return {DFunction::interval(t, fv), DFunction::interval(t, gv)};
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> num(lo * den, hi * den);
  Rational q(num(rng), den);
  q.canonicalize();
  return q;
}

SquareTrace<Rational> random_square_trace(std::mt19937_64& rng, int max_points) {
  std::uniform_int_distribution<int> count(2, max_points);
  const int n = count(rng);
  SquareTrace<Rational> t;
  Rational at = random_rational(rng, -5, 5, 7);
  for (int i = 0; i < n; ++i) {
    t.grid.push_back(at);
    at += random_rational(rng, 1, 3, 5);
    t.x.push_back(random_rational(rng, -10, 10, 9));
    t.y.push_back(random_rational(rng, -10, 10, 11));
    t.a.push_back(random_rational(rng, -4, 4, 13));
    t.b.push_back(random_rational(rng, -4, 4, 3));
  }
  return t;
}

RPolyline random_simple_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(3, 24);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const int n = count(rng);
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(unit(rng) * 2 * M_PI);
    std::sort(angles.begin(), angles.end());
    std::vector<RPoint> v;
    for (double a : angles) {
      const double r = 1 + 9 * unit(rng);
      v.push_back({Rational(static_cast<long>(std::lround(r * std::cos(a) * 64)), 64),
                   Rational(static_cast<long>(std::lround(r * std::sin(a) * 64)), 64)});
    }
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() < 3 || v.front() == v.back()) continue;
    const RPolyline p(v, true);
    if (!is_simple(p)) continue;
    if (signed_area(p) < 0) return p.reversed();
    return p;
  }
}

CylCurve constant_curve(const Rational& L, const Rational& c) { return CylCurve(L, {{0, c}, {L, c}}); }

CylCurve random_graph_curve(std::mt19937_64& rng, const Rational& L, int vertices) {
  std::vector<Rational> xs;
  while (static_cast<int>(xs.size()) < vertices) {
    const Rational x = random_rational(rng, 0, 1, 997) * L;
    if (x < L && std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<RPoint> lift;
  for (const auto& x : xs) lift.push_back({x, random_rational(rng, -3, 3, 101)});
  lift.push_back({lift.front().x + L, lift.front().y});
  return CylCurve(L, std::move(lift));
}

CylCurve random_zigzag_curve(std::mt19937_64& rng, const Rational& L) {
  // A graph with one S-shaped fold inserted: right, back left, right again.
  for (;;) {
    CylCurve g = random_graph_curve(rng, L, 4);
    std::vector<RPoint> lift = g.lift();
    const RPoint a = lift[1], b = lift[2];
    const Rational x1 = a.x + (b.x - a.x) * 3 / 4, x2 = a.x + (b.x - a.x) / 4;
    const Rational y1 = a.y + 1, y2 = a.y + 2;
    lift.insert(lift.begin() + 2, {{x1, y1}, {x2, y2}});
    lift[4].y = y2 + 1 + random_rational(rng, 0, 1, 7);
    CylCurve c(L, lift);
    if (is_simple(c)) return c;
  }
}

}  // namespace peglab::testing
