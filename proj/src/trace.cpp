#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "peglab/bridge.hpp"

namespace peglab {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational y_on_edge(const CylCurve& c, long long g, const Rational& x) {
  const RPoint a = c.vertex(g), b = c.vertex(g + 1);
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

void check_trace_position(const CurveTriple& curves) {
  std::set<Rational> xs;
  std::size_t count = 0;
  for (const auto& c : curves) {
    if (c.degree() != 1) throw InvalidInput("trace needs degree-1 curves");
    if (c.L() != curves[0].L()) throw InvalidInput("curves must share L");
    for (std::size_t e = 0; e < c.edge_count(); ++e) {
      if (c.lift()[e].x == c.lift()[e + 1].x) throw GeneralPositionError("vertical edge");
      xs.insert(mod(c.lift()[e].x, c.L()));
      ++count;
    }
  }
  if (xs.size() != count) throw GeneralPositionError("simultaneous collision: shared vertex abscissa");
}

using Key = std::tuple<long long, long long, long long, int, int, int, int>;

Key canonical(const TraceState& s, const std::array<long long, 3>& n, long long* shift) {
  const long long k = floor_div(s.edge[0], n[0]);
  *shift = k;
  return {s.edge[0] - k * n[0], s.edge[1] - k * n[1], s.edge[2] - k * n[2],
          s.pdir[0], s.pdir[1], s.pdir[2], s.dir};
}

}  // namespace

TraceState first_crossing_state(const CurveTriple& curves, const Rational& x) {
  TraceState s;
  s.x = x;
  s.dir = 1;
  for (int i = 0; i < 3; ++i) {
    const auto& c = curves[i];
    const auto edges = lift_edges_in_range(c, x, x);
    if (edges.empty()) throw InvalidInput("curve misses the start abscissa");
    const long long g = edges.front();
    const RPoint a = c.vertex(g), b = c.vertex(g + 1);
    if (a.x == x || b.x == x) throw InvalidInput("start abscissa hits a vertex");
    if (!(a.x < b.x)) throw GeneralPositionError("first crossing does not move right");
    s.edge[i] = g;
    s.pdir[i] = 1;
    s.y[i] = y_on_edge(c, g, x);
  }
  return s;
}

TraceState reversed(const TraceState& s) {
  TraceState r = s;
  r.dir = -s.dir;
  for (auto& p : r.pdir) p = -p;
  return r;
}

TraceResult trace_cycle(const CurveTriple& curves, const TraceState& start) {
  check_trace_position(curves);
  const std::array<long long, 3> n{static_cast<long long>(curves[0].edge_count()),
                                   static_cast<long long>(curves[1].edge_count()),
                                   static_cast<long long>(curves[2].edge_count())};
  const long long cap = 8 * n[0] * n[1] * n[2] + 64;

  TraceResult res;
  TraceState s = start;
  for (int i = 0; i < 3; ++i) s.y[i] = y_on_edge(curves[i], s.edge[i], s.x);
  res.states.push_back(s);

  std::map<Key, std::pair<std::size_t, long long>> seen;
  bool zero_free = true;
  int sgn = sign(Rational(s.y[0] + s.y[1] + s.y[2]));
  if (sgn == 0) {
    zero_free = false;
    res.zero_sum = ZeroSumWitness{s.x, s.y};
  }

  for (long long step = 0; step < cap; ++step) {
    // The particle whose heading vertex is nearest in the sweep direction.
    int hit = -1;
    Rational best;
    for (int i = 0; i < 3; ++i) {
      const long long tv = s.pdir[i] > 0 ? s.edge[i] + 1 : s.edge[i];
      const Rational d = s.dir * (curves[i].vertex(tv).x - s.x);
      if (hit < 0 || d < best) {
        hit = i;
        best = d;
      }
    }
    const Rational x_next = s.x + s.dir * best;

    // Sum of ordinates is linear on [x, x_next].
    if (zero_free) {
      std::array<Rational, 3> y1;
      for (int i = 0; i < 3; ++i) y1[i] = y_on_edge(curves[i], s.edge[i], x_next);
      const Rational h0 = s.y[0] + s.y[1] + s.y[2];
      const Rational h1 = y1[0] + y1[1] + y1[2];
      if (sign(h1) != sgn) {
        zero_free = false;
        const Rational x0 = h1 == 0 ? x_next : Rational(s.x + (x_next - s.x) * h0 / (h0 - h1));
        res.zero_sum = ZeroSumWitness{x0, {y_on_edge(curves[0], s.edge[0], x0),
                                           y_on_edge(curves[1], s.edge[1], x0),
                                           y_on_edge(curves[2], s.edge[2], x0)}};
      }
    }

    s.x = x_next;
    const auto& c = curves[hit];
    const long long next_edge = s.edge[hit] + s.pdir[hit];
    const RPoint v = c.vertex(s.pdir[hit] > 0 ? s.edge[hit] + 1 : s.edge[hit]);
    const RPoint far = c.vertex(s.pdir[hit] > 0 ? next_edge + 1 : next_edge);
    s.edge[hit] = next_edge;
    if (sign(Rational(far.x - v.x)) != s.dir) {
      s.dir = -s.dir;
      for (int i = 0; i < 3; ++i)
        if (i != hit) s.pdir[i] = -s.pdir[i];
    }
    for (int i = 0; i < 3; ++i) s.y[i] = y_on_edge(curves[i], s.edge[i], s.x);
    res.states.push_back(s);

    long long shift = 0;
    const Key key = canonical(s, n, &shift);
    auto [it, fresh] = seen.emplace(key, std::make_pair(res.states.size() - 1, shift));
    if (!fresh) {
      res.period = res.states.size() - 1 - it->second.first;
      res.m = static_cast<int>(shift - it->second.second);
      if (zero_free) res.sign = sgn;
      return res;
    }
  }
  throw GeneralPositionError("trajectory did not close within the event budget");
}

}  // namespace peglab
