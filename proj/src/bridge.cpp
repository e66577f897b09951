#include "peglab/bridge.hpp"

#include <algorithm>
#include <set>

namespace peglab {

namespace {

constexpr int kMaxDoublings = 20;
constexpr int kMaxHalvings = 24;

struct EdgeSpan {
  RPoint a, b;
  Rational xmin, xmax, ymin, ymax;

  bool vertical() const { return a.x == b.x; }
  Rational y_at(const Rational& x) const { return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x); }
};

EdgeSpan span_of(const CylCurve& c, long long g) {
  EdgeSpan e{c.vertex(g), c.vertex(g + 1), {}, {}, {}, {}};
  e.xmin = std::min(e.a.x, e.b.x);
  e.xmax = std::max(e.a.x, e.b.x);
  e.ymin = std::min(e.a.y, e.b.y);
  e.ymax = std::max(e.a.y, e.b.y);
  return e;
}

void require_degree_one(const CylCurve& c) {
  if (c.degree() != 1) throw InvalidInput("bridge operations need degree-1 curves");
}

/// Points y_i in [lo_i, hi_i] summing to zero, given sum lo <= 0 <= sum hi.
std::array<Rational, 3> distribute(const std::array<Rational, 3>& lo, const std::array<Rational, 3>& hi) {
  std::array<Rational, 3> y = lo;
  Rational need = -(lo[0] + lo[1] + lo[2]);
  for (int i = 0; i < 3 && need > 0; ++i) {
    const Rational take = std::min(need, Rational(hi[i] - lo[i]));
    y[i] += take;
    need -= take;
  }
  return y;
}

std::optional<ZeroSumWitness> triple_zero(const std::array<const EdgeSpan*, 3>& e,
                                          const Rational& lo, const Rational& hi) {
  bool any_vertical = false;
  for (const auto* s : e) any_vertical |= s->vertical();
  if (any_vertical || lo == hi) {
    std::array<Rational, 3> ylo, yhi;
    for (int i = 0; i < 3; ++i) {
      if (e[i]->vertical()) {
        ylo[i] = e[i]->ymin;
        yhi[i] = e[i]->ymax;
      } else {
        ylo[i] = yhi[i] = e[i]->y_at(lo);
      }
    }
    if (ylo[0] + ylo[1] + ylo[2] > 0 || yhi[0] + yhi[1] + yhi[2] < 0) return std::nullopt;
    return ZeroSumWitness{lo, distribute(ylo, yhi)};
  }
  auto h = [&](const Rational& x) -> Rational { return e[0]->y_at(x) + e[1]->y_at(x) + e[2]->y_at(x); };
  const Rational hl = h(lo), hh = h(hi);
  if (sign(hl) * sign(hh) > 0) return std::nullopt;
  const Rational x = hl == hh ? lo : Rational(lo + (hi - lo) * hl / (hl - hh));
  return ZeroSumWitness{x, {e[0]->y_at(x), e[1]->y_at(x), e[2]->y_at(x)}};
}

Rational min_positive_gap(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  Rational best = -1;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Rational d = v[i + 1] - v[i];
    if (d > 0 && (best < 0 || d < best)) best = d;
  }
  return best;
}

}  // namespace

Rational gadget_phi(const Rational& t) { return 1 + 1 / (1 + t); }

BuiltCurves build_curves(const AdfInstance& inst, const RecipeParams& params) {
  if (!check_hypothesis_i(inst).holds) throw InvalidInput("hypothesis (i) fails");
  if (!check_hypothesis_ii(inst).holds) throw InvalidInput("hypothesis (ii) fails");
  if (!gaps_distinct(inst)) throw InvalidInput("consecutive gaps must be distinct");

  Rational S1 = 0, Sk = 0;
  for (int i = 0; i < 3; ++i) {
    S1 += inst.list(i).front();
    Sk += inst.list(i).back();
  }
  if (!(S1 < 0) || !(Sk < 0)) throw InvalidInput("end sums must be negative");

  BuiltCurves out;
  out.C0 = -(S1 + Sk);
  out.R = params.R.value_or(out.C0 + 1);
  if (out.R < out.C0) throw InvalidInput("R below the admissible threshold");
  out.c = (out.R + S1 + Sk) / 3;

  int kmax = 1;
  for (int i = 0; i < 3; ++i) kmax = std::max(kmax, inst.k(i));
  Rational L = params.L.value_or(Rational(8 * (1 + kmax)) *
                                 (1 + -floor(Rational(-inst.max_abs()))));
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, L *= 2) {
    if (L <= 4) continue;
    const Rational half = L / 2;
    CurveTriple curves;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const auto& y = inst.list(i);
      const int k = inst.k(i);
      std::vector<RPoint> v{{-half + 1, y[0]}, {0, y[0]}};
      for (int p = 0; p + 1 < k; ++p) {
        const Rational phi = gadget_phi(abs(y[p] - y[p + 1]));
        // Loops alternate between the right and left halves.
        const Rational x = (p % 2 == 0) ? Rational(half - phi) : Rational(-half + phi);
        v.push_back({x, y[p]});
        v.push_back({x, y[p + 1]});
        v.push_back({0, y[p + 1]});
      }
      v.push_back({half - 1, y[k - 1]});
      v.push_back({half, (y[k - 1] + y[0]) / 2 - out.c});
      v.push_back({half + 1, y[0]});
      curves[i] = CylCurve(L, std::move(v));
      ok = is_simple(curves[i]);
    }
    if (!ok) continue;
    out.curves = std::move(curves);
    out.L = L;
    return out;
  }
  throw InvalidInput("L too small");
}

AreaIdentity area_identity(const BuiltCurves& built, const AdfInstance& inst) {
  AreaIdentity r;
  const Rational half = built.L / 2;
  Rational strips = 0;
  for (const auto& c : built.curves) {
    const RPolyline lift = c.lift_polyline();
    r.total += area_under(lift);
    r.ends += area_under_strip(lift, half - 1, half + 1);
    strips += area_under_strip(lift, -half + 1, -half + 2) + area_under_strip(lift, half - 2, half - 1);
  }
  r.C1 = -strips;
  r.middle = (built.L - 4) * alternating_sum(inst);
  r.holds = r.total == r.middle - r.C1 - built.R && r.ends == -built.R;
  return r;
}

std::vector<Rational> fiber_extract(const CylCurve& curve, const Rational& x) {
  require_degree_one(curve);
  std::vector<Rational> ys;
  for (long long g : lift_edges_in_range(curve, x, x)) {
    const RPoint a = curve.vertex(g), b = curve.vertex(g + 1);
    if (a.x == x || b.x == x) throw InvalidInput("x hits a vertex abscissa");
    ys.push_back(a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x));
  }
  return ys;
}

std::array<std::vector<Rational>, 3> fiber_extract(const CurveTriple& curves, const Rational& x) {
  std::array<std::vector<Rational>, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = fiber_extract(curves[i], x);
  return out;
}

Rational round_trip_delta(const CurveTriple& curves) {
  Rational best = -1;
  for (const auto& c : curves)
    for (const auto& p : c.lift()) {
      const Rational r = mod(p.x, c.L());
      if (r > 0 && (best < 0 || r < best)) best = r;
    }
  return best < 0 ? Rational(curves[0].L() / 4) : Rational(best / 2);
}

std::optional<ZeroSumWitness> find_zero_sum_fiber(const CurveTriple& curves) {
  for (const auto& c : curves) require_degree_one(c);
  const Rational& L = curves[0].L();
  if (curves[1].L() != L || curves[2].L() != L) throw InvalidInput("curves must share L");
  const Rational X0 = std::min({curves[0].min_x(), curves[1].min_x(), curves[2].min_x()});
  const Rational X1 = X0 + L;
  std::array<std::vector<EdgeSpan>, 3> edges;
  for (int i = 0; i < 3; ++i)
    for (long long g : lift_edges_in_range(curves[i], X0, X1)) edges[i].push_back(span_of(curves[i], g));

  for (const auto& e0 : edges[0])
    for (const auto& e1 : edges[1]) {
      const Rational lo01 = std::max({X0, e0.xmin, e1.xmin});
      const Rational hi01 = std::min({X1, e0.xmax, e1.xmax});
      if (lo01 > hi01) continue;
      for (const auto& e2 : edges[2]) {
        const Rational lo = std::max(lo01, e2.xmin), hi = std::min(hi01, e2.xmax);
        if (lo > hi) continue;
        if (e0.ymin + e1.ymin + e2.ymin > 0 || e0.ymax + e1.ymax + e2.ymax < 0) continue;
        if (auto w = triple_zero({&e0, &e1, &e2}, lo, hi)) return w;
      }
    }
  return std::nullopt;
}

SaiResult sai_check(const CurveTriple& curves) {
  SaiResult r;
  r.witness = find_zero_sum_fiber(curves);
  for (const auto& c : curves) r.area += area_under(c.lift_polyline());
  r.consistent = r.witness.has_value() || r.area != 0;
  return r;
}

CurveTriple genericize(const CurveTriple& curves, std::uint64_t seed) {
  const bool zero_free = !find_zero_sum_fiber(curves).has_value();
  std::vector<Rational> xs, ys;
  for (const auto& c : curves)
    for (const auto& p : c.lift()) {
      xs.push_back(mod(p.x, c.L()));
      ys.push_back(p.y);
    }
  Rational sep = min_positive_gap(xs);
  const Rational sy = min_positive_gap(ys);
  if (sep < 0 || (sy > 0 && sy < sep)) sep = sy;
  Rational mag = sep > 0 ? Rational(sep / 16) : Rational(1, 16);

  const std::vector<CylCurve> in(curves.begin(), curves.end());
  for (int attempt = 0; attempt < kMaxHalvings; ++attempt, mag /= 2) {
    std::vector<CylCurve> out;
    try {
      out = perturb_generic(in, seed + static_cast<std::uint64_t>(attempt), mag);
    } catch (const GeneralPositionError&) {
      continue;
    }
    CurveTriple t{out[0], out[1], out[2]};
    if (zero_free && find_zero_sum_fiber(t)) continue;
    return t;
  }
  throw GeneralPositionError("could not perturb the curves into general position");
}

}  // namespace peglab
