#include "peglab/sigma.hpp"

#include <algorithm>
#include <map>

namespace peglab {

namespace {

using Params = std::array<Rational, 3>;

struct EdgeBox {
  long long g;
  Rational xmin, xmax, ymin, ymax;
};

long long to_ll(const Integer& z) { return static_cast<long long>(z.get_si()); }

RPoint point_at(const CylCurve& c, const Rational& t) {
  const long long g = to_ll(floor(t));
  const Rational s = t - Rational(static_cast<long>(g));
  const RPoint a = c.vertex(g);
  if (s == 0) return a;
  const RPoint b = c.vertex(g + 1);
  return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
}

EdgeBox edge_box(const CylCurve& c, long long g) {
  const RPoint a = c.vertex(g), b = c.vertex(g + 1);
  return {g, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

std::vector<EdgeBox> edges_in_range(const CylCurve& c, const Rational& lo, const Rational& hi) {
  std::vector<EdgeBox> out;
  for (long long g : lift_edges_in_range(c, lo, hi)) out.push_back(edge_box(c, g));
  return out;
}

Rational det(const RPoint& u, const RPoint& v) { return u.x * v.y - u.y * v.x; }

struct Segment {
  Params start, end;
};

struct Sweep {
  const CylCurve* c[3];
  long n[3];

  Params normalized(const Params& t, Integer* shift = nullptr) const {
    const Integer k = floor(t[0] / Rational(static_cast<long>(n[0])));
    if (shift) *shift = k;
    Params out = t;
    for (int i = 0; i < 3; ++i) out[i] -= Rational(k * n[i]);
    return out;
  }
};

void check_degree_one(const CylCurve& c) {
  if (c.degree() != 1) throw InvalidInput("cycle construction needs degree-1 curves");
}

}  // namespace

Sigma124Result sigma124_cycle(const CylCurve& s1, const CylCurve& s2, const CylCurve& s4) {
  check_degree_one(s1);
  check_degree_one(s2);
  check_degree_one(s4);
  if (s1.L() != s2.L() || s1.L() != s4.L()) throw InvalidInput("curves must share L");

  Sweep sw{{&s1, &s2, &s4},
           {static_cast<long>(s1.edge_count()), static_cast<long>(s2.edge_count()),
            static_cast<long>(s4.edge_count())}};
  const Rational ymin = std::min({s1.min_y(), s2.min_y(), s4.min_y()});
  const Rational ymax = std::max({s1.max_y(), s2.max_y(), s4.max_y()});
  const Rational Y = ymax - ymin;

  std::vector<Segment> segments;
  for (long long e1 = 0; e1 < sw.n[0]; ++e1) {
    const EdgeBox b1 = edge_box(s1, e1);
    const auto cand2 = edges_in_range(s2, b1.xmin - Y, b1.xmax + Y);
    const auto cand4 = edges_in_range(s4, b1.xmin - Y, b1.xmax + Y);
    const RPoint A1 = s1.vertex(e1), d1 = s1.vertex(e1 + 1) - A1;
    const RPoint c1{-d1.y - d1.x, d1.x - d1.y};
    for (const EdgeBox& b2 : cand2) {
      const Rational fy_lo_part = -b1.ymax - b2.xmax + b1.xmin;
      const Rational fy_hi_part = -b1.ymin - b2.xmin + b1.xmax;
      const Rational fx_lo_part = -b1.xmax + b2.ymin - b1.ymax;
      const Rational fx_hi_part = -b1.xmin + b2.ymax - b1.ymin;
      const RPoint A2 = s2.vertex(b2.g), d2 = s2.vertex(b2.g + 1) - A2;
      const RPoint c2{d2.y, -d2.x};
      for (const EdgeBox& b4 : cand4) {
        if (b4.xmin + fx_lo_part > 0 || b4.xmax + fx_hi_part < 0) continue;
        if (b4.ymin + fy_lo_part > 0 || b4.ymax + fy_hi_part < 0) continue;
        const RPoint A4 = s4.vertex(b4.g), d4 = s4.vertex(b4.g + 1) - A4;
        const RPoint& c4 = d4;
        // F(u) = c0 + s1*c1 + s2*c2 + s4*c4, with F = p4 - p1 - J(p2 - p1).
        const RPoint c0{A4.x - A1.x + (A2.y - A1.y), A4.y - A1.y - (A2.x - A1.x)};
        const Params k{det(c2, c4), det(c4, c1), det(c1, c2)};
        if (k[0] == 0 && k[1] == 0 && k[2] == 0)
          throw GeneralPositionError("degenerate edge triple");
        Params u0{0, 0, 0};
        const RPoint rhs{-c0.x, -c0.y};
        if (k[2] != 0) {
          u0[0] = det(rhs, c2) / k[2];
          u0[1] = det(c1, rhs) / k[2];
        } else if (k[1] != 0) {
          u0[2] = det(rhs, c1) / k[1];
          u0[0] = det(c4, rhs) / k[1];
        } else {
          u0[1] = det(rhs, c4) / k[0];
          u0[2] = det(c2, rhs) / k[0];
        }
        bool empty = false, bounded_lo = false, bounded_hi = false;
        Rational lam_lo, lam_hi;
        for (int i = 0; i < 3 && !empty; ++i) {
          if (k[i] == 0) {
            if (u0[i] < 0 || u0[i] > 1) empty = true;
            continue;
          }
          Rational l0 = -u0[i] / k[i], l1 = (1 - u0[i]) / k[i];
          if (l0 > l1) std::swap(l0, l1);
          if (!bounded_lo || l0 > lam_lo) lam_lo = l0;
          if (!bounded_hi || l1 < lam_hi) lam_hi = l1;
          bounded_lo = bounded_hi = true;
        }
        if (empty || !(lam_lo < lam_hi)) continue;
        const long long base[3] = {e1, b2.g, b4.g};
        Segment seg;
        for (int i = 0; i < 3; ++i) {
          seg.start[i] = Rational(static_cast<long>(base[i])) + u0[i] + lam_lo * k[i];
          seg.end[i] = Rational(static_cast<long>(base[i])) + u0[i] + lam_hi * k[i];
        }
        segments.push_back(std::move(seg));
      }
    }
  }

  // Deduplicate (segments lying in a shared face appear twice) and index
  // by normalized start point.
  std::map<Params, std::size_t> by_start;
  std::vector<Segment> unique;
  for (const auto& seg : segments) {
    Integer k;
    Params s = sw.normalized(seg.start, &k);
    Params e = seg.end;
    for (int i = 0; i < 3; ++i) e[i] -= Rational(k * sw.n[i]);
    auto it = by_start.find(s);
    if (it != by_start.end()) {
      if (unique[it->second].end == e) continue;
      throw GeneralPositionError("cycle branches at a segment endpoint");
    }
    by_start.emplace(s, unique.size());
    unique.push_back({s, e});
  }

  Sigma124Result result;
  std::vector<bool> used(unique.size(), false);
  for (std::size_t first = 0; first < unique.size(); ++first) {
    if (used[first]) continue;
    CycleComponent comp;
    Params offset{0, 0, 0};
    std::size_t cur = first;
    comp.params.push_back(unique[first].start);
    for (;;) {
      used[cur] = true;
      Params end = unique[cur].end;
      for (int i = 0; i < 3; ++i) end[i] += offset[i];
      comp.params.push_back(end);
      Integer k;
      const Params key = sw.normalized(unique[cur].end, &k);
      auto it = by_start.find(key);
      if (it == by_start.end()) throw GeneralPositionError("cycle segment has no continuation");
      for (int i = 0; i < 3; ++i) offset[i] += Rational(k * sw.n[i]);
      cur = it->second;
      if (cur == first) break;
      if (used[cur]) throw GeneralPositionError("cycle segments merge");
    }
    const Rational turns = (comp.params.back()[0] - comp.params.front()[0]) /
                           Rational(static_cast<long>(sw.n[0]));
    if (turns.get_den() != 1) throw GeneralPositionError("cycle does not close up");
    comp.degree = static_cast<int>(turns.get_num().get_si());
    for (const auto& t : comp.params) {
      const RPoint p1 = point_at(s1, t[0]);
      const RPoint p2 = point_at(s2, t[1]);
      const Rational a = p2.x - p1.x, b = p2.y - p1.y;
      comp.squares.push_back({p1.x, p1.y, a, b});
      comp.gamma3.push_back({p1.x + a - b, p1.y + a + b});
    }
    result.total_degree += comp.degree;
    result.components.push_back(std::move(comp));
  }
  return result;
}

Sigma124Result sigma124_cycle_generic(const CylCurve& s1, const CylCurve& s2, const CylCurve& s4,
                                      std::uint64_t seed, const Rational& magnitude,
                                      std::array<CylCurve, 3>* perturbed, int retries) {
  std::vector<CylCurve> curves{s1, s2, s4};
  for (int attempt = 0;; ++attempt) {
    try {
      auto r = sigma124_cycle(curves[0], curves[1], curves[2]);
      if (perturbed) *perturbed = {curves[0], curves[1], curves[2]};
      return r;
    } catch (const GeneralPositionError&) {
      if (attempt >= retries) throw;
      curves = perturb_generic({s1, s2, s4}, seed + static_cast<std::uint64_t>(attempt) * 7919ULL,
                               magnitude);
    }
  }
}

namespace {

/// Smallest lambda in [0,1] with P + lambda (Q - P) on segment [A,B].
std::optional<Rational> segment_hit(const RPoint& P, const RPoint& Q, const RPoint& A,
                                    const RPoint& B) {
  const RPoint r = Q - P, s = B - A, w = A - P;
  if (r.x == 0 && r.y == 0) {
    if (orientation(A, B, P) != 0) return std::nullopt;
    if (std::min(A.x, B.x) <= P.x && P.x <= std::max(A.x, B.x) && std::min(A.y, B.y) <= P.y &&
        P.y <= std::max(A.y, B.y))
      return Rational(0);
    return std::nullopt;
  }
  const Rational denom = cross(r, s);
  if (denom != 0) {
    const Rational lam = cross(w, s) / denom;
    const Rational mu = cross(w, r) / denom;
    if (lam < 0 || lam > 1 || mu < 0 || mu > 1) return std::nullopt;
    return lam;
  }
  if (cross(w, r) != 0) return std::nullopt;
  const Rational rr = dot(r, r);
  Rational la = dot(w, r) / rr;
  Rational lb = dot(B - P, r) / rr;
  if (la > lb) std::swap(la, lb);
  const Rational lo = std::max(la, Rational(0));
  const Rational hi = std::min(lb, Rational(1));
  if (lo > hi) return std::nullopt;
  return lo;
}

}  // namespace

std::optional<SquareQuad<Rational>> joint_inscribe(const CylCurve& s1, const CylCurve& s2,
                                                   const CylCurve& s3, const CylCurve& s4) {
  check_degree_one(s3);
  if (s3.L() != s1.L()) throw InvalidInput("curves must share L");
  const Sigma124Result cyc = sigma124_cycle(s1, s2, s4);
  for (const auto& comp : cyc.components) {
    for (std::size_t i = 0; i + 1 < comp.gamma3.size(); ++i) {
      const RPoint& P = comp.gamma3[i];
      const RPoint& Q = comp.gamma3[i + 1];
      const Rational xlo = std::min(P.x, Q.x), xhi = std::max(P.x, Q.x);
      const Rational ylo = std::min(P.y, Q.y), yhi = std::max(P.y, Q.y);
      for (const EdgeBox& e : edges_in_range(s3, xlo, xhi)) {
        if (e.ymin > yhi || e.ymax < ylo) continue;
        const auto lam = segment_hit(P, Q, s3.vertex(e.g), s3.vertex(e.g + 1));
        if (!lam) continue;
        Params t;
        for (int j = 0; j < 3; ++j)
          t[j] = comp.params[i][j] + *lam * (comp.params[i + 1][j] - comp.params[i][j]);
        const RPoint p1 = point_at(s1, t[0]);
        const RPoint p2 = point_at(s2, t[1]);
        return SquareQuad<Rational>{mod(p1.x, s1.L()), p1.y, p2.x - p1.x, p2.y - p1.y};
      }
    }
  }
  return std::nullopt;
}

Rational area_ineq_value(const CylCurve& s1, const CylCurve& s2, const CylCurve& s3,
                         const CylCurve& s4) {
  for (const CylCurve* c : {&s1, &s2, &s3, &s4}) check_degree_one(*c);
  return area_under(s1.lift_polyline()) - area_under(s2.lift_polyline()) +
         area_under(s3.lift_polyline()) - area_under(s4.lift_polyline());
}

}  // namespace peglab
