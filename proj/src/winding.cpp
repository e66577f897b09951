#include <algorithm>
#include <map>
#include <set>

#include "peglab/adf.hpp"

namespace peglab {

namespace {

const Rational kHalf(1, 2);

Rational alt(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

XReal sum(const XReal& a, const XReal& b) { return a + b; }

/// Rational probes covering every cell of the common refinement of two
/// profiles: all breakpoints, midpoints, and one point beyond each end.
std::vector<Rational> probes(const WindingProfile& a, const WindingProfile& b) {
  std::set<Rational> bp(a.breakpoints().begin(), a.breakpoints().end());
  bp.insert(b.breakpoints().begin(), b.breakpoints().end());
  std::vector<Rational> out;
  if (bp.empty()) return {Rational(0)};
  out.push_back(*bp.begin() - 1);
  for (auto it = bp.begin(); it != bp.end(); ++it) {
    out.push_back(*it);
    auto nx = std::next(it);
    out.push_back(nx == bp.end() ? Rational(*it + 1) : Rational((*it + *nx) / 2));
  }
  return out;
}

std::vector<XReal> endpoints(const std::vector<LevelInterval>& set) {
  std::vector<XReal> e;
  for (const auto& iv : set) {
    if (iv.lo.is_finite()) e.push_back(iv.lo);
    if (iv.hi.is_finite()) e.push_back(iv.hi);
  }
  return e;
}

bool in_interval(const LevelInterval& iv, const Rational& y) {
  const XReal x(y);
  const bool lo_ok = iv.lo < x || (iv.lo_closed && iv.lo == x);
  const bool hi_ok = x < iv.hi || (iv.hi_closed && iv.hi == x);
  return lo_ok && hi_ok;
}

std::string fmt(const Rational& a, const Rational& b) { return to_string(a) + " vs " + to_string(b); }

}  // namespace

WindingProfile WindingProfile::from_terms(const Rational& base, const std::vector<Term>& terms) {
  std::map<Rational, Rational> merged;
  for (const auto& t : terms) merged[t.at] += t.weight;
  WindingProfile w;
  Rational left = base;
  for (const auto& [c, wt] : merged) left += wt;
  w.plateaus_.push_back(left);
  for (const auto& [c, wt] : merged) {
    if (wt == 0) continue;
    w.breakpoints_.push_back(c);
    w.points_.push_back(left - wt);
    left -= 2 * wt;
    w.plateaus_.push_back(left);
  }
  return w;
}

Rational WindingProfile::operator()(const Rational& y) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), y);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && *it == y) return points_[i];
  return plateaus_[i];
}

Rational WindingProfile::operator()(const XReal& y) const {
  switch (y.kind()) {
    case XReal::Kind::pos_inf: return right_limit();
    case XReal::Kind::neg_inf: return left_limit();
    default: return (*this)(y.value());
  }
}

Rational WindingProfile::max_plateau() const {
  return *std::max_element(plateaus_.begin(), plateaus_.end());
}

Rational WindingProfile::min_plateau() const {
  return *std::min_element(plateaus_.begin(), plateaus_.end());
}

Rational WindingProfile::integral(const Rational& lo, const Rational& hi) const {
  if (hi < lo) return -integral(hi, lo);
  Rational total = 0;
  Rational cur = lo;
  const auto start = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), lo);
  std::size_t i = static_cast<std::size_t>(start - breakpoints_.begin());
  for (; i < breakpoints_.size() && breakpoints_[i] < hi; ++i) {
    total += plateaus_[i] * (breakpoints_[i] - cur);
    cur = breakpoints_[i];
  }
  total += plateaus_[i] * (hi - cur);
  return total;
}

Rational WindingProfile::integral_from(const Rational& lo) const {
  if (right_limit() != 0) throw InvalidInput("integral to +inf of a profile with nonzero tail");
  const Rational hi = breakpoints_.empty() ? lo : std::max(lo, breakpoints_.back());
  return integral(lo, hi);
}

Rational WindingProfile::integral_to(const Rational& hi) const {
  if (left_limit() != 0) throw InvalidInput("integral from -inf of a profile with nonzero tail");
  const Rational lo = breakpoints_.empty() ? hi : std::min(hi, breakpoints_.front());
  return integral(lo, hi);
}

WindingProfile WindingProfile::reflected() const {
  WindingProfile w;
  for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it) w.breakpoints_.push_back(-*it);
  w.plateaus_.assign(plateaus_.rbegin(), plateaus_.rend());
  w.points_.assign(points_.rbegin(), points_.rend());
  return w;
}

WindingProfile WindingProfile::one_minus() const {
  WindingProfile w = *this;
  for (auto& v : w.plateaus_) v = 1 - v;
  for (auto& v : w.points_) v = 1 - v;
  return w;
}

std::vector<LevelInterval> level_set(const WindingProfile& w, const Rational& value) {
  const auto& bp = w.breakpoints();
  std::vector<LevelInterval> out;
  bool open = false;
  LevelInterval cur;
  // Walk the pieces: cell 0, point 0, cell 1, point 1, ..., cell n.
  for (std::size_t i = 0; i <= bp.size(); ++i) {
    const bool cell_in = w.plateaus()[i] == value;
    if (cell_in && !open) {
      open = true;
      cur = {};
      cur.lo = i == 0 ? XReal::neg_inf() : XReal(bp[i - 1]);
      cur.lo_closed = false;
    } else if (!cell_in && open) {
      open = false;
      cur.hi = XReal(bp[i - 1]);
      cur.hi_closed = false;
      out.push_back(cur);
    }
    if (i == bp.size()) break;
    const bool point_in = w.point_values()[i] == value;
    if (point_in && !open) {
      open = true;
      cur = {};
      cur.lo = XReal(bp[i]);
      cur.lo_closed = true;
    } else if (!point_in && open) {
      open = false;
      cur.hi = XReal(bp[i]);
      cur.hi_closed = false;
      out.push_back(cur);
    }
    if (point_in && open && w.plateaus()[i + 1] != value) {
      open = false;
      cur.hi = XReal(bp[i]);
      cur.hi_closed = true;
      out.push_back(cur);
    }
  }
  if (open) {
    cur.hi = XReal::pos_inf();
    cur.hi_closed = false;
    out.push_back(cur);
  }
  return out;
}

bool level_set_included(const WindingProfile& a, const Rational& va, const WindingProfile& b,
                        const Rational& vb) {
  if (a.left_limit() == va && b.left_limit() != vb) return false;
  if (a.right_limit() == va && b.right_limit() != vb) return false;
  for (const auto& y : probes(a, b))
    if (a(y) == va && b(y) != vb) return false;
  return true;
}

bool level_set_endpoints_disjoint(const WindingProfile& a, const Rational& va,
                                  const WindingProfile& b, const Rational& vb) {
  const auto ea = endpoints(level_set(a, va));
  const auto eb = endpoints(level_set(b, vb));
  for (const auto& x : ea)
    for (const auto& y : eb)
      if (x == y) return false;
  return true;
}

WindingProfile winding_profile_Wi(const AdfInstance& inst, int i) {
  std::vector<WindingProfile::Term> terms;
  for (int j = 1; j <= inst.k(i); ++j) terms.push_back({inst.list(i)[j - 1], alt(j - 1) * kHalf});
  return WindingProfile::from_terms(kHalf, terms);
}

WindingProfile winding_profile_Wii(const AdfInstance& inst, int i, int ip) {
  std::vector<WindingProfile::Term> terms;
  for (int j = 1; j <= inst.k(i); ++j)
    for (int jp = 1; jp <= inst.k(ip); ++jp)
      terms.push_back({inst.list(i)[j - 1] + inst.list(ip)[jp - 1], alt(j + jp) * kHalf});
  return WindingProfile::from_terms(kHalf, terms);
}

CellPartition partition_V12(const AdfInstance& inst) {
  const WindingProfile w3 = winding_profile_Wi(inst, 2);
  CellPartition part;
  const int k1 = inst.k(0), k2 = inst.k(1);
  for (int a = 0; a <= k1 + 1; ++a)
    for (int b = 0; b <= k2 + 1; ++b) {
      const XReal s = sum(inst.padded(0, a), inst.padded(1, b));
      const Rational v = w3(-s);
      if (v == 0) part.v0.push_back({a, b});
      else if (v == 1) part.v1.push_back({a, b});
      else
        throw InvalidInput("W3(-y1a - y2b) = " + to_string(v) + " at cell (" + std::to_string(a) +
                           "," + std::to_string(b) + ")");
    }
  return part;
}

WindingProfile winding_profile_W12_0(const AdfInstance& inst, const CellPartition& part) {
  std::vector<WindingProfile::Term> terms;
  for (const auto& [a, b] : part.v0) {
    if (a == 0 || b == 0 || a > inst.k(0) || b > inst.k(1)) continue;
    terms.push_back({inst.list(0)[a - 1] + inst.list(1)[b - 1], alt(a + b) * kHalf});
  }
  return WindingProfile::from_terms(kHalf, terms);
}

CellGraph build_G12(const AdfInstance& inst) {
  CellGraph g;
  g.partition = partition_V12(inst);
  const int k1 = inst.k(0), k2 = inst.k(1);
  std::set<Cell> v1(g.partition.v1.begin(), g.partition.v1.end());
  auto gap = [&](int i, int p) {
    const XReal a = inst.padded(i, p), b = inst.padded(i, p + 1);
    if (!a.is_finite() || !b.is_finite()) return XReal::pos_inf();
    return XReal(Rational(abs(a.value() - b.value())));
  };
  auto connect = [&](const Cell& from, const Cell& to) {
    const bool fi = v1.count(from) > 0, ti = v1.count(to) > 0;
    if (fi && ti) g.edges.push_back({from, to});
    else if (fi != ti) g.edges_closed = false;
  };
  for (int p = 0; p <= k1; ++p)
    for (int q = p & 1; q <= k2; q += 2) {
      const XReal g1 = gap(0, p), g2 = gap(1, q);
      if (g1.is_finite() && g1 == g2) throw InvalidInput("tied gaps between lists 1 and 2");
      if (!(g2 < g1)) {
        for (int b : {q, q + 1}) {
          if (b % 2 == 1) connect({p, b}, {p + 1, b});
          else connect({p + 1, b}, {p, b});
        }
      } else {
        for (int a : {p, p + 1}) {
          if (a % 2 == 1) connect({a, q}, {a, q + 1});
          else connect({a, q + 1}, {a, q});
        }
      }
    }

  std::map<Cell, Cell> next;
  std::map<Cell, int> indeg;
  for (const auto& [from, to] : g.edges) {
    if (!next.emplace(from, to).second) g.degrees_ok = false;
    ++indeg[to];
  }
  for (const auto& c : v1)
    if (!next.count(c) || indeg[c] != 1) g.degrees_ok = false;
  if (!g.degrees_ok) {
    g.balanced = false;
    return g;
  }

  std::set<Cell> seen;
  for (const auto& c : g.partition.v1) {
    if (seen.count(c)) continue;
    std::vector<Cell> cycle;
    for (Cell cur = c; !seen.count(cur); cur = next[cur]) {
      seen.insert(cur);
      cycle.push_back(cur);
    }
    std::map<int, int> col, row;
    for (const auto& [a, b] : cycle) {
      col[a] += (b % 2 == 0) ? 1 : -1;
      row[b] += (a % 2 == 0) ? 1 : -1;
    }
    for (const auto& [key, v] : col) g.balanced &= v == 0;
    for (const auto& [key, v] : row) g.balanced &= v == 0;
    g.cycles.push_back(std::move(cycle));
  }
  return g;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return !c.applicable || c.passed; });
}

IdentityReport identity_suite(const AdfInstance& inst) {
  IdentityReport rep;
  rep.T = 3 * inst.max_abs() + 1;
  const Rational& T = rep.T;
  std::array<Rational, 3> Q;
  std::array<WindingProfile, 3> W;
  for (int i = 0; i < 3; ++i) {
    Q[i] = alternating_sum(inst.list(i));
    W[i] = winding_profile_Wi(inst, i);
  }
  auto add = [&](std::string name, bool applicable, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), applicable, applicable && ok, std::move(detail)});
  };
  auto eq = [&](const std::string& name, const Rational& lhs, const Rational& rhs) {
    add(name, true, lhs == rhs, fmt(lhs, rhs));
  };

  for (int i = 0; i < 3; ++i) {
    const std::string tag = std::to_string(i + 1);
    eq("fubini W" + tag, W[i].integral_from(-T), Q[i] + T);
    eq("fubini-sym W" + tag, W[i].reflected().one_minus().integral_from(-T), -Q[i] + T);
  }
  for (int i = 0; i < 3; ++i)
    for (int ip = i + 1; ip < 3; ++ip)
      eq("fubini-2 W" + std::to_string(i + 1) + std::to_string(ip + 1),
         winding_profile_Wii(inst, i, ip).integral_from(-T), Q[i] + Q[ip] + T);

  const bool hyp = check_hypothesis_i(inst).holds && check_hypothesis_ii(inst).holds;
  const bool hyp1 = check_hypothesis_i(inst).holds;

  for (int i = 0; i < 3; ++i) {
    bool ok = true;
    for (const auto& y : inst.list(i)) ok &= W[i](y) == kHalf;
    for (const auto& v : W[i].plateaus()) ok &= v == 0 || v == 1;
    add("jordan W" + std::to_string(i + 1), hyp1, ok);
  }

  const int perms[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& pm : perms) {
    const int i = pm[0], ip = pm[1], ipp = pm[2];
    const std::string tag = std::to_string(i + 1) + std::to_string(ip + 1);
    const WindingProfile wii = winding_profile_Wii(inst, i, ip);
    bool ok = true;
    for (int j = 0; j <= inst.k(ipp) + 1; ++j) ok &= wii(-inst.padded(ipp, j)) == 0;
    add("inclusion(i) W" + tag, hyp, ok);
  }
  for (int i = 0; i < 3; ++i)
    for (int ip = 0; ip < 3; ++ip) {
      if (i == ip) continue;
      const int ipp = 3 - i - ip;
      bool ok = true;
      auto gap = [&](int l, int p) {
        const XReal a = inst.padded(l, p), b = inst.padded(l, p + 1);
        if (!a.is_finite() || !b.is_finite()) return XReal::pos_inf();
        return XReal(Rational(abs(a.value() - b.value())));
      };
      for (int p = 0; p <= inst.k(i); ++p)
        for (int q = p & 1; q <= inst.k(ip); q += 2) {
          const XReal g1 = gap(i, p), g2 = gap(ip, q);
          if (!(g2 < g1))
            for (int b : {q, q + 1})
              ok &= W[ipp](-sum(inst.padded(i, p), inst.padded(ip, b))) ==
                    W[ipp](-sum(inst.padded(i, p + 1), inst.padded(ip, b)));
          if (!(g1 < g2))
            for (int a : {p, p + 1})
              ok &= W[ipp](-sum(inst.padded(i, a), inst.padded(ip, q))) ==
                    W[ipp](-sum(inst.padded(i, a), inst.padded(ip, q + 1)));
        }
      add("inclusion(ii) " + std::to_string(i + 1) + std::to_string(ip + 1), hyp, ok);
    }

  if (!hyp) {
    for (const char* name : {"G12 degree", "G12 balance", "sam", "mix", "cob", "fubini W12_0",
                             "breathe", "inclusio", "inclusio strict"})
      add(name, false, false, "hypotheses fail");
    return rep;
  }

  const CellPartition part = partition_V12(inst);
  try {
    const CellGraph g = build_G12(inst);
    add("G12 degree", true, g.degrees_ok && g.edges_closed);
    add("G12 balance", true, g.balanced);
  } catch (const InvalidInput& e) {
    add("G12 degree", false, false, e.what());
    add("G12 balance", false, false, e.what());
  }

  Rational sam = 0;
  for (const auto& [a, b] : part.v0) {
    if (a == 0 || b == 0 || a > inst.k(0) || b > inst.k(1)) continue;
    sam += alt(a + b) * (inst.list(0)[a - 1] + inst.list(1)[b - 1]);
  }
  eq("sam", sam, Q[0] + Q[1]);

  bool mix = true;
  for (int r = 0; r <= inst.k(2) + 1; ++r) {
    int s = 0;
    for (const auto& [a, b] : part.v1)
      s += ((a + b) % 2 == 0 ? 1 : -1) *
           sign(sum(sum(inst.padded(0, a), inst.padded(1, b)), inst.padded(2, r)));
    mix &= s == 0;
  }
  add("mix", true, mix);

  const WindingProfile w0 = winding_profile_W12_0(inst, part);
  bool cob = true;
  for (int r = 0; r <= inst.k(2) + 1; ++r) cob &= w0(-inst.padded(2, r)) == 0;
  add("cob", true, cob);
  eq("fubini W12_0", w0.integral_from(-T), Q[0] + Q[1] + T);
  eq("breathe", w0.one_minus().integral_to(T), -Q[0] - Q[1] + T);

  const WindingProfile w3r = W[2].reflected();
  add("inclusio", true, level_set_included(w3r, 1, w0, 0));
  add("inclusio strict", true, level_set_endpoints_disjoint(w3r, 1, w0, 0));
  return rep;
}

TapResult tap_check(const AdfInstance& inst) {
  TapResult r;
  r.sum = alternating_sum(inst);
  r.hypotheses = check_hypothesis_i(inst).holds && check_hypothesis_ii(inst).holds;
  const Rational T = 3 * inst.max_abs() + 1;

  std::optional<CellPartition> part;
  if (r.hypotheses) {
    part = partition_V12(inst);
    const WindingProfile w0 = winding_profile_W12_0(inst, *part);
    r.max_W12_0 = w0.max_plateau();
    for (const auto& iv : level_set(w0, 0)) {
      ZeroComponent zc{iv, false};
      for (const auto& y : inst.list(2)) zc.contains_minus_y3 |= in_interval(iv, Rational(-y));
      r.zero_components.push_back(zc);
    }
  }
  if (!r.hypotheses) {
    r.cross_check = true;
    return r;
  }

  int single = -1;
  for (int i = 2; i >= 0; --i)
    if (inst.k(i) == 1) {
      single = i;
      break;
    }

  if (single >= 0) {
    // Absorb the lone entry into one of the other lists, leaving W_a and
    // the reflected W_b of the shifted list.
    const int a = single == 0 ? 1 : 0;
    const int b = 3 - single - a;
    const Rational shift = inst.list(single)[0];
    std::vector<Rational> yb = inst.list(b);
    for (auto& v : yb) v += shift;
    const AdfInstance shifted({inst.list(a), yb, std::vector<Rational>{Rational(0)}});
    const WindingProfile wa = winding_profile_Wi(shifted, 0);
    const WindingProfile wbr = winding_profile_Wi(shifted, 1).reflected();
    r.applicable = true;
    r.path = "k=1 (list " + std::to_string(single + 1) + ")";
    r.inclusion = level_set_included(wa, 1, wbr, 0);
    r.strict = level_set_endpoints_disjoint(wa, 1, wbr, 0);
    r.integral_inequality = wa.integral_from(-T) < wbr.one_minus().integral_from(-T);
  } else {
    const WindingProfile w0 = winding_profile_W12_0(inst, *part);
    const WindingProfile w3r = winding_profile_Wi(inst, 2).reflected();
    r.path = "W12_0";
    r.applicable = r.max_W12_0 <= 1;
    r.inclusion = level_set_included(w3r, 1, w0, 0);
    r.strict = level_set_endpoints_disjoint(w3r, 1, w0, 0);
    r.integral_inequality = w3r.integral_to(T) < w0.one_minus().integral_to(T);
  }
  r.verdict = r.applicable && r.inclusion && r.strict && r.integral_inequality;
  r.cross_check = !r.applicable || r.verdict == (r.sum < 0);
  return r;
}

}  // namespace peglab
