// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "peglab/bridge.hpp"
#include "peglab/pinch.hpp"
#include "peglab/sigma.hpp"
#include "peglab/square.hpp"
#include "support.hpp"

using namespace peglab;
using namespace peglab::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DFunction tent(double h) { return DFunction::interval({-1, 0, 1}, {0, h, 0}); }

Outcome conserved_integral() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 1000; ++i)
    if (conserved_residual(random_square_trace(rng, 50)) != 0) fail(o, "nonzero exact residual at trace " + std::to_string(i));

  const int N = 10000;
  SquareTrace<double> rot;
  for (int i = 0; i < N; ++i) {
    const double t = M_PI / 4 * i / (N - 1);
    rot.grid.push_back(t);
    rot.x.push_back(0);
    rot.y.push_back(0);
    rot.a.push_back(std::cos(t));
    rot.b.push_back(std::sin(t));
  }
  const double rhs = (rot.a.back() * rot.a.back() - rot.b.back() * rot.b.back()) / 2 -
                     (rot.a[0] * rot.a[0] - rot.b[0] * rot.b[0]) / 2;
  const double res = std::abs(conserved_residual(rot));
  if (res >= 1e-6) fail(o, "rotating family residual " + format_double(res));
  if (std::abs(rhs + 0.5) > 1e-12) fail(o, "rotating family RHS " + format_double(rhs));
  const double secs = seconds_since(t0);
  if (secs >= 10) fail(o, "runtime " + format_double(secs) + " s");
  if (o.pass) o.detail = "1000 exact traces, rotating residual " + format_double(res);
  return o;
}

Outcome inscribed_squares() {
  Outcome o;
  const DFunction f = tent(-0.5), g = tent(0.5);
  const auto r = find_inscribed_square(f, g, 2048);
  if (*std::max_element(r.residuals.begin(), r.residuals.end()) >= 1e-8) fail(o, "tent residual too large");
  bool symmetric = false;
  const double third = 1.0 / 3;
  const DPoint want[4] = {{-third, -third}, {third, -third}, {third, third}, {-third, third}};
  for (const auto& s : find_inscribed_squares(f, g, 2048)) {
    const auto v = square_vertices(s.square);
    bool match = true;
    for (int i = 0; i < 4; ++i) match &= std::abs(v[i].x - want[i].x) < 1e-6 && std::abs(v[i].y - want[i].y) < 1e-6;
    symmetric |= match;
  }
  if (!symmetric) fail(o, "symmetric tent square not among the brackets");

  std::mt19937_64 rng(1002);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto [p, q] = random_lipschitz_pair(rng);
    const auto fam = trace_square_family(p, q, 2048);
    if (!is_simple(fam.curves[2])) fail(o, "gamma3 not simple for pair " + std::to_string(i));
    const auto s = find_inscribed_square(p, q, 2048);
    const auto v = square_vertices(s.square);
    const double res = std::max({distance_to_graph(p, v[0]), distance_to_graph(p, v[1]), distance_to_graph(q, v[2]),
                                 distance_to_graph(q, v[3])});
    worst = std::max(worst, res);
    if (res >= 1e-6 || std::hypot(s.square.a, s.square.b) == 0) fail(o, "unverified square for pair " + std::to_string(i));
  }
  if (o.pass) o.detail = "tent side 2/3 found, 100 random pairs, worst residual " + format_double(worst);
  return o;
}

Outcome polygon_areas() {
  Outcome o;
  std::mt19937_64 rng(1003);
  for (int i = 0; i < 1000; ++i) {
    const RPolyline p = random_simple_polygon(rng);
    if (area_under(p) != -signed_area(p)) fail(o, "mismatch on polygon " + std::to_string(i));
  }
  if (o.pass) o.detail = "1000 random simple CCW polygons";
  return o;
}

Outcome non_crossing_oracles() {
  Outcome o;
  const long grid[8] = {-7, -5, -3, -1, 0, 2, 4, 6};
  int tuples = 0;
  for (long a1 : grid)
    for (long a2 : grid)
      for (long b1 : grid)
        for (long b2 : grid) {
          if (a1 == a2 || a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 || b1 == b2) continue;
          ++tuples;
          const std::vector<SumPair> p{{XReal(a1), XReal(a2)}, {XReal(-b1), XReal(-b2)}};
          if (non_crossing_sums(p).holds != parity_rule({a1, a2}, {b1, b2})) fail(o, "parity rule mismatch");
        }

  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<long> d(-1000, 1000);
  int triples = 0;
  while (triples < 10000) {
    std::array<SumPair, 3> p;
    std::array<long, 3> gaps;
    for (int i = 0; i < 3; ++i) {
      const long u = d(rng), v = d(rng);
      p[i] = {XReal(u), XReal(v)};
      gaps[i] = std::abs(u - v);
    }
    if (gaps[0] == gaps[1] || gaps[1] == gaps[2] || gaps[0] == gaps[2]) continue;
    ++triples;
    if (influence_free(p) != non_crossing_sums(p).holds) fail(o, "influence_free mismatch");
  }
  const std::vector<SumPair> ex1{{XReal(0), XReal(1)}, {XReal(0), XReal(6)}, {XReal(-5), XReal(1)}};
  const std::vector<SumPair> ex2(3, SumPair{XReal(-3), XReal(5)});
  if (!non_crossing_sums(ex1).holds) fail(o, "{0,1},{0,6},{-5,1} should be non-crossing");
  if (non_crossing_sums(ex2).holds) fail(o, "{-3,5}^3 should be crossing");
  if (o.pass) o.detail = std::to_string(tuples) + " 4-tuples, " + std::to_string(triples) + " random triples";
  return o;
}

Outcome conjecture_search() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  SearchConfig cfg;
  cfg.k_values = {1, 3};
  cfg.grid = integer_grid(-3, 3);
  const auto rep = search_counterexamples(cfg);
  if (!rep.counterexamples.empty()) fail(o, std::to_string(rep.counterexamples.size()) + " counterexamples");
  const AdfInstance bad({std::vector<Rational>{-1, -4, -2}, {0}, {0}});
  const auto v = adf_verdict(bad);
  if (v.sum != 1 || v.hyp_i || check_hypothesis_i(bad).holds) fail(o, "(-1,-4,-2),(0),(0) not reproduced");
  const double secs = seconds_since(t0);
  if (secs >= 300) fail(o, "runtime " + format_double(secs) + " s");
  if (o.pass)
    o.detail = std::to_string(rep.generated) + " instances, " + std::to_string(rep.satisfied) +
               " satisfy the hypotheses, 0 counterexamples";
  return o;
}

Outcome identity_suite_run() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& x : sample_valid_instances(1006, 10000, {1, 3, 5}, Rational(8))) {
    const auto rep = identity_suite(x);
    for (const auto& c : rep.checks) {
      ++checks;
      if (!c.applicable || !c.passed) fail(o, c.name + " failed: " + c.detail);
    }
    const auto g = build_G12(x);
    if (!g.degrees_ok || !g.edges_closed || !g.balanced) fail(o, "G12 degree or balance failure");
  }
  if (o.pass) o.detail = "10000 instances, " + std::to_string(checks) + " identity checks";
  return o;
}

Outcome nine_epsilon() {
  Outcome o;
  const Rational e(1, 10);
  const AdfInstance a({std::vector<Rational>{0, 10, 20}, {0, 1, 2},
                       {-e, -1 + e, -2 - e, -12 + e, -11 - e, -10 + e, -20 - e, -21 + e, -22 - e}});
  const auto v = adf_verdict(a);
  if (!v.hyp_i || !v.hyp_ii) fail(o, "hypotheses fail");
  if (alternating_sum(a) != Rational(-9, 10)) fail(o, "sum " + to_string(alternating_sum(a)));
  if (o.pass) o.detail = "sum = -9/10";
  return o;
}

std::vector<AdfInstance> bridge_instances() { return sample_valid_instances(1008, 200, {1, 3, 5}, Rational(8)); }

Outcome bridge_round_trip() {
  Outcome o;
  for (const auto& inst : bridge_instances()) {
    const BuiltCurves b = build_curves(inst);
    for (const auto& c : b.curves)
      if (!is_simple(c)) fail(o, "non-simple built curve");
    const auto f = fiber_extract(b.curves, round_trip_delta(b.curves));
    if (f != inst.lists()) fail(o, "fibres differ from the instance");
    if (find_zero_sum_fiber(b.curves)) fail(o, "zero-sum fibre on built curves");
    if (!area_identity(b, inst).holds) fail(o, "area identity fails");
  }
  if (o.pass) o.detail = "200 instances";
  return o;
}

Outcome dynamics() {
  Outcome o;
  std::uint64_t seed = 0;
  std::size_t events = 0;
  for (const auto& inst : bridge_instances()) {
    const CurveTriple g = genericize(build_curves(inst).curves, seed++);
    const auto r = trace_cycle(g, first_crossing_state(g, round_trip_delta(g)));
    events += r.states.size();
    if (r.period == 0 || r.m < 1) fail(o, "not periodic with m >= 1");
    if (!r.sign) {
      fail(o, "sum of ordinates changes sign");
      continue;
    }
    for (const auto& s : r.states)
      if (sign(Rational(s.y[0] + s.y[1] + s.y[2])) != *r.sign) fail(o, "sign not constant");
  }
  if (o.pass) o.detail = "200 built triples, " + std::to_string(events) + " events";
  return o;
}

Outcome pinch_map() {
  Outcome o;
  double worst = 0;
  for (double n : {1.0, 64.0})
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < 100; ++j) {
        const DPoint p{(-0.99 + 1.98 * i / 99) * n, -2.0 + 4.0 * j / 99};
        const DPoint q = phi_n(phi_n_inv(p, n), n);
        const DPoint r = phi_n_inv(phi_n(p, n), n);
        worst = std::max({worst, std::abs(q.x - p.x), std::abs(q.y - p.y), std::abs(r.x - p.x), std::abs(r.y - p.y)});
      }
  if (worst >= 1e-9) fail(o, "round trip error " + format_double(worst));
  double ident = 0;
  for (int i = -5000; i <= 5000; ++i) {
    const double x = i * 1e-3, s = 1 / std::cosh(x), t = std::tanh(x);
    ident = std::max(ident, std::abs(s * s - (1 - t * t)));
  }
  if (ident >= 1e-12) fail(o, "sech^2 identity error " + format_double(ident));
  const DPolyline squeezed = compress_curve(constant_curve(7, 0), {64.0, 9});
  for (const auto& p : squeezed.vertices())
    if (p.y != 0.0) fail(o, "compressed graph leaves the x-axis");
  if (o.pass) o.detail = "round trip " + format_double(worst) + ", identity " + format_double(ident);
  return o;
}

Outcome joint_inscription() {
  Outcome o;
  std::mt19937_64 rng(1011);
  const Rational L = 8;
  auto flat = [&](const Rational& x0, const Rational& c) { return CylCurve(L, {{x0, c}, {x0 + L, c}}); };
  for (int i = 0; i < 50; ++i) {
    std::array<Rational, 4> c;
    for (auto& v : c) v = random_rational(rng, -5, 5, 7);
    if (i % 2 == 0) c[2] = c[1] + c[3] - c[0];
    const bool want = c[2] == c[1] + c[3] - c[0];
    const auto w = joint_inscribe(flat(0, c[0]), flat(Rational(1, 3), c[1]), flat(Rational(2, 3), c[2]), flat(1, c[3]));
    if (w.has_value() != want) fail(o, "constant-height criterion mismatch");
  }
  int none = 0, findings = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<CylCurve> q{random_graph_curve(rng, L, 4), random_zigzag_curve(rng, L), random_graph_curve(rng, L, 4),
                            random_graph_curve(rng, L, 3)};
    q[2] = q[2].translated(0, random_rational(rng, -6, 6, 5));
    q = perturb_generic(q, i, Rational(1, 1000));
    if (joint_inscribe(q[0], q[1], q[2], q[3])) continue;
    ++none;
    if (area_ineq_value(q[0], q[1], q[2], q[3]) == 0) ++findings;
  }
  if (findings) fail(o, std::to_string(findings) + " area-inequality findings");
  if (o.pass) o.detail = "50 constant quadruples, 100 random (" + std::to_string(none) + " without a square), 0 findings";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"conserved integral", conserved_integral},
      {"inscribed square finder", inscribed_squares},
      {"area under polygons", polygon_areas},
      {"non-crossing oracles", non_crossing_oracles},
      {"counterexample search", conjecture_search},
      {"identity suite", identity_suite_run},
      {"9 epsilon instance", nine_epsilon},
      {"bridge round trip", bridge_round_trip},
      {"fibre dynamics", dynamics},
      {"pinch map", pinch_map},
      {"joint inscription", joint_inscription},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all &= o.pass;
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
