#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "io.hpp"
#include "peglab/bridge.hpp"
#include "peglab/pinch.hpp"
#include "peglab/sigma.hpp"
#include "peglab/square.hpp"
#include "svg.hpp"

namespace peglab::cli {

namespace {

using io::Json;

struct Outcome {
  Json report;
  std::string summary;
  int status = kExitPass;
  io::SvgFigure figure;
};

Json dpoint(const DPoint& p) { return Json::array({p.x, p.y}); }
Json rpoint(const RPoint& p) { return Json::array({io::to_json(p.x), io::to_json(p.y)}); }

std::vector<DPoint> to_dpoints(const std::vector<RPoint>& v) {
  std::vector<DPoint> out;
  for (const auto& p : v) out.push_back(to_double(p));
  return out;
}

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

void need(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

std::vector<CylCurve> load_curves(const RunConfig& c, std::size_t count) {
  need(c.curves.size() == count, "expected " + std::to_string(count) + " --curves files");
  std::vector<CylCurve> out;
  for (const auto& p : c.curves) out.push_back(io::load_cyl_curve(p));
  return out;
}

CurveTriple triple(const std::vector<CylCurve>& v) { return {v[0], v[1], v[2]}; }

Json square_json(const SquareQuad<double>& q) {
  Json j;
  j["x"] = q.x;
  j["y"] = q.y;
  j["a"] = q.a;
  j["b"] = q.b;
  j["side"] = std::hypot(q.a, q.b);
  Json v = Json::array();
  for (const auto& p : square_vertices(q)) v.push_back(dpoint(p));
  j["vertices"] = std::move(v);
  return j;
}

Json square_json(const SquareQuad<Rational>& q) {
  Json j;
  j["x"] = io::to_json(q.x);
  j["y"] = io::to_json(q.y);
  j["a"] = io::to_json(q.a);
  j["b"] = io::to_json(q.b);
  Json v = Json::array();
  for (const auto& p : square_vertices(q)) v.push_back(rpoint(p));
  j["vertices"] = std::move(v);
  return j;
}

Json inscription_json(const InscriptionResult& r, const std::array<DPoint, 4>& vertices) {
  Json j = square_json(r.square);
  Json v = Json::array();
  for (const auto& p : vertices) v.push_back(dpoint(p));
  j["vertices"] = std::move(v);
  j["residuals"] = Json::array({r.residuals[0], r.residuals[1], r.residuals[2], r.residuals[3]});
  j["t"] = r.t;
  j["t_lo"] = r.t_lo;
  j["t_hi"] = r.t_hi;
  j["h"] = r.h;
  return j;
}

void plot_pair(io::SvgFigure& fig, const DFunction& f, const DFunction& g) {
  fig.polyline(f.graph(), io::palette(0));
  fig.polyline(g.graph(), io::palette(1));
}

Outcome inscribe(const RunConfig& c, bool trapezoid) {
  need(c.curves.size() == 1, "expected one --curves pair file");
  const auto [rf, rg] = io::load_pair(c.curves[0]);
  const DFunction f = to_double(rf), g = to_double(rg);
  const int N = c.grid.value_or(1000);
  const TrapezoidShape shape{c.s, c.r};
  Outcome o;
  o.report["command"] = c.command;
  o.report["mode"] = "float";
  o.report["grid"] = N;
  o.report["tol"] = c.tol;
  if (trapezoid) {
    o.report["s"] = c.s;
    o.report["r"] = c.r;
  } else {
    check_graph_pair(f, g, 1.0);
  }

  std::vector<InscriptionResult> found;
  if (c.all) {
    found = trapezoid ? find_inscribed_trapezoids(f, g, shape, N, c.tol) : find_inscribed_squares(f, g, N, c.tol);
  } else {
    found.push_back(trapezoid ? find_inscribed_trapezoid(f, g, shape, N, c.tol)
                              : find_inscribed_square(f, g, N, c.tol));
  }
  Json list = Json::array();
  plot_pair(o.figure, f, g);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto v = trapezoid ? trapezoid_vertices(found[i].square, c.s, c.r) : square_vertices(found[i].square);
    list.push_back(inscription_json(found[i], v));
    o.figure.polyline(std::vector<DPoint>(v.begin(), v.end()), io::palette(2 + i), true, 2.0);
  }
  o.report[c.all ? "brackets" : "result"] = c.all ? list : list[0];
  if (c.svg) {
    const auto fam = trapezoid ? trace_trapezoid_family(f, g, shape, N) : trace_square_family(f, g, N);
    o.figure.polyline(fam.curves[2], "#888888", 1.0);
  }
  o.summary = std::to_string(found.size()) + (trapezoid ? " trapezoid(s)" : " square(s)") + " found";
  return o;
}

Outcome conserved(const RunConfig& c) {
  Outcome o;
  o.report["command"] = c.command;
  if (c.trace) {
    const auto t = io::load_trace(*c.trace);
    o.report["mode"] = mode_name(c.mode);
    if (c.mode == Mode::exact) {
      const Rational res = conserved_residual(t);
      o.report["residual"] = io::to_json(res);
      o.status = res == 0 ? kExitPass : kExitFinding;
      o.summary = "residual = " + to_string(res);
    } else {
      SquareTrace<double> d;
      for (const auto& v : t.grid) d.grid.push_back(to_double(v));
      for (const auto& v : t.x) d.x.push_back(to_double(v));
      for (const auto& v : t.y) d.y.push_back(to_double(v));
      for (const auto& v : t.a) d.a.push_back(to_double(v));
      for (const auto& v : t.b) d.b.push_back(to_double(v));
      const double res = conserved_residual(d);
      o.report["residual"] = res;
      o.summary = "residual = " + format_double(res);
    }
    const auto paths = trace_paths(t);
    for (std::size_t i = 0; i < 4; ++i) o.figure.polyline(to_dpoints(paths[i]), io::palette(i));
    return o;
  }
  need(c.curves.size() == 1, "conserved needs --trace or one --curves pair file");
  const auto [rf, rg] = io::load_pair(c.curves[0]);
  const DFunction f = to_double(rf), g = to_double(rg);
  const int N = c.grid.value_or(1000);
  const auto fam = trace_square_family(f, g, N);
  const double res = conserved_residual(fam.trace);
  o.report["mode"] = "float";
  o.report["grid"] = N;
  o.report["residual"] = res;
  for (std::size_t i = 0; i < 4; ++i) o.figure.polyline(fam.curves[i], io::palette(i));
  o.summary = "residual = " + format_double(res);
  return o;
}

Outcome area(const RunConfig& c) {
  need(c.curve.has_value(), "area needs --curve");
  const io::CurveDoc doc = io::curve_from_json(io::load_json(*c.curve));
  Outcome o;
  o.report["command"] = c.command;
  o.report["mode"] = mode_name(c.mode);
  const bool exact = c.mode == Mode::exact;
  if (doc.L) {
    const CylCurve cc = io::cyl_curve(doc);
    const RPolyline lift = cc.lift_polyline();
    o.report["degree"] = cc.degree();
    o.report["simple"] = is_simple(cc);
    o.report["area_under"] = exact ? io::to_json(area_under(lift)) : Json(area_under(to_double(lift)));
    for (int k = -1; k <= 1; ++k) o.figure.polyline(to_double(cc.translated(cc.L() * k, 0).lift_polyline()), io::palette(0));
    o.summary = "area = " + o.report["area_under"].dump();
    return o;
  }
  const RPolyline p = io::polyline(doc);
  const bool simple = is_simple(p);
  o.report["simple"] = simple;
  o.report["area_under"] = exact ? io::to_json(area_under(p)) : Json(area_under(to_double(p)));
  if (p.closed() && simple) o.report["signed_area"] = exact ? io::to_json(signed_area(p)) : Json(signed_area(to_double(p)));
  if (c.point) {
    need(p.closed(), "winding number needs a closed curve");
    const auto comma = c.point->find(',');
    need(comma != std::string::npos, "--point expects x,y");
    const RPoint q{parse_rational(c.point->substr(0, comma)), parse_rational(c.point->substr(comma + 1))};
    o.report["winding_number"] = exact ? winding_number(p, q) : winding_number(to_double(p), to_double(q));
    o.figure.dots({to_double(q)}, io::palette(1));
  }
  o.figure.polyline(to_double(p), io::palette(0));
  o.summary = "area = " + o.report["area_under"].dump();
  return o;
}

Outcome pinch(const RunConfig& c) {
  need(c.curve.has_value(), "pinch needs --curve");
  const CylCurve cc = io::load_cyl_curve(*c.curve);
  const DPolyline out = compress_curve(cc, PinchParams{c.n, c.periods});
  Outcome o;
  o.report["command"] = c.command;
  o.report["mode"] = "float";
  o.report["n"] = c.n;
  o.report["periods"] = c.periods;
  double max_y = 0;
  for (const auto& p : out.vertices()) max_y = std::max(max_y, std::abs(p.y));
  o.report["vertex_count"] = out.size();
  o.report["max_abs_y"] = max_y;
  o.report["curve"] = io::to_json(out);
  o.figure.polyline(out, io::palette(0));
  o.summary = std::to_string(out.size()) + " vertices";
  return o;
}

Outcome joint(const RunConfig& c, bool with_witness) {
  const auto v = load_curves(c, 4);
  Outcome o;
  o.report["command"] = c.command;
  o.report["mode"] = "exact";
  const Rational value = area_ineq_value(v[0], v[1], v[2], v[3]);
  o.report["area_ineq_value"] = io::to_json(value);
  for (std::size_t i = 0; i < 4; ++i) o.figure.polyline(to_double(v[i].lift_polyline()), io::palette(i));
  if (!with_witness) {
    o.summary = "area_ineq_value = " + to_string(value);
    return o;
  }
  const auto w = joint_inscribe(v[0], v[1], v[2], v[3]);
  o.report["witness"] = w ? square_json(*w) : Json(nullptr);
  if (w) {
    std::vector<DPoint> pts;
    for (const auto& p : square_vertices(*w)) pts.push_back(to_double(p));
    o.figure.polyline(pts, "#000000", true, 2.0);
  }
  // Neither a square nor a nonzero area: the area inequality fails here.
  const bool finding = !w && value == 0;
  o.report["finding"] = finding;
  o.status = finding ? kExitFinding : kExitPass;
  o.summary = w ? "jointly inscribes a square" : "no jointly inscribed square, area_ineq_value = " + to_string(value);
  return o;
}

Json hypothesis_json(const HypothesisReport& h) {
  Json j;
  j["holds"] = h.holds;
  Json v = Json::array();
  for (const auto& x : h.violations) {
    Json e;
    e["list"] = x.list;
    e["idx"] = Json::array({x.idx[0], x.idx[1], x.idx[2]});
    e["axiom"] = to_string(x.axiom);
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return j;
}

std::string verdict_summary(const AdfVerdict& v) {
  std::string s;
  if (v.hyp_i && v.hyp_ii) {
    s = "hypotheses hold";
  } else if (!v.hyp_i && !v.hyp_ii) {
    s = "hypotheses (i) and (ii) fail";
  } else {
    s = v.hyp_i ? "hypothesis (ii) fails" : "hypothesis (i) fails";
  }
  s += ", sum = " + to_string(v.sum);
  if (!v.conjecture_consistent) s += ", COUNTEREXAMPLE";
  return s;
}

Json verdict_json(const AdfVerdict& v) {
  Json j;
  j["hyp_i"] = v.hyp_i;
  j["hyp_ii"] = v.hyp_ii;
  j["sum"] = io::to_json(v.sum);
  j["conjecture_consistent"] = v.conjecture_consistent;
  return j;
}

Json interval_json(const LevelInterval& iv) {
  Json j;
  j["lo"] = io::to_json(iv.lo);
  j["hi"] = io::to_json(iv.hi);
  j["lo_closed"] = iv.lo_closed;
  j["hi_closed"] = iv.hi_closed;
  return j;
}

void plot_profiles(io::SvgFigure& fig, const AdfInstance& inst) {
  const double span = to_double(inst.max_abs()) * 3 + 1;
  for (int i = 0; i < 3; ++i) fig.step_plot(winding_profile_Wi(inst, i), -span, span, io::palette(i));
}

Outcome adf(const RunConfig& c, const std::string& sub) {
  Outcome o;
  o.report["command"] = c.command;
  o.report["mode"] = "exact";
  if (sub == "search") {
    SearchConfig sc;
    sc.k_values.clear();
    for (int k = 1; k <= c.kmax; k += 2) sc.k_values.push_back(k);
    sc.seed = c.seed;
    sc.budget = c.budget;
    sc.box = parse_rational(c.box);
    const int G = c.grid.value_or(7);
    need(G >= 1, "--grid must be positive");
    if (c.random) {
      sc.mode = SearchConfig::Mode::random;
    } else {
      sc.grid = integer_grid(-(G / 2), -(G / 2) + G - 1);
    }
    const SearchReport rep = search_counterexamples(sc);
    o.report["search_mode"] = c.random ? "random" : "exhaustive";
    o.report["k_values"] = sc.k_values;
    if (c.random) {
      o.report["seed"] = c.seed;
      o.report["budget"] = c.budget;
      o.report["box"] = io::to_json(sc.box);
    } else {
      Json g = Json::array();
      for (const auto& v : sc.grid) g.push_back(io::to_json(v));
      o.report["grid"] = std::move(g);
    }
    o.report["generated"] = rep.generated;
    o.report["failed_i"] = rep.failed_i;
    o.report["failed_ii"] = rep.failed_ii;
    o.report["satisfied"] = rep.satisfied;
    Json ce = Json::array();
    for (const auto& inst : rep.counterexamples) {
      Json e = io::to_json(inst);
      e["sum"] = io::to_json(alternating_sum(inst));
      ce.push_back(std::move(e));
    }
    o.report["counterexamples"] = std::move(ce);
    o.status = rep.counterexamples.empty() ? kExitPass : kExitFinding;
    o.summary = std::to_string(rep.satisfied) + " hypothesis-satisfying instances, " +
                std::to_string(rep.counterexamples.size()) + " counterexamples";
    return o;
  }

  need(c.instance.has_value(), "adf " + sub + " needs --instance");
  const AdfInstance inst = io::load_instance(*c.instance);
  o.report["instance"] = io::to_json(inst)["y"];
  plot_profiles(o.figure, inst);

  if (sub == "check") {
    const AdfVerdict v = adf_verdict(inst);
    o.report["verdict"] = verdict_json(v);
    o.report["hypothesis_i"] = hypothesis_json(check_hypothesis_i(inst));
    o.report["hypothesis_ii"] = hypothesis_json(check_hypothesis_ii(inst));
    o.status = v.conjecture_consistent ? kExitPass : kExitFinding;
    o.summary = verdict_summary(v);
    o.report["summary"] = o.summary;
  } else if (sub == "identities") {
    const IdentityReport rep = identity_suite(inst);
    o.report["T"] = io::to_json(rep.T);
    Json checks = Json::array();
    std::size_t failed = 0;
    for (const auto& ck : rep.checks) {
      Json e;
      e["name"] = ck.name;
      e["applicable"] = ck.applicable;
      e["passed"] = ck.passed;
      if (!ck.detail.empty()) e["detail"] = ck.detail;
      failed += ck.applicable && !ck.passed;
      checks.push_back(std::move(e));
    }
    o.report["checks"] = std::move(checks);
    o.report["all_passed"] = rep.all_passed();
    o.status = rep.all_passed() ? kExitPass : kExitFinding;
    o.summary = std::to_string(rep.checks.size()) + " identities, " + std::to_string(failed) + " failed";
  } else if (sub == "tap") {
    const TapResult t = tap_check(inst);
    o.report["hypotheses"] = t.hypotheses;
    o.report["applicable"] = t.applicable;
    o.report["path"] = t.path;
    o.report["max_W12_0"] = io::to_json(t.max_W12_0);
    o.report["inclusion"] = t.inclusion;
    o.report["strict"] = t.strict;
    o.report["integral_inequality"] = t.integral_inequality;
    o.report["sum"] = io::to_json(t.sum);
    o.report["verdict"] = t.verdict;
    o.report["cross_check"] = t.cross_check;
    Json zc = Json::array();
    for (const auto& z : t.zero_components) {
      Json e = interval_json(z.interval);
      e["contains_minus_y3"] = z.contains_minus_y3;
      zc.push_back(std::move(e));
    }
    o.report["zero_components"] = std::move(zc);
    o.status = t.cross_check ? kExitPass : kExitFinding;
    o.summary = !t.hypotheses ? "hypotheses fail" : t.applicable ? "applicable via " + t.path + ", sum = " + to_string(t.sum)
                                                                : "not applicable, max W12_0 = " + to_string(t.max_W12_0);
  } else {
    throw InvalidInput("unknown adf subcommand " + sub);
  }
  return o;
}

void write_outputs(const std::vector<fs::path>& out, const CurveTriple& curves) {
  need(out.size() == 3, "--out expects three paths");
  for (int i = 0; i < 3; ++i) io::write_text(out[i], io::to_json(curves[i]).dump(2) + "\n");
}

void plot_curves(io::SvgFigure& fig, const CurveTriple& curves) {
  for (std::size_t i = 0; i < 3; ++i) fig.polyline(to_double(curves[i].lift_polyline()), io::palette(i));
}

Json witness_json(const std::optional<ZeroSumWitness>& w) {
  if (!w) return nullptr;
  Json j;
  j["x"] = io::to_json(w->x);
  j["y"] = Json::array({io::to_json(w->y[0]), io::to_json(w->y[1]), io::to_json(w->y[2])});
  return j;
}

Outcome bridge(const RunConfig& c, const std::string& sub) {
  Outcome o;
  o.report["command"] = c.command;
  o.report["mode"] = "exact";
  if (sub == "build") {
    need(c.instance.has_value(), "bridge build needs --instance");
    const AdfInstance inst = io::load_instance(*c.instance);
    RecipeParams params;
    if (c.L) params.L = parse_rational(*c.L);
    if (c.R) params.R = parse_rational(*c.R);
    const BuiltCurves b = build_curves(inst, params);
    const AreaIdentity a = area_identity(b, inst);
    o.report["L"] = io::to_json(b.L);
    o.report["R"] = io::to_json(b.R);
    o.report["C0"] = io::to_json(b.C0);
    o.report["c"] = io::to_json(b.c);
    o.report["delta"] = io::to_json(round_trip_delta(b.curves));
    Json aj;
    aj["total"] = io::to_json(a.total);
    aj["middle"] = io::to_json(a.middle);
    aj["C1"] = io::to_json(a.C1);
    aj["ends"] = io::to_json(a.ends);
    aj["holds"] = a.holds;
    o.report["area_identity"] = std::move(aj);
    if (c.out.empty()) {
      o.report["curves"] = Json::array({io::to_json(b.curves[0]), io::to_json(b.curves[1]), io::to_json(b.curves[2])});
    } else {
      write_outputs(c.out, b.curves);
    }
    plot_curves(o.figure, b.curves);
    o.status = a.holds ? kExitPass : kExitFinding;
    o.summary = "built three curves with L = " + to_string(b.L);
    return o;
  }

  const CurveTriple curves = triple(load_curves(c, 3));
  if (sub == "fiber") {
    const Rational x = c.x ? parse_rational(*c.x) : round_trip_delta(curves);
    const auto lists = fiber_extract(curves, x);
    o.report["x"] = io::to_json(x);
    Json y = Json::array();
    for (const auto& l : lists) {
      Json jl = Json::array();
      for (const auto& v : l) jl.push_back(io::to_json(v));
      y.push_back(std::move(jl));
    }
    o.report["y"] = std::move(y);
    try {
      const AdfInstance inst(lists);
      const AdfVerdict v = adf_verdict(inst);
      o.report["verdict"] = verdict_json(v);
      o.status = v.conjecture_consistent ? kExitPass : kExitFinding;
      o.summary = verdict_summary(v);
    } catch (const InvalidInput& e) {
      o.report["verdict"] = nullptr;
      o.summary = std::string("fibre data is not an instance: ") + e.what();
    }
    plot_curves(o.figure, curves);
    return o;
  }
  if (sub == "trace") {
    CurveTriple used = curves;
    const auto start_x = [&] { return c.x ? parse_rational(*c.x) : round_trip_delta(used); };
    bool perturbed = false;
    Rational x;
    TraceResult t;
    try {
      x = start_x();
      t = trace_cycle(used, first_crossing_state(used, x));
    } catch (const GeneralPositionError&) {
      perturbed = true;
      used = genericize(curves, c.seed);
      x = start_x();
      t = trace_cycle(used, first_crossing_state(used, x));
    }
    o.report["perturbed"] = perturbed;
    o.report["start_x"] = io::to_json(x);
    o.report["events"] = t.states.size() - 1;
    o.report["period"] = t.period;
    o.report["m"] = t.m;
    o.report["sign"] = t.sign ? Json(*t.sign) : Json(nullptr);
    o.report["zero_sum"] = witness_json(t.zero_sum);
    if (perturbed) o.report["curves"] = Json::array({io::to_json(used[0]), io::to_json(used[1]), io::to_json(used[2])});
    plot_curves(o.figure, used);
    for (int i = 0; i < 3; ++i) {
      std::vector<DPoint> path;
      for (const auto& s : t.states) path.push_back({to_double(s.x), to_double(s.y[i])});
      o.figure.polyline(path, "#000000", false, 0.75);
    }
    o.status = t.zero_sum ? kExitFinding : kExitPass;
    o.summary = t.zero_sum ? "zero-sum crossing found"
                           : "periodic with m = " + std::to_string(t.m) + ", sign " + std::to_string(*t.sign);
    return o;
  }
  throw InvalidInput("unknown bridge subcommand " + sub);
}

Outcome sai(const RunConfig& c) {
  const CurveTriple curves = triple(load_curves(c, 3));
  const SaiResult r = sai_check(curves);
  Outcome o;
  o.report["command"] = c.command;
  o.report["mode"] = "exact";
  o.report["witness"] = witness_json(r.witness);
  o.report["area"] = io::to_json(r.area);
  o.report["consistent"] = r.consistent;
  plot_curves(o.figure, curves);
  o.status = r.consistent ? kExitPass : kExitFinding;
  o.summary = r.witness ? "zero-sum fibre found" : "no zero-sum fibre, area = " + to_string(r.area);
  return o;
}

Outcome plot(const RunConfig& c) {
  need(c.svg.has_value(), "plot needs --svg");
  Outcome o;
  o.report["command"] = c.command;
  std::size_t i = 0;
  for (const auto& p : c.curves) {
    const io::CurveDoc doc = io::curve_from_json(io::load_json(p));
    if (doc.L) {
      o.figure.polyline(to_double(io::cyl_curve(doc).lift_polyline()), io::palette(i++));
    } else {
      o.figure.polyline(to_double(io::polyline(doc)), io::palette(i++));
    }
  }
  if (c.instance) plot_profiles(o.figure, io::load_instance(*c.instance));
  need(!o.figure.empty(), "nothing to plot");
  o.summary = "wrote " + c.svg->string();
  return o;
}

Outcome dispatch(const RunConfig& c) {
  const auto space = c.command.find(' ');
  const std::string head = c.command.substr(0, space);
  const std::string sub = space == std::string::npos ? "" : c.command.substr(space + 1);
  if (head == "find-square") return inscribe(c, false);
  if (head == "find-trapezoid") return inscribe(c, true);
  if (head == "conserved") return conserved(c);
  if (head == "area") return area(c);
  if (head == "pinch") return pinch(c);
  if (head == "joint") return joint(c, true);
  if (head == "area-ineq") return joint(c, false);
  if (head == "adf") return adf(c, sub);
  if (head == "bridge") return bridge(c, sub);
  if (head == "sai") return sai(c);
  if (head == "plot") return plot(c);
  throw InvalidInput("unknown command " + c.command);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Outcome o = dispatch(config);
    if (config.svg) io::write_text(*config.svg, o.figure.str());
    if (config.json) {
      io::write_text(*config.json, o.report.dump(2) + "\n");
      out << o.summary << "\n";
    } else {
      out << o.report.dump(2) << "\n";
    }
    return o.status;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const GeneralPositionError& e) {
    err << "error: general position: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"peglab: inscribed squares, cylinder curves and non-crossing sums"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode = "exact";
  app.add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));

  auto common = [&](CLI::App* s) {
    s->add_option("--svg", cfg.svg, "write an SVG figure");
    s->add_option("--json", cfg.json, "write the JSON report here instead of stdout");
  };
  auto curves_opt = [&](CLI::App* s) { s->add_option("--curves", cfg.curves, "curve JSON files")->expected(1, 4); };

  std::map<CLI::App*, std::string> names;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    common(s);
    names[s] = parent == &app ? name : parent->get_name() + " " + name;
    return s;
  };

  for (const auto& [name, desc] : {std::pair{"find-square", "inscribed square between two graphs"},
                                   std::pair{"find-trapezoid", "inscribed trapezoid between two graphs"}}) {
    auto* s = add(&app, name, desc);
    curves_opt(s);
    s->add_option("--grid", cfg.grid, "grid points");
    s->add_option("--tol", cfg.tol, "bisection tolerance");
    s->add_flag("--all", cfg.all, "report every bracket");
    if (std::string(name) == "find-trapezoid") {
      s->add_option("--s", cfg.s, "trapezoid offset s");
      s->add_option("--r", cfg.r, "trapezoid height r");
    }
  }
  {
    auto* s = add(&app, "conserved", "conserved integral residual");
    curves_opt(s);
    s->add_option("--trace", cfg.trace, "SquareTrace JSON");
    s->add_option("--grid", cfg.grid, "grid points");
  }
  {
    auto* s = add(&app, "area", "area under a curve, simplicity, winding");
    s->add_option("--curve", cfg.curve, "curve JSON file")->required();
    s->add_option("--point", cfg.point, "x,y for the winding number");
  }
  {
    auto* s = add(&app, "pinch", "compress a cylinder curve into a bounded curve");
    s->add_option("--curve", cfg.curve, "cylinder curve JSON file")->required();
    s->add_option("--n", cfg.n, "pinch scale n");
    s->add_option("--periods", cfg.periods, "lift periods to map");
  }
  curves_opt(add(&app, "joint", "joint inscription of four cylinder curves"));
  curves_opt(add(&app, "area-ineq", "alternating area of four cylinder curves"));

  auto* adf_cmd = app.add_subcommand("adf", "non-crossing sums instances")->require_subcommand(1);
  for (const auto& [name, desc] : {std::pair{"check", "hypotheses, alternating sum and verdict"},
                                   std::pair{"identities", "exact winding identity suite"},
                                   std::pair{"tap", "sign of the sum via the winding profiles"}})
    add(adf_cmd, name, desc)->add_option("--instance", cfg.instance, "instance JSON file")->required();
  {
    auto* s = add(adf_cmd, "search", "counterexample search");
    s->add_option("--kmax", cfg.kmax, "largest odd list length");
    s->add_option("--grid", cfg.grid, "integer grid size");
    s->add_option("--seed", cfg.seed, "random seed");
    s->add_option("--budget", cfg.budget, "random instance count");
    s->add_flag("--random", cfg.random, "seeded random instances instead of a grid");
    s->add_option("--box", cfg.box, "random values lie in [-box, box]");
  }

  auto* bridge_cmd = app.add_subcommand("bridge", "curves from instances and back")->require_subcommand(1);
  {
    auto* s = add(bridge_cmd, "build", "curves from an instance");
    s->add_option("--instance", cfg.instance, "instance JSON file")->required();
    s->add_option("--out", cfg.out, "three curve JSON paths")->expected(3);
    s->add_option("--L", cfg.L, "circumference");
    s->add_option("--R", cfg.R, "end-function constant");
  }
  {
    auto* s = add(bridge_cmd, "fiber", "fibre data at x");
    curves_opt(s);
    s->add_option("--x", cfg.x, "fibre abscissa");
  }
  {
    auto* s = add(bridge_cmd, "trace", "cycle dynamics");
    curves_opt(s);
    s->add_option("--x", cfg.x, "start abscissa (default: half the smallest vertex abscissa)");
    s->add_option("--seed", cfg.seed, "perturbation seed");
  }
  auto* sai_cmd = app.add_subcommand("sai", "zero-sum fibre versus area")->require_subcommand(1);
  curves_opt(add(sai_cmd, "check", "zero-sum witness or nonzero area"));
  {
    auto* s = add(&app, "plot", "plot curves and winding profiles");
    curves_opt(s);
    s->get_option("--curves")->expected(1, -1);
    s->add_option("--instance", cfg.instance, "instance JSON file for winding profiles");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    app.exit(e, out, err);
    return kExitError;
  }
  for (const auto& [s, name] : names)
    if (s->parsed()) cfg.command = name;
  if (const char* env = std::getenv("PEGLAB_MODE")) {
    const std::string m = env;
    if (m != "exact" && m != "float") {
      err << "error: PEGLAB_MODE must be exact or float\n";
      return kExitError;
    }
    mode = m;
  }
  cfg.mode = mode == "exact" ? Mode::exact : Mode::floating;
  return run(cfg, out, err);
}

}  // namespace peglab::cli
