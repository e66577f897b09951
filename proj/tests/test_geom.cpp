#include <doctest.h>

#include "peglab/geom.hpp"
#include "support.hpp"

using namespace peglab;
using namespace peglab::testing;

namespace {

RPolyline unit_square(bool ccw = true) {
  RPolyline p({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
  return ccw ? p : p.reversed();
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(from_double(0.1).get_d() == 0.1);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(mod(Rational(-1, 2), 3) == Rational(5, 2));
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("area_under examples") {
  CHECK(area_under(unit_square()) == -1);
  CHECK(area_under(RPolyline({{0, 0}, {1, 1}})) == Rational(1, 2));
  std::vector<RPoint> there{{0, 0}, {1, 2}, {3, -1}, {4, 5}};
  std::vector<RPoint> both = there;
  for (auto it = there.rbegin() + 1; it != there.rend(); ++it) both.push_back(*it);
  CHECK(area_under(RPolyline(both)) == 0);
  CHECK_THROWS_AS(RPolyline({{0, 0}}), InvalidInput);
}

TEST_CASE("signed_area examples") {
  CHECK(signed_area(unit_square()) == 1);
  CHECK(signed_area(unit_square(false)) == -1);
  CHECK(signed_area(RPolyline({{0, 0}, {2, 0}, {0, 2}}, true)) == 2);
  CHECK_THROWS_AS(signed_area(RPolyline({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, true)), InvalidInput);
}

TEST_CASE("is_simple examples") {
  CHECK(is_simple(unit_square()));
  CHECK_FALSE(is_simple(RPolyline({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, true)));
  CHECK(is_simple(RPolyline({{0, 0}, {1, 0}, {1, 1}})));
  CHECK_FALSE(is_simple(RPolyline({{0, 0}, {2, 0}, {1, 0}})));
  CHECK_FALSE(is_simple(RPolyline({{0, 0}, {2, 0}, {2, 1}, {1, 0}})));
  CHECK(is_simple(to_double(unit_square())));
}

TEST_CASE("winding_number examples") {
  CHECK(winding_number(unit_square(), RPoint{Rational(1, 2), Rational(1, 2)}) == 1);
  CHECK(winding_number(unit_square(), RPoint{2, 2}) == 0);
  CHECK(winding_number(unit_square(false), RPoint{Rational(1, 2), Rational(1, 2)}) == -1);
  // Traversed twice, with a midpoint on the left side so consecutive vertices differ.
  const RPolyline twice({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, Rational(1, 2)},
                         {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, Rational(1, 2)}},
                        true);
  CHECK(winding_number(twice, RPoint{Rational(1, 2), Rational(1, 2)}) == 2);
  CHECK_THROWS_AS(RPolyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}, true), InvalidInput);
  CHECK_THROWS_AS(winding_number(unit_square(), RPoint{1, Rational(1, 2)}), InvalidInput);
  CHECK_THROWS_AS(winding_number(to_double(unit_square()), DPoint{1.0, 0.5}), InvalidInput);
  CHECK(winding_number(to_double(unit_square()), DPoint{0.5, 0.5}) == 1);
}

TEST_CASE("homology degree examples") {
  const Rational L = 5;
  CHECK(CylCurve(L, {{0, 0}, {L, 0}}).degree() == 1);
  CHECK(CylCurve(L, {{L, 3}, {0, 3}}).degree() == -1);
  CHECK(CylCurve(L, {{0, 0}, {2 * L, 0}}).degree() == 2);
  CHECK_THROWS_AS(CylCurve(L, {{0, 0}, {3, 0}}), InvalidInput);
  CHECK_THROWS_AS(CylCurve(L, {{0, 0}, {L, 1}}), InvalidInput);
}

TEST_CASE("lipschitz_constant examples") {
  CHECK(lipschitz_constant(RFunction::interval({0, 1}, {0, Rational(1, 2)})) == Rational(1, 2));
  CHECK(lipschitz_constant(RFunction::interval({-1, 0, 1}, {0, Rational(1, 2), 0})) == Rational(1, 2));
  CHECK(lipschitz_constant(constant_function(0, 3, 7)) == 0);
  CHECK(lipschitz_constant(RFunction::circular(4, {0, 1}, {0, 2})) == 2);
}

TEST_CASE("PLFunction evaluation") {
  const auto f = RFunction::interval({-1, 0, 1}, {0, 2, 0});
  CHECK(f(Rational(-1, 2)) == 1);
  CHECK(f(5) == 0);
  CHECK(f(-5) == 0);
  const auto c = RFunction::circular(4, {0, 2}, {0, 2});
  CHECK(c(3) == 1);
  CHECK(c(7) == 1);
  CHECK(c(-1) == 1);
  CHECK_THROWS_AS(RFunction::interval({0, 0}, {1, 2}), InvalidInput);
  CHECK_THROWS_AS(RFunction::circular(4, {0, 4}, {1, 2}), InvalidInput);
}

TEST_CASE("perturb_generic examples") {
  const Rational L = 10;
  std::mt19937_64 rng(3);
  std::vector<CylCurve> in{random_graph_curve(rng, L, 5), random_graph_curve(rng, L, 5)};
  in.push_back(in[0].translated(0, 1));  // shares every vertex abscissa with curve 0
  CHECK(general_position_violation(in).has_value());
  const Rational m(1, 1000);
  const auto out = perturb_generic(in, 7, m);
  CHECK_FALSE(general_position_violation(out).has_value());
  for (std::size_t i = 0; i < in.size(); ++i) {
    REQUIRE(out[i].lift().size() == in[i].lift().size());
    CHECK(out[i].degree() == in[i].degree());
    for (std::size_t k = 0; k < in[i].lift().size(); ++k) {
      CHECK(abs(out[i].lift()[k].x - in[i].lift()[k].x) <= m);
      CHECK(abs(out[i].lift()[k].y - in[i].lift()[k].y) <= m);
    }
  }
  const auto again = perturb_generic(in, 7, m);
  for (std::size_t i = 0; i < in.size(); ++i) CHECK(again[i].lift() == out[i].lift());
  CHECK_THROWS_AS(perturb_generic(in, 7, Rational(0)), InvalidInput);
}

TEST_CASE("property: area_under = -signed_area on random simple polygons") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const RPolyline p = random_simple_polygon(rng);
    CHECK(area_under(p) == -signed_area(p));
    CHECK(area_under(p.reversed()) == -area_under(p));
  }
}

TEST_CASE("property: area_under is additive under concatenation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RPoint> a, b;
    RPoint at{random_rational(rng, -5, 5, 3), random_rational(rng, -5, 5, 3)};
    a.push_back(at);
    for (int i = 0; i < 5; ++i) a.push_back({random_rational(rng, -5, 5, 7), random_rational(rng, -5, 5, 7)});
    b.push_back(a.back());
    for (int i = 0; i < 4; ++i) b.push_back({random_rational(rng, -5, 5, 7), random_rational(rng, -5, 5, 7)});
    std::vector<RPoint> ab = a;
    ab.insert(ab.end(), b.begin() + 1, b.end());
    CHECK(area_under(RPolyline(ab)) == area_under(RPolyline(a)) + area_under(RPolyline(b)));
  }
}

TEST_CASE("property: winding number agrees with even-odd oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const RPolyline p = random_simple_polygon(rng);
    for (int k = 0; k < 10; ++k) {
      const RPoint q{random_rational(rng, -11, 11, 17), random_rational(rng, -11, 11, 19)};
      int w = 0;
      try {
        w = winding_number(p, q);
      } catch (const InvalidInput&) {
        continue;
      }
      CHECK(w == (inside_even_odd(p, q) ? 1 : 0));
    }
  }
}

TEST_CASE("property: degree invariant under re-basing") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const CylCurve c = random_zigzag_curve(rng, 12);
    for (std::size_t k = 0; k < c.edge_count(); ++k) {
      const CylCurve r = c.rebased(k);
      CHECK(r.degree() == c.degree());
      CHECK(area_under(r.lift_polyline()) == area_under(c.lift_polyline()));
    }
    CHECK(CylCurve(c.L(), c.lift_polyline().reversed().vertices()).degree() == -c.degree());
  }
}

TEST_CASE("lift edges over a window") {
  const CylCurve c(10, {{0, 0}, {4, 1}, {10, 0}});
  CHECK(lift_edges_in_range(c, 2, 2) == std::vector<long long>{0});
  CHECK(lift_edges_in_range(c, 12, 12) == std::vector<long long>{2});
  CHECK(lift_edges_in_range(c, -3, -3) == std::vector<long long>{-1});
  CHECK(lift_edges_in_range(c, 0, 10).size() == 4);
  CHECK(c.vertex(-1) == RPoint{4 - 10, 1});
  CHECK(c.vertex(3) == RPoint{14, 1});
}
