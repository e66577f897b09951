#include <doctest.h>

#include <cmath>
#include <set>

#include "peglab/pinch.hpp"
#include "support.hpp"

using namespace peglab;
using namespace peglab::testing;

TEST_CASE("phi_n examples") {
  for (double n : {1.0, 4.0, 64.0}) {
    const DPoint p = phi_n({0.0, 3.5}, n);
    CHECK(p.x == 0.0);
    CHECK(p.y == 3.5);
    double prev = -1e300;
    for (double x = -5 * n; x <= 5 * n; x += n / 8) {
      const DPoint q = phi_n({x, 0.0}, n);
      CHECK(q.y == 0.0);
      CHECK(q.x > prev);
      CHECK(std::abs(q.x) < n);
      prev = q.x;
    }
    CHECK(phi_n_inv({0.0, -2.0}, n).x == 0.0);
    CHECK(phi_n_inv({0.0, -2.0}, n).y == -2.0);
    CHECK_THROWS_AS(phi_n_inv({n, 0.0}, n), InvalidInput);
    CHECK_THROWS_AS(phi_n_inv({-2 * n, 0.0}, n), InvalidInput);
  }
}

TEST_CASE("phi_n inverse round trip and bounds") {
  const double n = 8;
  double worst = 0;
  for (int i = -100; i <= 100; ++i) {
    const DPoint p{i * 0.2, std::sin(i * 0.37)};
    const DPoint q = phi_n_inv(phi_n(p, n), n);
    worst = std::max({worst, std::abs(q.x - p.x), std::abs(q.y - p.y)});
    const DPoint r = phi_n(p, n);
    // |y| <= C (1 - |x|/n) with C = 2 max |y_in|, since sech^2 = (1 - t)(1 + t).
    CHECK(std::abs(r.y) <= 2.0 * (1 - std::abs(r.x) / n) + 1e-15);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("property: phi_n is injective on a strip grid") {
  const double n = 3;
  std::set<std::pair<double, double>> images;
  std::size_t count = 0;
  for (int i = -40; i <= 40; ++i)
    for (int j = -5; j <= 5; ++j) {
      const DPoint q = phi_n({i * 0.25, j * 0.2}, n);
      images.insert({q.x, q.y});
      ++count;
    }
  CHECK(images.size() == count);
}

TEST_CASE("compress_curve examples") {
  const CylCurve graph = constant_curve(5, 0);
  const DPolyline flat = compress_curve(graph, {16.0, 9});
  for (const auto& p : flat.vertices()) {
    CHECK(p.y == 0.0);
    CHECK(std::abs(p.x) <= 16.0);
  }
  CHECK(flat.vertices().front().x == -16.0);
  CHECK(flat.vertices().back().x == 16.0);

  std::mt19937_64 rng(31);
  const CylCurve c = random_zigzag_curve(rng, 6);
  const double ymax = std::max(std::abs(to_double(c.max_y())), std::abs(to_double(c.min_y())));
  const DPolyline three = compress_curve(c, {8.0, 3}), five = compress_curve(c, {8.0, 5});
  for (const auto& p : five.vertices()) {
    CHECK(std::abs(p.x) <= 8.0);
    CHECK(std::abs(p.y) <= ymax);
  }
  std::set<std::pair<double, double>> big;
  for (const auto& p : five.vertices()) big.insert({p.x, p.y});
  for (const auto& p : three.vertices()) CHECK(big.count({p.x, p.y}) == 1);
  CHECK(five.size() > three.size());
}

TEST_CASE("sech^2 = 1 - tanh^2 on the grid") {
  double worst = 0;
  for (int i = -1000; i <= 1000; ++i) {
    const double x = i * 0.01;
    const double sech = 1.0 / std::cosh(x);
    worst = std::max(worst, std::abs(sech * sech - (1 - std::tanh(x) * std::tanh(x))));
  }
  CHECK(worst < 1e-12);
}
