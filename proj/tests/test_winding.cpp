#include <doctest.h>

#include "peglab/adf.hpp"
#include "support.hpp"

using namespace peglab;
using namespace peglab::testing;

namespace {

AdfInstance inst(std::vector<Rational> a, std::vector<Rational> b, std::vector<Rational> c) {
  return AdfInstance({std::move(a), std::move(b), std::move(c)});
}

AdfInstance nine_eps() {
  const Rational e(1, 10);
  return inst({0, 10, 20}, {0, 1, 2}, {-e, -1 + e, -2 - e, -12 + e, -11 - e, -10 + e, -20 - e, -21 + e, -22 - e});
}

std::vector<Rational> R(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool same_profile(const WindingProfile& a, const WindingProfile& b) {
  return a.breakpoints() == b.breakpoints() && a.plateaus() == b.plateaus() && a.point_values() == b.point_values();
}

}  // namespace

TEST_CASE("Wi examples") {
  const auto w = winding_profile_Wi(inst({0}, {1}, {2}), 0);
  CHECK(w.breakpoints() == R({0}));
  CHECK(w.plateaus() == R({1, 0}));
  CHECK(w(Rational(0)) == Rational(1, 2));

  const auto v = winding_profile_Wi(inst(R({0, 2, 3}), {1}, {5}), 0);
  CHECK(v.plateaus() == R({1, 0, 1, 0}));
  for (const auto& p : v.point_values()) CHECK(p == Rational(1, 2));
  CHECK(v(Rational(-1)) == 1);
  CHECK(v(Rational(1)) == 0);
  CHECK(v(Rational(5, 2)) == 1);
  CHECK(v(Rational(4)) == 0);
  CHECK(v(XReal::neg_inf()) == 1);
  CHECK(v(XReal::pos_inf()) == 0);

  const auto u = winding_profile_Wi(inst(R({-1, -4, -2}), {0}, {0}), 0);
  CHECK(u(Rational(-3)) == 2);
}

TEST_CASE("step profile integrals") {
  const auto w = winding_profile_Wi(inst({5}, {0}, {1}), 0);
  CHECK(w.integral_from(-10) == 15);
  CHECK(w.integral(-10, 10) == 15);
  CHECK(w.one_minus().integral_to(10) == 5);
  CHECK(w.reflected()(Rational(-6)) == 0);
  CHECK(w.reflected()(Rational(-4)) == 1);
  CHECK_THROWS_AS(w.one_minus().integral_from(0), InvalidInput);
}

TEST_CASE("Wii examples") {
  const auto w = winding_profile_Wii(inst({3}, {-7}, {1}), 0, 1);
  CHECK(w.plateaus() == R({1, 0}));
  CHECK(w.breakpoints() == R({-4}));
  // With a single zero in list 3, W13 = W1 and W23 = W2.
  const auto a = sample_valid_instances(61, 30, {1, 3, 5}, Rational(8));
  for (const auto& x : a) {
    const AdfInstance z({x.list(0), x.list(1), {Rational(0)}});
    CHECK(same_profile(winding_profile_Wii(z, 0, 2), winding_profile_Wi(z, 0)));
    CHECK(same_profile(winding_profile_Wii(z, 1, 2), winding_profile_Wi(z, 1)));
  }
}

TEST_CASE("perturbative example: V12^{+1} is empty") {
  const AdfInstance a = nine_eps();
  const auto part = partition_V12(a);
  CHECK(part.v1.empty());
  const auto w0 = winding_profile_W12_0(a, part);
  CHECK(same_profile(w0, winding_profile_Wii(a, 0, 1)));
  const auto zeros = level_set(w0, 0);
  REQUIRE(zeros.size() == 5);
  const long ends[5][2] = {{0, 1}, {2, 10}, {11, 12}, {20, 21}, {22, 0}};
  for (int i = 0; i < 5; ++i) {
    CHECK(zeros[i].lo == XReal(ends[i][0]));
    if (i < 4) CHECK(zeros[i].hi == XReal(ends[i][1]));
    CHECK_FALSE(zeros[i].lo_closed);
  }
  CHECK(zeros[4].hi == XReal::pos_inf());
  const auto g = build_G12(a);
  CHECK(g.edges.empty());
  CHECK(g.cycles.empty());
}

TEST_CASE("partition: boundary cells lie in V12^0") {
  for (const auto& x : sample_valid_instances(62, 40, {1, 3, 5}, Rational(8))) {
    const auto part = partition_V12(x);
    CHECK(part.v0.size() + part.v1.size() == static_cast<std::size_t>((x.k(0) + 2) * (x.k(1) + 2)));
    for (const auto& c : part.v1) {
      CHECK(c[0] >= 1);
      CHECK(c[0] <= x.k(0));
      CHECK(c[1] >= 1);
      CHECK(c[1] <= x.k(1));
    }
  }
}

TEST_CASE("property: G12 is a union of balanced cycles") {
  int nonempty = 0;
  for (const auto& x : sample_valid_instances(63, 300, {1, 3, 5}, Rational(8))) {
    const auto g = build_G12(x);
    CHECK(g.degrees_ok);
    CHECK(g.edges_closed);
    CHECK(g.balanced);
    std::size_t on_cycles = 0;
    for (const auto& c : g.cycles) on_cycles += c.size();
    CHECK(on_cycles == g.partition.v1.size());
    nonempty += !g.edges.empty();
  }
  CHECK(nonempty > 0);
}

TEST_CASE("G12 rejects tied gaps") {
  CHECK_THROWS_AS(build_G12(inst(R({0, 2, 4}), R({10, 12, 14}), {-30})), InvalidInput);
}

TEST_CASE("plateaus of a non-crossing list") {
  const auto w = winding_profile_Wi(inst(R({0, 2, 3}), {1}, {-9}), 0);
  CHECK(w.min_plateau() == 0);
  CHECK(w.max_plateau() == 1);
}

TEST_CASE("pair profiles vanish at negated entries with a singleton third list") {
  const AdfInstance a = inst(R({0, 2, 3}), R({-5}), R({0}));
  REQUIRE(adf_verdict(a).hyp_i);
  REQUIRE(adf_verdict(a).hyp_ii);
  const auto w1 = winding_profile_Wi(a, 0), w2 = winding_profile_Wi(a, 1);
  for (const auto& y : a.list(1)) CHECK(w1(Rational(-y)) == 0);
  for (const auto& y : a.list(0)) CHECK(w2(Rational(-y)) == 0);
}

TEST_CASE("identity suite examples") {
  const auto rep = identity_suite(nine_eps());
  CHECK(rep.all_passed());
  int applicable = 0;
  for (const auto& c : rep.checks) applicable += c.applicable;
  CHECK(applicable == static_cast<int>(rep.checks.size()));

  // Fubini identities hold without the hypotheses.
  const auto bad = identity_suite(inst(R({-1, -4, -2}), {0}, {0}));
  for (const auto& c : bad.checks) {
    if (c.name.rfind("fubini", 0) == 0 && c.name != "fubini W12_0") {
      CHECK(c.applicable);
      CHECK(c.passed);
    }
    if (c.name == "sam" || c.name == "inclusio") CHECK_FALSE(c.applicable);
  }
  CHECK(bad.all_passed());
}

TEST_CASE("property: identity suite passes on sampled instances") {
  for (const auto& x : sample_valid_instances(64, 300, {1, 3, 5}, Rational(8))) {
    const auto rep = identity_suite(x);
    for (const auto& c : rep.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.applicable);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("property: Fubini identities on arbitrary lists") {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<std::vector<Rational>, 3> l;
    for (auto& v : l) {
      const int k = 1 + 2 * static_cast<int>(rng() % 3);
      while (static_cast<int>(v.size()) < k) {
        const Rational y = random_rational(rng, -9, 9, 4);
        if (std::find(v.begin(), v.end(), y) == v.end()) v.push_back(y);
      }
    }
    const auto rep = identity_suite(AdfInstance(l));
    for (const auto& c : rep.checks)
      if (c.name.rfind("fubini", 0) == 0 && c.applicable) CHECK(c.passed);
  }
}

TEST_CASE("tap_check regimes") {
  const auto p = tap_check(nine_eps());
  CHECK(p.applicable);
  CHECK(p.path == "W12_0");
  CHECK(p.verdict);
  CHECK(p.cross_check);
  CHECK(p.sum == Rational(-9, 10));

  const auto n = tap_check(inst(R({-11, -4, 0}), R({2, -9, -12}), R({-4, -5, -7})));
  CHECK(n.hypotheses);
  CHECK_FALSE(n.applicable);
  CHECK(n.max_W12_0 == 2);
  CHECK(n.cross_check);
  CHECK_FALSE(n.zero_components.empty());

  const AdfInstance k1 = inst(R({0, 10, 25}), R({0, 5, 12}), R({-100}));
  CHECK(winding_profile_W12_0(k1, partition_V12(k1)).max_plateau() == 2);
  const auto t = tap_check(k1);
  CHECK(t.applicable);
  CHECK(t.path == "k=1 (list 3)");
  CHECK(t.verdict);
  CHECK(t.cross_check);

  CHECK_FALSE(tap_check(inst(R({-1, -4, -2}), {0}, {0})).hypotheses);
}

TEST_CASE("property: tap verdicts agree with the direct sign") {
  for (const auto& x : sample_valid_instances(66, 300, {1, 3, 5}, Rational(8))) {
    const auto t = tap_check(x);
    CHECK(t.cross_check);
    if (t.applicable) {
      CHECK(t.verdict);
      CHECK(t.strict);
    }
  }
}
