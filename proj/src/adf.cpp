#include "peglab/adf.hpp"

#include <algorithm>

#include "detail/ncs.hpp"

namespace peglab {

namespace {

detail::XV<Rational> to_xv(const XReal& x) {
  switch (x.kind()) {
    case XReal::Kind::pos_inf: return {1, Rational(0)};
    case XReal::Kind::neg_inf: return {-1, Rational(0)};
    default: return {0, x.value()};
  }
}

}  // namespace

const Rational& XReal::value() const {
  if (kind_ != Kind::finite) throw InvalidInput("value() of an infinite XReal");
  return value_;
}

XReal XReal::operator-() const {
  switch (kind_) {
    case Kind::pos_inf: return neg_inf();
    case Kind::neg_inf: return pos_inf();
    default: return XReal(Rational(-value_));
  }
}

XReal operator+(const XReal& a, const XReal& b) {
  using K = XReal::Kind;
  if ((a.kind_ == K::pos_inf && b.kind_ == K::neg_inf) ||
      (a.kind_ == K::neg_inf && b.kind_ == K::pos_inf))
    throw InvalidInput("(+inf) + (-inf) is undefined");
  if (a.kind_ != K::finite) return a;
  if (b.kind_ != K::finite) return b;
  return XReal(Rational(a.value_ + b.value_));
}

bool operator==(const XReal& a, const XReal& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != XReal::Kind::finite || a.value_ == b.value_;
}

bool operator<(const XReal& a, const XReal& b) {
  using K = XReal::Kind;
  if (a.kind_ == K::neg_inf) return b.kind_ != K::neg_inf;
  if (a.kind_ == K::pos_inf) return false;
  if (b.kind_ == K::pos_inf) return true;
  if (b.kind_ == K::neg_inf) return false;
  return a.value_ < b.value_;
}

int sign(const XReal& x) {
  switch (x.kind()) {
    case XReal::Kind::pos_inf: return 1;
    case XReal::Kind::neg_inf: return -1;
    default: return sign(x.value());
  }
}

std::string to_string(const XReal& x) {
  switch (x.kind()) {
    case XReal::Kind::pos_inf: return "+inf";
    case XReal::Kind::neg_inf: return "-inf";
    default: return to_string(x.value());
  }
}

const char* to_string(NcsAxiom a) {
  switch (a) {
    case NcsAxiom::none: return "none";
    case NcsAxiom::infinities: return "infinities";
    case NcsAxiom::zero_sum: return "zero_sum";
    case NcsAxiom::cancellation: return "cancellation";
  }
  return "?";
}

NcsVerdict non_crossing_sums(std::span<const SumPair> pairs) {
  if (pairs.size() != 2 && pairs.size() != 3)
    throw InvalidInput("non_crossing_sums takes two or three pairs");
  detail::XV<Rational> xs[6];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    xs[2 * i] = to_xv(pairs[i][0]);
    xs[2 * i + 1] = to_xv(pairs[i][1]);
  }
  return detail::ncs_core(xs, static_cast<int>(pairs.size()));
}

bool influence_free(const std::array<SumPair, 3>& pairs) {
  std::array<Rational, 3> gap;
  for (int i = 0; i < 3; ++i) {
    if (!pairs[i][0].is_finite() || !pairs[i][1].is_finite())
      throw InvalidInput("influence_free needs finite pairs");
    gap[i] = abs(pairs[i][0].value() - pairs[i][1].value());
  }
  if (gap[0] == gap[1] || gap[0] == gap[2] || gap[1] == gap[2])
    throw InvalidInput("influence_free needs distinct gaps");
  const int s = static_cast<int>(std::min_element(gap.begin(), gap.end()) - gap.begin());
  const int o1 = (s + 1) % 3, o2 = (s + 2) % 3;
  for (int j1 = 0; j1 < 2; ++j1)
    for (int j2 = 0; j2 < 2; ++j2) {
      const Rational rest = pairs[o1][j1].value() + pairs[o2][j2].value();
      const int a = sign(Rational(pairs[s][0].value() + rest));
      const int b = sign(Rational(pairs[s][1].value() + rest));
      if (a != b || a == 0) return false;
    }
  return true;
}

AdfInstance::AdfInstance(std::array<std::vector<Rational>, 3> lists) : lists_(std::move(lists)) {
  for (const auto& y : lists_) {
    if (y.size() % 2 == 0) throw InvalidInput("instance lists must have odd length");
    auto sorted = y;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("instance list entries must be distinct");
  }
}

XReal AdfInstance::padded(int i, int j) const {
  if (j <= 0 || j > k(i)) return XReal::neg_inf();
  return lists_[i][j - 1];
}

Rational AdfInstance::max_abs() const {
  Rational m = 0;
  for (const auto& y : lists_)
    for (const auto& v : y) m = std::max(m, Rational(abs(v)));
  return m;
}

bool list_non_crossing(const std::vector<Rational>& y) {
  return detail::list_nc(y, [](int, int, NcsAxiom) { return false; });
}

HypothesisReport check_hypothesis_i(const AdfInstance& inst) {
  HypothesisReport r;
  for (int i = 0; i < 3; ++i)
    detail::list_nc(inst.list(i), [&](int p, int q, NcsAxiom ax) {
      r.violations.push_back({i, {p, q, 0}, ax});
      return true;
    });
  r.holds = r.violations.empty();
  return r;
}

HypothesisReport check_hypothesis_ii(const AdfInstance& inst) {
  HypothesisReport r;
  detail::triple_nc(inst.list(0), inst.list(1), inst.list(2),
                    [&](int p1, int p2, int p3, NcsAxiom ax) {
                      r.violations.push_back({0, {p1, p2, p3}, ax});
                      return true;
                    });
  r.holds = r.violations.empty();
  return r;
}

Rational alternating_sum(const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t j = 0; j < y.size(); ++j) s += (j % 2 == 0) ? y[j] : Rational(-y[j]);
  return s;
}

Rational alternating_sum(const AdfInstance& inst) {
  return alternating_sum(inst.list(0)) + alternating_sum(inst.list(1)) +
         alternating_sum(inst.list(2));
}

AdfVerdict adf_verdict(const AdfInstance& inst) {
  AdfVerdict v;
  v.hyp_i = check_hypothesis_i(inst).holds;
  v.hyp_ii = check_hypothesis_ii(inst).holds;
  v.sum = alternating_sum(inst);
  v.conjecture_consistent = !(v.hyp_i && v.hyp_ii) || v.sum < 0;
  return v;
}

}  // namespace peglab
