#pragma once

#include <array>
#include <bit>
#include <vector>

#include "peglab/adf.hpp"

namespace peglab::detail {

/// Extended value over an arbitrary ordered ring: inf is -1, 0 or +1.
template <class V>
struct XV {
  int inf = 0;
  V v{};
};

template <class V>
int sgn_of(const V& v) {
  return (v > 0) - (v < 0);
}

template <class V>
XV<V> neg(const XV<V>& x) {
  return {-x.inf, -x.v};
}

template <class V>
NcsVerdict ncs_core(const XV<V>* pairs, int m) {
  bool pos = false, negv = false;
  for (int i = 0; i < 2 * m; ++i) {
    pos |= pairs[i].inf > 0;
    negv |= pairs[i].inf < 0;
  }
  if (pos && negv) return {false, NcsAxiom::infinities};
  int balance = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int inf = 0;
    V sum{};
    for (int i = 0; i < m; ++i) {
      const XV<V>& x = pairs[2 * i + ((mask >> i) & 1u)];
      if (x.inf != 0) inf = x.inf;
      else sum += x.v;
    }
    const int s = inf != 0 ? inf : sgn_of(sum);
    if (s == 0) return {false, NcsAxiom::zero_sum};
    balance += (std::popcount(mask) & 1) ? -s : s;
  }
  if (balance != 0) return {false, NcsAxiom::cancellation};
  return {};
}

template <class V>
XV<V> padded(const std::vector<V>& y, int j) {
  if (j <= 0 || j > static_cast<int>(y.size())) return {-1, V{}};
  return {0, y[j - 1]};
}

/// Hypothesis (i) for one list; stops at the first failure unless `all`.
template <class V, class Sink>
bool list_nc(const std::vector<V>& y, Sink&& on_fail) {
  const int k = static_cast<int>(y.size());
  bool ok = true;
  for (int p = 0; p <= k; ++p)
    for (int q = p + 2; q <= k; q += 2) {
      const XV<V> pr[4] = {padded(y, p), padded(y, p + 1), neg(padded(y, q)), neg(padded(y, q + 1))};
      const NcsVerdict v = ncs_core(pr, 2);
      if (!v.holds) {
        ok = false;
        if (!on_fail(p, q, v.violated)) return false;
      }
    }
  return ok;
}

/// Hypothesis (ii); `on_fail` returns false to stop early.
template <class V, class Sink>
bool triple_nc(const std::vector<V>& y1, const std::vector<V>& y2, const std::vector<V>& y3,
               Sink&& on_fail) {
  const int k1 = static_cast<int>(y1.size()), k2 = static_cast<int>(y2.size()),
            k3 = static_cast<int>(y3.size());
  bool ok = true;
  for (int p1 = 0; p1 <= k1; ++p1)
    for (int p2 = p1 & 1; p2 <= k2; p2 += 2)
      for (int p3 = p1 & 1; p3 <= k3; p3 += 2) {
        const XV<V> pr[6] = {padded(y1, p1), padded(y1, p1 + 1), padded(y2, p2),
                             padded(y2, p2 + 1), padded(y3, p3), padded(y3, p3 + 1)};
        const NcsVerdict v = ncs_core(pr, 3);
        if (!v.holds) {
          ok = false;
          if (!on_fail(p1, p2, p3, v.violated)) return false;
        }
      }
  return ok;
}

}  // namespace peglab::detail
