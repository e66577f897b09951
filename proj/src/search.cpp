#include <algorithm>
#include <random>

#include "detail/ncs.hpp"
#include "peglab/adf.hpp"

namespace peglab {

namespace {

constexpr long long kRandomScale = 1LL << 20;
constexpr long long kFastLimit = 1LL << 60;

struct ListData {
  std::vector<Rational> exact;
  std::vector<long long> scaled;
  bool non_crossing = false;
  Rational alt;
};

auto stop_first = [](auto&&...) { return false; };

void enumerate_tuples(const std::vector<Rational>& grid, int k, std::vector<Rational>& cur,
                      std::vector<bool>& used, std::vector<std::vector<Rational>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    cur.push_back(grid[i]);
    enumerate_tuples(grid, k, cur, used, out);
    cur.pop_back();
    used[i] = false;
  }
}

/// Positive integer D with D*v integral for every grid value, or 0 when
/// the scaled values would overflow the fast path.
long long common_scale(const std::vector<Rational>& values) {
  Integer d = 1;
  for (const auto& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  if (!d.fits_slong_p()) return 0;
  for (const auto& v : values) {
    const Integer s = v.get_num() * (d / v.get_den());
    if (abs(s) * 3 >= Integer(static_cast<long>(kFastLimit))) return 0;
  }
  return d.get_si();
}

ListData make_list(std::vector<Rational> y, long long scale) {
  ListData l;
  l.exact = std::move(y);
  if (scale > 0)
    for (const auto& v : l.exact) {
      const Integer s = v.get_num() * (Integer(static_cast<long>(scale)) / v.get_den());
      l.scaled.push_back(s.get_si());
    }
  l.non_crossing = scale > 0 ? detail::list_nc(l.scaled, stop_first)
                             : detail::list_nc(l.exact, stop_first);
  l.alt = alternating_sum(l.exact);
  return l;
}

bool triple_holds(const ListData& a, const ListData& b, const ListData& c, bool fast) {
  return fast ? detail::triple_nc(a.scaled, b.scaled, c.scaled, stop_first)
              : detail::triple_nc(a.exact, b.exact, c.exact, stop_first);
}

void tally(SearchReport& rep, const ListData& a, const ListData& b, const ListData& c, bool fast) {
  ++rep.generated;
  if (!a.non_crossing || !b.non_crossing || !c.non_crossing) {
    ++rep.failed_i;
    return;
  }
  if (!triple_holds(a, b, c, fast)) {
    ++rep.failed_ii;
    return;
  }
  ++rep.satisfied;
  if (a.alt + b.alt + c.alt >= 0) rep.counterexamples.emplace_back(std::array{a.exact, b.exact, c.exact});
}

}  // namespace

bool gaps_distinct(const AdfInstance& inst) {
  std::vector<Rational> gaps;
  for (int i = 0; i < 3; ++i)
    for (int p = 0; p + 1 < inst.k(i); ++p) gaps.push_back(abs(inst.list(i)[p] - inst.list(i)[p + 1]));
  std::sort(gaps.begin(), gaps.end());
  return std::adjacent_find(gaps.begin(), gaps.end()) == gaps.end();
}

std::vector<AdfInstance> sample_valid_instances(std::uint64_t seed, std::size_t count,
                                                const std::vector<int>& k_values,
                                                const Rational& box, bool distinct_gaps) {
  if (k_values.empty()) throw InvalidInput("sampler needs k values");
  std::mt19937_64 rng(seed);
  const long long B = floor(Rational(box * static_cast<long>(kRandomScale))).get_si();
  if (B < 1) throw InvalidInput("sampler box too small");
  std::uniform_int_distribution<long long> value(-B, B);
  std::uniform_int_distribution<std::size_t> pick(0, k_values.size() - 1);
  const Rational unit(1, static_cast<unsigned long>(kRandomScale));
  std::vector<AdfInstance> out;
  while (out.size() < count) {
    std::array<std::vector<long long>, 3> raw;
    bool ok = true;
    for (auto& l : raw) {
      const int k = k_values[pick(rng)];
      while (static_cast<int>(l.size()) < k) {
        const long long v = value(rng);
        if (std::find(l.begin(), l.end(), v) == l.end()) l.push_back(v);
      }
      ok = ok && detail::list_nc(l, stop_first);
    }
    if (!ok || !detail::triple_nc(raw[0], raw[1], raw[2], stop_first)) continue;
    std::array<std::vector<Rational>, 3> lists;
    for (int i = 0; i < 3; ++i)
      for (long long v : raw[i]) lists[i].push_back(Rational(static_cast<long>(v)) * unit);
    AdfInstance inst(std::move(lists));
    if (distinct_gaps && !gaps_distinct(inst)) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Rational> integer_grid(long lo, long hi) {
  std::vector<Rational> g;
  for (long v = lo; v <= hi; ++v) g.emplace_back(v);
  return g;
}

SearchReport search_counterexamples(const SearchConfig& config) {
  for (int k : config.k_values)
    if (k < 1 || k % 2 == 0) throw InvalidInput("search k values must be odd and positive");
  if (config.k_values.empty()) throw InvalidInput("search needs at least one k value");
  SearchReport rep;

  if (config.mode == SearchConfig::Mode::exhaustive) {
    auto grid = config.grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const long long scale = common_scale(grid);
    std::vector<ListData> lists;
    for (int k : config.k_values) {
      std::vector<std::vector<Rational>> tuples;
      std::vector<Rational> cur;
      std::vector<bool> used(grid.size(), false);
      enumerate_tuples(grid, k, cur, used, tuples);
      for (auto& t : tuples) lists.push_back(make_list(std::move(t), scale));
    }
    // Unordered triples of lists: the conjecture is symmetric in the lists.
    for (std::size_t i = 0; i < lists.size(); ++i)
      for (std::size_t j = i; j < lists.size(); ++j)
        for (std::size_t l = j; l < lists.size(); ++l)
          tally(rep, lists[i], lists[j], lists[l], scale > 0);
    return rep;
  }

  std::mt19937_64 rng(config.seed);
  const Integer bound = floor(Rational(config.box * static_cast<long>(kRandomScale)));
  if (bound < 1 || bound * 3 >= Integer(static_cast<long>(kFastLimit)))
    throw InvalidInput("search box out of range");
  const long long B = bound.get_si();
  std::uniform_int_distribution<long long> value(-B, B);
  std::uniform_int_distribution<std::size_t> pick(0, config.k_values.size() - 1);
  const Rational unit(1, static_cast<unsigned long>(kRandomScale));
  for (std::uint64_t n = 0; n < config.budget; ++n) {
    std::array<ListData, 3> ls;
    for (auto& l : ls) {
      const int k = config.k_values[pick(rng)];
      std::vector<long long> raw;
      while (static_cast<int>(raw.size()) < k) {
        const long long v = value(rng);
        if (std::find(raw.begin(), raw.end(), v) == raw.end()) raw.push_back(v);
      }
      std::vector<Rational> y;
      for (long long v : raw) y.push_back(Rational(static_cast<long>(v)) * unit);
      l = make_list(std::move(y), kRandomScale);
    }
    tally(rep, ls[0], ls[1], ls[2], true);
  }
  return rep;
}

}  // namespace peglab
