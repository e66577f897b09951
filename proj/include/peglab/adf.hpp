#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peglab/rational.hpp"

namespace peglab {

/// Extended real: a rational or one of the two infinities.
class XReal {
 public:
  enum class Kind { finite, pos_inf, neg_inf };

  XReal() = default;
  XReal(Rational v) : value_(std::move(v)) {}
  XReal(long v) : value_(v) {}
  static XReal pos_inf() { return XReal(Kind::pos_inf); }
  static XReal neg_inf() { return XReal(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// Throws InvalidInput on an infinity.
  const Rational& value() const;

  XReal operator-() const;
  /// Throws InvalidInput on (+inf) + (-inf).
  friend XReal operator+(const XReal& a, const XReal& b);
  friend bool operator==(const XReal& a, const XReal& b);
  friend bool operator<(const XReal& a, const XReal& b);

 private:
  explicit XReal(Kind k) : kind_(k) {}
  Kind kind_ = Kind::finite;
  Rational value_;
};

int sign(const XReal& x);
std::string to_string(const XReal& x);

using SumPair = std::array<XReal, 2>;

enum class NcsAxiom { none, infinities, zero_sum, cancellation };
const char* to_string(NcsAxiom a);

struct NcsVerdict {
  bool holds = true;
  NcsAxiom violated = NcsAxiom::none;
  explicit operator bool() const { return holds; }
};

/// Non-crossing sums test for two or three pairs.  Throws InvalidInput for
/// other pair counts.
NcsVerdict non_crossing_sums(std::span<const SumPair> pairs);

/// True iff toggling the pair with the smallest gap never changes the sign
/// of a triple sum.  Requires three finite pairs with distinct gaps.
bool influence_free(const std::array<SumPair, 3>& pairs);

/// Three odd-length lists of distinct rationals.  Entries 0 and k+1 of
/// each list are an implicit -infinity.
class AdfInstance {
 public:
  AdfInstance() = default;
  explicit AdfInstance(std::array<std::vector<Rational>, 3> lists);

  const std::vector<Rational>& list(int i) const { return lists_[i]; }
  const std::array<std::vector<Rational>, 3>& lists() const { return lists_; }
  int k(int i) const { return static_cast<int>(lists_[i].size()); }
  /// y_{i,j} for 0 <= j <= k_i + 1 (1-based inside the list).
  XReal padded(int i, int j) const;
  /// Largest |y|, or 0 when all entries vanish.
  Rational max_abs() const;

 private:
  std::array<std::vector<Rational>, 3> lists_;
};

struct HypothesisViolation {
  int list = 0;               ///< list index for (i), unused for (ii)
  std::array<int, 3> idx{};  ///< (p, q, -) for (i), (p1, p2, p3) for (ii)
  NcsAxiom axiom = NcsAxiom::none;
};

struct HypothesisReport {
  bool holds = true;
  std::vector<HypothesisViolation> violations;
};

HypothesisReport check_hypothesis_i(const AdfInstance& inst);
HypothesisReport check_hypothesis_ii(const AdfInstance& inst);
/// Hypothesis (i) for a single list.
bool list_non_crossing(const std::vector<Rational>& y);

/// sum_j (-1)^(j-1) y_j.
Rational alternating_sum(const std::vector<Rational>& y);
Rational alternating_sum(const AdfInstance& inst);

struct AdfVerdict {
  bool hyp_i = false;
  bool hyp_ii = false;
  Rational sum;
  bool conjecture_consistent = true;
};

AdfVerdict adf_verdict(const AdfInstance& inst);

/// Step function base + sum_k w_k sgn(c_k - y), stored as sorted
/// breakpoints with plateau values between them and point values on them.
class WindingProfile {
 public:
  struct Term {
    Rational at;
    Rational weight;
  };

  WindingProfile() = default;
  static WindingProfile from_terms(const Rational& base, const std::vector<Term>& terms);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  /// plateaus()[i] is the value just left of breakpoints()[i]; the last
  /// entry is the value near +infinity.
  const std::vector<Rational>& plateaus() const { return plateaus_; }
  const std::vector<Rational>& point_values() const { return points_; }

  Rational operator()(const Rational& y) const;
  Rational operator()(const XReal& y) const;
  const Rational& left_limit() const { return plateaus_.front(); }
  const Rational& right_limit() const { return plateaus_.back(); }
  Rational max_plateau() const;
  Rational min_plateau() const;

  /// Exact integral over [lo, hi].
  Rational integral(const Rational& lo, const Rational& hi) const;
  /// Integral over [lo, +inf); requires a zero right limit.
  Rational integral_from(const Rational& lo) const;
  /// Integral over (-inf, hi]; requires a zero left limit.
  Rational integral_to(const Rational& hi) const;

  /// y -> W(-y).
  WindingProfile reflected() const;
  /// y -> 1 - W(y).
  WindingProfile one_minus() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> plateaus_;
  std::vector<Rational> points_;
};

/// Maximal interval of a level set.  Infinite ends are open.
struct LevelInterval {
  XReal lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;
};

std::vector<LevelInterval> level_set(const WindingProfile& w, const Rational& value);

/// {a == va} subset of {b == vb}, decided on the common refinement.
bool level_set_included(const WindingProfile& a, const Rational& va, const WindingProfile& b,
                        const Rational& vb);
/// No finite endpoint of {a == va} is an endpoint of {b == vb}.
bool level_set_endpoints_disjoint(const WindingProfile& a, const Rational& va,
                                  const WindingProfile& b, const Rational& vb);

/// 1/2 + 1/2 sum_j (-1)^(j-1) sgn(y_{i,j} - y).
WindingProfile winding_profile_Wi(const AdfInstance& inst, int i);
/// 1/2 + 1/2 sum_{j,j'} (-1)^(j+j') sgn(y_{i,j} + y_{i',j'} - y).
WindingProfile winding_profile_Wii(const AdfInstance& inst, int i, int ip);

/// Cell (a, b) of {0..k1+1} x {0..k2+1}.
using Cell = std::array<int, 2>;

struct CellPartition {
  std::vector<Cell> v0;
  std::vector<Cell> v1;
};

/// Classifies every cell by W3(-y_{1,a} - y_{2,b}).  Throws InvalidInput
/// when an interior cell takes a value outside {0, 1}.
CellPartition partition_V12(const AdfInstance& inst);

/// 1/2 + 1/2 sum over the interior cells of V12^0 of
/// (-1)^(a+b) sgn(y_{1,a} + y_{2,b} - y).
WindingProfile winding_profile_W12_0(const AdfInstance& inst, const CellPartition& part);

struct CellGraph {
  CellPartition partition;
  std::vector<std::array<Cell, 2>> edges;  ///< directed (from, to)
  bool degrees_ok = true;                  ///< every vertex has in/out degree 1
  bool edges_closed = true;                ///< every edge stays inside V12^{+1}
  std::vector<std::vector<Cell>> cycles;
  bool balanced = true;  ///< per-cycle line balance on every row and column
};

/// Throws InvalidInput on tied finite gaps between the two lists or on
/// cell values outside {0, 1}.
CellGraph build_G12(const AdfInstance& inst);

struct IdentityCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct IdentityReport {
  Rational T;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

IdentityReport identity_suite(const AdfInstance& inst);

struct ZeroComponent {
  LevelInterval interval;
  bool contains_minus_y3 = false;
};

struct TapResult {
  bool hypotheses = false;
  bool applicable = false;
  std::string path;  ///< "W12_0" or "k=1 (list n)"
  Rational max_W12_0;
  bool inclusion = false;
  bool strict = false;
  bool integral_inequality = false;
  Rational sum;
  bool verdict = false;  ///< applicable and the argument yields sum < 0
  bool cross_check = false;  ///< verdict agrees with the direct sign of sum
  std::vector<ZeroComponent> zero_components;
};

TapResult tap_check(const AdfInstance& inst);

struct SearchConfig {
  enum class Mode { exhaustive, random };
  Mode mode = Mode::exhaustive;
  std::vector<int> k_values{1, 3};
  std::vector<Rational> grid;  ///< exhaustive mode values
  Rational box = 8;            ///< random mode: values in [-box, box] on a 2^-20 grid
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;  ///< random mode instance count
};

struct SearchReport {
  std::uint64_t generated = 0;
  std::uint64_t failed_i = 0;
  std::uint64_t failed_ii = 0;
  std::uint64_t satisfied = 0;
  std::vector<AdfInstance> counterexamples;
};

SearchReport search_counterexamples(const SearchConfig& config);

/// Seeded rejection sampler for instances satisfying both hypotheses,
/// with values on the 2^-20 grid in [-box, box].  With `distinct_gaps`
/// all consecutive gaps |y_{i,p} - y_{i,p+1}| are pairwise distinct.
std::vector<AdfInstance> sample_valid_instances(std::uint64_t seed, std::size_t count,
                                                const std::vector<int>& k_values,
                                                const Rational& box, bool distinct_gaps = true);

/// True iff all consecutive gaps across the three lists are distinct.
bool gaps_distinct(const AdfInstance& inst);

/// Integer grid lo..hi.
std::vector<Rational> integer_grid(long lo, long hi);

}  // namespace peglab
