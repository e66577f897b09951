#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "peglab/adf.hpp"
#include "peglab/geom.hpp"

namespace peglab {

using CurveTriple = std::array<CylCurve, 3>;

/// phi(t) = 1 + 1/(1 + t): strictly decreasing from [0, inf) onto (1, 2].
Rational gadget_phi(const Rational& t);

struct RecipeParams {
  std::optional<Rational> L;  ///< default 8 (1 + max k)(1 + ceil max|y|), doubled as needed
  std::optional<Rational> R;  ///< default C0 + 1
};

struct BuiltCurves {
  CurveTriple curves;
  Rational L;
  Rational R;
  Rational C0;  ///< smallest admissible R
  Rational c;   ///< multiple of (1 - |t|) subtracted from each end function
};

/// Cylinder curves whose vertical fibres near x = 0 reproduce the lists.
/// Requires both hypotheses and pairwise distinct consecutive gaps.
/// Throws InvalidInput on hypothesis failures, R < C0, or when no L up to
/// 2^20 times the default yields simple curves ("L too small").
BuiltCurves build_curves(const AdfInstance& inst, const RecipeParams& params = {});

struct AreaIdentity {
  Rational total;   ///< sum of the three areas over one period
  Rational middle;  ///< (L - 4) Q
  Rational C1;      ///< minus the two unit end strips
  Rational ends;    ///< the end-function strip, expected -R
  bool holds = false;
};

AreaIdentity area_identity(const BuiltCurves& built, const AdfInstance& inst);

/// Ordinates where the lift crosses the vertical line at x, ordered by the
/// lift parameter.  Requires degree 1 and x off every vertex abscissa.
std::vector<Rational> fiber_extract(const CylCurve& curve, const Rational& x);
std::array<std::vector<Rational>, 3> fiber_extract(const CurveTriple& curves, const Rational& x);

/// Half the smallest positive vertex abscissa (mod L) over the curves.
Rational round_trip_delta(const CurveTriple& curves);

struct ZeroSumWitness {
  Rational x;
  std::array<Rational, 3> y;
};

/// Exact search for x and points (x, y_i) on the curves with y1+y2+y3 = 0.
std::optional<ZeroSumWitness> find_zero_sum_fiber(const CurveTriple& curves);

struct SaiResult {
  std::optional<ZeroSumWitness> witness;
  Rational area;  ///< integral of y dx over the three curves
  bool consistent = false;
};

SaiResult sai_check(const CurveTriple& curves);

/// Perturbs into general position while keeping each curve simple and,
/// when the input has no zero-sum fibre, keeping it that way.  Throws
/// GeneralPositionError when shrinking the magnitude does not help.
CurveTriple genericize(const CurveTriple& curves, std::uint64_t seed);

/// Three particles sharing an abscissa, one per curve.
struct TraceState {
  std::array<long long, 3> edge{};  ///< global lift edge of each particle
  std::array<int, 3> pdir{};        ///< +1 along the lift parameter, -1 against
  Rational x;
  int dir = 1;  ///< horizontal sweep direction
  std::array<Rational, 3> y;
};

/// State at the first crossings of the vertical line at x, moving right.
TraceState first_crossing_state(const CurveTriple& curves, const Rational& x);

struct TraceResult {
  std::vector<TraceState> states;  ///< start, then one state per event
  std::size_t period = 0;          ///< events per period
  int m = 0;                       ///< periods of curve 1 travelled per cycle
  std::optional<int> sign;         ///< constant sign of Y1+Y2+Y3, if never zero
  std::optional<ZeroSumWitness> zero_sum;
};

/// Event-driven collision dynamics until the state repeats up to a shift
/// by a multiple of L.  Requires no vertical edges and distinct vertex
/// abscissae mod L; throws GeneralPositionError otherwise.
TraceResult trace_cycle(const CurveTriple& curves, const TraceState& start);

/// Same start with every direction flipped.
TraceState reversed(const TraceState& s);

}  // namespace peglab
