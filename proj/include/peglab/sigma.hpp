#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "peglab/geom.hpp"
#include "peglab/square.hpp"

namespace peglab {

/// One closed component of the cycle of squares with vertices 1, 2 and 4
/// on sigma1, sigma2 and sigma4.
struct CycleComponent {
  /// Global curve parameters (t1, t2, t4) at the cycle's vertices.  A
  /// parameter g + s denotes the point at fraction s along lift edge g.
  /// The last entry equals the first shifted by `degree` periods.
  std::vector<std::array<Rational, 3>> params;
  /// Square (x, y, a, b) at each vertex, with (x, y) on sigma1.
  std::vector<SquareQuad<Rational>> squares;
  /// Third vertex p1 + (a - b, a + b) at each vertex (lift coordinates).
  std::vector<RPoint> gamma3;
  /// Net number of turns of vertex 1 around the cylinder.
  int degree = 0;
};

struct Sigma124Result {
  std::vector<CycleComponent> components;
  int total_degree = 0;
};

/// Exact cycle of squares for three degree-1 curves.  Throws
/// GeneralPositionError on rank-deficient edge triples or when the
/// segments fail to stitch into closed cycles.
Sigma124Result sigma124_cycle(const CylCurve& s1, const CylCurve& s2, const CylCurve& s4);

/// sigma124_cycle, retried on general-position failures after perturbing
/// the curves with derived seeds.  `perturbed` receives the curves that
/// were finally used.
Sigma124Result sigma124_cycle_generic(const CylCurve& s1, const CylCurve& s2, const CylCurve& s4,
                                      std::uint64_t seed, const Rational& magnitude,
                                      std::array<CylCurve, 3>* perturbed = nullptr,
                                      int retries = 8);

/// A square (possibly degenerate) with its i-th vertex on the i-th curve.
std::optional<SquareQuad<Rational>> joint_inscribe(const CylCurve& s1, const CylCurve& s2,
                                                   const CylCurve& s3, const CylCurve& s4);

/// int_{s1} y dx - int_{s2} + int_{s3} - int_{s4} over one period.
Rational area_ineq_value(const CylCurve& s1, const CylCurve& s2, const CylCurve& s3,
                         const CylCurve& s4);

}  // namespace peglab
