#pragma once

#include "peglab/geom.hpp"

namespace peglab {

struct PinchParams {
  double n = 1.0;
  int periods = 1;
};

/// (x, y) -> (n tanh(x/n), y sech^2(x/n)).
DPoint phi_n(const DPoint& p, double n);

/// Inverse of phi_n; throws InvalidInput unless |x| < n.
DPoint phi_n_inv(const DPoint& p, double n);

/// Image of `periods` consecutive lift periods (centred on the origin)
/// under phi_n, densified so that every mapped edge is within 1e-6 n of
/// its chords, with the limit points (-n, 0) and (n, 0) at the ends.
DPolyline compress_curve(const CylCurve& curve, const PinchParams& params);

}  // namespace peglab
