#include "peglab/pinch.hpp"

#include <cmath>

namespace peglab {

namespace {

constexpr int kMaxSubdivisions = 1 << 14;

DPoint lerp(const DPoint& a, const DPoint& b, double s) {
  return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
}

/// Largest distance from the mapped midpoints of each piece to the chord.
double chord_error(const DPoint& a, const DPoint& b, int pieces, double n) {
  double worst = 0.0;
  for (int k = 0; k < pieces; ++k) {
    const DPoint p = phi_n(lerp(a, b, double(k) / pieces), n);
    const DPoint q = phi_n(lerp(a, b, double(k + 1) / pieces), n);
    const DPoint m = phi_n(lerp(a, b, (k + 0.5) / pieces), n);
    const DPoint mid = lerp(p, q, 0.5);
    worst = std::max(worst, std::hypot(m.x - mid.x, m.y - mid.y));
  }
  return worst;
}

}  // namespace

DPoint phi_n(const DPoint& p, double n) {
  const double c = std::cosh(p.x / n);
  return {n * std::tanh(p.x / n), p.y / (c * c)};
}

DPoint phi_n_inv(const DPoint& p, double n) {
  if (!(std::abs(p.x) < n)) throw InvalidInput("phi_n_inv needs |x| < n");
  const double u = p.x / n;
  return {n * std::atanh(u), p.y / (1.0 - u * u)};
}

DPolyline compress_curve(const CylCurve& curve, const PinchParams& params) {
  if (!(params.n > 0) || params.periods < 1) throw InvalidInput("pinch needs n > 0, periods >= 1");
  const double n = params.n;
  const double tol = 1e-6 * n;
  const int first = -(params.periods / 2);
  const int last = first + params.periods - 1;
  const DPolyline lift = to_double(curve.unrolled(first, last));
  const auto& v = lift.vertices();

  std::vector<DPoint> out;
  out.push_back({-n, 0.0});
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    int pieces = 1;
    while (pieces < kMaxSubdivisions && chord_error(v[i], v[i + 1], pieces, n) >= tol) pieces *= 2;
    for (int k = 0; k < pieces; ++k) out.push_back(phi_n(lerp(v[i], v[i + 1], double(k) / pieces), n));
  }
  out.push_back(phi_n(v.back(), n));
  out.push_back({n, 0.0});

  std::vector<DPoint> dedup;
  for (const auto& p : out)
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  return DPolyline(std::move(dedup));
}

}  // namespace peglab
