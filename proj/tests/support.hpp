#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "peglab/adf.hpp"
#include "peglab/bridge.hpp"
#include "peglab/geom.hpp"
#include "peglab/square.hpp"

namespace peglab::testing {

// Independent brute-force oracles.

/// Non-crossing verdict for {a1,a2},{-b1,-b2}: the number of (i,j) with
/// a_i < b_j is even.
bool parity_rule(const std::array<long, 2>& a, const std::array<long, 2>& b);

/// Even-odd ray casting with exact arithmetic; p must be off the curve.
bool inside_even_odd(const RPolyline& polygon, const RPoint& p);

/// Crossing ordinates of the vertical line at x, found by walking several
/// unrolled periods of the lift.
std::vector<Rational> brute_fiber(const CylCurve& c, const Rational& x);

/// For k = (1,1,1): both hypotheses hold iff the sum is negative.
bool k111_hypotheses(const Rational& a, const Rational& b, const Rational& c);

/// Side of the axis-aligned square centred on x = 0 between the graphs,
/// found by scanning s on a fine grid.
double brute_symmetric_square_side(const DFunction& f, const DFunction& g, int samples);

// Seeded generators.

RFunction constant_function(const Rational& lo, const Rational& hi, const Rational& c);

/// f < g on the interior, equal at the ends, Lipschitz constants below 0.9.
std::pair<DFunction, DFunction> random_lipschitz_pair(std::mt19937_64& rng);

/// Piecewise-linear SquareTrace with rational entries.
SquareTrace<Rational> random_square_trace(std::mt19937_64& rng, int max_points);

/// Simple anticlockwise polygon with small rational coordinates.
RPolyline random_simple_polygon(std::mt19937_64& rng);

CylCurve constant_curve(const Rational& L, const Rational& c);
/// Degree-1 graph curve with random vertices.
CylCurve random_graph_curve(std::mt19937_64& rng, const Rational& L, int vertices);
/// Degree-1 curve whose lift backtracks in x.
CylCurve random_zigzag_curve(std::mt19937_64& rng, const Rational& L);

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den);

}  // namespace peglab::testing
