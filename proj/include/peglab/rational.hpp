#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace peglab {

using Rational = mpq_class;
using Integer = mpz_class;

// Thrown for malformed user data (bad numbers, invalid curves, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an input violates the general-position assumptions an
// algorithm relies on.  Callers usually perturb and retry.
class GeneralPositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", an integer, or a decimal such as "-1.25e-3" exactly.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Exact conversion of a finite double.
Rational from_double(double v);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

Integer floor(const Rational& q);

/// x reduced into [0, period).
Rational mod(const Rational& x, const Rational& period);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

}  // namespace peglab
