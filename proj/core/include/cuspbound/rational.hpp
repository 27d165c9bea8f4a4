#ifndef CUSPBOUND_RATIONAL_HPP
#define CUSPBOUND_RATIONAL_HPP

// Exact rational scalars used throughout the library.  All arithmetic is
// performed on GMP rationals; no floating point enters any computation.
// Serialized form is always "p/q" (or "p" when the denominator is 1).

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cusp {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" with optional leading '-'.  Rejects decimals,
// whitespace, empty fields and zero denominators with std::invalid_argument.
Rational parse_rational(std::string_view text);

// Comma-separated list of rationals, e.g. "1,1/2,-3/2".
std::vector<Rational> parse_rational_list(std::string_view text);

// Canonical "p/q" form ("p" when q == 1), lowest terms, sign on the numerator.
std::string format_rational(const Rational& value);

Integer floor_of(const Rational& value);

// value - floor(value), in [0, 1).
Rational fractional_part(const Rational& value);

bool is_integer(const Rational& value);

// num/den in canonical form; the two-argument mpq_class constructor alone
// does not reduce.
inline Rational ratio(long num, long den) {
  Rational value(num, den);
  value.canonicalize();
  return value;
}

// Exact decimal rendering with the given number of fractional digits,
// rounding half away from zero.  Used only for SVG coordinates, never for
// arithmetic.
std::string decimal_string(const Rational& value, int digits);

}  // namespace cusp

#endif  // CUSPBOUND_RATIONAL_HPP
