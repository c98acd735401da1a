#ifndef CONIFOLD_RATIONAL_HPP
#define CONIFOLD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conifold {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or a plain decimal "12.375" (optionally signed) into an
/// exact rational. Decimals are never routed through binary floating point.
/// Throws Error(SyntaxError) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// Natural logarithm of a positive big integer, valid far beyond the
/// binary64 range.
double log_abs(const BigInt& value);
double log_abs(const Rational& value);

/// Clears denominators of a rational vector and divides out the content,
/// returning the primitive integer vector on the same ray.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& values);

}  // namespace conifold

#endif
