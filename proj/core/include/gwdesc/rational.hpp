#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gwdesc {

// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws ValidationError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

} // namespace gwdesc
