#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace grasshilb {

/// Exact rational number. GMP keeps every value canonical: gcd-reduced with a
/// positive denominator, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// "3/2", "-1", "0".
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and surrounding whitespace. Throws Error(Parse).
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Binomial coefficient with the combinatorial convention: zero whenever
/// top < 0, bottom < 0 or bottom > top.
Integer binomial(std::int64_t top, std::int64_t bottom);

/// Convert a small exact integer to int64, throwing if it does not fit.
std::int64_t to_int64(const Integer& z);

}  // namespace grasshilb
