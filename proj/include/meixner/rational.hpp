#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace meixner {

// Exact arbitrary-precision rational scalar. Values are kept canonical:
// lowest terms, positive denominator. All arithmetic is exact.
using Rational = mpq_class;
using Integer = mpz_class;

// p/q in canonical form. The two-argument mpq_class constructor does not
// reduce, so fractions built from runtime integers must go through here.
Rational make_rational(long numerator, long denominator);

// Parses "p/q", "p", or decimal/scientific literals ("0.25", "1e-10",
// "-2.5e3") into an exact rational. Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Rising factorial a(a+1)...(a+k-1); 1 when k = 0.
Rational pochhammer(const Rational& a, int k);

// base^e for integer e; negative e requires base != 0.
Rational pow_int(const Rational& base, long e);

Integer factorial(int n);

bool is_nonpositive_integer(const Rational& value);

}  // namespace meixner
