#ifndef FZETA_RATIONAL_HPP
#define FZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fzeta {

// Arbitrary-precision rational; gmp keeps it canonical (den > 0, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

// Accepts "a", "-a", "+a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// num/den in lowest terms.
Rational ratio(long num, long den);

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Floor and fractional part x - floor(x) in [0, 1).
Integer floor(const Rational& x);
Rational frac(const Rational& x);

double to_double(const Rational& x);

// Largest k with base^k dividing value exactly; base >= 2.
unsigned long multiplicity(const Integer& value, const Integer& base);

// Exact q^e for rational e when the result is rational; returns false otherwise.
bool rational_power(const Integer& q, const Rational& e, Rational& out);

} // namespace fzeta

#endif
