#ifndef HILLPOLY_RATIONAL_HPP
#define HILLPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hillpoly {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. Every value produced by this library is
/// canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" (base 10). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

bool is_integer(const Rational& value);

/// Throws std::domain_error unless the value is an integer that fits in a long.
long to_long(const Rational& value);

Integer factorial(unsigned long n);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1).
Rational rising(const Rational& a, unsigned long k);

/// Falling factorial a (a-1) ... (a-k+1).
Rational falling(const Rational& a, unsigned long k);

/// Generalized binomial C(a, k) = a (a-1) ... (a-k+1) / k!, valid for any
/// rational a.
Rational binomial(const Rational& a, unsigned long k);

/// Integer binomial C(n, k) for n >= 0; zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace hillpoly

#endif  // HILLPOLY_RATIONAL_HPP
