#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ddrec {

/// Arbitrary-precision integer and rational. gmpxx keeps mpq_class values in
/// lowest terms after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q" (optional leading sign). Throws ddrec::Error on
/// malformed text or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

double to_double(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// log|q| from mantissa and binary exponent; finite where get_d() overflows.
double log_abs(const Rational& q);
double log_abs(const Integer& z);

}  // namespace ddrec
