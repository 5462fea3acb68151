#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypersig {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "p/q" or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

Rational make_rational(long long num, long long den = 1);

double to_double(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q);

/// Simplest rational (smallest denominator) in the open interval (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace hypersig
