#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace flatder {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical num/den; throws std::domain_error for a zero denominator.
Rational ratio(const BigInt& num, const BigInt& den);

/// Decimal rendering; rationals print as "p/q" or "p" when integral.
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

BigInt factorial(unsigned n);
BigInt pow_int(const BigInt& base, unsigned exponent);

/// Exact conversion; throws std::domain_error when the denominator is not 1.
BigInt to_integer(const Rational& value);

}  // namespace flatder
