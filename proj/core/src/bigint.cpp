#include "flatder/bigint.hpp"

#include <stdexcept>

namespace flatder {

Rational ratio(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt pow_int(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt to_integer(const Rational& value) {
  if (value.get_den() != 1) {
    throw std::domain_error("rational value " + value.get_str() + " is not an integer");
  }
  return value.get_num();
}

}  // namespace flatder
