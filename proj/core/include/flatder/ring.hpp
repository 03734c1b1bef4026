#pragma once

#include <concepts>
#include <optional>

#include "flatder/bigint.hpp"

namespace flatder {

/// Exact-ring contract used by the power-series engine. Every coefficient
/// ring specializes this with zero/one, a zero test and (when it has any
/// units) a partial inverse.
template <class R>
struct RingTraits;

template <class R>
concept ExactRing = requires(const R& a, const R& b, R& acc) {
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::invert(a) } -> std::same_as<std::optional<R>>;
  acc += a;
  acc -= a;
  acc *= b;
  { a == b } -> std::convertible_to<bool>;
};

template <>
struct RingTraits<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
  static bool is_zero(const BigInt& a) { return sgn(a) == 0; }
  static std::optional<BigInt> invert(const BigInt& a) {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static std::optional<Rational> invert(const Rational& a) {
    if (sgn(a) == 0) return std::nullopt;
    return Rational(1) / a;
  }
};

}  // namespace flatder
