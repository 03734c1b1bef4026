#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "flatder/bigint.hpp"
#include "flatder/poly.hpp"
#include "flatder/ring.hpp"

namespace flatder {

struct Monomial {
  int u = 0;
  int v = 0;
  int y = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in u, v, y with rational coefficients. Zero terms are
/// never stored.
class UVYPoly {
 public:
  UVYPoly() = default;
  UVYPoly(const Rational& c);  // NOLINT: constants promote implicitly

  static UVYPoly term(const Rational& c, Monomial m);
  static UVYPoly u() { return term(1, {1, 0, 0}); }
  static UVYPoly v() { return term(1, {0, 1, 0}); }
  static UVYPoly y() { return term(1, {0, 0, 1}); }
  static UVYPoly from_ypoly(const YPoly& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(Monomial m) const;

  std::optional<Rational> as_constant() const;

  /// Largest exponent of each variable over all terms (0 for zero).
  Monomial max_degrees() const;

  UVYPoly& operator+=(const UVYPoly& rhs);
  UVYPoly& operator-=(const UVYPoly& rhs);
  UVYPoly& operator*=(const UVYPoly& rhs);

  friend UVYPoly operator+(UVYPoly lhs, const UVYPoly& rhs) { return lhs += rhs; }
  friend UVYPoly operator-(UVYPoly lhs, const UVYPoly& rhs) { return lhs -= rhs; }
  friend UVYPoly operator*(const UVYPoly& lhs, const UVYPoly& rhs);
  friend UVYPoly operator-(UVYPoly p);
  friend bool operator==(const UVYPoly&, const UVYPoly&) = default;

  /// Multiplies by u^a v^b y^c.
  UVYPoly times_monomial(Monomial m) const;

  /// Monomial substitution u -> u^{uu} v^{uv}, v -> u^{vu} v^{vv}; y is
  /// untouched. Passing all zeros for a variable sets it to 1.
  struct Substitution {
    Monomial u_to{1, 0, 0};
    Monomial v_to{0, 1, 0};
  };
  UVYPoly substitute(const Substitution& s) const;

  /// Evaluates v = 0 (keeps only the terms free of v).
  UVYPoly at_v_zero() const;

  /// Exact quotient by (1 - v); throws std::domain_error if (1 - v) does
  /// not divide this polynomial.
  UVYPoly divide_one_minus_v() const;

  /// Exact quotient by u; throws std::domain_error on a nonzero u^0 part.
  UVYPoly divide_u() const;

  /// Coefficient of y^k as a (u, v)-polynomial.
  UVYPoly y_part(int k) const;

  /// Collapse to a polynomial in y at u = v = 1. Throws if a coefficient
  /// is not integral.
  YPoly at_uv_one() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

template <>
struct RingTraits<UVYPoly> {
  static UVYPoly zero() { return {}; }
  static UVYPoly one() { return UVYPoly(Rational(1)); }
  static bool is_zero(const UVYPoly& a) { return a.is_zero(); }
  static std::optional<UVYPoly> invert(const UVYPoly& a) {
    auto c = a.as_constant();
    if (!c || sgn(*c) == 0) return std::nullopt;
    return UVYPoly(Rational(1) / *c);
  }
};

}  // namespace flatder
