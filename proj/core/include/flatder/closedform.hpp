#pragma once

#include "flatder/bigint.hpp"
#include "flatder/poly.hpp"

// Combinatorial numbers and the explicit counting formulas. Nothing here
// calls into the recurrence layer, so the two can check each other.
namespace flatder::closedform {

/// C(a, b); zero when b < 0 or b > a. Throws std::invalid_argument for a < 0.
BigInt binomial(long a, long b);

/// Stirling number of the second kind, by S(n,k) = k S(n-1,k) + S(n-1,k-1).
BigInt stirling2(int n, int k);

BigInt bell(int n);
BigInt catalan(int n);

/// f_n(y) = sum_k C(n-k, k) y^k, so f_0 = f_1 = 1.
YPoly fibonacci_poly(int n);

/// [x^a] C(x)^b = b/(a+b) C(2a+b-1, a) for the Catalan series C. Requires
/// a >= 0 and b >= 1.
BigInt catalan_power_coeff(int a, int b);

/// Number of flattened derangements of [n] avoiding 31-2 with exactly m
/// cycles, by the two-term alternating binomial sum. Zero outside
/// 1 <= m <= n/2.
BigInt count_31_2_by_cycles(int n, int m);

/// Both sides of the alternating-sum identity for 2^m, as exact rationals.
struct IdentitySides {
  Rational lhs;
  Rational rhs;
};
IdentitySides matching_identity_sides(int m);
bool identity_cor_matchings(int m);

/// d_{12-3}(n) = B_{n-2} + sum_{j=1}^{n-3} sum_{r=j}^{n-3} j S(r,j) (j-1)^{n-r-3},
/// with 0^0 = 1. Requires n >= 3.
BigInt count_12_3_total(int n);

/// Coefficient a_n of the series G(t) = 1 + sum_{n>=2} a_n t^n solving the
/// transformed 23-1 equation, from a_{n+2} = (y+(y+1)n)/((n+1)(n+2)) a_n
/// - n/(n+2) a_{n+1} with a_2 = y/2, a_3 = -y/6. Requires n >= 2.
RationalYPoly e_coeff_a(int n);

/// e_n(y) = sum_{k=2}^n S(n,k) k! a_k.
YPoly e_poly_via_stirling(int n);

/// The k x k tridiagonal matrix with diagonal -1..-k, superdiagonal
/// -3..-(k+1) and subdiagonal y+2/3, y+3/4, ..., y+k/(k+1).
class TridiagonalSpec {
 public:
  explicit TridiagonalSpec(int size);

  int size() const { return size_; }

  /// Entries on row, col (1-based); zero away from the three diagonals.
  RationalYPoly entry(int row, int col) const;

  /// Determinant by the three-term continuant recurrence; det of the empty
  /// matrix is 1.
  RationalYPoly determinant() const;

 private:
  int size_;
};

/// e_n(y) = y sum_{k=2}^n S(n,k) det(M_{k-2}).
YPoly e_poly_via_determinant(int n);

}  // namespace flatder::closedform
