#include <gtest/gtest.h>

#include <stdexcept>

#include "flatder/closedform.hpp"
#include "flatder/recurrence.hpp"

namespace flatder {
namespace {

using namespace flatder::closedform;

YPoly y_poly(std::initializer_list<int> coeffs) {
  std::vector<BigInt> c;
  for (int v : coeffs) c.emplace_back(v);
  return YPoly(std::move(c));
}

TEST(Numbers, Basics) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
  EXPECT_EQ(bell(3), 5);
  EXPECT_EQ(bell(0), 1);
  EXPECT_EQ(bell(10), 115975);
  EXPECT_EQ(catalan(5), 42);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(fibonacci_poly(2), y_poly({1, 1}));
  EXPECT_EQ(fibonacci_poly(0), y_poly({1}));
  EXPECT_EQ(fibonacci_poly(4), y_poly({1, 3, 1}));
}

TEST(Numbers, NegativeArgumentsRejected) {
  EXPECT_THROW(stirling2(-1, 0), std::invalid_argument);
  EXPECT_THROW(bell(-1), std::invalid_argument);
  EXPECT_THROW(catalan(-2), std::invalid_argument);
}

TEST(CatalanPower, Examples) {
  EXPECT_EQ(catalan_power_coeff(2, 1), 2);
  EXPECT_EQ(catalan_power_coeff(0, 4), 1);
  EXPECT_EQ(catalan_power_coeff(3, 2), 14);
  EXPECT_THROW(catalan_power_coeff(2, 0), std::invalid_argument);
  for (int a = 0; a <= 30; ++a) EXPECT_EQ(catalan_power_coeff(a, 1), catalan(a)) << a;
}

TEST(CyclesFormula31_2, Examples) {
  EXPECT_EQ(count_31_2_by_cycles(4, 1), 5);
  EXPECT_EQ(count_31_2_by_cycles(4, 2), 2);
  BigInt total = 0;
  for (int m = 1; m <= 5; ++m) total += count_31_2_by_cycles(10, m);
  EXPECT_EQ(total, 13611);
  EXPECT_EQ(count_31_2_by_cycles(4, 3), 0);
  EXPECT_EQ(count_31_2_by_cycles(4, 0), 0);
  for (int m = 1; m <= 10; ++m) {
    EXPECT_EQ(count_31_2_by_cycles(2 * m, m), pow_int(BigInt(2), static_cast<unsigned>(m - 1))) << m;
  }
}

TEST(CyclesFormula31_2, MatchesRecurrencePerCycleCount) {
  for (int n = 2; n <= 20; ++n) {
    const YPoly d = recurrence::dist_31_2(n);
    for (int m = 1; m <= n / 2; ++m) EXPECT_EQ(count_31_2_by_cycles(n, m), d.coeff(m)) << n << ' ' << m;
  }
}

TEST(MatchingIdentity, HoldsExactly) {
  const auto zero = matching_identity_sides(0);
  EXPECT_EQ(zero.lhs, 1);
  EXPECT_EQ(zero.rhs, 1);
  const auto two = matching_identity_sides(2);
  EXPECT_EQ(two.lhs, 4);
  EXPECT_EQ(two.rhs, 4);
  for (int m = 0; m <= 25; ++m) EXPECT_TRUE(identity_cor_matchings(m)) << m;
}

TEST(Total12_3, Examples) {
  EXPECT_EQ(count_12_3_total(3), 1);
  EXPECT_EQ(count_12_3_total(5), 8);
  EXPECT_EQ(count_12_3_total(10), 10207);
  EXPECT_THROW(count_12_3_total(2), std::invalid_argument);
  for (int n = 3; n <= 20; ++n) {
    EXPECT_EQ(count_12_3_total(n), recurrence::dist_12_3(n).evaluate(BigInt(1))) << n;
  }
}

TEST(SeriesCoefficients23_1, Seeds) {
  const RationalYPoly half_y{Rational(0), ratio(BigInt(1), BigInt(2))};
  const RationalYPoly minus_sixth_y{Rational(0), ratio(BigInt(-1), BigInt(6))};
  EXPECT_EQ(e_coeff_a(2), half_y);
  EXPECT_EQ(e_coeff_a(3), minus_sixth_y);
  EXPECT_THROW(e_coeff_a(1), std::invalid_argument);
}

TEST(SeriesCoefficients23_1, FourthCoefficientMatchesDeterminant) {
  // a_4 = (y + (y+1)2)/12 a_2 - (1/2) a_3 from the recurrence at n = 2,
  // and 4! a_4 = y det(M_2).
  const RationalYPoly a2 = e_coeff_a(2);
  const RationalYPoly a3 = e_coeff_a(3);
  const RationalYPoly step{ratio(BigInt(2), BigInt(12)), ratio(BigInt(3), BigInt(12))};
  const RationalYPoly expected = step * a2 - a3 * ratio(BigInt(1), BigInt(2));
  EXPECT_EQ(e_coeff_a(4), expected);
  EXPECT_EQ(e_coeff_a(4) * Rational(24), to_rational_poly(YPoly::y()) * TridiagonalSpec(2).determinant());
}

TEST(SeriesCoefficients23_1, FactorialTimesCoefficientIsIntegral) {
  for (int k = 2; k <= 20; ++k) {
    EXPECT_NO_THROW(to_integer_poly(e_coeff_a(k) * Rational(factorial(static_cast<unsigned>(k))))) << k;
  }
}

TEST(Determinant, SmallMatrices) {
  EXPECT_EQ(TridiagonalSpec(0).determinant(), RationalYPoly::constant(Rational(1)));
  EXPECT_EQ(TridiagonalSpec(1).determinant(), RationalYPoly::constant(Rational(-1)));
  EXPECT_EQ(TridiagonalSpec(2).determinant(), (RationalYPoly{Rational(4), Rational(3)}));
  const TridiagonalSpec m(3);
  EXPECT_EQ(m.entry(1, 1), RationalYPoly::constant(Rational(-1)));
  EXPECT_EQ(m.entry(1, 2), RationalYPoly::constant(Rational(-3)));
  EXPECT_EQ(m.entry(3, 2), (RationalYPoly{ratio(BigInt(3), BigInt(4)), Rational(1)}));
  EXPECT_TRUE(m.entry(1, 3).is_zero());
}

TEST(Determinant, ExpandsToCofactorValue) {
  // 3x3 cofactor expansion along the first row.
  const TridiagonalSpec m(3);
  const auto e = [&](int r, int c) { return m.entry(r, c); };
  const RationalYPoly minor11 = e(2, 2) * e(3, 3) - e(2, 3) * e(3, 2);
  const RationalYPoly minor12 = e(2, 1) * e(3, 3) - e(2, 3) * e(3, 1);
  EXPECT_EQ(m.determinant(), e(1, 1) * minor11 - e(1, 2) * minor12);
}

TEST(Routes23_1, Examples) {
  EXPECT_EQ(e_poly_via_stirling(4), y_poly({0, 5, 3}));
  EXPECT_EQ(e_poly_via_stirling(10).evaluate(BigInt(1)), 182820);
  EXPECT_EQ(e_poly_via_stirling(2), YPoly::y());
  EXPECT_EQ(e_poly_via_determinant(4), y_poly({0, 5, 3}));
  EXPECT_EQ(e_poly_via_determinant(9).evaluate(BigInt(1)), 27568);
}

TEST(Routes23_1, ThreeRoutesAgree) {
  for (int n = 2; n <= 20; ++n) {
    const YPoly e = recurrence::dist_23_1(n);
    EXPECT_EQ(e_poly_via_stirling(n), e) << n;
    EXPECT_EQ(e_poly_via_determinant(n), e) << n;
  }
}

}  // namespace
}  // namespace flatder
