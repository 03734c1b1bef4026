#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "flatder/bigint.hpp"
#include "flatder/poly.hpp"
#include "flatder/series.hpp"
#include "flatder/uvy_poly.hpp"

// Truncated evaluation of every generating function for the avoidance
// classes. Infinite outer sums are cut using the x-valuation of their
// terms, which is checked as each term is formed. Divisions by factors
// such as (1 - v - xuv), whose constant term is not a unit, are carried
// out order by order as exact polynomial divisions by (1 - v).
namespace flatder::series {

using IntSeries = Series<BigInt>;
using YSeries = Series<YPoly>;
using UVYSeries = Series<UVYPoly>;

YSeries lift_to_y(const IntSeries& s);
UVYSeries lift_to_uvy(const YSeries& s);

/// C = 1 + x C^2.
IntSeries catalan_series(int order);

/// sum_j x^j / prod_{i=1}^j (1 - i x), whose coefficients are the Bell numbers.
IntSeries bell_series(int order);

/// A(x,1) = xy(C-1) / (1 - xy(C^2-1)) for 31-2.
YSeries a_series(int order);

/// A(x,v), with v^{i-2} marking second letter i.
UVYSeries a_series_full(int order);

/// A(x,1) at y = 1 in the Catalan-free rational form
/// x^2(2 + x - (1+x)C) / (1 - 3x - 4x^2 - x^3).
IntSeries a_series_rational_form(int order);

/// U(x,1) for 21-3 (outer sum cut at j = order - 2).
YSeries u_series(int order);

/// W(x,1) for 12-3 (outer sum cut at j = order - 3).
YSeries w_series(int order);

/// u^k -> u^k / (1 - j x u)^k, i.e. the substitution u -> u/(1 - j x u).
UVYSeries substitute_u_shift(const UVYSeries& s, int j);

/// Z_1, ..., Z_{m_max} for 3-12 (element m-1 is Z_m). u marks n-1-i and v
/// marks n-j, where (i, j) are the first and last letters of the final cycle.
std::vector<UVYSeries> zm_series_upto(int m_max, int order);
UVYSeries zm_series(int m, int order);

struct RSPair {
  UVYSeries r;
  UVYSeries s;
};

/// (R_m, S_m) for 3-21, m = 1..m_max.
std::vector<RSPair> rm_sm_series_upto(int m_max, int order);
RSPair rm_sm_series(int m, int order);

/// Where refined tables come from when assembling Z, R and S.
enum class TableSource { recurrence, oracle };

/// Z(x,u,v) with y kept, built from refined final-cycle tables for n <= order.
UVYSeries z_from_tables(int order, TableSource source);
RSPair rs_from_tables(int order, TableSource source);

/// Residual of the 3-12 functional equation for a candidate Z after
/// multiplying through by (1 - v)(1 + xy).
UVYSeries feq_residual_3_12(const UVYSeries& z);

/// Residuals of the two 3-21 equations for candidate (R, S), each
/// multiplied by (1 - v).
std::pair<UVYSeries, UVYSeries> feq_residual_3_21(const RSPair& rs);

/// feq_residual_3_12 of the tabulated Z. Zero iff the equation holds to
/// the given order.
UVYSeries check_feq_3_12(int order, TableSource source = TableSource::recurrence);

/// Residual of (1 + xy) Z(x,1,0) = x^2 y + x(1 + y + xy) Z(x,1,1).
UVYSeries check_feq_3_12_v_zero(int order, TableSource source = TableSource::recurrence);

/// Residuals of the two 3-21 functional equations, each multiplied by (1 - v).
std::pair<UVYSeries, UVYSeries> check_feq_3_21(int order,
                                               TableSource source = TableSource::recurrence);

/// [x^n] of the pattern's generating function as a polynomial in y, for
/// 31-2, 21-3, 12-3, 3-12 and 3-21. Throws std::invalid_argument for other
/// names.
YPoly series_distribution(std::string_view pattern_name, int n);
bool has_series(std::string_view pattern_name);

}  // namespace flatder::series
