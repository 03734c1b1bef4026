#include "flatder/generating_functions.hpp"

#include <stdexcept>
#include <string>

#include "flatder/closedform.hpp"
#include "flatder/oracle.hpp"
#include "flatder/recurrence.hpp"
#include "flatder/vincular.hpp"

namespace flatder::series {
namespace {

using Sub = UVYPoly::Substitution;

// Substitutions named by the arguments they produce, e.g. k1U is (x, 1, u).
constexpr Monomial kToOne{0, 0, 0};
constexpr Monomial kToU{1, 0, 0};
constexpr Monomial kToV{0, 1, 0};
constexpr Monomial kToUV{1, 1, 0};
const Sub k1U{kToOne, kToU};
const Sub k11{kToOne, kToOne};
const Sub kU1{kToU, kToOne};
const Sub kUV1{kToUV, kToOne};
const Sub k1UV{kToOne, kToUV};
const Sub k1V{kToOne, kToV};
const Sub kUVV{kToUV, kToV};

UVYPoly constant(long c) { return UVYPoly(Rational(c)); }

UVYSeries substitute(const UVYSeries& s, const Sub& sub) {
  return s.map([&](const UVYPoly& p) { return p.substitute(sub); });
}

UVYSeries times(const UVYSeries& s, Monomial m) {
  return s.map([&](const UVYPoly& p) { return p.times_monomial(m); });
}

// s * x^k * u^a v^b y^c
UVYSeries times(const UVYSeries& s, int k, Monomial m) { return times(s, m).shifted(k); }

UVYSeries one_minus_v(const UVYSeries& s) { return s - times(s, kToV); }
UVYSeries one_plus_xy(const UVYSeries& s) { return s + times(s, 1, {0, 0, 1}); }
UVYSeries one_plus_xuv(const UVYSeries& s) { return s + times(s, 1, kToUV); }

UVYSeries x_power(int order, int k, Monomial m = {}) {
  return UVYSeries::monomial(order, UVYPoly::term(1, m), k);
}

void require_valuation(const UVYSeries& s, int bound, const char* what) {
  if (s.valuation() < bound) {
    throw std::logic_error(std::string(what) + ": x-valuation " + std::to_string(s.valuation()) +
                           " is below " + std::to_string(bound));
  }
}

// sum_{j>=0} (xu)^j [1 - j x u] prod_{i=1}^{j+1} 1/(1 - i x u) p(x, u/(1 - (j + offset) x u)),
// with the bracket present only when `linear_factor` is set. Term j has
// valuation at least j + 2 when p has valuation at least 2.
UVYSeries iterate_kernel(const UVYSeries& p, int offset, bool linear_factor) {
  const int order = p.order();
  require_valuation(p, 2, "kernel iterate");
  UVYSeries total(order);
  for (int j = 0; j + 2 <= order; ++j) {
    UVYSeries term = substitute_u_shift(p, j + offset);
    if (linear_factor && j > 0) term -= times(term, 1, kToU) * constant(j);
    term = times(term, j, {j, 0, 0});
    for (int i = 1; i <= j + 1; ++i) term = divide_one_minus_cx(term, UVYPoly::term(i, kToU));
    require_valuation(term, j + 2, "kernel iterate term");
    total += term;
  }
  return total;
}

UVYSeries z_prime(int m, const std::vector<UVYSeries>& z, int order) {
  if (m == 1) return x_power(order, 2);
  UVYSeries out = UVYSeries::monomial(order, constant(m % 2 == 0 ? -1 : 1), m + 1);
  out += substitute(z[static_cast<std::size_t>(m - 2)], k1U).shifted(1);
  for (int j = 2; j <= m - 1; ++j) {
    const UVYSeries lower = substitute(z[static_cast<std::size_t>(m - j - 1)], k11).shifted(j);
    if (j % 2 == 0) {
      out -= lower;
    } else {
      out += lower;
    }
  }
  return out;
}

const VincularPattern& pattern_3_12() {
  static const VincularPattern p = parse_pattern("3-12");
  return p;
}

const VincularPattern& pattern_3_21() {
  static const VincularPattern p = parse_pattern("3-21");
  return p;
}

// Adds sum_{(i,j)} t_{i,j} u^{n-1-i} v^{n-j} to [x^n] of `out`.
void add_row(UVYSeries& out, int n, const std::map<TableKey, YPoly>& entries) {
  for (const auto& [key, poly] : entries) {
    const auto [i, j] = key;
    out[n] += UVYPoly::from_ypoly(poly).times_monomial({n - 1 - i, n - j, 0});
  }
}

}  // namespace

YSeries lift_to_y(const IntSeries& s) {
  return s.map([](const BigInt& c) { return YPoly::constant(c); });
}

UVYSeries lift_to_uvy(const YSeries& s) {
  return s.map([](const YPoly& p) { return UVYPoly::from_ypoly(p); });
}

IntSeries catalan_series(int order) {
  IntSeries c(order);
  // C_n = sum_{k<n} C_k C_{n-1-k}
  for (int n = 0; n <= order; ++n) {
    if (n == 0) {
      c[0] = 1;
      continue;
    }
    BigInt acc = 0;
    for (int k = 0; k < n; ++k) acc += c[k] * c[n - 1 - k];
    c[n] = acc;
  }
  return c;
}

IntSeries bell_series(int order) {
  IntSeries total(order);
  IntSeries term = IntSeries::constant(order, BigInt(1));
  for (int j = 0; j <= order; ++j) {
    if (j > 0) term = divide_one_minus_cx(term.shifted(1), BigInt(j));
    total += term;
  }
  return total;
}

YSeries a_series(int order) {
  const YSeries c = lift_to_y(catalan_series(order));
  const YSeries one = YSeries::constant(order, YPoly::constant(1));
  const YSeries xy = YSeries::monomial(order, YPoly::y(), 1);
  return divide(xy * (c - one), one - xy * (c * c - one));
}

UVYSeries a_series_full(int order) {
  const YSeries c = lift_to_y(catalan_series(order));
  const YSeries one = YSeries::constant(order, YPoly::constant(1));
  const YSeries xy = YSeries::monomial(order, YPoly::y(), 1);
  const UVYSeries ratio = lift_to_uvy(divide(c - one, one - xy * (c * c - one)));
  const UVYSeries x2y = x_power(order, 2, {0, 0, 1});
  // (1 - v + x v^2) A = x^2 y (1 - v) + x^2 y (1 + xy - x y v^2)(C - 1)/(1 - xy(C^2 - 1))
  UVYSeries factor = UVYSeries::constant(order, constant(1)) + x_power(order, 1, {0, 0, 1}) -
                     x_power(order, 1, {0, 2, 1});
  const UVYSeries rhs = one_minus_v(x2y) + x2y * factor * ratio;
  UVYSeries a(order);
  for (int n = 0; n <= order; ++n) {
    UVYPoly value = rhs[n];
    if (n > 0) value -= a[n - 1].times_monomial({0, 2, 0});
    a[n] = value.divide_one_minus_v();
  }
  return a;
}

IntSeries a_series_rational_form(int order) {
  const IntSeries c = catalan_series(order);
  const IntSeries x = IntSeries::monomial(order, BigInt(1), 1);
  const IntSeries one = IntSeries::constant(order, BigInt(1));
  const IntSeries two = IntSeries::constant(order, BigInt(2));
  const IntSeries num = (two + x - (one + x) * c).shifted(2);
  const IntSeries den = IntSeries::from_coeffs(order, {BigInt(1), BigInt(-3), BigInt(-4), BigInt(-1)});
  return divide(num, den);
}

YSeries u_series(int order) {
  YSeries total(order);
  // ratio_j = prod_{i=1}^j (1 - ix + xy) / prod_{i=0}^j (1 - (2i+1)x + (i(i+1) - y)x^2)
  YSeries ratio = YSeries::constant(order, YPoly::constant(1));
  for (int j = 0; j + 2 <= order; ++j) {
    if (j > 0) {
      ratio = ratio * YSeries::from_coeffs(order, {YPoly::constant(1), YPoly{BigInt(-j), BigInt(1)}});
    }
    const YSeries den = YSeries::from_coeffs(
        order, {YPoly::constant(1), YPoly::constant(BigInt(-(2 * j + 1))), YPoly{BigInt(j * (j + 1)), BigInt(-1)}});
    ratio = divide(ratio, den);
    YSeries term = ratio.shifted(j + 2) * YPoly::y();
    if (term.valuation() < j + 2) throw std::logic_error("u_series: term valuation below bound");
    total += term;
  }
  return total;
}

YSeries w_series(int order) {
  YSeries total(order);
  // ratio_j = prod_{i=0}^j (1 - ix + xy) / (1 - ix)^2
  YSeries ratio = YSeries::constant(order, YPoly::constant(1));
  for (int j = 0; j + 3 <= order; ++j) {
    ratio = ratio * YSeries::from_coeffs(order, {YPoly::constant(1), YPoly{BigInt(-j), BigInt(1)}});
    ratio = divide_one_minus_cx(divide_one_minus_cx(ratio, YPoly::constant(j)), YPoly::constant(j));
    YSeries term = divide_one_minus_cx(ratio, YPoly::constant(j + 1)).shifted(j + 3) * YPoly::y();
    if (term.valuation() < j + 3) throw std::logic_error("w_series: term valuation below bound");
    total += term;
  }
  return total;
}

UVYSeries substitute_u_shift(const UVYSeries& s, int j) {
  if (j == 0) return s;
  const int order = s.order();
  UVYSeries out(order);
  for (int n = 0; n <= order; ++n) {
    for (const auto& [m, c] : s[n].terms()) {
      if (m.u == 0) {
        out[n] += UVYPoly::term(c, m);
        continue;
      }
      // u^k / (1 - j x u)^k = sum_t C(k-1+t, t) (j x u)^t u^k
      BigInt jt = 1;
      for (int t = 0; n + t <= order; ++t) {
        const Rational weight = c * Rational(closedform::binomial(m.u - 1 + t, t) * jt);
        out[n + t] += UVYPoly::term(weight, {m.u + t, m.v, m.y});
        jt *= j;
      }
    }
  }
  return out;
}

std::vector<UVYSeries> zm_series_upto(int m_max, int order) {
  std::vector<UVYSeries> z;
  for (int m = 1; m <= m_max; ++m) {
    const UVYSeries zp = z_prime(m, z, order);
    const UVYSeries f = iterate_kernel(zp, 1, false);
    const UVYSeries f_uv = substitute(f, kUVV);
    // (1 - v - xuv) Z_m = (1 - v) Z'_m - x u v^2 F(x,uv) + x u (1 - v) F(x,u)
    const UVYSeries rhs = one_minus_v(zp) - times(f_uv, 1, {1, 2, 0}) + times(one_minus_v(f), 1, kToU);
    UVYSeries zm(order);
    for (int n = 0; n <= order; ++n) {
      UVYPoly value = rhs[n];
      if (n > 0) value += zm[n - 1].times_monomial(kToUV);
      zm[n] = value.divide_one_minus_v();
    }
    z.push_back(std::move(zm));
  }
  return z;
}

UVYSeries zm_series(int m, int order) {
  if (m < 1) throw std::invalid_argument("zm_series: m must be at least 1");
  return zm_series_upto(m, order).back();
}

std::vector<RSPair> rm_sm_series_upto(int m_max, int order) {
  std::vector<RSPair> out;
  for (int m = 1; m <= m_max; ++m) {
    UVYSeries s1u(order);
    UVYSeries t(order);
    if (m > 1) {
      const UVYSeries& prev = out[static_cast<std::size_t>(m - 2)].s;
      s1u = substitute(prev, k1U);
      t = s1u - times(substitute(prev, k1UV), kToV);
    }
    UVYSeries rp = substitute_u_shift(s1u, 1) - s1u + times(s1u, 1, kToU);
    if (m == 1) rp += x_power(order, 2, kToU);
    const UVYSeries g = iterate_kernel(rp, 0, true);
    const UVYSeries g_uv = substitute(g, kUVV);
    // (1 - v + xuv) R_m = x^2 (1 - v)(1 + xuv) [m = 1] + x (1 + xuv)(T + G(x,u)) - x^2 u v^2 G(x,uv)
    UVYSeries rhs = one_plus_xuv(t + g).shifted(1) - times(g_uv, 2, {1, 2, 0});
    if (m == 1) rhs += one_plus_xuv(one_minus_v(x_power(order, 2)));
    UVYSeries r(order);
    for (int n = 0; n <= order; ++n) {
      UVYPoly value = rhs[n];
      if (n > 0) value -= r[n - 1].times_monomial(kToUV);
      r[n] = value.divide_one_minus_v();
    }
    UVYSeries s = r - t.map([](const UVYPoly& p) { return p.divide_one_minus_v(); }).shifted(1);
    if (m == 1) s -= x_power(order, 2);
    out.push_back({std::move(r), std::move(s)});
  }
  return out;
}

RSPair rm_sm_series(int m, int order) {
  if (m < 1) throw std::invalid_argument("rm_sm_series: m must be at least 1");
  return rm_sm_series_upto(m, order).back();
}

UVYSeries z_from_tables(int order, TableSource source) {
  UVYSeries z(order);
  for (int n = 2; n <= order; ++n) {
    const RefinedTable row = source == TableSource::recurrence
                                 ? recurrence::row_3_12(n)
                                 : oracle::refined_final_cycle(pattern_3_12(), n);
    add_row(z, n, row.entries);
  }
  return z;
}

RSPair rs_from_tables(int order, TableSource source) {
  RSPair rs{UVYSeries(order), UVYSeries(order)};
  for (int n = 2; n <= order; ++n) {
    const RefinedTable row = source == TableSource::recurrence
                                 ? recurrence::rows_3_21(n)
                                 : oracle::refined_final_cycle(pattern_3_21(), n);
    add_row(rs.r, n, row.entries);
    add_row(rs.s, n, row.long_final);
  }
  return rs;
}

UVYSeries feq_residual_3_12(const UVYSeries& z) {
  const int order = z.order();
  const UVYSeries x2y = x_power(order, 2, {0, 0, 1});
  const UVYSeries lhs = one_plus_xy(one_minus_v(z) - times(z, 1, kToUV));
  const UVYSeries inner = times(substitute(z, kU1), 1, kToU) + times(substitute(z, k1U), 1, {0, 0, 1});
  const UVYSeries rhs = one_minus_v(x2y) - one_plus_xy(times(substitute(z, kUV1), 1, {1, 2, 0})) +
                        one_minus_v(one_plus_xy(inner)) -
                        one_minus_v(times(substitute(z, k11), 2, {0, 0, 2}));
  return lhs - rhs;
}

UVYSeries check_feq_3_12(int order, TableSource source) {
  return feq_residual_3_12(z_from_tables(order, source));
}

UVYSeries check_feq_3_12_v_zero(int order, TableSource source) {
  const UVYSeries z = z_from_tables(order, source);
  const UVYSeries z10 = substitute(z, k1V).map([](const UVYPoly& p) { return p.at_v_zero(); });
  const UVYSeries z11 = substitute(z, k11);
  return one_plus_xy(z10) - x_power(order, 2, {0, 0, 1}) - z11.shifted(1) - times(z11, 1, {0, 0, 1}) -
         times(z11, 2, {0, 0, 1});
}

std::pair<UVYSeries, UVYSeries> feq_residual_3_21(const RSPair& rs) {
  const int order = rs.r.order();
  const UVYSeries& r = rs.r;
  const UVYSeries& s = rs.s;
  const UVYSeries x2y = x_power(order, 2, {0, 0, 1});
  const UVYSeries t = substitute(s, k1U) - times(substitute(s, k1UV), kToV);

  const UVYSeries lhs1 = one_minus_v(r) + times(r, 1, kToUV);
  const UVYSeries rhs1 = one_minus_v(one_plus_xuv(x2y)) + one_plus_xuv(times(substitute(r, kU1), 1, kToU)) -
                         times(substitute(r, kUV1), 2, {2, 3, 0}) +
                         one_plus_xuv(times(t, 1, {0, 0, 1}));

  const UVYSeries lhs2 = one_minus_v(s);
  const UVYSeries rhs2 = one_minus_v(r) - one_minus_v(x2y) - times(t, 1, {0, 0, 1});
  return {lhs1 - rhs1, lhs2 - rhs2};
}

std::pair<UVYSeries, UVYSeries> check_feq_3_21(int order, TableSource source) {
  return feq_residual_3_21(rs_from_tables(order, source));
}

bool has_series(std::string_view pattern_name) {
  return pattern_name == "31-2" || pattern_name == "21-3" || pattern_name == "12-3" ||
         pattern_name == "3-12" || pattern_name == "3-21";
}

YPoly series_distribution(std::string_view pattern_name, int n) {
  if (!has_series(pattern_name)) {
    throw std::invalid_argument("no generating function for pattern " + std::string(pattern_name));
  }
  if (n < 2) return {};
  if (pattern_name == "31-2") return a_series(n)[n];
  if (pattern_name == "21-3") return u_series(n)[n];
  if (pattern_name == "12-3") {
    // W starts at x^3; the single derangement of [2] avoids every pattern.
    return n == 2 ? YPoly::y() : w_series(n)[n];
  }
  YPoly total;
  const int m_max = n / 2;
  if (pattern_name == "3-12") {
    const auto z = zm_series_upto(m_max, n);
    for (int m = 1; m <= m_max; ++m) {
      total = total + z[static_cast<std::size_t>(m - 1)][n].at_uv_one() *
                          YPoly::monomial(BigInt(1), static_cast<std::size_t>(m));
    }
  } else {
    const auto rs = rm_sm_series_upto(m_max, n);
    for (int m = 1; m <= m_max; ++m) {
      total = total + rs[static_cast<std::size_t>(m - 1)].r[n].at_uv_one() *
                          YPoly::monomial(BigInt(1), static_cast<std::size_t>(m));
    }
  }
  return total;
}

}  // namespace flatder::series
