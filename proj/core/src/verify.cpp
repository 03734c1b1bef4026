#include "flatder/verify.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "flatder/closedform.hpp"
#include "flatder/generating_functions.hpp"
#include "flatder/oracle.hpp"
#include "flatder/recurrence.hpp"
#include "flatder/table1.hpp"
#include "flatder/vincular.hpp"

namespace flatder::verify {
namespace {

constexpr std::array<std::pair<Scope, std::string_view>, 7> kScopeNames{{
    {Scope::table1, "table1"},
    {Scope::oracle_vs_recurrence, "oracle-vs-recurrence"},
    {Scope::formulas, "formulas"},
    {Scope::series, "series"},
    {Scope::equivalences, "equivalences"},
    {Scope::identities, "identities"},
    {Scope::all, "all"},
}};

class Recorder {
 public:
  explicit Recorder(Report& report) : report_(report) {}

  template <class T>
  void equal(std::string name, const T& expected, const T& actual) {
    report_.checks.push_back({std::move(name), expected == actual, render(expected), render(actual)});
  }

  void truth(std::string name, bool ok, std::string expected, std::string actual) {
    report_.checks.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
  }

 private:
  static std::string render(const BigInt& v) { return to_string(v); }
  static std::string render(const Rational& v) { return to_string(v); }
  static std::string render(const YPoly& v) { return v.to_string(); }
  static std::string render(const UVYPoly& v) { return v.to_string(); }
  static std::string render(bool v) { return v ? "true" : "false"; }

  Report& report_;
};

std::string label(std::string_view what, std::string_view pattern, int n) {
  std::string out(what);
  out += ' ';
  out += pattern;
  out += " n=";
  out += std::to_string(n);
  return out;
}

void check_table1(Recorder& rec, const Options& options) {
  for (const auto& row : table1()) {
    const std::string& name = row.patterns.front();
    for (int n = kTable1FirstN; n <= kTable1LastN; ++n) {
      const BigInt expected(static_cast<unsigned long>(row.values[static_cast<std::size_t>(n - kTable1FirstN)]));
      const auto result = recurrence::dist(name, n, options.workers);
      rec.equal(label("table1", name, n), expected, result.poly.evaluate(BigInt(1)));
    }
  }
}

void check_oracle_vs_recurrence(Recorder& rec, const Options& options) {
  for (const auto& name : canonical_pattern_names()) {
    if (!recurrence::has_recurrence(name)) continue;
    const VincularPattern pattern = parse_pattern(name);
    for (int n = 2; n <= options.n_max; ++n) {
      rec.equal(label("oracle-vs-recurrence", name, n), oracle::distribution(pattern, n, options.workers),
                recurrence::dist(name, n).poly);
    }
  }
}

void check_formulas(Recorder& rec) {
  for (int n = 2; n <= 20; ++n) {
    const YPoly e = recurrence::dist_23_1(n);
    rec.equal(label("stirling route", "23-1", n), e, closedform::e_poly_via_stirling(n));
    rec.equal(label("determinant route", "23-1", n), e, closedform::e_poly_via_determinant(n));
  }
  for (int n = 2; n <= 20; ++n) {
    const YPoly d = recurrence::dist_31_2(n);
    for (int m = 1; m <= n / 2; ++m) {
      rec.equal(label("cycle count", "31-2", n) + " m=" + std::to_string(m),
                d.coeff(static_cast<std::size_t>(m)), closedform::count_31_2_by_cycles(n, m));
    }
  }
  for (int n = 3; n <= 20; ++n) {
    rec.equal(label("total", "12-3", n), recurrence::dist_12_3(n).evaluate(BigInt(1)),
              closedform::count_12_3_total(n));
  }
  for (int n = 2; n <= 20; ++n) {
    rec.equal(label("fibonacci", "13-2", n), recurrence::dist_13_2(n),
              YPoly::y() * closedform::fibonacci_poly(n - 2));
  }
}

void check_series(Recorder& rec, const Options& options) {
  const int order = options.order;
  const auto a = series::a_series(order);
  const auto u = series::u_series(order);
  const auto w = series::w_series(order);
  for (int n = 2; n <= order; ++n) {
    rec.equal(label("A(x,1)", "31-2", n), recurrence::dist_31_2(n), a[n]);
    rec.equal(label("U(x,1)", "21-3", n), recurrence::dist_21_3(n), u[n]);
    if (n >= 3) rec.equal(label("W(x,1)", "12-3", n), recurrence::dist_12_3(n), w[n]);
  }

  const auto full = series::a_series_full(order);
  for (int n = 2; n <= order; ++n) {
    const RefinedTable row = recurrence::row_31_2(n);
    UVYPoly expected;
    for (const auto& [key, poly] : row.entries) {
      expected += UVYPoly::from_ypoly(poly).times_monomial({0, key.first - 2, 0});
    }
    rec.equal(label("A(x,v)", "31-2", n), expected, full[n]);
  }

  const auto rational = series::a_series_rational_form(order);
  for (int n = 0; n <= order; ++n) {
    rec.equal(label("rational form", "31-2", n), a[n].evaluate(BigInt(1)), rational[n]);
  }

  // Per-cycle series against the triangles at u = v = 1 (m <= 4, n <= 9).
  constexpr int kCycleOrder = 9;
  constexpr int kCycleMax = 4;
  const auto z = series::zm_series_upto(kCycleMax, kCycleOrder);
  const auto rs = series::rm_sm_series_upto(kCycleMax, kCycleOrder);
  for (int m = 1; m <= kCycleMax; ++m) {
    const auto& zm = z[static_cast<std::size_t>(m - 1)];
    const auto& rm = rs[static_cast<std::size_t>(m - 1)].r;
    for (int n = 2; n <= kCycleOrder; ++n) {
      const std::string suffix = " m=" + std::to_string(m);
      rec.equal(label("Z_m", "3-12", n) + suffix, YPoly::constant(recurrence::dist_3_12(n).coeff(m)),
                zm[n].at_uv_one());
      rec.equal(label("R_m", "3-21", n) + suffix, YPoly::constant(recurrence::dist_3_21(n).coeff(m)),
                rm[n].at_uv_one());
    }
  }

  // Refined (u, v) level against brute force.
  constexpr int kRefinedOrder = 7;
  const int refined_order = std::min(kRefinedOrder, options.n_max);
  const auto z_oracle = series::z_from_tables(refined_order, series::TableSource::oracle);
  const auto rs_oracle = series::rs_from_tables(refined_order, series::TableSource::oracle);
  for (int n = 2; n <= refined_order; ++n) {
    UVYPoly z_sum;
    UVYPoly r_sum;
    UVYPoly s_sum;
    for (int m = 1; m <= n / 2 && m <= kCycleMax; ++m) {
      const Monomial ym{0, 0, m};
      z_sum += z[static_cast<std::size_t>(m - 1)][n].times_monomial(ym);
      r_sum += rs[static_cast<std::size_t>(m - 1)].r[n].times_monomial(ym);
      s_sum += rs[static_cast<std::size_t>(m - 1)].s[n].times_monomial(ym);
    }
    rec.equal(label("Z refined", "3-12", n), z_oracle[n], z_sum);
    rec.equal(label("R refined", "3-21", n), rs_oracle.r[n], r_sum);
    rec.equal(label("S refined", "3-21", n), rs_oracle.s[n], s_sum);
  }

  const auto bell = series::bell_series(order);
  const auto z1 = series::zm_series(1, order);
  const auto r1 = series::rm_sm_series(1, order).r;
  for (int n = 1; n <= order; ++n) {
    const YPoly expected = YPoly::constant(bell[n - 1]) - YPoly::constant(BigInt(n == 1 ? 1 : 0));
    rec.equal(label("Z_1(x,1,1) Bell", "3-12", n), expected, z1[n].at_uv_one());
    rec.equal(label("R_1(x,1,1) Bell", "3-21", n), expected, r1[n].at_uv_one());
  }

  constexpr int kFeqOrder = 8;
  const auto zero = UVYPoly();
  const auto feq_z = series::check_feq_3_12(kFeqOrder);
  const auto feq_z0 = series::check_feq_3_12_v_zero(kFeqOrder);
  const auto [feq_r, feq_s] = series::check_feq_3_21(kFeqOrder);
  for (int n = 0; n <= kFeqOrder; ++n) {
    rec.equal(label("residual Z", "3-12", n), zero, feq_z[n]);
    rec.equal(label("residual Z(x,1,0)", "3-12", n), zero, feq_z0[n]);
    rec.equal(label("residual R", "3-21", n), zero, feq_r[n]);
    rec.equal(label("residual S", "3-21", n), zero, feq_s[n]);
  }
}

void check_equivalences(Recorder& rec, const Options& options) {
  const VincularPattern p23_1 = parse_pattern("23-1");
  const VincularPattern p32_1 = parse_pattern("32-1");
  for (int n = 2; n <= options.n_max; ++n) {
    rec.equal(label("23-1 vs 32-1", "23-1", n), oracle::distribution(p23_1, n, options.workers),
              oracle::distribution(p32_1, n, options.workers));
  }
  const std::array<std::pair<std::string_view, std::string_view>, 2> pairs{{{"2-31", "2-3-1"}, {"2-13", "2-1-3"}}};
  for (const auto& [vincular, classical] : pairs) {
    const VincularPattern a = parse_pattern(vincular);
    const VincularPattern b = parse_pattern(classical);
    for (int n = 2; n <= options.n_max; ++n) {
      rec.equal(label(std::string("same avoiders as ") + std::string(classical), vincular, n), true,
                oracle::same_avoiders(a, b, n, options.workers));
    }
  }
}

void check_identities(Recorder& rec, const Options& options) {
  for (int m = 0; m <= options.m_max; ++m) {
    const auto sides = closedform::matching_identity_sides(m);
    rec.equal("alternating sum identity m=" + std::to_string(m), sides.lhs, sides.rhs);
  }
  constexpr int kMatchingMax = 5;
  for (std::string_view name : {"31-2", "21-3"}) {
    const VincularPattern pattern = parse_pattern(name);
    for (int m = 1; m <= kMatchingMax; ++m) {
      rec.equal(std::string("matching avoiders ") + std::string(name) + " m=" + std::to_string(m),
                pow_int(BigInt(2), static_cast<unsigned>(m - 1)), oracle::matching_avoiders(pattern, m));
    }
  }
}

}  // namespace

std::optional<Scope> parse_scope(std::string_view text) {
  for (const auto& [scope, name] : kScopeNames) {
    if (name == text) return scope;
  }
  return std::nullopt;
}

std::string_view scope_name(Scope scope) {
  for (const auto& [s, name] : kScopeNames) {
    if (s == scope) return name;
  }
  return "unknown";
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

Report run(Scope scope, const Options& options) {
  Report report;
  Recorder rec(report);
  const bool all = scope == Scope::all;
  if (all || scope == Scope::table1) check_table1(rec, options);
  if (all || scope == Scope::oracle_vs_recurrence) check_oracle_vs_recurrence(rec, options);
  if (all || scope == Scope::formulas) check_formulas(rec);
  if (all || scope == Scope::series) check_series(rec, options);
  if (all || scope == Scope::equivalences) check_equivalences(rec, options);
  if (all || scope == Scope::identities) check_identities(rec, options);
  return report;
}

}  // namespace flatder::verify
