#include "flatder/commands.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "flatder/closedform.hpp"
#include "flatder/generating_functions.hpp"
#include "flatder/oracle.hpp"
#include "flatder/recurrence.hpp"
#include "flatder/table1.hpp"
#include "flatder/vincular.hpp"

namespace flatder::cli {
namespace {

using nlohmann::ordered_json;

constexpr std::array<std::pair<Method, std::string_view>, 4> kMethods{{
    {Method::brute, "brute"},
    {Method::recurrence, "recurrence"},
    {Method::formula, "formula"},
    {Method::series, "series"},
}};

bool is_canonical(std::string_view pattern) {
  const auto& names = canonical_pattern_names();
  return std::find(names.begin(), names.end(), pattern) != names.end();
}

void require_canonical(std::string_view pattern) {
  if (!is_canonical(pattern)) throw UsageError("unknown pattern '" + std::string(pattern) + "'");
}

bool has_formula(std::string_view p) {
  return p == "13-2" || p == "1-32" || p == "31-2" || p == "12-3" || p == "23-1" || p == "32-1";
}

YPoly formula_distribution(std::string_view pattern, int n) {
  if (pattern == "13-2" || pattern == "1-32") return YPoly::y() * closedform::fibonacci_poly(n - 2);
  if (pattern == "23-1" || pattern == "32-1") return closedform::e_poly_via_determinant(n);
  if (pattern == "31-2") {
    YPoly total;
    for (int m = 1; m <= n / 2; ++m) {
      total += YPoly::monomial(closedform::count_31_2_by_cycles(n, m), static_cast<std::size_t>(m));
    }
    return total;
  }
  throw UsageError("the formula for " + std::string(pattern) + " gives only the total count; use --y 1");
}

ordered_json coeffs_json(const YPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"coeffs", coeffs}};
}

std::string coeffs_csv(const YPoly& p, int width) {
  std::string out;
  for (int k = 0; k < width; ++k) {
    if (k > 0) out += ',';
    out += to_string(p.coeff(static_cast<std::size_t>(k)));
  }
  return out;
}

std::string poly_text(const YPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

void require_range(const RunConfig& config) {
  if (config.n_min < 1) throw UsageError("n must be at least 1");
  if (config.n_max < config.n_min) throw UsageError("--n-max is below --n");
}

// Rows of one pattern, either evaluated at y or as polynomials.
struct Rows {
  std::vector<int> n;
  std::vector<YPoly> polys;
  std::vector<BigInt> values;
};

Rows compute_rows(const RunConfig& config, Method method) {
  Rows rows;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    rows.n.push_back(n);
    if (config.y) {
      rows.values.push_back(value_at(config.pattern, n, method, *config.y, config.workers));
    } else {
      rows.polys.push_back(distribution(config.pattern, n, method, config.workers));
    }
  }
  return rows;
}

void write_rows(const RunConfig& config, Method method, const Rows& rows, std::ostream& out) {
  const bool poly = !config.y;
  switch (config.format) {
    case Format::json: {
      ordered_json doc;
      doc["pattern"] = config.pattern;
      ordered_json list = ordered_json::array();
      for (std::size_t k = 0; k < rows.n.size(); ++k) {
        list.push_back({{"n", rows.n[k]},
                        {"value", poly ? coeffs_json(rows.polys[k]) : ordered_json(to_string(rows.values[k]))}});
      }
      doc["rows"] = std::move(list);
      doc["method"] = std::string(method_name(method));
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      if (poly) {
        int width = 1;
        for (const auto& p : rows.polys) width = std::max(width, p.degree() + 1);
        out << "pattern,n";
        for (int k = 0; k < width; ++k) out << ",y" << k;
        out << '\n';
        for (std::size_t k = 0; k < rows.n.size(); ++k) {
          out << config.pattern << ',' << rows.n[k] << ',' << coeffs_csv(rows.polys[k], width) << '\n';
        }
      } else {
        out << "pattern,n,value\n";
        for (std::size_t k = 0; k < rows.n.size(); ++k) {
          out << config.pattern << ',' << rows.n[k] << ',' << to_string(rows.values[k]) << '\n';
        }
      }
      break;
    }
    case Format::text: {
      for (std::size_t k = 0; k < rows.n.size(); ++k) {
        out << "d_" << config.pattern << '(' << rows.n[k] << ") = "
            << (poly ? poly_text(rows.polys[k]) : to_string(rows.values[k])) << '\n';
      }
      break;
    }
  }
}

}  // namespace

std::optional<Method> parse_method(std::string_view text) {
  for (const auto& [method, name] : kMethods) {
    if (name == text) return method;
  }
  return std::nullopt;
}

std::string_view method_name(Method method) {
  for (const auto& [m, name] : kMethods) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  return std::nullopt;
}

Method resolve_method(std::string_view pattern, std::optional<Method> requested) {
  require_canonical(pattern);
  if (requested) return *requested;
  return recurrence::has_recurrence(pattern) ? Method::recurrence : Method::brute;
}

YPoly distribution(std::string_view pattern, int n, Method method, int workers) {
  require_canonical(pattern);
  if (n < 1) throw UsageError("n must be at least 1");
  switch (method) {
    case Method::brute:
      if (n > kBruteMaxN) throw UsageError("brute force is capped at n <= " + std::to_string(kBruteMaxN));
      return oracle::distribution(parse_pattern(pattern), n, workers);
    case Method::recurrence:
      if (!recurrence::has_recurrence(pattern)) {
        throw UsageError("no recurrence for " + std::string(pattern) + "; use --method brute");
      }
      return recurrence::dist(pattern, n).poly;
    case Method::formula:
      if (!has_formula(pattern)) throw UsageError("no closed form for " + std::string(pattern));
      if (n < 2) return {};
      return formula_distribution(pattern, n);
    case Method::series:
      if (!series::has_series(pattern)) throw UsageError("no generating function for " + std::string(pattern));
      return series::series_distribution(pattern, n);
  }
  throw UsageError("unknown method");
}

BigInt value_at(std::string_view pattern, int n, Method method, const BigInt& y, int workers) {
  if (method == Method::formula && (pattern == "12-3")) {
    if (y != 1) throw UsageError("the formula for 12-3 gives only the value at y = 1");
    if (n < 3) throw UsageError("the formula for 12-3 needs n >= 3");
    return closedform::count_12_3_total(n);
  }
  return distribution(pattern, n, method, workers).evaluate(y);
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  require_range(config);
  const Method method = resolve_method(config.pattern, config.method);
  write_rows(config, method, compute_rows(config, method), out);
  return kExitOk;
}

int cmd_dist(const RunConfig& config, std::ostream& out) {
  RunConfig single = config;
  single.n_max = single.n_min;
  require_range(single);
  const Method method = resolve_method(single.pattern, single.method);
  write_rows(single, method, compute_rows(single, method), out);
  return kExitOk;
}

int cmd_table1(const RunConfig& config, std::ostream& out) {
  const BigInt y = config.y.value_or(BigInt(1));
  const bool published = y == 1;
  bool all_match = true;
  ordered_json doc = ordered_json::array();
  if (config.format == Format::csv) {
    out << "pattern";
    for (int n = kTable1FirstN; n <= kTable1LastN; ++n) out << ",n" << n;
    out << '\n';
  }
  for (const auto& row : table1()) {
    const std::string& pattern = row.patterns.front();
    const Method method = resolve_method(pattern, config.method);
    std::vector<BigInt> values;
    for (int n = kTable1FirstN; n <= kTable1LastN; ++n) {
      values.push_back(value_at(pattern, n, method, y, config.workers));
      const BigInt expected(static_cast<unsigned long>(row.values[static_cast<std::size_t>(n - kTable1FirstN)]));
      if (published && values.back() != expected) all_match = false;
    }
    std::string names;
    for (const auto& name : row.patterns) names += (names.empty() ? "" : "/") + name;
    switch (config.format) {
      case Format::json: {
        ordered_json list = ordered_json::array();
        for (std::size_t k = 0; k < values.size(); ++k) {
          list.push_back({{"n", kTable1FirstN + static_cast<int>(k)}, {"value", to_string(values[k])}});
        }
        doc.push_back({{"pattern", names}, {"rows", list}, {"method", std::string(method_name(method))}});
        break;
      }
      case Format::csv:
        out << names;
        for (const auto& v : values) out << ',' << to_string(v);
        out << '\n';
        break;
      case Format::text:
        out << std::left << std::setw(12) << names;
        for (std::size_t k = 0; k < values.size(); ++k) out << (k == 0 ? "" : ", ") << to_string(values[k]);
        out << '\n';
        break;
    }
  }
  if (config.format == Format::json) out << doc.dump(2) << '\n';
  return all_match ? kExitOk : kExitFailure;
}

int cmd_verify(verify::Scope scope, const verify::Options& options, Format format, std::ostream& out) {
  const verify::Report report = verify::run(scope, options);
  if (format == Format::json) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    }
    ordered_json doc = {{"scope", std::string(verify::scope_name(scope))},
                        {"checks", checks},
                        {"failures", report.failures()}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  expected " << c.expected << "  actual " << c.actual
          << '\n';
    }
    out << verify::scope_name(scope) << ": " << report.checks.size() << " checks, " << report.failures()
        << " failures\n";
  }
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace flatder::cli
