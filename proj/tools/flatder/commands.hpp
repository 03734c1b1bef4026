#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flatder/bigint.hpp"
#include "flatder/poly.hpp"
#include "flatder/verify.hpp"

namespace flatder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest n accepted by the brute-force method.
inline constexpr int kBruteMaxN = 11;

enum class Method { brute, recurrence, formula, series };
enum class Format { text, csv, json };

std::optional<Method> parse_method(std::string_view text);
std::string_view method_name(Method method);
std::optional<Format> parse_format(std::string_view text);

/// Bad pattern, method or range. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string pattern;
  int n_min = 2;
  int n_max = 10;
  /// Unset picks the recurrence when one exists, else brute force.
  std::optional<Method> method;
  /// Evaluation point for y; unset prints the whole polynomial.
  std::optional<BigInt> y;
  Format format = Format::csv;
  int order = 14;
  int workers = 1;
};

Method resolve_method(std::string_view pattern, std::optional<Method> requested);

/// d_tau(n; y) by the chosen method. Throws UsageError on an unsupported
/// combination.
YPoly distribution(std::string_view pattern, int n, Method method, int workers);

/// d_tau(n; y0). The 12-3 formula only yields the value at y = 1.
BigInt value_at(std::string_view pattern, int n, Method method, const BigInt& y, int workers);

int cmd_table(const RunConfig& config, std::ostream& out);
int cmd_dist(const RunConfig& config, std::ostream& out);
int cmd_table1(const RunConfig& config, std::ostream& out);
int cmd_verify(verify::Scope scope, const verify::Options& options, Format format, std::ostream& out);

}  // namespace flatder::cli
