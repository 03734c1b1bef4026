#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Cross-layer verification suites: published counts, brute force against
// recurrences, closed forms, series and equivalences.
namespace flatder::verify {

enum class Scope { table1, oracle_vs_recurrence, formulas, series, equivalences, identities, all };

/// Accepts "table1", "oracle-vs-recurrence", "formulas", "series",
/// "equivalences", "identities" and "all".
std::optional<Scope> parse_scope(std::string_view text);
std::string_view scope_name(Scope scope);

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
};

struct Options {
  /// Largest n for brute-force comparisons.
  int n_max = 9;
  /// Largest m for the alternating-sum identity.
  int m_max = 25;
  /// Truncation order for the explicit series.
  int order = 14;
  int workers = 1;
};

Report run(Scope scope, const Options& options = {});

}  // namespace flatder::verify
