#pragma once

#include <map>
#include <string>
#include <utility>

#include "flatder/poly.hpp"

namespace flatder {

/// Refinement key. Single-index refinements (a letter of the flattened
/// form) use (i, 0); final-cycle refinements use (first, last).
using TableKey = std::pair<int, int>;

/// One row of a refined distribution: the cycle-count polynomial split by
/// a positional statistic. Every key inside the statistic's valid range is
/// present (possibly as zero); keys outside it are absent.
struct RefinedTable {
  std::string pattern;
  int n = 0;
  std::map<TableKey, YPoly> entries;
  /// Final-cycle tables only: restriction of `entries` to derangements
  /// whose final cycle has length at least three.
  std::map<TableKey, YPoly> long_final;

  YPoly total() const;
  YPoly at(TableKey key) const;
  YPoly long_final_at(TableKey key) const;
};

}  // namespace flatder
