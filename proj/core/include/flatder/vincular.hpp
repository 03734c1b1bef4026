#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatder/permutation.hpp"

namespace flatder {

/// A vincular (dashed) pattern: a permutation of [m] whose letters are
/// grouped into blocks. Letters inside a block must occupy adjacent
/// positions in an occurrence; dash-separated blocks may be spread out.
class VincularPattern {
 public:
  /// `glue` lists 1-based positions k for which letters k and k+1 must be
  /// adjacent. Throws std::invalid_argument on malformed input.
  VincularPattern(std::vector<int> letters, std::vector<int> glue);

  const std::vector<int>& letters() const { return letters_; }
  const std::vector<int>& glue() const { return glue_; }
  int length() const { return static_cast<int>(letters_.size()); }

  /// Block lengths in left-to-right order, e.g. (2,1) for "23-1".
  std::vector<int> type() const;

  bool is_classical() const { return glue_.empty(); }
  bool is_consecutive() const { return static_cast<int>(glue_.size()) == length() - 1; }

  /// The same letters with every adjacency requirement dropped.
  VincularPattern classical_core() const;

  /// Dashed notation, e.g. "31-2".
  std::string to_string() const;

  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;

 private:
  std::vector<int> letters_;
  std::vector<int> glue_;
};

/// Parses dashed notation: single digits, optionally separated by '-'.
VincularPattern parse_pattern(std::string_view text);

/// True iff `word` (distinct positive integers) contains an occurrence of
/// `pattern` honoring every adjacency requirement.
bool contains(std::span<const int> word, const VincularPattern& pattern);
bool contains(const Permutation& word, const VincularPattern& pattern);

/// True iff the flattening of `p` avoids `pattern`.
bool avoids_flattened(const Permutation& p, const VincularPattern& pattern);

/// The twelve length-three patterns of types (2,1) and (1,2) studied here, in
/// canonical spelling, plus the classical "2-3-1" and "2-1-3".
const std::vector<std::string>& canonical_pattern_names();

}  // namespace flatder
