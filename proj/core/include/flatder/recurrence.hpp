#pragma once

#include <string>
#include <string_view>

#include "flatder/poly.hpp"
#include "flatder/tables.hpp"

// Polynomial-time dynamic programs for the cycle distribution of
// flattened derangements avoiding each length-three vincular pattern.
// Rows are built bottom-up and only the rows a recurrence looks back at
// are kept alive.
namespace flatder::recurrence {

/// y * f_{n-2}(y), via the three-term Fibonacci-polynomial recurrence.
YPoly dist_13_2(int n);
inline YPoly dist_1_32(int n) { return dist_13_2(n); }

/// Row n of the second-letter triangle a_{n,i}, keys (i, 0), 2 <= i <= n.
RefinedTable row_31_2(int n);
YPoly dist_31_2(int n);

/// Row n of the second-letter triangle u_{n,i}, keys (i, 0), 2 <= i <= n.
RefinedTable row_21_3(int n);
YPoly dist_21_3(int n);

/// Row n (n >= 3) of w_{n,i}: avoiders whose flattening starts 1, n, i.
/// Keys (i, 0), 2 <= i <= n-1.
RefinedTable row_12_3(int n);
YPoly dist_12_3(int n);

YPoly dist_23_1(int n);
inline YPoly dist_32_1(int n) { return dist_23_1(n); }

/// Row n of z_{n,i,j}, keyed by the first and last letters of the final
/// cycle.
RefinedTable row_3_12(int n);
YPoly dist_3_12(int n);

/// Row n of r_{n,i,j} in `entries` and of s_{n,i,j} (final cycle of
/// length >= 3) in `long_final`.
RefinedTable rows_3_21(int n);
YPoly dist_3_21(int n);

YPoly dist_1_23(int n);

enum class Backing { recurrence, oracle };

struct DistResult {
  YPoly poly;
  Backing backing = Backing::recurrence;
};

/// Dispatch by pattern name. Patterns without a recurrence here ("2-13",
/// "2-31" and their classical twins) fall back to exhaustive enumeration
/// and are flagged as such. Throws std::invalid_argument on an unknown
/// name.
DistResult dist(std::string_view pattern_name, int n, int workers = 1);

/// True when `dist` has a recurrence for this pattern name.
bool has_recurrence(std::string_view pattern_name);

}  // namespace flatder::recurrence
