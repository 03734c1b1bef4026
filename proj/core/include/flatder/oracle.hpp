#pragma once

#include "flatder/bigint.hpp"
#include "flatder/poly.hpp"
#include "flatder/tables.hpp"
#include "flatder/vincular.hpp"

// Exhaustive ground truth. Every function walks the derangements of [n]
// once (optionally split across `workers` threads, each with a private
// accumulator) and keeps only the running tables.
namespace flatder::oracle {

/// Largest n accepted by the enumeration routines.
inline constexpr int kMaxLength = 13;

/// Sum of y^(cycles) over derangements of [n] whose flattening avoids
/// `pattern`. Zero for n = 1.
YPoly distribution(const VincularPattern& pattern, int n, int workers = 1);

/// Avoiders keyed by the second letter i of the flattened form; keys
/// (i, 0) for 2 <= i <= n.
RefinedTable refined_second_letter(const VincularPattern& pattern, int n, int workers = 1);

/// Avoiders whose flattened form starts 1, n, i, keyed by (i, 0) for
/// 2 <= i <= n-1. Requires n >= 3.
RefinedTable refined_third_letter(const VincularPattern& pattern, int n, int workers = 1);

/// Avoiders keyed by the first and last letters (i, j) of their final
/// cycle, 1 <= i < j <= n. `long_final` holds the same statistic restricted
/// to final cycles of length at least three.
RefinedTable refined_final_cycle(const VincularPattern& pattern, int n, int workers = 1);

/// Number of perfect matchings of [2m] avoiding `pattern` when flattened.
BigInt matching_avoiders(const VincularPattern& pattern, int m);

/// True iff every derangement of [n] avoids `a` exactly when it avoids `b`
/// (flattened sense).
bool same_avoiders(const VincularPattern& a, const VincularPattern& b, int n, int workers = 1);

}  // namespace flatder::oracle
