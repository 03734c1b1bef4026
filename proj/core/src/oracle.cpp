#include "flatder/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace flatder::oracle {

namespace {

using Counts = std::vector<std::uint64_t>;

void require_length(int n, int minimum) {
  if (n < minimum) {
    throw std::invalid_argument("enumeration length " + std::to_string(n) + " below minimum " +
                                std::to_string(minimum));
  }
  if (n > kMaxLength) {
    throw std::invalid_argument("enumeration length " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxLength));
  }
}

// Runs `visit(flat, counts)` for every derangement of [n], sharded over
// `workers` threads. Counts are summed elementwise afterwards, so the
// result does not depend on the shard count.
template <class Visit>
Counts accumulate(int n, int workers, std::size_t slots, Visit visit) {
  workers = std::max(1, workers);
  std::vector<Counts> partial(static_cast<std::size_t>(workers), Counts(slots, 0));
  auto run_shard = [&](int index) {
    DerangementStream stream(n, Shard{index, workers});
    FlatForm flat;
    Counts& counts = partial[static_cast<std::size_t>(index)];
    while (stream.next()) {
      flatten_into(stream.word(), flat);
      visit(flat, counts);
    }
  };
  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int index = 0; index < workers; ++index) threads.emplace_back(run_shard, index);
    for (auto& t : threads) t.join();
  }
  Counts total(slots, 0);
  for (const auto& counts : partial) {
    for (std::size_t k = 0; k < slots; ++k) total[k] += counts[k];
  }
  return total;
}

YPoly poly_from_counts(const Counts& counts, std::size_t offset, std::size_t length) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(length);
  for (std::size_t c = 0; c < length; ++c) {
    coeffs.emplace_back(static_cast<unsigned long>(counts[offset + c]));
  }
  return YPoly(std::move(coeffs));
}

}  // namespace

YPoly distribution(const VincularPattern& pattern, int n, int workers) {
  require_length(n, 1);
  const auto width = static_cast<std::size_t>(n) + 1;
  const Counts counts = accumulate(n, workers, width, [&](const FlatForm& flat, Counts& acc) {
    if (!contains(flat.letters, pattern)) ++acc[static_cast<std::size_t>(flat.cycle_count())];
  });
  return poly_from_counts(counts, 0, width);
}

RefinedTable refined_second_letter(const VincularPattern& pattern, int n, int workers) {
  require_length(n, 2);
  const auto width = static_cast<std::size_t>(n) + 1;
  const Counts counts =
      accumulate(n, workers, width * width, [&](const FlatForm& flat, Counts& acc) {
        if (contains(flat.letters, pattern)) return;
        const auto second = static_cast<std::size_t>(flat.letters[1]);
        ++acc[second * width + static_cast<std::size_t>(flat.cycle_count())];
      });
  RefinedTable table{pattern.to_string(), n, {}, {}};
  for (int i = 2; i <= n; ++i) {
    table.entries[{i, 0}] = poly_from_counts(counts, static_cast<std::size_t>(i) * width, width);
  }
  return table;
}

RefinedTable refined_third_letter(const VincularPattern& pattern, int n, int workers) {
  require_length(n, 3);
  const auto width = static_cast<std::size_t>(n) + 1;
  const Counts counts =
      accumulate(n, workers, width * width, [&](const FlatForm& flat, Counts& acc) {
        if (flat.letters[1] != n || contains(flat.letters, pattern)) return;
        const auto third = static_cast<std::size_t>(flat.letters[2]);
        ++acc[third * width + static_cast<std::size_t>(flat.cycle_count())];
      });
  RefinedTable table{pattern.to_string(), n, {}, {}};
  for (int i = 2; i <= n - 1; ++i) {
    table.entries[{i, 0}] = poly_from_counts(counts, static_cast<std::size_t>(i) * width, width);
  }
  return table;
}

RefinedTable refined_final_cycle(const VincularPattern& pattern, int n, int workers) {
  require_length(n, 2);
  const auto width = static_cast<std::size_t>(n) + 1;
  // Layout: [long flag][first][last][cycles].
  const std::size_t plane = width * width * width;
  const Counts counts =
      accumulate(n, workers, 2 * plane, [&](const FlatForm& flat, Counts& acc) {
        if (contains(flat.letters, pattern)) return;
        const auto start = static_cast<std::size_t>(flat.cycle_offsets.back());
        const auto first = static_cast<std::size_t>(flat.letters[start]);
        const auto last = static_cast<std::size_t>(flat.letters.back());
        const auto cycles = static_cast<std::size_t>(flat.cycle_count());
        const std::size_t slot = (first * width + last) * width + cycles;
        ++acc[slot];
        if (flat.letters.size() - start >= 3) ++acc[plane + slot];
      });
  RefinedTable table{pattern.to_string(), n, {}, {}};
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::size_t offset = (static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)) * width;
      table.entries[{i, j}] = poly_from_counts(counts, offset, width);
      table.long_final[{i, j}] = poly_from_counts(counts, plane + offset, width);
    }
  }
  return table;
}

BigInt matching_avoiders(const VincularPattern& pattern, int m) {
  if (m < 1) throw std::invalid_argument("matching size must be positive");
  require_length(2 * m, 2);
  MatchingStream stream(2 * m);
  FlatForm flat;
  std::uint64_t count = 0;
  while (stream.next()) {
    flatten_into(stream.word(), flat);
    if (!contains(flat.letters, pattern)) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

bool same_avoiders(const VincularPattern& a, const VincularPattern& b, int n, int workers) {
  require_length(n, 1);
  const Counts mismatches = accumulate(n, workers, 1, [&](const FlatForm& flat, Counts& acc) {
    if (contains(flat.letters, a) != contains(flat.letters, b)) ++acc[0];
  });
  return mismatches[0] == 0;
}

}  // namespace flatder::oracle
