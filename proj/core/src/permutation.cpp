#include "flatder/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace flatder {

namespace {

constexpr int kMaxStreamLength = 62;

void require_bijection(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int letter : word) {
    if (letter < 1 || letter > n) {
      throw std::invalid_argument("letter " + std::to_string(letter) + " out of range [1," +
                                  std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(letter)]) {
      throw std::invalid_argument("letter " + std::to_string(letter) + " repeated");
    }
    seen[static_cast<std::size_t>(letter)] = true;
  }
}

std::string join_letters(std::span<const int> letters, bool separate) {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (separate && k > 0) out += ",";
    out += std::to_string(letters[k]);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) { require_bijection(word_); }

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation length");
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  std::vector<int> word;
  if (separated) {
    int value = -1;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        value = (value < 0 ? 0 : value * 10) + (ch - '0');
      } else if (ch == ',' || ch == ' ') {
        if (value >= 0) word.push_back(value);
        value = -1;
      } else {
        throw std::invalid_argument("unexpected character in permutation: " + std::string(text));
      }
    }
    if (value >= 0) word.push_back(value);
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("unexpected character in permutation: " + std::string(text));
      }
      word.push_back(ch - '0');
    }
  }
  return Permutation(std::move(word));
}

bool Permutation::is_derangement() const {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] == static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const { return join_letters(word_, size() >= 10); }

CycleForm::CycleForm(std::vector<std::vector<int>> cycles) : cycles_(std::move(cycles)) {
  std::vector<int> all;
  int previous_start = 0;
  for (const auto& cycle : cycles_) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    if (*std::min_element(cycle.begin(), cycle.end()) != cycle.front()) {
      throw std::invalid_argument("cycle does not start with its least element");
    }
    if (cycle.front() <= previous_start) {
      throw std::invalid_argument("cycles are not in ascending order of first elements");
    }
    previous_start = cycle.front();
    all.insert(all.end(), cycle.begin(), cycle.end());
  }
  require_bijection(all);
  n_ = static_cast<int>(all.size());
}

Permutation CycleForm::to_permutation() const {
  std::vector<int> word(static_cast<std::size_t>(n_));
  for (const auto& cycle : cycles_) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      word[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(word));
}

std::string CycleForm::to_string() const {
  std::string out;
  for (const auto& cycle : cycles_) out += "(" + join_letters(cycle, n_ >= 10) + ")";
  return out;
}

CycleForm standard_cycle_form(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int letter = start; !visited[static_cast<std::size_t>(letter)]; letter = p(letter)) {
      visited[static_cast<std::size_t>(letter)] = true;
      cycle.push_back(letter);
    }
    cycles.push_back(std::move(cycle));
  }
  return CycleForm(std::move(cycles));
}

Permutation flatten(const CycleForm& c) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(c.size()));
  for (const auto& cycle : c.cycles()) word.insert(word.end(), cycle.begin(), cycle.end());
  return Permutation(std::move(word));
}

int cycle_count(const Permutation& p) {
  FlatForm flat;
  flatten_into(p.word(), flat);
  return flat.cycle_count();
}

void flatten_into(std::span<const int> word, FlatForm& out) {
  const int n = static_cast<int>(word.size());
  out.letters.clear();
  out.cycle_offsets.clear();
  std::uint64_t visited = 0;
  std::vector<bool> visited_large;
  const bool wide = n > 63;
  if (wide) visited_large.assign(static_cast<std::size_t>(n) + 1, false);
  auto seen = [&](int letter) {
    return wide ? static_cast<bool>(visited_large[static_cast<std::size_t>(letter)])
                : ((visited >> letter) & 1U) != 0;
  };
  auto mark = [&](int letter) {
    if (wide) {
      visited_large[static_cast<std::size_t>(letter)] = true;
    } else {
      visited |= std::uint64_t{1} << letter;
    }
  };
  for (int start = 1; start <= n; ++start) {
    if (seen(start)) continue;
    out.cycle_offsets.push_back(static_cast<int>(out.letters.size()));
    for (int letter = start; !seen(letter); letter = word[static_cast<std::size_t>(letter - 1)]) {
      mark(letter);
      out.letters.push_back(letter);
    }
  }
}

DerangementStream::DerangementStream(int n, Shard shard)
    : n_(n), shard_(shard), prefix_depth_(std::min(2, n)), word_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1) throw std::invalid_argument("derangement length must be positive");
  if (n > kMaxStreamLength) throw std::invalid_argument("derangement length too large");
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
    throw std::invalid_argument("invalid shard");
  }
}

bool DerangementStream::next() {
  if (done_) return false;
  int k = n_ - 1;
  if (!started_) {
    started_ = true;
    k = 0;
  }
  while (k >= 0) {
    auto& slot = word_[static_cast<std::size_t>(k)];
    if (slot != 0) used_ &= ~(std::uint64_t{1} << slot);
    int candidate = slot + 1;
    while (candidate <= n_ && (candidate == k + 1 || ((used_ >> candidate) & 1U) != 0)) ++candidate;
    if (candidate > n_) {
      slot = 0;
      --k;
      continue;
    }
    slot = candidate;
    used_ |= std::uint64_t{1} << candidate;
    if (k + 1 == prefix_depth_ &&
        prefix_ordinal_++ % static_cast<std::uint64_t>(shard_.count) !=
            static_cast<std::uint64_t>(shard_.index)) {
      continue;
    }
    if (k == n_ - 1) return true;
    ++k;
  }
  done_ = true;
  return false;
}

MatchingStream::MatchingStream(int two_m) {
  if (two_m < 2 || two_m % 2 != 0) {
    throw std::invalid_argument("matchings need an even positive length");
  }
  if (two_m > kMaxStreamLength) throw std::invalid_argument("matching length too large");
  pairs_ = two_m / 2;
  first_.assign(static_cast<std::size_t>(pairs_), 0);
  partner_.assign(static_cast<std::size_t>(pairs_), 0);
  word_.assign(static_cast<std::size_t>(two_m), 0);
}

bool MatchingStream::next() {
  if (done_) return false;
  const int n = 2 * pairs_;
  int level = pairs_ - 1;
  if (!started_) {
    started_ = true;
    level = 0;
  }
  while (level >= 0) {
    auto& first = first_[static_cast<std::size_t>(level)];
    auto& partner = partner_[static_cast<std::size_t>(level)];
    if (partner != 0) {
      used_ &= ~((std::uint64_t{1} << first) | (std::uint64_t{1} << partner));
    } else {
      first = 1;
      while (((used_ >> first) & 1U) != 0) ++first;
    }
    int candidate = std::max(partner, first) + 1;
    while (candidate <= n && ((used_ >> candidate) & 1U) != 0) ++candidate;
    if (candidate > n) {
      partner = 0;
      --level;
      continue;
    }
    partner = candidate;
    used_ |= (std::uint64_t{1} << first) | (std::uint64_t{1} << partner);
    word_[static_cast<std::size_t>(first - 1)] = partner;
    word_[static_cast<std::size_t>(partner - 1)] = first;
    if (level == pairs_ - 1) return true;
    ++level;
  }
  done_ = true;
  return false;
}

}  // namespace flatder
