#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatder {

/// A permutation of [n] in one-line notation. Letters are 1-based; the
/// value at 1-based position i is `(*this)(i)`.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` is a bijection of [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts a digit string ("419738265") or a comma/space separated list
  /// ("4, 1, 10, 2, ...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> word() const { return word_; }

  bool is_derangement() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Cycle decomposition in standard form: every cycle starts with its least
/// element and cycles appear in increasing order of those elements.
class CycleForm {
 public:
  CycleForm() = default;

  /// Throws std::invalid_argument if the cycles are not in standard form or
  /// do not partition [n].
  explicit CycleForm(std::vector<std::vector<int>> cycles);

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int size() const { return n_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }

  /// The permutation mapping each letter to its successor in its cycle.
  Permutation to_permutation() const;

  /// "(1472)(395)(68)"; letters are comma separated when n >= 10.
  std::string to_string() const;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;

 private:
  std::vector<std::vector<int>> cycles_;
  int n_ = 0;
};

CycleForm standard_cycle_form(const Permutation& p);

/// Concatenation of the cycles of `c`, read as a one-line word.
Permutation flatten(const CycleForm& c);

int cycle_count(const Permutation& p);

/// Flattened word of `word` together with the positions at which each
/// cycle begins. Allocation-light path used by the enumeration oracle.
struct FlatForm {
  std::vector<int> letters;
  std::vector<int> cycle_offsets;  // 0-based start index of each cycle

  int cycle_count() const { return static_cast<int>(cycle_offsets.size()); }
};

void flatten_into(std::span<const int> word, FlatForm& out);

/// Selects the subset of a stream handled by one worker. Work is split on
/// the choices made in the first few positions, so every element lands in
/// exactly one shard regardless of the shard count.
struct Shard {
  int index = 0;
  int count = 1;
};

/// Lazy enumeration of the fixed-point-free permutations of [n], in
/// lexicographic order within a shard. Backtracks over positions and never
/// proposes a fixed point.
class DerangementStream {
 public:
  explicit DerangementStream(int n, Shard shard = {});

  /// Advances to the next derangement; false once exhausted.
  bool next();

  std::span<const int> word() const { return word_; }
  Permutation current() const { return Permutation(word_); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(DerangementStream* stream) : stream_(stream) { advance(); }

    Permutation operator*() const { return stream_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    bool operator==(std::default_sentinel_t) const { return stream_ == nullptr; }

   private:
    void advance() {
      if (stream_ != nullptr && !stream_->next()) stream_ = nullptr;
    }
    DerangementStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  Shard shard_;
  int prefix_depth_;
  std::uint64_t prefix_ordinal_ = 0;
  std::uint64_t used_ = 0;
  std::vector<int> word_;
  bool started_ = false;
  bool done_ = false;
};

/// Lazy enumeration of the perfect matchings of [2m]: the smallest unused
/// letter is paired with each larger unused letter in turn.
class MatchingStream {
 public:
  /// Throws std::invalid_argument if `two_m` is odd or less than 2.
  explicit MatchingStream(int two_m);

  bool next();

  std::span<const int> word() const { return word_; }
  Permutation current() const { return Permutation(word_); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(MatchingStream* stream) : stream_(stream) { advance(); }

    Permutation operator*() const { return stream_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    bool operator==(std::default_sentinel_t) const { return stream_ == nullptr; }

   private:
    void advance() {
      if (stream_ != nullptr && !stream_->next()) stream_ = nullptr;
    }
    MatchingStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int pairs_;
  std::uint64_t used_ = 0;
  std::vector<int> first_;
  std::vector<int> partner_;
  std::vector<int> word_;
  bool started_ = false;
  bool done_ = false;
};

inline DerangementStream iter_derangements(int n, Shard shard = {}) {
  return DerangementStream(n, shard);
}

inline MatchingStream iter_matchings(int two_m) { return MatchingStream(two_m); }

}  // namespace flatder
