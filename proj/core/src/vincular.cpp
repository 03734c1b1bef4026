#include "flatder/vincular.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace flatder {

namespace {

struct Block {
  int first;   // index into letters
  int length;
};

std::vector<Block> blocks_of(const VincularPattern& pattern) {
  std::vector<Block> blocks;
  const auto& glue = pattern.glue();
  int start = 0;
  for (int k = 1; k <= pattern.length(); ++k) {
    const bool glued = k < pattern.length() && std::binary_search(glue.begin(), glue.end(), k);
    if (!glued) {
      blocks.push_back({start, k - start});
      start = k;
    }
  }
  return blocks;
}

// Depth-first placement of blocks; every newly placed letter is compared
// against all earlier ones so partial placements that break the order
// pattern are cut immediately.
class BlockMatcher {
 public:
  BlockMatcher(std::span<const int> word, const VincularPattern& pattern)
      : word_(word), letters_(pattern.letters()), blocks_(blocks_of(pattern)),
        positions_(letters_.size(), 0) {}

  bool run() {
    if (word_.size() < letters_.size()) return false;
    return place_block(0, 0);
  }

 private:
  bool consistent(int letter_index) const {
    const int value = word_[static_cast<std::size_t>(positions_[static_cast<std::size_t>(letter_index)])];
    for (int earlier = 0; earlier < letter_index; ++earlier) {
      const int other = word_[static_cast<std::size_t>(positions_[static_cast<std::size_t>(earlier)])];
      if ((value < other) != (letters_[static_cast<std::size_t>(letter_index)] <
                              letters_[static_cast<std::size_t>(earlier)])) {
        return false;
      }
    }
    return true;
  }

  bool place_block(std::size_t block_index, int min_position) {
    if (block_index == blocks_.size()) return true;
    const Block& block = blocks_[block_index];
    int remaining = 0;
    for (std::size_t b = block_index; b < blocks_.size(); ++b) remaining += blocks_[b].length;
    const int last_start = static_cast<int>(word_.size()) - remaining;
    for (int start = min_position; start <= last_start; ++start) {
      bool ok = true;
      for (int offset = 0; offset < block.length && ok; ++offset) {
        positions_[static_cast<std::size_t>(block.first + offset)] = start + offset;
        ok = consistent(block.first + offset);
      }
      if (ok && place_block(block_index + 1, start + block.length)) return true;
    }
    return false;
  }

  std::span<const int> word_;
  const std::vector<int>& letters_;
  std::vector<Block> blocks_;
  std::vector<int> positions_;
};

std::uint64_t open_interval_mask(int low, int high) {
  // Values strictly between low and high, both in [0, 63].
  if (high - low <= 1) return 0;
  const std::uint64_t below_high = (high >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << high) - 1);
  const std::uint64_t up_to_low = (low >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (low + 1)) - 1);
  return below_high & ~up_to_low;
}

// Length-three patterns made of one glued pair and one free letter. The
// pair is scanned left to right; the free letter is looked up in a bitmask
// of the values on the appropriate side of the pair.
bool contains_pair_and_single(std::span<const int> word, const VincularPattern& pattern, int upper) {
  const auto& letters = pattern.letters();
  const bool single_first = pattern.glue().front() == 2;  // shape a-bc
  const int single = single_first ? letters[0] : letters[2];
  const int pair_left = single_first ? letters[1] : letters[0];
  const int pair_right = single_first ? letters[2] : letters[1];
  const int n = static_cast<int>(word.size());

  auto interval = [&](int left_value, int right_value) {
    const int low = std::min(left_value, right_value);
    const int high = std::max(left_value, right_value);
    const int pair_low = std::min(pair_left, pair_right);
    const int pair_high = std::max(pair_left, pair_right);
    if (single < pair_low) return open_interval_mask(0, low);
    if (single > pair_high) return open_interval_mask(high, upper + 1);
    return open_interval_mask(low, high);
  };
  const bool ascending = pair_left < pair_right;

  if (single_first) {
    std::uint64_t prefix = 0;
    for (int j = 1; j + 1 < n; ++j) {
      prefix |= std::uint64_t{1} << word[static_cast<std::size_t>(j - 1)];
      const int a = word[static_cast<std::size_t>(j)];
      const int b = word[static_cast<std::size_t>(j + 1)];
      if ((a < b) == ascending && (prefix & interval(a, b)) != 0) return true;
    }
  } else {
    std::uint64_t suffix = 0;
    for (int j = n - 3; j >= 0; --j) {
      suffix |= std::uint64_t{1} << word[static_cast<std::size_t>(j + 2)];
      const int a = word[static_cast<std::size_t>(j)];
      const int b = word[static_cast<std::size_t>(j + 1)];
      if ((a < b) == ascending && (suffix & interval(a, b)) != 0) return true;
    }
  }
  return false;
}

}  // namespace

VincularPattern::VincularPattern(std::vector<int> letters, std::vector<int> glue)
    : letters_(std::move(letters)), glue_(std::move(glue)) {
  if (letters_.empty()) throw std::invalid_argument("empty pattern");
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) {
      throw std::invalid_argument("pattern letters are not a permutation of [m]");
    }
  }
  std::sort(glue_.begin(), glue_.end());
  glue_.erase(std::unique(glue_.begin(), glue_.end()), glue_.end());
  for (int k : glue_) {
    if (k < 1 || k >= length()) throw std::invalid_argument("glue position out of range");
  }
}

std::vector<int> VincularPattern::type() const {
  std::vector<int> out;
  for (const auto& block : blocks_of(*this)) out.push_back(block.length);
  return out;
}

VincularPattern VincularPattern::classical_core() const { return VincularPattern(letters_, {}); }

std::string VincularPattern::to_string() const {
  std::string out;
  for (int k = 1; k <= length(); ++k) {
    out += std::to_string(letters_[static_cast<std::size_t>(k - 1)]);
    if (k < length() && !std::binary_search(glue_.begin(), glue_.end(), k)) out += "-";
  }
  return out;
}

VincularPattern parse_pattern(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty pattern string");
  std::vector<int> letters;
  std::vector<int> glue;
  bool pending_dash = false;
  for (char ch : text) {
    if (ch == '-') {
      if (letters.empty() || pending_dash) {
        throw std::invalid_argument("misplaced dash in pattern: " + std::string(text));
      }
      pending_dash = true;
    } else if (ch >= '1' && ch <= '9') {
      if (!letters.empty() && !pending_dash) glue.push_back(static_cast<int>(letters.size()));
      letters.push_back(ch - '0');
      pending_dash = false;
    } else {
      throw std::invalid_argument("unexpected character in pattern: " + std::string(text));
    }
  }
  if (pending_dash) throw std::invalid_argument("trailing dash in pattern: " + std::string(text));
  return VincularPattern(std::move(letters), std::move(glue));
}

bool contains(std::span<const int> word, const VincularPattern& pattern) {
  if (word.size() < static_cast<std::size_t>(pattern.length())) return false;
  if (pattern.length() == 3 && pattern.glue().size() == 1) {
    const int upper = *std::max_element(word.begin(), word.end());
    if (upper < 63 && *std::min_element(word.begin(), word.end()) >= 1) {
      return contains_pair_and_single(word, pattern, upper);
    }
  }
  return BlockMatcher(word, pattern).run();
}

bool contains(const Permutation& word, const VincularPattern& pattern) {
  return contains(word.word(), pattern);
}

bool avoids_flattened(const Permutation& p, const VincularPattern& pattern) {
  FlatForm flat;
  flatten_into(p.word(), flat);
  return !contains(flat.letters, pattern);
}

const std::vector<std::string>& canonical_pattern_names() {
  static const std::vector<std::string> names = {
      "12-3", "13-2", "1-32", "21-3", "23-1", "32-1", "31-2",
      "1-23", "2-13", "2-31", "3-12", "3-21", "2-3-1", "2-1-3"};
  return names;
}

}  // namespace flatder
