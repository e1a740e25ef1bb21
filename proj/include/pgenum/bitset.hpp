#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pgenum {

// Growable bitset used for clique candidates and subset search.  All sets
// taking part in one operation must share a size.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Clears every bit at position <= i.
  void clear_through(std::size_t i) {
    const std::size_t w = i >> 6;
    for (std::size_t k = 0; k < w; ++k) words_[k] = 0;
    const unsigned sh = static_cast<unsigned>(i & 63);
    words_[w] &= sh == 63 ? 0 : ~((std::uint64_t{2} << sh) - 1);
  }

  // Index of the lowest set bit at position >= from, or npos.
  std::size_t next(std::size_t from) const {
    std::size_t w = from >> 6;
    if (w >= words_.size()) return npos;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= words_.size()) return npos;
      cur = words_[w];
    }
  }

  // Set A precedes set B (same cardinality, compared as sorted sequences)
  // iff the lowest element of the symmetric difference lies in A.
  // Returns <0, 0, >0 like a three-way comparison.
  friend int compare_sorted(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) {
        const std::uint64_t low = d & (~d + 1);
        return (a.words_[i] & low) ? -1 : 1;
      }
    }
    return 0;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace pgenum
