#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgenum/symcore.hpp"

namespace pgenum {

namespace detail {

inline std::size_t mix(PackedWord w) noexcept {
  w ^= w >> 31;
  w *= 0x9E3779B97F4A7C15ULL;
  w ^= w >> 29;
  return static_cast<std::size_t>(w);
}

inline std::size_t table_capacity(std::size_t n) {
  std::size_t cap = 16;
  while (cap < 2 * n + 2) cap <<= 1;
  return cap;
}

}  // namespace detail

// Open-addressing set of nonzero packed words, built once.
class WordSet {
 public:
  WordSet() : slots_(16, 0), mask_(15) {}

  explicit WordSet(std::span<const PackedWord> words)
      : slots_(detail::table_capacity(words.size()), 0), mask_(slots_.size() - 1) {
    for (auto w : words) {
      auto h = detail::mix(w) & mask_;
      while (slots_[h] != 0 && slots_[h] != w) h = (h + 1) & mask_;
      slots_[h] = w;
    }
  }

  bool contains(PackedWord w) const noexcept {
    auto h = detail::mix(w) & mask_;
    while (slots_[h] != 0) {
      if (slots_[h] == w) return true;
      h = (h + 1) & mask_;
    }
    return false;
  }

 private:
  std::vector<PackedWord> slots_;
  std::size_t mask_;
};

// Open-addressing map from nonzero packed words to 32-bit values.
class WordMap {
 public:
  static constexpr std::uint32_t npos = 0xFFFFFFFFu;

  WordMap() : keys_(16, 0), vals_(16, npos), mask_(15) {}

  std::uint32_t find(PackedWord w) const noexcept {
    auto h = detail::mix(w) & mask_;
    while (keys_[h] != 0) {
      if (keys_[h] == w) return vals_[h];
      h = (h + 1) & mask_;
    }
    return npos;
  }

  // Inserts if absent; returns false when the key already existed.
  bool insert(PackedWord w, std::uint32_t v) {
    if (2 * (size_ + 1) > keys_.size()) grow();
    auto h = detail::mix(w) & mask_;
    while (keys_[h] != 0) {
      if (keys_[h] == w) return false;
      h = (h + 1) & mask_;
    }
    keys_[h] = w;
    vals_[h] = v;
    ++size_;
    return true;
  }

  std::size_t size() const noexcept { return size_; }

 private:
  void grow() {
    std::vector<PackedWord> keys(keys_.size() * 2, 0);
    std::vector<std::uint32_t> vals(keys.size(), npos);
    const std::size_t mask = keys.size() - 1;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] == 0) continue;
      auto h = detail::mix(keys_[i]) & mask;
      while (keys[h] != 0) h = (h + 1) & mask;
      keys[h] = keys_[i];
      vals[h] = vals_[i];
    }
    keys_.swap(keys);
    vals_.swap(vals);
    mask_ = mask;
  }

  std::vector<PackedWord> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t mask_;
  std::size_t size_ = 0;
};

}  // namespace pgenum
