#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace mvis {

/// Fixed-width bitset used by the search kernels. W is the number of 64-bit
/// words; bits at positions >= the host graph's order are kept clear by callers.
template <std::size_t W>
struct FixedBits {
  std::array<std::uint64_t, W> words{};

  static constexpr std::size_t kCapacity = W * 64;

  void set(int i) { words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Index of the lowest set bit, or -1.
  int first() const {
    for (std::size_t k = 0; k < W; ++k)
      if (words[k]) return static_cast<int>(k * 64 + std::countr_zero(words[k]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < W; ++k) {
      std::uint64_t w = words[k];
      while (w) {
        f(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool intersects(const FixedBits& o) const {
    for (std::size_t k = 0; k < W; ++k)
      if (words[k] & o.words[k]) return true;
    return false;
  }
  bool subset_of(const FixedBits& o) const {
    for (std::size_t k = 0; k < W; ++k)
      if (words[k] & ~o.words[k]) return false;
    return true;
  }
  int count_and(const FixedBits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < W; ++k) c += std::popcount(words[k] & o.words[k]);
    return c;
  }

  FixedBits& operator&=(const FixedBits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] &= o.words[k];
    return *this;
  }
  FixedBits& operator|=(const FixedBits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] |= o.words[k];
    return *this;
  }
  // this &= ~o
  FixedBits& subtract(const FixedBits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] &= ~o.words[k];
    return *this;
  }

  friend FixedBits operator&(FixedBits a, const FixedBits& b) { return a &= b; }
  friend FixedBits operator|(FixedBits a, const FixedBits& b) { return a |= b; }
  friend FixedBits minus(FixedBits a, const FixedBits& b) { return a.subtract(b); }
  friend bool operator==(const FixedBits&, const FixedBits&) = default;
};

}  // namespace mvis
