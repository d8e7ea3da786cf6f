#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mvis/error.hpp"

namespace mvis {

using Vertex = int;

/// Subset of the vertex universe [0, capacity). Cardinality is cached.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet of(std::size_t capacity, std::span<const Vertex> ids) {
    VertexSet s(capacity);
    for (Vertex v : ids) s.insert(v);
    return s;
  }
  static VertexSet of(std::size_t capacity, std::initializer_list<Vertex> ids) {
    return of(capacity, std::span<const Vertex>(ids.begin(), ids.size()));
  }
  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t v = 0; v < capacity; ++v) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return card_; }
  bool empty() const { return card_ == 0; }

  bool contains(Vertex v) const {
    return in_range(v) && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }

  void insert(Vertex v) {
    check(v);
    auto& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      ++card_;
    }
  }

  void erase(Vertex v) {
    check(v);
    auto& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) {
      w &= ~bit;
      --card_;
    }
  }

  /// Members in ascending order.
  std::vector<Vertex> ids() const {
    std::vector<Vertex> out;
    out.reserve(card_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(static_cast<Vertex>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  VertexSet complement() const {
    VertexSet s(capacity_);
    for (std::size_t v = 0; v < capacity_; ++v)
      if (!contains(static_cast<Vertex>(v))) s.insert(static_cast<Vertex>(v));
    return s;
  }

  bool subset_of(const VertexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      const std::uint64_t other = k < o.words_.size() ? o.words_[k] : 0;
      if (words_[k] & ~other) return false;
    }
    return true;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (Vertex v : ids()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.capacity_ == b.capacity_ && a.words_ == b.words_;
  }

  /// Lexicographic order on the ascending id sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto x = a.ids();
    const auto y = b.ids();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  bool in_range(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < capacity_; }
  void check(Vertex v) const {
    if (!in_range(v))
      throw Error(ErrorCode::invalid_vertex_id,
                  "vertex " + std::to_string(v) + " outside [0," + std::to_string(capacity_) + ")");
  }

  std::size_t capacity_ = 0;
  std::size_t card_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mvis
