#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace locind {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// A set of dense edge ids backed by a growable bitset. Iteration is always
// in ascending id order. Trailing zero words are trimmed after every
// mutation so that equal sets compare and hash equal regardless of history.
class EdgeSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EdgeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const EdgeId*;
    using reference = EdgeId;

    const_iterator() = default;
    EdgeId operator*() const { return current_; }
    const_iterator& operator++() {
      advance(current_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return current_ == other.current_;
    }

   private:
    friend class EdgeSet;
    const_iterator(const std::vector<std::uint64_t>* words, std::size_t from)
        : words_(words) {
      advance(from);
    }
    void advance(std::size_t from);

    const std::vector<std::uint64_t>* words_ = nullptr;
    EdgeId current_ = kEnd;
    static constexpr EdgeId kEnd = 0xffffffffu;
  };

  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids);
  explicit EdgeSet(std::span<const EdgeId> ids);

  // All ids 0..count-1.
  static EdgeSet range(std::size_t count);

  bool contains(EdgeId e) const {
    std::size_t w = e / 64;
    return w < words_.size() && ((words_[w] >> (e % 64)) & 1u);
  }
  void insert(EdgeId e);
  void erase(EdgeId e);
  void clear() { words_.clear(); }

  bool empty() const { return words_.empty(); }
  std::size_t size() const;
  // Smallest element; the set must be nonempty.
  EdgeId front() const;

  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& operator-=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  EdgeSet with(EdgeId e) const {
    EdgeSet copy = *this;
    copy.insert(e);
    return copy;
  }
  EdgeSet without(EdgeId e) const {
    EdgeSet copy = *this;
    copy.erase(e);
    return copy;
  }

  const_iterator begin() const { return const_iterator(&words_, 0); }
  const_iterator end() const { return const_iterator(); }

  std::vector<EdgeId> to_vector() const;
  // "{0,3,7}"
  std::string to_string() const;

  bool operator==(const EdgeSet& other) const { return words_ == other.words_; }
  // Lexicographic order on the ascending element sequences.
  std::strong_ordering operator<=>(const EdgeSet& other) const;

  std::size_t hash() const;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

}  // namespace locind
