#include "locind/edge_set.hpp"

#include <algorithm>
#include <cassert>

namespace locind {

void EdgeSet::const_iterator::advance(std::size_t from) {
  std::size_t w = from / 64;
  if (words_ == nullptr || w >= words_->size()) {
    current_ = kEnd;
    return;
  }
  std::uint64_t word = (*words_)[w] & (~std::uint64_t{0} << (from % 64));
  while (word == 0) {
    if (++w >= words_->size()) {
      current_ = kEnd;
      return;
    }
    word = (*words_)[w];
  }
  current_ = static_cast<EdgeId>(w * 64 + std::countr_zero(word));
}

EdgeSet::EdgeSet(std::initializer_list<EdgeId> ids) {
  for (EdgeId e : ids) insert(e);
}

EdgeSet::EdgeSet(std::span<const EdgeId> ids) {
  for (EdgeId e : ids) insert(e);
}

EdgeSet EdgeSet::range(std::size_t count) {
  EdgeSet s;
  s.words_.assign((count + 63) / 64, ~std::uint64_t{0});
  if (count % 64 != 0) s.words_.back() = (std::uint64_t{1} << (count % 64)) - 1;
  return s;
}

void EdgeSet::insert(EdgeId e) {
  std::size_t w = e / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(EdgeId e) {
  std::size_t w = e / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (e % 64));
  trim();
}

std::size_t EdgeSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

EdgeId EdgeSet::front() const {
  assert(!empty());
  return *begin();
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

std::vector<EdgeId> EdgeSet::to_vector() const {
  std::vector<EdgeId> out;
  out.reserve(size());
  for (EdgeId e : *this) out.push_back(e);
  return out;
}

std::string EdgeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (EdgeId e : *this) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

std::strong_ordering EdgeSet::operator<=>(const EdgeSet& other) const {
  auto a = begin();
  auto b = other.begin();
  for (; a != end() && b != other.end(); ++a, ++b) {
    if (*a != *b) return *a <=> *b;
  }
  if (a == end() && b == other.end()) return std::strong_ordering::equal;
  return a == end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t EdgeSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ull;
  }
  return h;
}

void EdgeSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace locind
