#include "facering/vertex_set.hpp"

#include <bit>
#include <stdexcept>

namespace facering {

void VertexSet::insert(int v) {
  if (v <= 0) throw std::invalid_argument("vertex ids must be positive, got " + std::to_string(v));
  size_t w = static_cast<size_t>(v - 1) / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << ((v - 1) % 64);
}

void VertexSet::erase(int v) {
  if (v <= 0) return;
  size_t w = static_cast<size_t>(v - 1) / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << ((v - 1) % 64));
  trim();
}

bool VertexSet::contains(int v) const {
  if (v <= 0) return false;
  size_t w = static_cast<size_t>(v - 1) / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> ((v - 1) % 64)) & 1;
}

int VertexSet::size() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

int VertexSet::min_element() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i])) + 1;
  throw std::domain_error("min_element of empty vertex set");
}

int VertexSet::max_element() const {
  for (size_t i = words_.size(); i-- > 0;)
    if (words_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i])) + 1;
  throw std::domain_error("max_element of empty vertex set");
}

bool VertexSet::subset_of(const VertexSet& o) const {
  if (words_.size() > o.words_.size()) {
    for (size_t i = o.words_.size(); i < words_.size(); ++i)
      if (words_[i]) return false;
  }
  size_t n = std::min(words_.size(), o.words_.size());
  for (size_t i = 0; i < n; ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  size_t n = std::min(words_.size(), o.words_.size());
  for (size_t i = 0; i < n; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

VertexSet VertexSet::unite(const VertexSet& o) const {
  VertexSet r;
  r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] |= words_[i];
  for (size_t i = 0; i < o.words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
  VertexSet r;
  size_t n = std::min(words_.size(), o.words_.size());
  r.words_.resize(n, 0);
  for (size_t i = 0; i < n; ++i) r.words_[i] = words_[i] & o.words_[i];
  r.trim();
  return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  VertexSet r;
  r.words_ = words_;
  size_t n = std::min(words_.size(), o.words_.size());
  for (size_t i = 0; i < n; ++i) r.words_[i] &= ~o.words_[i];
  r.trim();
  return r;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) s += ' ';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

bool VertexSet::operator<(const VertexSet& o) const {
  if (words_.size() != o.words_.size()) return words_.size() < o.words_.size();
  for (size_t i = words_.size(); i-- > 0;)
    if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
  return false;
}

size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

int VertexSet::next_bit(int from) const {
  size_t w = static_cast<size_t>(from) / 64;
  if (w >= words_.size()) return -1;
  std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
    if (++w >= words_.size()) return -1;
    cur = words_[w];
  }
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace facering
