#ifndef FACERING_VERTEX_SET_HPP
#define FACERING_VERTEX_SET_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace facering {

// A finite set of positive integer vertex ids, stored as a bit mask.
// Ids up to 64 live in a single machine word; larger ids spill into further
// words behind the same interface. Iteration is always in ascending id order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) {
    for (int v : ids) insert(v);
  }

  static VertexSet range(int first, int last) {
    VertexSet s;
    for (int v = first; v <= last; ++v) s.insert(v);
    return s;
  }

  void insert(int v);
  void erase(int v);
  bool contains(int v) const;

  bool empty() const { return words_.empty(); }
  int size() const;
  int min_element() const;  // throws on empty set
  int max_element() const;  // throws on empty set

  bool subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  VertexSet unite(const VertexSet& o) const;
  VertexSet intersect(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;

  std::vector<int> elements() const;
  std::string to_string() const;  // "{1 4 7}"

  bool operator==(const VertexSet& o) const { return words_ == o.words_; }
  // Total order (by highest differing word); used for canonical facet lists.
  bool operator<(const VertexSet& o) const;

  size_t hash() const;

  // Ascending iteration over ids.
  class const_iterator {
   public:
    const_iterator(const VertexSet* s, int pos) : s_(s), pos_(pos) {}
    int operator*() const { return pos_ + 1; }
    const_iterator& operator++() {
      pos_ = s_->next_bit(pos_ + 1);
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

   private:
    const VertexSet* s_;
    int pos_;
  };
  const_iterator begin() const { return {this, next_bit(0)}; }
  const_iterator end() const { return {this, -1}; }

 private:
  // next set bit at position >= from (0-based), -1 if none
  int next_bit(int from) const;
  void trim();

  std::vector<std::uint64_t> words_;  // bit (v-1) % 64 of word (v-1) / 64; no trailing zero words
};

}  // namespace facering

template <>
struct std::hash<facering::VertexSet> {
  size_t operator()(const facering::VertexSet& s) const { return s.hash(); }
};

#endif
