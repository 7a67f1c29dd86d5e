#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace planeforge {

using PointIndex = std::uint32_t;

/// Dynamic bitset over the point indices of one plane.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  PointSet(std::size_t universe, std::initializer_list<PointIndex> members);

  static PointSet full(std::size_t universe);
  static PointSet from_indices(std::size_t universe, std::span<const PointIndex> members);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(PointIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(PointIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(PointIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool is_subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;
  std::size_t intersection_count(const PointSet& other) const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  std::vector<PointIndex> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<PointIndex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  /// Lexicographic order on the ascending index lists.
  friend bool lex_less(const PointSet& a, const PointSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Orders point sets by size, then lexicographically; used for every tie-break.
struct SizeThenLex {
  bool operator()(const PointSet& a, const PointSet& b) const {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
  }
};

}  // namespace planeforge
