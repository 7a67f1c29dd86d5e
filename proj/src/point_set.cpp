#include "planeforge/point_set.hpp"

#include <algorithm>

#include "planeforge/errors.hpp"

namespace planeforge {

ExchangeViolation::ExchangeViolation(IdSet first, IdSet second, IdSet pair)
    : Error("exchange axiom violated: lines {" + join_ids(first) + "} and {" + join_ids(second) +
            "} share {" + join_ids(pair) + "}"),
      first_(std::move(first)), second_(std::move(second)), pair_(std::move(pair)) {}

std::string join_ids(const IdSet& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ' ';
    out += id;
  }
  return out;
}

PointSet::PointSet(std::size_t universe, std::initializer_list<PointIndex> members) : PointSet(universe) {
  for (auto m : members) insert(m);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (PointIndex i = 0; i < universe; ++i) s.insert(i);
  return s;
}

PointSet PointSet::from_indices(std::size_t universe, std::span<const PointIndex> members) {
  PointSet s(universe);
  for (auto m : members) s.insert(m);
  return s;
}

std::size_t PointSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PointSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PointSet::is_subset_of(const PointSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::size_t PointSet::intersection_count(const PointSet& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<PointIndex> PointSet::indices() const {
  std::vector<PointIndex> out;
  for_each([&](PointIndex i) { out.push_back(i); });
  return out;
}

bool lex_less(const PointSet& a, const PointSet& b) {
  // Let e be the smallest element of the symmetric difference. Everything
  // below e is shared, so the set holding e is smaller unless the other set
  // has nothing above e (it is then a proper prefix).
  auto has_above = [](const PointSet& s, std::size_t w, std::uint64_t low) {
    if ((s.words_[w] & ~((low << 1) - 1)) != 0) return true;
    for (std::size_t k = w + 1; k < s.words_.size(); ++k)
      if (s.words_[k] != 0) return true;
    return false;
  };
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    std::uint64_t low = diff & (~diff + 1);
    if ((a.words_[w] & low) != 0) return has_above(b, w, low);
    return !has_above(a, w, low);
  }
  return false;
}

}  // namespace planeforge
