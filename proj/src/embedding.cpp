#include <algorithm>

#include "planeforge/plane.hpp"

namespace planeforge {
namespace {

constexpr PointIndex kUnset = ~PointIndex{0};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Plane& pattern, const Plane& target, const std::map<std::string, std::string>& fixed,
                  const std::function<bool(const std::vector<PointIndex>&)>& visit)
      : pattern_(pattern), target_(target), visit_(visit),
        image_(pattern.size(), kUnset), used_(target.size(), false) {
    std::vector<bool> placed(pattern.size(), false);
    for (const auto& [from, to] : fixed) {
      auto p = pattern.index_of(from);
      auto t = target.index_of(to);
      if (placed[p]) continue;
      placed[p] = true;
      order_.push_back(p);
      pinned_.push_back(t);
    }
    fixed_count_ = order_.size();
    // Greedy order: prefer points forced onto a line by two placed points,
    // then high degree, then lexicographic id.
    while (order_.size() < pattern.size()) {
      PointIndex best = kUnset;
      std::pair<int, int> best_key{-1, -1};
      for (PointIndex v = 0; v < pattern.size(); ++v) {
        if (placed[v]) continue;
        int constrained = 0;
        for (auto l : pattern.lines_through(v)) {
          int on = 0;
          for (auto u : pattern.line_members(l))
            if (placed[u]) ++on;
          if (on >= 2) ++constrained;
        }
        std::pair<int, int> key{constrained, static_cast<int>(pattern.lines_through(v).size())};
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool run() { return extend(0); }

 private:
  bool consistent(PointIndex v, PointIndex t, std::size_t depth) const {
    for (std::size_t a = 0; a < depth; ++a)
      for (std::size_t b = a + 1; b < depth; ++b) {
        auto u = order_[a], w = order_[b];
        if (pattern_.collinear(u, w, v) != target_.collinear(image_[u], image_[w], t)) return false;
      }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return visit_(image_);
    auto v = order_[depth];
    auto try_candidate = [&](PointIndex t) {
      if (used_[t] || !consistent(v, t, depth)) return false;
      image_[v] = t;
      used_[t] = true;
      bool done = extend(depth + 1);
      used_[t] = false;
      image_[v] = kUnset;
      return done;
    };
    if (depth < fixed_count_) return try_candidate(pinned_[depth]);

    // If v lies on a pattern line through two placed points, the image must
    // lie on the target line through their images.
    for (auto l : pattern_.lines_through(v)) {
      PointIndex first = kUnset, second = kUnset;
      for (auto u : pattern_.line_members(l)) {
        if (image_[u] == kUnset) continue;
        if (first == kUnset) first = u; else if (second == kUnset) second = u;
      }
      if (second == kUnset) continue;
      auto tl = target_.line_of(image_[first], image_[second]);
      if (!tl) return false;
      for (auto t : target_.line_members(*tl))
        if (try_candidate(t)) return true;
      return false;
    }
    for (PointIndex t = 0; t < target_.size(); ++t)
      if (try_candidate(t)) return true;
    return false;
  }

  const Plane& pattern_;
  const Plane& target_;
  const std::function<bool(const std::vector<PointIndex>&)>& visit_;
  std::vector<PointIndex> order_;
  std::vector<PointIndex> pinned_;
  std::size_t fixed_count_ = 0;
  std::vector<PointIndex> image_;
  std::vector<bool> used_;
};

}  // namespace

bool for_each_embedding(const Plane& pattern, const Plane& target, const std::map<std::string, std::string>& fixed,
                        const std::function<bool(const std::vector<PointIndex>& image)>& visit) {
  if (pattern.size() > target.size()) return false;
  EmbeddingSearch search(pattern, target, fixed, visit);
  return search.run();
}

std::optional<Embedding> find_embedding(const Plane& pattern, const Plane& target,
                                        const std::map<std::string, std::string>& fixed) {
  std::optional<Embedding> found;
  for_each_embedding(pattern, target, fixed, [&](const std::vector<PointIndex>& image) {
    Embedding e;
    for (PointIndex v = 0; v < pattern.size(); ++v) e.map[pattern.id(v)] = target.id(image[v]);
    found = std::move(e);
    return true;
  });
  return found;
}

}  // namespace planeforge
