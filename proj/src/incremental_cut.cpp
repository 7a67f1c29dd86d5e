#include <limits>

#include "planeforge/minimize.hpp"

namespace planeforge {

// Same network as CutMinimizer over the whole plane: s=0, t=1, points from 2,
// lines after the points. Stored as CSR arrays of residual capacities.
IncrementalCut::IncrementalCut(const Plane& plane) : plane_(&plane) {
  const int n = static_cast<int>(plane.size());
  const int nodes = 2 + n + static_cast<int>(plane.lines().size());
  struct Arc {
    int from, to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<int> forced_arc(n);
  for (int p = 0; p < n; ++p) {
    arcs.push_back({2 + p, 1, 1});
    forced_arc[p] = static_cast<int>(arcs.size());
    arcs.push_back({0, 2 + p, 0});
  }
  for (std::size_t l = 0; l < plane.lines().size(); ++l) {
    const int node = 2 + n + static_cast<int>(l);
    const auto& members = plane.line_members(l);
    for (auto q : members) arcs.push_back({node, 2 + static_cast<int>(q), 1});
    arcs.push_back({0, node, static_cast<int>(members.size()) - 2});
    line_total_ += static_cast<int>(members.size()) - 2;
  }

  // Each arc i becomes edge 2i with its reverse 2i+1, then sorted into CSR.
  std::vector<int> degree(nodes + 1, 0);
  for (const auto& a : arcs) ++degree[a.from], ++degree[a.to];
  first_.assign(nodes + 1, 0);
  for (int v = 0; v < nodes; ++v) first_[v + 1] = first_[v] + degree[v];
  std::vector<int> fill(first_.begin(), first_.end() - 1);
  to_.resize(2 * arcs.size());
  rev_.resize(2 * arcs.size());
  cap_.resize(2 * arcs.size());
  std::vector<int> slot(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    int e = fill[arcs[i].from]++, r = fill[arcs[i].to]++;
    to_[e] = arcs[i].to, cap_[e] = arcs[i].cap, rev_[e] = r;
    to_[r] = arcs[i].from, cap_[r] = 0, rev_[r] = e;
    slot[i] = e;
  }
  forced_edge_.resize(n);
  for (int p = 0; p < n; ++p) forced_edge_[p] = slot[forced_arc[p]];

  seen_.assign(nodes, 0);
  parent_.assign(nodes, -1);
  queue_.reserve(nodes);
  line_count_.assign(plane.lines().size(), 0);
  base_flow_ = augment(std::numeric_limits<int>::max());
  log_.clear();
}

// Shortest augmenting paths until none is left or `limit` units have moved.
int IncrementalCut::augment(int limit) {
  int moved = 0;
  while (moved < limit) {
    ++stamp_;
    queue_.clear();
    queue_.push_back(0);
    seen_[0] = stamp_;
    bool reached = false;
    for (std::size_t head = 0; head < queue_.size() && !reached; ++head) {
      int v = queue_[head];
      for (int e = first_[v]; e < first_[v + 1]; ++e) {
        int w = to_[e];
        if (cap_[e] <= 0 || seen_[w] == stamp_) continue;
        seen_[w] = stamp_;
        parent_[w] = e;
        if (w == 1) {
          reached = true;
          break;
        }
        queue_.push_back(w);
      }
    }
    if (!reached) break;
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = 1; v != 0; v = to_[rev_[parent_[v]]]) bottleneck = std::min(bottleneck, cap_[parent_[v]]);
    bottleneck = std::min(bottleneck, limit - moved);
    for (int v = 1; v != 0; v = to_[rev_[parent_[v]]]) {
      int e = parent_[v];
      log_.emplace_back(e, cap_[e]);
      log_.emplace_back(rev_[e], cap_[rev_[e]]);
      cap_[e] -= bottleneck;
      cap_[rev_[e]] += bottleneck;
    }
    moved += bottleneck;
  }
  return moved;
}

void IncrementalCut::rollback() {
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) cap_[it->first] = it->second;
  log_.clear();
}

int IncrementalCut::delta_of(const PointSet& x) {
  int v = static_cast<int>(x.count());
  std::vector<std::uint32_t> touched;
  x.for_each([&](PointIndex p) {
    for (auto l : plane_->lines_through(p))
      if (line_count_[l]++ == 0) touched.push_back(l);
  });
  for (auto l : touched) {
    if (line_count_[l] > 2) v -= line_count_[l] - 2;
    line_count_[l] = 0;
  }
  return v;
}

Minimum IncrementalCut::minimize(const PointSet& forced) {
  plane_->require_own(forced);
  const int inf = static_cast<int>(plane_->size()) + 1;
  forced.for_each([&](PointIndex p) {
    log_.emplace_back(forced_edge_[p], cap_[forced_edge_[p]]);
    cap_[forced_edge_[p]] = inf;
  });
  int extra = augment(std::numeric_limits<int>::max());
  // The last search failed, so seen_ marks the source side.
  PointSet side(plane_->size());
  for (PointIndex p = 0; p < plane_->size(); ++p)
    if (seen_[2 + p] == stamp_) side.insert(p);
  rollback();
  return {base_flow_ + extra - line_total_, std::move(side), SearchMethod::mincut};
}

bool IncrementalCut::is_strong(const PointSet& forced) {
  plane_->require_own(forced);
  const int target = delta_of(forced) + line_total_ - base_flow_;
  const int inf = static_cast<int>(plane_->size()) + 1;
  forced.for_each([&](PointIndex p) {
    log_.emplace_back(forced_edge_[p], cap_[forced_edge_[p]]);
    cap_[forced_edge_[p]] = inf;
  });
  // min δ over supersets never exceeds δ(forced), so the flow cannot pass target.
  int extra = augment(target + 1);
  rollback();
  return extra == target;
}

}  // namespace planeforge
