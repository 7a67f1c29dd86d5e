#pragma once

// Exact minimization of δ over the interval [forced, universe] of point sets.
//
// δ is submodular, so its minimizers over an interval are closed under union
// and intersection and there is a unique inclusion-smallest one. Two routes
// compute it:
//   - exhaustive: tabulate every subset of the free points with the batched
//     kernel; guarded by subset_budget();
//   - min-cut: write -max(0, k-2) as min over a line switch y of y(2-k) and
//     solve the resulting pairwise binary energy as an s-t cut.

#include <cstdint>
#include <memory>
#include <vector>

#include "planeforge/kernels/delta_kernel.hpp"
#include "planeforge/plane.hpp"

namespace planeforge {

/// Largest free-point count for exhaustive subset searches. 20 by default;
/// PLANEFORGE_BUDGET overrides (clamped to 1..26).
std::size_t subset_budget();

enum class SearchMethod { exhaustive, mincut };
const char* to_string(SearchMethod m);

struct Minimum {
  int value = 0;
  PointSet minimizer;  // inclusion-smallest
  SearchMethod method = SearchMethod::exhaustive;
};

/// Every subset of the free points with its δ, indexed by bitmask.
class SubsetTable {
 public:
  SubsetTable(const Plane& plane, const PointSet& forced, const PointSet& universe);

  std::size_t free_count() const { return free_.size(); }
  const std::vector<PointIndex>& free_points() const { return free_; }
  const std::vector<std::int32_t>& values() const { return values_; }
  std::int32_t value(std::uint32_t mask) const { return values_[mask]; }
  PointSet to_set(std::uint32_t mask) const;
  const kernels::OffsetLines& offset_lines() const { return lines_; }

  /// out[m] = min over supersets s of m (within the free points) of value(s).
  std::vector<std::int32_t> superset_minima() const;

 private:
  PointSet forced_;
  std::vector<PointIndex> free_;
  kernels::OffsetLines lines_;
  std::vector<std::int32_t> values_;
};

/// Offset-line encoding of δ(forced ∪ Y) for Y ⊆ free (|free| ≤ 32).
kernels::OffsetLines make_offset_lines(const Plane& plane, const PointSet& forced,
                                       const std::vector<PointIndex>& free);

/// Reusable cut graph for one plane and universe; each query pins a forced set.
class CutMinimizer {
 public:
  CutMinimizer(const Plane& plane, const PointSet& universe);
  ~CutMinimizer();
  CutMinimizer(CutMinimizer&&) noexcept;
  CutMinimizer& operator=(CutMinimizer&&) noexcept;

  Minimum minimize(const PointSet& forced);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Whole-plane minimizer tuned for many small forced sets: the unforced max
/// flow is computed once; each query augments from the forced points and
/// then rolls the residual graph back.
class IncrementalCut {
 public:
  explicit IncrementalCut(const Plane& plane);

  Minimum minimize(const PointSet& forced);
  /// forced ≤ plane, stopping as soon as the flow reaches δ(forced).
  bool is_strong(const PointSet& forced);
  int delta_of(const PointSet& x);

 private:
  int augment(int limit);
  void rollback();

  const Plane* plane_;
  int line_total_ = 0, base_flow_ = 0, stamp_ = 0;
  std::vector<int> first_, to_, rev_, cap_, forced_edge_;
  std::vector<int> seen_, parent_, queue_, line_count_;
  std::vector<std::pair<int, int>> log_;
};

Minimum minimize_delta_exhaustive(const Plane& plane, const PointSet& forced, const PointSet& universe);
Minimum minimize_delta_mincut(const Plane& plane, const PointSet& forced, const PointSet& universe);
/// Exhaustive when the free part fits the budget, min-cut otherwise.
Minimum minimize_delta(const Plane& plane, const PointSet& forced, const PointSet& universe);

}  // namespace planeforge
