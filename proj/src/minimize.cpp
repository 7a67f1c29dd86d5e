#include "planeforge/minimize.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace planeforge {

std::size_t subset_budget() {
  if (const char* env = std::getenv("PLANEFORGE_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(std::clamp(v, 1L, 26L));
  }
  return 20;
}

const char* to_string(SearchMethod m) { return m == SearchMethod::exhaustive ? "exhaustive" : "mincut"; }

kernels::OffsetLines make_offset_lines(const Plane& plane, const PointSet& forced,
                                       const std::vector<PointIndex>& free) {
  kernels::OffsetLines out;
  out.base = static_cast<std::int32_t>(forced.count());
  for (std::size_t l = 0; l < plane.lines().size(); ++l) {
    const auto& line = plane.lines()[l];
    auto in_forced = static_cast<std::int32_t>(line.intersection_count(forced));
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (line.contains(free[k])) mask |= std::uint32_t{1} << k;
    if (mask == 0) {
      if (in_forced > 2) out.base -= in_forced - 2;
      continue;
    }
    // A line that can never reach three points contributes nothing.
    if (in_forced + std::popcount(mask) < 3) continue;
    out.masks.push_back(mask);
    out.offsets.push_back(in_forced - 2);
  }
  return out;
}

SubsetTable::SubsetTable(const Plane& plane, const PointSet& forced, const PointSet& universe)
    : forced_(forced) {
  plane.require_own(forced);
  plane.require_own(universe);
  if (!forced.is_subset_of(universe)) throw NotASubset("forced set is not inside the universe");
  free_ = (universe - forced).indices();
  if (free_.size() > subset_budget())
    throw BudgetExceeded("exhaustive search over " + std::to_string(free_.size()) +
                         " free points exceeds the budget of " + std::to_string(subset_budget()));
  lines_ = make_offset_lines(plane, forced, free_);
  const std::uint32_t total = std::uint32_t{1} << free_.size();
  values_.resize(total);
  const auto& kernel = kernels::active_kernel();
  constexpr std::uint32_t kChunk = 1U << 14;
  for (std::uint32_t first = 0; first < total; first += kChunk)
    kernel.range(lines_, first, std::min(kChunk, total - first), values_.data() + first);
}

PointSet SubsetTable::to_set(std::uint32_t mask) const {
  PointSet s = forced_;
  for (std::size_t k = 0; k < free_.size(); ++k)
    if ((mask >> k) & 1U) s.insert(free_[k]);
  return s;
}

std::vector<std::int32_t> SubsetTable::superset_minima() const {
  std::vector<std::int32_t> up = values_;
  const std::size_t total = up.size();
  for (std::size_t bit = 0; bit < free_.size(); ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t m = 0; m < total; ++m)
      if ((m & b) == 0) up[m] = std::min(up[m], up[m | b]);
  }
  return up;
}

Minimum minimize_delta_exhaustive(const Plane& plane, const PointSet& forced, const PointSet& universe) {
  SubsetTable table(plane, forced, universe);
  const auto& v = table.values();
  std::int32_t best = *std::min_element(v.begin(), v.end());
  // Minimizers are closed under intersection; their intersection is the answer.
  std::uint32_t meet = ~std::uint32_t{0};
  for (std::uint32_t m = 0; m < v.size(); ++m)
    if (v[m] == best) meet &= m;
  meet &= static_cast<std::uint32_t>(v.size() - 1);
  if (v[meet] != best) throw InvariantViolation("δ minimizers are not closed under intersection");
  return {best, table.to_set(meet), SearchMethod::exhaustive};
}

Minimum minimize_delta_mincut(const Plane& plane, const PointSet& forced, const PointSet& universe) {
  CutMinimizer cut(plane, universe);
  return cut.minimize(forced);
}

Minimum minimize_delta(const Plane& plane, const PointSet& forced, const PointSet& universe) {
  plane.require_own(forced);
  plane.require_own(universe);
  if ((universe - forced).count() <= std::min<std::size_t>(subset_budget(), 16))
    return minimize_delta_exhaustive(plane, forced, universe);
  return minimize_delta_mincut(plane, forced, universe);
}

}  // namespace planeforge
