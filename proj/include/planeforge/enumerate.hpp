#pragma once

#include <functional>
#include <vector>

#include "planeforge/plane.hpp"

namespace planeforge {

/// Largest point count accepted by enumerate_planes.
inline constexpr int kMaxEnumeratedPoints = 7;
/// Largest extension size accepted by enumerate_strong_extensions.
inline constexpr int kMaxExtensionPoints = 4;

/// K0 planes on exactly n points, one per isomorphism class, ordered by
/// canonical key. Points are named "1".."n". Throws BudgetExceeded for n > 7.
std::vector<Plane> enumerate_planes(int n);

/// Every K0 plane with at most max_n points: enumerate_planes(0..max_n).
std::vector<Plane> census(int max_n);

struct StrongExtension {
  Plane plane;    // contains the base plane as an induced subplane
  IdSet added;    // ids of B - A
};

/// All B ⊇ A with 1 ≤ |B - A| ≤ k, A ≤ B and B in K0, one per isomorphism
/// type over A; ordered by size, then canonical key. New ids come from
/// `prefix` followed by a counter and avoid the ids of A.
std::vector<StrongExtension> enumerate_strong_extensions(const Plane& a, int k, const std::string& prefix = "x");

/// Calls `visit` with every line list on points 0..n-1 that restricts to
/// `fixed` on [0, base): base lines, stored or trivial, may only gain new points.
/// Used by the enumerators above; exposed for tests.
void for_each_line_space(std::size_t base, const std::vector<std::vector<PointIndex>>& fixed, std::size_t n,
                         const std::function<void(const std::vector<std::vector<PointIndex>>&)>& visit);

}  // namespace planeforge
