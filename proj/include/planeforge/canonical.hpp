#pragma once

#include <string>
#include <vector>

#include "planeforge/plane.hpp"

namespace planeforge {

/// Isomorphism-invariant certificate of a plane. Points listed in `fixed`
/// keep their relative order and come first; the rest are free to permute.
struct CanonicalForm {
  std::string key;
  std::vector<PointIndex> order;  // order[label] = point of the input plane
};

/// Individualization-refinement search over incidence colorings; the key is
/// the smallest sorted line list among the leaves.
CanonicalForm canonical_form(const Plane& p, const std::vector<PointIndex>& fixed = {});

/// Same key iff isomorphic (over the fixed points, in order).
bool isomorphic(const Plane& a, const Plane& b);

}  // namespace planeforge
