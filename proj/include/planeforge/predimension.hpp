#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeforge/minimize.hpp"
#include "planeforge/plane.hpp"

namespace planeforge {

/// n(F) = |F| - rk(F). Throws NotAFlat unless `f` is closure-closed.
int nullity(const Plane& p, const PointSet& f);

/// Mason's α by memoized recursion over the flats of `p` properly inside `x`.
int alpha(const Plane& p, const PointSet& x);

/// δ(X) = |X| minus the summed nullities of the lines of the restriction to X.
int delta(const Plane& p, const PointSet& x);

/// Per-line bookkeeping for δ(A/B), one entry per line of the plane based in B.
struct RelativeLineStats {
  PointSet line;
  int size_in_a = 0;        // |ℓ|_A
  int nullity_in_b = 0;     // n_B(ℓ)
  int nullity_in_ab = 0;    // n_AB(ℓ)
};

std::vector<RelativeLineStats> relative_line_stats(const Plane& p, const PointSet& a, const PointSet& b);

/// δ(A/B) = δ(A ∪ B) - δ(B) for disjoint A, B. Cross-checked against the
/// expanded three-sum form; throws OverlappingSets when A ∩ B ≠ ∅.
int delta_rel(const Plane& p, const PointSet& a, const PointSet& b);

/// The three-sum form of δ(A/B), exposed for tests.
int delta_rel_expanded(const Plane& p, const PointSet& a, const PointSet& b);

struct PredimReport {
  int delta = 0;
  int alpha = 0;
  bool in_k0 = true;
  std::optional<PointSet> violating_subset;
  SearchMethod method = SearchMethod::exhaustive;
};

/// K₀ membership. Up to the subset budget the violator is the smallest,
/// lexicographically first subset with δ < 0; beyond it the inclusion-smallest
/// δ-minimizer from the cut route.
PredimReport in_k0(const Plane& p);

/// A ≤ B: every X with A ⊆ X ⊆ B has δ(X) ≥ δ(A). Throws NotASubset.
bool is_strong(const Plane& p, const PointSet& a, const PointSet& b);

/// A ≤ B' for every A ⊆ B' ⊆ B with |B' - A| ≤ k.
bool is_k_strong(const Plane& p, const PointSet& a, const PointSet& b, int k);

/// min δ(B) over A ⊆ B ⊆ P, with P as the ambient.
int d_value(const Plane& p, const PointSet& a);

struct IclResult {
  PointSet closure;
  int d = 0;
  SearchMethod method = SearchMethod::exhaustive;
  bool is_ambient = false;  // the closure is the whole ambient plane
};

/// Smallest B ⊇ A with B ≤ P. Throws NotInK0 when P ∉ K₀.
IclResult icl_report(const Plane& p, const PointSet& a);
PointSet icl(const Plane& p, const PointSet& a);

/// Structured text: `delta: ..`, `alpha: ..`, `in_K0: ..`, `violating_subset: ..`.
std::string format_report(const Plane& p, const PredimReport& r);

}  // namespace planeforge
