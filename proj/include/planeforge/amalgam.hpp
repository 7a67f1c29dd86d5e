#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeforge/plane.hpp"

namespace planeforge {

enum class AmalgamKind { free, canonical };
const char* to_string(AmalgamKind k);

struct AmalgamResult {
  Plane plane;
  AmalgamKind kind = AmalgamKind::free;
  /// (line of A, line of B) pairs merged over the common part.
  std::vector<std::pair<IdSet, IdSet>> identified_lines;
};

/// A ⊗_C B: the union with no new dependencies. C defaults to the shared ids
/// and, when given, must equal them. Throws ExchangeViolation when a C-based
/// line gains points on both sides.
AmalgamResult free_amalgam(const Plane& a, const Plane& b);
AmalgamResult free_amalgam(const Plane& a, const Plane& b, const IdSet& c);

/// A ⊕_C B: each C-based line's extensions in A and in B become one line.
/// Throws NotWedgeSubgeometry unless C sits in both sides as a ∧-subgeometry.
AmalgamResult canonical_amalgam(const Plane& a, const Plane& b);
AmalgamResult canonical_amalgam(const Plane& a, const Plane& b, const IdSet& c);

/// Plane text followed by a comment block with the kind and merged lines.
std::string format_amalgam(const AmalgamResult& r, std::string_view name);

/// A ≤ B with no strong intermediate strictly between. Throws NotStrong.
bool is_primitive(const Plane& p, const PointSet& a, const PointSet& b);

enum class PrimitiveCase { case0, case1 };

struct PrimitiveClass {
  PrimitiveCase kind = PrimitiveCase::case0;
  std::optional<PointIndex> point;  // the added point for case1
  int delta_rel = 0;
};

/// Case1 when δ(C/B) = 1 (one new point), Case0 when δ(C/B) = 0.
PrimitiveClass classify_primitive(const Plane& p, const PointSet& b, const PointSet& c);

struct Decomposition {
  std::vector<PointSet> chain;  // B = X0 ⊊ X1 ⊊ ... ⊊ Xn = C
  std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
};

/// Chain of primitive strong steps, each step the smallest (size, then
/// lexicographic) strong intermediate above the previous one.
Decomposition decompose(const Plane& p, const PointSet& b, const PointSet& c);

enum class SharpKind { free_amalgam, embedding, none };

struct SharpResult {
  SharpKind kind = SharpKind::none;
  std::optional<AmalgamResult> amalgam;
  std::optional<Embedding> embedding;  // A into B, identity on C, image strong in B
};

/// Requires C ≤ A primitive, C 1-strong in B and A ∩ B = C; throws
/// PreconditionViolated otherwise. Returns the free amalgam when it is a valid
/// plane in K0, else a strong embedding of A into B over C. `none` means
/// neither exists.
SharpResult sharp_step(const Plane& a, const Plane& b, const IdSet& c);

struct IndependenceReport {
  int d_a_over_c = 0;  // d(AC) - d(C)
  int d_a_over_b = 0;  // d(AB) - d(B)
  bool numeric = false;
  bool union_is_canonical = false;  // restrict(P, AB) = A ⊕_C B
  bool union_is_strong = false;     // AB ≤ P
  bool structural() const { return union_is_canonical && union_is_strong; }
};

/// Requires C ≤ A ≤ P, C ≤ B ≤ P and A ∩ B = C (NotStrong / PreconditionViolated).
/// Throws InvariantViolation if the numeric and structural tests disagree.
IndependenceReport independence_report(const Plane& p, const PointSet& a, const PointSet& b, const PointSet& c);
bool d_independent(const Plane& p, const PointSet& a, const PointSet& b, const PointSet& c);

}  // namespace planeforge
