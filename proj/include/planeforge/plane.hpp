#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planeforge/errors.hpp"
#include "planeforge/point_set.hpp"

namespace planeforge {

/// A finite simple matroid of rank at most 3, stored by its nontrivial lines.
///
/// Point ids are kept in lexicographic order and a point's index is its rank
/// in that order. Lines have at least three points and pairwise share at most
/// one point. Instances are immutable once built.
class Plane {
 public:
  Plane() = default;

  /// Builds a plane, checking every invariant. Identical lines are merged.
  /// Throws InvalidLine, UnknownPoint or ExchangeViolation.
  static Plane validate(std::vector<std::string> points, std::vector<std::vector<std::string>> lines);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(PointIndex i) const { return ids_[i]; }

  std::optional<PointIndex> find(std::string_view id) const;
  PointIndex index_of(std::string_view id) const;  // throws UnknownPoint

  PointSet none() const { return PointSet(size()); }
  PointSet all() const { return PointSet::full(size()); }
  PointSet subset(std::span<const std::string> ids) const;
  PointSet subset(std::initializer_list<std::string_view> ids) const;
  IdSet names(const PointSet& s) const;

  /// Nontrivial lines, each as a point set, in lexicographic order.
  const std::vector<PointSet>& lines() const { return lines_; }
  const std::vector<PointIndex>& line_members(std::size_t line) const { return members_[line]; }
  /// Indices of the nontrivial lines through a point.
  const std::vector<std::uint32_t>& lines_through(PointIndex p) const { return incidence_[p]; }

  /// The nontrivial line through two distinct points, if any.
  std::optional<std::size_t> line_of(PointIndex p, PointIndex q) const;
  bool collinear(PointIndex a, PointIndex b, PointIndex c) const;

  /// Throws UnknownPoint unless the set was made for a plane of this size.
  void require_own(const PointSet& s) const;

  friend bool operator==(const Plane& a, const Plane& b) { return a.ids_ == b.ids_ && a.line_ids_ == b.line_ids_; }

  /// Lines as sorted id lists; handy for tests and serialization.
  const std::vector<IdSet>& line_ids() const { return line_ids_; }

 private:
  std::vector<std::string> ids_;
  std::vector<PointSet> lines_;
  std::vector<std::vector<PointIndex>> members_;
  std::vector<IdSet> line_ids_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

/// A closure-closed subset.
struct Flat {
  PointSet carrier;
  int rank = 0;
};

/// An injective map from a pattern plane into a target plane that preserves
/// and reflects collinearity of triples.
struct Embedding {
  std::map<std::string, std::string> map;
};

Flat closure(const Plane& p, const PointSet& x);
int rank(const Plane& p, const PointSet& x);

/// Every line of the plane meeting `n` in at least two points: the stored
/// nontrivial lines, plus trivial pairs inside `n` covered by no stored line.
std::vector<PointSet> lines_based_in(const Plane& p, const PointSet& n);

/// Induced plane on `x`.
Plane restrict(const Plane& p, const PointSet& x);

/// Checks that `m` sits in `n` preserving meets and joins of its lines.
/// `inclusion` maps ids of `m` to ids of `n`; missing entries map to themselves.
/// Throws NotASubplane when `m` is not the induced subplane on its image.
bool is_wedge_subgeometry(const Plane& m, const Plane& n, const std::map<std::string, std::string>& inclusion = {});

/// Deterministic backtracking search. `fixed` pins some pattern ids.
std::optional<Embedding> find_embedding(const Plane& pattern, const Plane& target,
                                        const std::map<std::string, std::string>& fixed = {});

/// Visits embeddings in search order until the visitor returns true.
/// Returns true iff the visitor accepted one.
bool for_each_embedding(const Plane& pattern, const Plane& target, const std::map<std::string, std::string>& fixed,
                        const std::function<bool(const std::vector<PointIndex>& image)>& visit);

}  // namespace planeforge
