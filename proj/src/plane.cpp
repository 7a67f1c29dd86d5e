#include "planeforge/plane.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace planeforge {

Plane Plane::validate(std::vector<std::string> points, std::vector<std::vector<std::string>> lines) {
  std::sort(points.begin(), points.end());
  if (auto dup = std::adjacent_find(points.begin(), points.end()); dup != points.end())
    throw InvalidLine("duplicate point id '" + *dup + "'");
  for (const auto& id : points) {
    if (id.empty()) throw InvalidLine("empty point id");
    for (char c : id)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#') throw InvalidLine("bad point id '" + id + "'");
  }

  Plane out;
  out.ids_ = std::move(points);
  const auto n = out.ids_.size();

  std::set<std::vector<PointIndex>> unique;
  for (auto& line : lines) {
    std::vector<PointIndex> idx;
    for (const auto& id : line) idx.push_back(out.index_of(id));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw InvalidLine("line {" + join_ids(line) + "} repeats a point");
    if (idx.size() < 3) throw InvalidLine("line {" + join_ids(line) + "} has fewer than 3 points");
    unique.insert(std::move(idx));
  }

  out.incidence_.assign(n, {});
  for (const auto& idx : unique) {
    auto line_no = static_cast<std::uint32_t>(out.lines_.size());
    out.lines_.push_back(PointSet::from_indices(n, idx));
    out.members_.push_back(idx);
    IdSet names;
    for (auto i : idx) names.push_back(out.ids_[i]);
    out.line_ids_.push_back(std::move(names));
    for (auto i : idx) out.incidence_[i].push_back(line_no);
  }

  // Exchange axiom: two lines through a common point may not share a second one.
  for (PointIndex p = 0; p < n; ++p) {
    const auto& through = out.incidence_[p];
    for (std::size_t a = 0; a < through.size(); ++a)
      for (std::size_t b = a + 1; b < through.size(); ++b) {
        const auto& la = out.lines_[through[a]];
        const auto& lb = out.lines_[through[b]];
        if (la.intersection_count(lb) >= 2) {
          auto shared = (la & lb).indices();
          throw ExchangeViolation(out.line_ids_[through[a]], out.line_ids_[through[b]],
                                  {out.ids_[shared[0]], out.ids_[shared[1]]});
        }
      }
  }
  return out;
}

std::optional<PointIndex> Plane::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<PointIndex>(it - ids_.begin());
}

PointIndex Plane::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw UnknownPoint(std::string(id));
}

PointSet Plane::subset(std::span<const std::string> ids) const {
  PointSet s(size());
  for (const auto& id : ids) s.insert(index_of(id));
  return s;
}

PointSet Plane::subset(std::initializer_list<std::string_view> ids) const {
  PointSet s(size());
  for (auto id : ids) s.insert(index_of(id));
  return s;
}

IdSet Plane::names(const PointSet& s) const {
  IdSet out;
  s.for_each([&](PointIndex i) { out.push_back(ids_[i]); });
  return out;
}

std::optional<std::size_t> Plane::line_of(PointIndex p, PointIndex q) const {
  const auto& a = incidence_[p];
  const auto& b = incidence_[q];
  // Both lists are sorted; at most one common entry.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return a[i];
    if (a[i] < b[j]) ++i; else ++j;
  }
  return std::nullopt;
}

bool Plane::collinear(PointIndex a, PointIndex b, PointIndex c) const {
  auto l = line_of(a, b);
  return l && lines_[*l].contains(c);
}

void Plane::require_own(const PointSet& s) const {
  if (s.universe() != size()) throw UnknownPoint("<point set of a different plane>");
}

Flat closure(const Plane& p, const PointSet& x) {
  p.require_own(x);
  auto n = x.count();
  if (n <= 1) return {x, static_cast<int>(n)};
  auto pts = x.indices();
  auto line = p.line_of(pts[0], pts[1]);
  if (!line) {
    if (n == 2) return {x, 2};
  } else if (x.is_subset_of(p.lines()[*line])) {
    return {p.lines()[*line], 2};
  }
  return {p.all(), 3};
}

int rank(const Plane& p, const PointSet& x) { return closure(p, x).rank; }

std::vector<PointSet> lines_based_in(const Plane& p, const PointSet& n) {
  p.require_own(n);
  std::vector<PointSet> out;
  for (const auto& l : p.lines())
    if (l.intersection_count(n) >= 2) out.push_back(l);
  auto pts = n.indices();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (!p.line_of(pts[a], pts[b])) out.push_back(PointSet(p.size(), {pts[a], pts[b]}));
  return out;
}

Plane restrict(const Plane& p, const PointSet& x) {
  p.require_own(x);
  std::vector<std::vector<std::string>> lines;
  for (const auto& l : p.lines())
    if (l.intersection_count(x) >= 3) lines.push_back(p.names(l & x));
  return Plane::validate(p.names(x), std::move(lines));
}

bool is_wedge_subgeometry(const Plane& m, const Plane& n, const std::map<std::string, std::string>& inclusion) {
  std::vector<PointIndex> image;
  PointSet carrier(n.size());
  for (const auto& id : m.ids()) {
    auto it = inclusion.find(id);
    const std::string& target = it == inclusion.end() ? id : it->second;
    auto t = n.find(target);
    if (!t) throw NotASubplane("point '" + id + "' has no image");
    if (carrier.contains(*t)) throw NotASubplane("inclusion is not injective");
    carrier.insert(*t);
    image.push_back(*t);
  }
  // Induced: triples dependent in m exactly when their images are in n.
  for (std::size_t a = 0; a < image.size(); ++a)
    for (std::size_t b = a + 1; b < image.size(); ++b)
      for (std::size_t c = b + 1; c < image.size(); ++c) {
        bool dm = m.collinear(static_cast<PointIndex>(a), static_cast<PointIndex>(b), static_cast<PointIndex>(c));
        bool dn = n.collinear(image[a], image[b], image[c]);
        if (dm != dn) throw NotASubplane("inclusion is not closure-compatible");
      }
  // Distinct m-lines have distinct closures in n: automatic for an induced
  // subplane, since one n-line would restrict to a single m-line.
  // No outside point may lie on two m-based lines.
  for (PointIndex q = 0; q < n.size(); ++q) {
    if (carrier.contains(q)) continue;
    int based = 0;
    for (auto l : n.lines_through(q))
      if (n.lines()[l].intersection_count(carrier) >= 2) ++based;
    if (based > 1) return false;
  }
  return true;
}

}  // namespace planeforge
