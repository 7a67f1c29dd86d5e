#include "planeforge/amalgam.hpp"

#include <algorithm>
#include <bit>

#include "planeforge/io.hpp"
#include "planeforge/minimize.hpp"
#include "planeforge/predimension.hpp"

namespace planeforge {
namespace {

IdSet sorted(IdSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

IdSet shared_ids(const Plane& a, const Plane& b) {
  IdSet out;
  std::set_intersection(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(), std::back_inserter(out));
  return out;
}

IdSet union_ids(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_all(const IdSet& big, const IdSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::size_t meet_count(const IdSet& x, const IdSet& y) {
  std::size_t n = 0;
  for (auto i = x.begin(), j = y.begin(); i != x.end() && j != y.end();) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else ++n, ++i, ++j;
  }
  return n;
}

/// Validates the common part and returns it sorted.
IdSet check_common(const Plane& a, const Plane& b, const IdSet& c) {
  auto common = shared_ids(a, b);
  if (sorted(c) != common) throw PreconditionViolated("the common part must be exactly the shared points {" + join_ids(common) + "}");
  if (restrict(a, a.subset(common)) != restrict(b, b.subset(common)))
    throw PreconditionViolated("the two planes disagree on the common part");
  return common;
}

/// Line of `p` through the first two ids of `base`, or `base` itself.
IdSet extension_of(const Plane& p, const IdSet& base) {
  if (auto l = p.line_of(p.index_of(base[0]), p.index_of(base[1]))) return p.line_ids()[*l];
  return base;
}

}  // namespace

const char* to_string(AmalgamKind k) { return k == AmalgamKind::free ? "free" : "canonical"; }

AmalgamResult free_amalgam(const Plane& a, const Plane& b) { return free_amalgam(a, b, shared_ids(a, b)); }

AmalgamResult free_amalgam(const Plane& a, const Plane& b, const IdSet& c) {
  check_common(a, b, c);
  AmalgamResult r;
  r.kind = AmalgamKind::free;
  std::vector<IdSet> lines = a.line_ids();
  for (const auto& lb : b.line_ids()) {
    bool absorbed = false;
    for (auto& la : lines) {
      if (contains_all(la, lb)) {
        r.identified_lines.emplace_back(la, lb);
        absorbed = true;
        break;
      }
      if (contains_all(lb, la)) {
        r.identified_lines.emplace_back(la, lb);
        la = lb;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) lines.push_back(lb);
  }
  r.plane = Plane::validate(union_ids(a.ids(), b.ids()), std::move(lines));
  return r;
}

AmalgamResult canonical_amalgam(const Plane& a, const Plane& b) { return canonical_amalgam(a, b, shared_ids(a, b)); }

AmalgamResult canonical_amalgam(const Plane& a, const Plane& b, const IdSet& c) {
  auto common = check_common(a, b, c);
  Plane cp = restrict(a, a.subset(common));
  if (!is_wedge_subgeometry(cp, a) || !is_wedge_subgeometry(cp, b))
    throw NotWedgeSubgeometry("the common part is not a ∧-subgeometry of both sides");

  AmalgamResult r;
  r.kind = AmalgamKind::canonical;
  std::vector<IdSet> lines;
  for (const auto& based : lines_based_in(cp, cp.all())) {
    IdSet base = cp.names(based);
    IdSet ea = extension_of(a, base), eb = extension_of(b, base);
    IdSet merged = union_ids(ea, eb);
    if (merged.size() < 3) continue;
    if (ea.size() > base.size() && eb.size() > base.size()) r.identified_lines.emplace_back(ea, eb);
    lines.push_back(std::move(merged));
  }
  for (const auto* side : {&a, &b})
    for (const auto& l : side->line_ids())
      if (meet_count(l, common) < 2) lines.push_back(l);
  r.plane = Plane::validate(union_ids(a.ids(), b.ids()), std::move(lines));

  int expect = delta(a, a.all()) + delta(b, b.all()) - delta(cp, cp.all());
  if (delta(r.plane, r.plane.all()) != expect) throw InvariantViolation("canonical amalgam is not δ-additive");
  return r;
}

std::string format_amalgam(const AmalgamResult& r, std::string_view name) {
  std::string out = io::format_plane(r.plane, name);
  out += "# amalgam: ";
  out += to_string(r.kind);
  out += "\n";
  for (const auto& [la, lb] : r.identified_lines) out += "# identified: {" + join_ids(la) + "} ~ {" + join_ids(lb) + "}\n";
  return out;
}

bool is_primitive(const Plane& p, const PointSet& a, const PointSet& b) {
  if (!is_strong(p, a, b)) throw NotStrong("primitivity needs A ≤ B");
  SubsetTable table(p, a, b);
  auto up = table.superset_minima();
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << table.free_count()) - 1);
  for (std::uint32_t m = 1; m < full; ++m)
    if (up[m] == table.value(m)) return false;
  return true;
}

PrimitiveClass classify_primitive(const Plane& p, const PointSet& b, const PointSet& c) {
  bool primitive = false;
  try {
    primitive = is_primitive(p, b, c);
  } catch (const NotStrong&) {
  }
  if (!primitive) throw NotPrimitive("the extension is not primitive");
  PrimitiveClass out;
  out.delta_rel = delta(p, c) - delta(p, b);
  auto added = (c - b).indices();
  if (out.delta_rel == 1) {
    if (added.size() != 1) throw InvariantViolation("primitive extension with δ(C/B) = 1 adds more than one point");
    out.kind = PrimitiveCase::case1;
    out.point = added.front();
  } else if (out.delta_rel != 0) {
    throw InvariantViolation("primitive extension with δ(C/B) outside {0, 1}");
  }
  return out;
}

Decomposition decompose(const Plane& p, const PointSet& b, const PointSet& c) {
  if (!is_strong(p, b, c)) throw NotStrong("decomposition needs B ≤ C");
  SubsetTable table(p, b, c);
  auto up = table.superset_minima();
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << table.free_count()) - 1);
  auto before = [](std::uint32_t x, std::uint32_t y) {
    int cx = std::popcount(x), cy = std::popcount(y);
    if (cx != cy) return cx < cy;
    std::uint32_t d = x ^ y;
    return (x & d & (~d + 1)) != 0;
  };

  Decomposition d;
  d.chain.push_back(b);
  std::uint32_t cur = 0;
  while (cur != full) {
    std::uint32_t next = full;
    for (std::uint32_t m = 1; m < full; ++m)
      if ((m & cur) == cur && m != cur && up[m] == table.value(m) && before(m, next)) next = m;
    d.chain.push_back(table.to_set(next));
    cur = next;
  }
  return d;
}

SharpResult sharp_step(const Plane& a, const Plane& b, const IdSet& c) {
  auto common = check_common(a, b, c);
  PointSet ca = a.subset(common), cb = b.subset(common);
  if (!is_strong(a, ca, a.all()) || !is_primitive(a, ca, a.all()))
    throw PreconditionViolated("the common part must be a primitive strong subset of A");
  if (!is_k_strong(b, cb, b.all(), 1)) throw PreconditionViolated("the common part must be 1-strong in B");

  SharpResult r;
  if (a.size() == common.size()) {
    Embedding e;
    for (const auto& id : common) e.map[id] = id;
    r.kind = SharpKind::embedding;
    r.embedding = std::move(e);
    return r;
  }
  try {
    auto fa = free_amalgam(a, b, common);
    if (in_k0(fa.plane).in_k0) {
      r.kind = SharpKind::free_amalgam;
      r.amalgam = std::move(fa);
      return r;
    }
  } catch (const ExchangeViolation&) {
  }

  std::map<std::string, std::string> fixed;
  for (const auto& id : common) fixed[id] = id;
  for_each_embedding(a, b, fixed, [&](const std::vector<PointIndex>& image) {
    PointSet img(b.size());
    for (auto i : image) img.insert(i);
    if (!is_strong(b, img, b.all())) return false;
    Embedding e;
    for (PointIndex i = 0; i < image.size(); ++i) e.map[a.id(i)] = b.id(image[i]);
    r.kind = SharpKind::embedding;
    r.embedding = std::move(e);
    return true;
  });
  return r;
}

IndependenceReport independence_report(const Plane& p, const PointSet& a, const PointSet& b, const PointSet& c) {
  if (!is_strong(p, c, a) || !is_strong(p, c, b)) throw NotStrong("independence needs C ≤ A and C ≤ B");
  if (!is_strong(p, a, p.all()) || !is_strong(p, b, p.all())) throw NotStrong("independence needs A ≤ P and B ≤ P");
  if ((a & b) != c) throw PreconditionViolated("independence needs A ∩ B = C");
  IndependenceReport r;
  const PointSet ab = a | b;
  const int dc = d_value(p, c), da = d_value(p, a), db = d_value(p, b), dab = d_value(p, ab);
  r.d_a_over_c = da - dc;
  r.d_a_over_b = dab - db;
  r.numeric = r.d_a_over_c == r.d_a_over_b;

  try {
    auto can = canonical_amalgam(restrict(p, a), restrict(p, b), p.names(c));
    r.union_is_canonical = can.plane == restrict(p, ab);
  } catch (const Error&) {
    r.union_is_canonical = false;
  }
  r.union_is_strong = is_strong(p, ab, p.all());
  if (r.numeric != r.structural()) throw InvariantViolation("numeric and structural independence tests disagree");
  return r;
}

bool d_independent(const Plane& p, const PointSet& a, const PointSet& b, const PointSet& c) {
  return independence_report(p, a, b, c).numeric;
}

}  // namespace planeforge
