#include "planeforge/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "planeforge/canonical.hpp"
#include "planeforge/predimension.hpp"

namespace planeforge {
namespace {

using LineList = std::vector<std::vector<PointIndex>>;

class LineSpaceSearch {
 public:
  LineSpaceSearch(std::size_t base, const LineList& fixed, std::size_t n,
                  const std::function<void(const LineList&)>& visit)
      : base_(base), n_(n), covered_(n * n, 0), lines_(fixed), visit_(visit) {
    for (const auto& l : fixed)
      for (auto u : l)
        for (auto v : l)
          if (u != v) covered_[u * n + v] = 1;
  }

  void run() { extend_fixed(0); }

 private:
  bool free_pair(PointIndex u, PointIndex v) const { return !covered_[u * n_ + v]; }

  void set_line(const std::vector<PointIndex>& l, char value) {
    for (auto u : l)
      for (auto v : l)
        if (u != v) covered_[u * n_ + v] = value;
  }

  // Add new points to the base lines, one line at a time.
  void extend_fixed(std::size_t li) {
    if (li == lines_.size()) return pairs(0);
    extend_fixed_from(li, base_);
  }

  void extend_fixed_from(std::size_t li, PointIndex from) {
    extend_fixed(li + 1);
    for (PointIndex x = from; x < n_; ++x) {
      // lines_ may reallocate during recursion, so index it afresh each time.
      const auto& l = lines_[li];
      if (!std::all_of(l.begin(), l.end(), [&](PointIndex u) { return free_pair(u, x); })) continue;
      for (auto u : l) covered_[u * n_ + x] = covered_[x * n_ + u] = 1;
      lines_[li].push_back(x);
      extend_fixed_from(li, x + 1);
      lines_[li].pop_back();
      for (auto u : lines_[li]) covered_[u * n_ + x] = covered_[x * n_ + u] = 0;
    }
  }

  void pairs(std::size_t cursor) {
    while (cursor < n_ * n_) {
      PointIndex i = static_cast<PointIndex>(cursor / n_), j = static_cast<PointIndex>(cursor % n_);
      if (i < j && free_pair(i, j)) break;
      ++cursor;
    }
    if (cursor >= n_ * n_) return visit_(lines_);
    PointIndex i = static_cast<PointIndex>(cursor / n_), j = static_cast<PointIndex>(cursor % n_);

    covered_[i * n_ + j] = covered_[j * n_ + i] = 1;
    pairs(cursor + 1);
    covered_[i * n_ + j] = covered_[j * n_ + i] = 0;

    std::vector<PointIndex> line{i, j};
    grow(line, std::max<PointIndex>(j + 1, static_cast<PointIndex>(base_)), cursor);
  }

  void grow(std::vector<PointIndex>& line, PointIndex from, std::size_t cursor) {
    for (PointIndex k = from; k < n_; ++k) {
      if (!std::all_of(line.begin(), line.end(), [&](PointIndex u) { return free_pair(u, k); })) continue;
      line.push_back(k);
      set_line(line, 1);
      lines_.push_back(line);
      pairs(cursor + 1);
      lines_.pop_back();
      set_line(line, 0);
      grow(line, k + 1, cursor);
      line.pop_back();
    }
  }

  std::size_t base_, n_;
  std::vector<char> covered_;
  LineList lines_;
  const std::function<void(const LineList&)>& visit_;
};

std::vector<std::string> numbered_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

std::vector<std::vector<std::string>> named_lines(const LineList& lines, const std::vector<std::string>& ids) {
  std::vector<std::vector<std::string>> out;
  for (const auto& l : lines) {
    std::vector<std::string> named;
    for (auto u : l) named.push_back(ids[u]);
    out.push_back(std::move(named));
  }
  return out;
}

}  // namespace

void for_each_line_space(std::size_t base, const LineList& fixed, std::size_t n,
                         const std::function<void(const LineList&)>& visit) {
  LineSpaceSearch(base, fixed, n, visit).run();
}

std::vector<Plane> enumerate_planes(int n) {
  if (n < 0) throw PreconditionViolated("point count must be non-negative");
  if (n > kMaxEnumeratedPoints) throw BudgetExceeded("plane enumeration is limited to 7 points");
  const auto ids = numbered_ids(n);
  std::map<std::string, Plane> classes;
  for_each_line_space(0, {}, n, [&](const LineList& lines) {
    Plane p = Plane::validate(ids, named_lines(lines, ids));
    auto form = canonical_form(p);
    if (classes.count(form.key)) return;
    std::vector<std::string> relabeled(n);
    for (std::size_t label = 0; label < form.order.size(); ++label) relabeled[form.order[label]] = ids[label];
    LineList own;
    for (std::size_t li = 0; li < p.lines().size(); ++li) own.push_back(p.line_members(li));
    classes.emplace(form.key, Plane::validate(ids, named_lines(own, relabeled)));
  });
  std::vector<Plane> out;
  for (auto& [key, p] : classes)
    if (in_k0(p).in_k0) out.push_back(std::move(p));
  return out;
}

std::vector<Plane> census(int max_n) {
  std::vector<Plane> out;
  for (int n = 0; n <= max_n; ++n) {
    auto part = enumerate_planes(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<StrongExtension> enumerate_strong_extensions(const Plane& a, int k, const std::string& prefix) {
  if (k < 0) throw PreconditionViolated("extension size must be non-negative");
  if (k > kMaxExtensionPoints) throw BudgetExceeded("strong extensions are enumerated up to 4 new points");
  if (!in_k0(a).in_k0) throw NotInK0("base plane is not in K0");

  std::string pre = prefix;
  auto clashes = [&] {
    for (int i = 1; i <= k; ++i)
      if (a.find(pre + std::to_string(i))) return true;
    return false;
  };
  while (clashes()) pre += "_";

  const std::size_t base = a.size();
  LineList fixed;
  for (std::size_t li = 0; li < a.lines().size(); ++li) fixed.push_back(a.line_members(li));
  std::vector<PointIndex> base_points(base);
  for (PointIndex i = 0; i < base; ++i) base_points[i] = i;

  std::vector<StrongExtension> out;
  for (int j = 1; j <= k; ++j) {
    std::vector<std::string> pos(base + j);
    for (std::size_t v = 0; v < pos.size(); ++v) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "p%05zu", v);
      pos[v] = buf;
    }
    std::map<std::string, StrongExtension> classes;
    std::set<std::string> rejected;
    for_each_line_space(base, fixed, base + j, [&](const LineList& lines) {
      // Positional ids keep base points at their own indices.
      Plane raw = Plane::validate(pos, named_lines(lines, pos));
      auto form = canonical_form(raw, base_points);
      if (classes.count(form.key) || rejected.count(form.key)) return;
      if (!in_k0(raw).in_k0 || !is_strong(raw, raw.subset(std::span<const std::string>(pos.data(), base)), raw.all())) {
        rejected.insert(form.key);
        return;
      }
      std::vector<std::string> names(base + j);
      for (std::size_t label = 0; label < form.order.size(); ++label) {
        PointIndex v = form.order[label];
        names[v] = v < base ? a.id(v) : pre + std::to_string(label - base + 1);
      }
      StrongExtension ext;
      ext.plane = Plane::validate(names, named_lines(lines, names));
      for (std::size_t v = base; v < names.size(); ++v) ext.added.push_back(names[v]);
      std::sort(ext.added.begin(), ext.added.end());
      classes.emplace(form.key, std::move(ext));
    });
    for (auto& [key, e] : classes) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace planeforge
