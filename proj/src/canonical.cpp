#include "planeforge/canonical.hpp"

#include <algorithm>
#include <optional>

namespace planeforge {
namespace {

using Colors = std::vector<int>;
using Certificate = std::vector<std::vector<std::uint32_t>>;

class Canonizer {
 public:
  explicit Canonizer(const Plane& p) : p_(p) {}

  CanonicalForm run(const std::vector<PointIndex>& fixed) {
    const int f = static_cast<int>(fixed.size());
    Colors c(p_.size(), f);
    for (int i = 0; i < f; ++i) c[fixed[i]] = i;
    search(std::move(c));

    CanonicalForm out;
    out.order.assign(p_.size(), 0);
    for (PointIndex v = 0; v < p_.size(); ++v) out.order[best_labels_[v]] = v;
    out.key = std::to_string(p_.size()) + "/" + std::to_string(fixed.size()) + "|";
    for (const auto& l : *best_) {
      for (std::size_t i = 0; i < l.size(); ++i) out.key += (i ? "," : "") + std::to_string(l[i]);
      out.key += ";";
    }
    return out;
  }

 private:
  void refine(Colors& c) const {
    std::size_t cells = 0;
    while (true) {
      using Descriptor = std::pair<std::size_t, std::vector<int>>;
      std::vector<std::pair<int, std::vector<Descriptor>>> sig(c.size());
      for (PointIndex v = 0; v < c.size(); ++v) {
        sig[v].first = c[v];
        for (auto li : p_.lines_through(v)) {
          std::vector<int> cols;
          for (auto u : p_.line_members(li)) cols.push_back(c[u]);
          std::sort(cols.begin(), cols.end());
          sig[v].second.emplace_back(cols.size(), std::move(cols));
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      auto uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (PointIndex v = 0; v < c.size(); ++v)
        c[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      if (uniq.size() == cells) return;
      cells = uniq.size();
    }
  }

  void search(Colors c) {
    refine(c);
    std::vector<std::vector<PointIndex>> cells(c.size());
    for (PointIndex v = 0; v < c.size(); ++v) cells[c[v]].push_back(v);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& cell) { return cell.size() > 1; });
    if (target == cells.end()) return leaf(c);

    bool isolated = std::all_of(target->begin(), target->end(), [&](PointIndex v) { return p_.lines_through(v).empty(); });
    for (auto v : *target) {
      Colors next(c.size());
      for (std::size_t u = 0; u < c.size(); ++u) next[u] = 2 * c[u];
      next[v] -= 1;
      search(std::move(next));
      if (isolated) break;
    }
  }

  void leaf(const Colors& c) {
    Certificate cert;
    for (std::size_t li = 0; li < p_.lines().size(); ++li) {
      std::vector<std::uint32_t> l;
      for (auto u : p_.line_members(li)) l.push_back(static_cast<std::uint32_t>(c[u]));
      std::sort(l.begin(), l.end());
      cert.push_back(std::move(l));
    }
    std::sort(cert.begin(), cert.end());
    if (!best_ || cert < *best_) {
      best_ = std::move(cert);
      best_labels_.assign(c.begin(), c.end());
    }
  }

  const Plane& p_;
  std::optional<Certificate> best_;
  std::vector<int> best_labels_;
};

}  // namespace

CanonicalForm canonical_form(const Plane& p, const std::vector<PointIndex>& fixed) {
  return Canonizer(p).run(fixed);
}

bool isomorphic(const Plane& a, const Plane& b) {
  return a.size() == b.size() && a.lines().size() == b.lines().size() && canonical_form(a).key == canonical_form(b).key;
}

}  // namespace planeforge
