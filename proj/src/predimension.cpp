#include "planeforge/predimension.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace planeforge {
namespace {

void require_subset(const PointSet& a, const PointSet& b) {
  if (!a.is_subset_of(b)) throw NotASubset("first set is not contained in the second");
}

/// Flats of `p` strictly inside `x`.
std::vector<PointSet> flats_inside(const Plane& p, const PointSet& x) {
  std::vector<PointSet> out;
  const auto n = x.count();
  if (n == 0) return out;
  out.push_back(p.none());
  if (n > 1) x.for_each([&](PointIndex i) { out.push_back(PointSet(p.size(), {i})); });
  if (n > 2) {
    for (const auto& l : p.lines())
      if (l.is_subset_of(x) && l != x) out.push_back(l);
    auto pts = x.indices();
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (!p.line_of(pts[a], pts[b])) out.push_back(PointSet(p.size(), {pts[a], pts[b]}));
  }
  return out;
}

bool mask_size_lex_less(std::uint32_t a, std::uint32_t b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  std::uint32_t diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

}  // namespace

int nullity(const Plane& p, const PointSet& f) {
  auto cl = closure(p, f);
  if (cl.carrier != f) throw NotAFlat("set is not closed");
  return static_cast<int>(f.count()) - cl.rank;
}

int alpha(const Plane& p, const PointSet& x) {
  p.require_own(x);
  std::map<std::vector<PointIndex>, int> memo;
  std::function<int(const PointSet&)> rec = [&](const PointSet& s) -> int {
    auto key = s.indices();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int v = static_cast<int>(s.count()) - rank(p, s);
    for (const auto& f : flats_inside(p, s)) v -= rec(f);
    memo.emplace(std::move(key), v);
    return v;
  };
  return rec(x);
}

int delta(const Plane& p, const PointSet& x) {
  p.require_own(x);
  int v = static_cast<int>(x.count());
  for (const auto& l : p.lines()) {
    int k = static_cast<int>(l.intersection_count(x));
    if (k > 2) v -= k - 2;
  }
  return v;
}

std::vector<RelativeLineStats> relative_line_stats(const Plane& p, const PointSet& a, const PointSet& b) {
  std::vector<RelativeLineStats> out;
  for (const auto& l : p.lines()) {
    int in_a = static_cast<int>(l.intersection_count(a));
    int in_b = static_cast<int>(l.intersection_count(b));
    if (in_b < 2) continue;
    out.push_back({l, in_a, in_b - 2, in_a + in_b - 2});
  }
  return out;
}

int delta_rel_expanded(const Plane& p, const PointSet& a, const PointSet& b) {
  int v = static_cast<int>(a.count());
  for (const auto& l : p.lines()) {
    int in_a = static_cast<int>(l.intersection_count(a));
    int in_b = static_cast<int>(l.intersection_count(b));
    if (in_a + in_b < 2) continue;
    bool based_a = in_a >= 2, based_b = in_b >= 2;
    if (based_a && !based_b) v -= in_a + in_b - 2;
    else if (based_b) v -= in_a;
  }
  return v;
}

int delta_rel(const Plane& p, const PointSet& a, const PointSet& b) {
  p.require_own(a);
  p.require_own(b);
  if (a.intersects(b)) throw OverlappingSets("δ(A/B) needs disjoint A and B");
  for (const auto& s : relative_line_stats(p, a, b))
    if (s.nullity_in_ab - s.nullity_in_b != s.size_in_a)
      throw InvariantViolation("n_AB(ℓ) - n_B(ℓ) != |ℓ|_A");
  int v = delta(p, a | b) - delta(p, b);
  if (v != delta_rel_expanded(p, a, b)) throw InvariantViolation("δ(A/B): difference and three-sum forms disagree");
  return v;
}

PredimReport in_k0(const Plane& p) {
  PredimReport r;
  r.delta = delta(p, p.all());
  r.alpha = alpha(p, p.all());
  if (p.size() <= subset_budget()) {
    SubsetTable table(p, p.none(), p.all());
    r.method = SearchMethod::exhaustive;
    std::optional<std::uint32_t> worst;
    const auto& v = table.values();
    for (std::uint32_t m = 0; m < v.size(); ++m)
      if (v[m] < 0 && (!worst || mask_size_lex_less(m, *worst))) worst = m;
    r.in_k0 = !worst;
    if (worst) r.violating_subset = table.to_set(*worst);
  } else {
    auto m = minimize_delta_mincut(p, p.none(), p.all());
    r.method = SearchMethod::mincut;
    r.in_k0 = m.value >= 0;
    if (!r.in_k0) r.violating_subset = m.minimizer;
  }
  return r;
}

bool is_strong(const Plane& p, const PointSet& a, const PointSet& b) {
  p.require_own(a);
  p.require_own(b);
  require_subset(a, b);
  return minimize_delta(p, a, b).value >= delta(p, a);
}

bool is_k_strong(const Plane& p, const PointSet& a, const PointSet& b, int k) {
  p.require_own(a);
  p.require_own(b);
  require_subset(a, b);
  if (k < 0) throw PreconditionViolated("k must be non-negative");
  auto free = (b - a).indices();
  if (static_cast<std::size_t>(k) >= free.size()) return is_strong(p, a, b);
  const int base = delta(p, a);

  // Count the sets first so the guard fires before any work.
  double combos = 0, term = 1;
  for (int j = 1; j <= k; ++j) {
    term = term * static_cast<double>(free.size() - j + 1) / j;
    combos += term;
  }
  if (combos > static_cast<double>(std::uint64_t{1} << subset_budget()))
    throw BudgetExceeded("k-strong check would visit " + std::to_string(static_cast<long long>(combos)) + " sets");

  if (free.size() <= 32) {
    auto lines = make_offset_lines(p, a, free);
    std::vector<std::uint32_t> batch;
    std::vector<std::int32_t> out;
    const auto& kernel = kernels::active_kernel();
    auto flush = [&] {
      out.resize(batch.size());
      kernel.list(lines, batch.data(), batch.size(), out.data());
      batch.clear();
      return std::all_of(out.begin(), out.end(), [&](std::int32_t v) { return v >= base; });
    };
    const std::uint64_t limit = std::uint64_t{1} << free.size();
    for (int j = 1; j <= k; ++j) {
      // Gosper's hack over masks with exactly j bits.
      for (std::uint64_t m = (std::uint64_t{1} << j) - 1; m < limit;) {
        batch.push_back(static_cast<std::uint32_t>(m));
        if (batch.size() == 4096 && !flush()) return false;
        std::uint64_t c = m & (~m + 1), r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
      }
    }
    return batch.empty() || flush();
  }

  std::vector<PointIndex> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      PointSet x = a;
      for (auto c : chosen) x.insert(c);
      if (delta(p, x) < base) return false;
    }
    if (chosen.size() == static_cast<std::size_t>(k)) return true;
    for (std::size_t i = start; i < free.size(); ++i) {
      chosen.push_back(free[i]);
      bool ok = rec(i + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0);
}

int d_value(const Plane& p, const PointSet& a) {
  p.require_own(a);
  return minimize_delta(p, a, p.all()).value;
}

IclResult icl_report(const Plane& p, const PointSet& a) {
  p.require_own(a);
  if (!in_k0(p).in_k0) throw NotInK0("intrinsic closure needs an ambient plane in K0");
  auto m = minimize_delta(p, a, p.all());
  if (delta(p, m.minimizer) != m.value) throw InvariantViolation("icl: minimizer value mismatch");
  IclResult r{m.minimizer, m.value, m.method, m.minimizer == p.all()};
  return r;
}

PointSet icl(const Plane& p, const PointSet& a) { return icl_report(p, a).closure; }

std::string format_report(const Plane& p, const PredimReport& r) {
  std::string out = "delta: " + std::to_string(r.delta) + "\n";
  out += "alpha: " + std::to_string(r.alpha) + "\n";
  out += std::string("in_K0: ") + (r.in_k0 ? "true" : "false") + "\n";
  out += "violating_subset: " + (r.violating_subset ? join_ids(p.names(*r.violating_subset)) : std::string("none")) + "\n";
  out += std::string("search: ") + to_string(r.method) + "\n";
  return out;
}

}  // namespace planeforge
