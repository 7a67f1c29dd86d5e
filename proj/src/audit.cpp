#include <functional>

#include "planeforge/builder.hpp"
#include "planeforge/predimension.hpp"

namespace planeforge {

GenericityReport check_genericity(const Plane& m, const AuditOptions& options) {
  if (options.radius < 0) throw PreconditionViolated("radius must be non-negative");
  if (!in_k0(m).in_k0) throw NotInK0("genericity audit needs a plane in K0");

  double subsets = 0, term = 1;
  for (int j = 0; j <= options.radius && j <= static_cast<int>(m.size()); ++j) {
    if (j > 0) term = term * static_cast<double>(m.size() - j + 1) / j;
    subsets += term;
  }
  if (subsets > static_cast<double>(options.max_subsets))
    throw BudgetExceeded("audit would examine " + std::to_string(static_cast<long long>(subsets)) + " base sets");

  GenericityReport r;
  r.radius = options.radius;
  ExtensionCatalog catalog(options.radius);
  StrongnessOracle oracle(m);

  auto visit = [&](const PointSet& a) {
    ++r.subsets_examined;
    auto [cl, d] = oracle.closure(a);
    if (r.subsets_examined == 1 || cl.count() > r.max_icl_size) {
      r.max_icl_size = cl.count();
      r.max_icl_base = m.names(a);
    }
    if (cl != a) return;
    ++r.strong_bases;
    auto lookup = catalog.classes_of(m, a);
    for (std::size_t i = 0; i < lookup.classes->size(); ++i) {
      const auto& ext = (*lookup.classes)[i];
      ++r.classes_checked;
      if (realizes(m, oracle, ext.plane, lookup.base_map)) {
        ++r.classes_realized;
      } else if (r.gaps.size() < options.max_gaps_listed) {
        r.gaps.push_back({m.names(a), "T" + std::to_string(a.count()) + "." + std::to_string(i), ext.plane});
      }
    }
  };

  std::vector<PointIndex> chosen;
  const auto n = static_cast<PointIndex>(m.size());
  std::function<void(PointIndex)> rec = [&](PointIndex from) {
    PointSet s(m.size());
    for (auto c : chosen) s.insert(c);
    visit(s);
    if (static_cast<int>(chosen.size()) == options.radius) return;
    for (PointIndex i = from; i < n; ++i) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return r;
}

std::string format_genericity(const GenericityReport& r) {
  std::string out;
  out += "radius: " + std::to_string(r.radius) + "\n";
  out += "subsets_examined: " + std::to_string(r.subsets_examined) + "\n";
  out += "strong_bases: " + std::to_string(r.strong_bases) + "\n";
  out += "classes_checked: " + std::to_string(r.classes_checked) + "\n";
  out += "classes_realized: " + std::to_string(r.classes_realized) + "\n";
  out += "unrealized: " + std::to_string(r.classes_checked - r.classes_realized) + "\n";
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.6f", r.realization_rate());
  out += std::string("realization_rate: ") + rate + "\n";
  out += "max_icl_size: " + std::to_string(r.max_icl_size) + "\n";
  out += "max_icl_base: {" + join_ids(r.max_icl_base) + "}\n";
  out += std::string("genericity: ") + (r.pass() ? "pass" : "fail") + "\n";
  for (const auto& g : r.gaps) {
    out += "gap: base {" + join_ids(g.base) + "} class " + g.template_name + " points {" + join_ids(g.extension.ids()) + "} lines";
    if (g.extension.lines().empty()) out += " none";
    for (const auto& l : g.extension.line_ids()) out += " {" + join_ids(l) + "}";
    out += "\n";
  }
  return out;
}

}  // namespace planeforge
