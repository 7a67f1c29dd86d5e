#include "planeforge/builder.hpp"

#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>

#include "planeforge/amalgam.hpp"
#include "planeforge/canonical.hpp"
#include "planeforge/io.hpp"
#include "planeforge/minimize.hpp"
#include "planeforge/predimension.hpp"
#include "planeforge/witnesses.hpp"

namespace planeforge {

ExtensionCatalog::ExtensionCatalog(int ext_bound) : ext_bound_(ext_bound) {
  if (ext_bound < 0) throw PreconditionViolated("extension bound must be non-negative");
  if (ext_bound > kMaxExtensionPoints) throw BudgetExceeded("extension bound is limited to 4");
}

ExtensionCatalog::Lookup ExtensionCatalog::classes_of(const Plane& m, const PointSet& a) {
  Plane r = restrict(m, a);
  auto form = canonical_form(r);
  Lookup out;
  for (std::size_t label = 0; label < form.order.size(); ++label)
    out.base_map["b" + std::to_string(label)] = r.id(form.order[label]);

  auto it = cache_.find(form.key);
  if (it == cache_.end()) {
    std::vector<std::string> label_of(r.size());
    for (std::size_t label = 0; label < form.order.size(); ++label) label_of[form.order[label]] = "b" + std::to_string(label);
    std::vector<std::vector<std::string>> lines;
    for (const auto& l : r.line_ids()) {
      lines.emplace_back();
      for (const auto& id : l) lines.back().push_back(label_of[r.index_of(id)]);
    }
    Plane base = Plane::validate(label_of, lines);
    it = cache_.emplace(form.key, enumerate_strong_extensions(base, ext_bound_, "x")).first;
  }
  out.classes = &it->second;
  return out;
}

struct StrongnessOracle::Impl {
  IncrementalCut cut;
  explicit Impl(const Plane& plane) : cut(plane) {}
};

StrongnessOracle::StrongnessOracle(const Plane& m) : impl_(std::make_unique<Impl>(m)) {}
StrongnessOracle::~StrongnessOracle() = default;

bool StrongnessOracle::strong(const PointSet& x) { return impl_->cut.is_strong(x); }

std::pair<PointSet, int> StrongnessOracle::closure(const PointSet& x) {
  auto r = impl_->cut.minimize(x);
  return {std::move(r.minimizer), r.value};
}

bool realizes(const Plane& m, StrongnessOracle& oracle, const Plane& ext, const std::map<std::string, std::string>& base_map,
              std::size_t probe_limit) {
  std::size_t probes = 0;
  bool capped = false;
  bool found = for_each_embedding(ext, m, base_map, [&](const std::vector<PointIndex>& image) {
    if (probe_limit && ++probes > probe_limit) return capped = true;
    PointSet img(m.size());
    for (auto i : image) img.insert(i);
    return oracle.strong(img);
  });
  return found && !capped;
}

namespace {

struct Block {
  IdSet base;
  ExtensionCatalog::Lookup lookup;
  std::size_t next = 0;
};

std::string fresh_id(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "v%04zu", n);
  return buf;
}

class Builder {
 public:
  explicit Builder(const BuildOptions& opt) : opt_(opt), catalog_(opt.ext_bound) {
    chain_.stages.emplace_back();
  }

  ExtensionChain run() {
    int done = 0;
    if (opt_.seed_fixtures && done < opt_.steps) {
      Plane nd = non_desarguesian_plane();
      std::map<std::string, std::string> renaming;
      realize(nd, {}, "non-desarguesian", renaming, false);
      ++done;
    }
    enqueue(chain_.last().all(), true);

    while (done < opt_.steps && !queue_.empty()) {
      Block& block = queue_.front();
      if (block.next == block.lookup.classes->size()) {
        queue_.pop_front();
        continue;
      }
      std::size_t index = block.next++;
      const StrongExtension& ext = (*block.lookup.classes)[index];
      if (!oracle_) oracle_ = std::make_unique<StrongnessOracle>(chain_.last());
      if (realizes(chain_.last(), *oracle_, ext.plane, block.lookup.base_map, opt_.realize_probe_limit)) continue;
      auto renaming = block.lookup.base_map;
      std::string name = "T" + std::to_string(block.base.size()) + "." + std::to_string(index);
      IdSet base = block.base;
      realize(ext.plane, base, name, renaming);
      ++done;
    }
    return std::move(chain_);
  }

 private:
  // Renames `tmpl` (base ids already in `renaming`) and amalgamates it over `base`.
  void realize(const Plane& tmpl, const IdSet& base, const std::string& name, std::map<std::string, std::string>& renaming,
               bool queue_new = true) {
    std::vector<std::string> ids;
    for (const auto& id : tmpl.ids()) {
      auto it = renaming.find(id);
      if (it == renaming.end()) it = renaming.emplace(id, fresh_id(++counter_)).first;
      ids.push_back(it->second);
    }
    std::vector<std::vector<std::string>> lines;
    for (const auto& l : tmpl.line_ids()) {
      lines.emplace_back();
      for (const auto& id : l) lines.back().push_back(renaming.at(id));
    }
    auto result = canonical_amalgam(chain_.last(), Plane::validate(ids, lines), base);

    ChainStep step;
    step.base = base;
    step.template_name = name;
    for (const auto& [from, to] : renaming)
      if (from != to) step.renaming[from] = to;
    step.identified_lines = std::move(result.identified_lines);
    chain_.steps.push_back(std::move(step));

    const Plane& prev = chain_.last();
    Plane next = std::move(result.plane);
    PointSet fresh(next.size());
    for (PointIndex i = 0; i < next.size(); ++i)
      if (!prev.find(next.id(i))) fresh.insert(i);
    chain_.stages.push_back(std::move(next));
    oracle_.reset();
    if (queue_new) enqueue(fresh, false);
  }

  // Queues every strong A of size ≤ base_bound meeting `fresh` (or ∅ when `with_empty`).
  void enqueue(const PointSet& fresh, bool with_empty) {
    const Plane& m = chain_.last();
    if (!oracle_) oracle_ = std::make_unique<StrongnessOracle>(m);
    std::vector<PointSet> bases;
    if (with_empty) bases.push_back(m.none());
    const int bound = opt_.base_bound;
    std::vector<PointIndex> chosen;
    const auto n = static_cast<PointIndex>(m.size());
    std::function<void(PointIndex, bool)> rec = [&](PointIndex from, bool meets) {
      if (!chosen.empty() && meets) {
        PointSet s(m.size());
        for (auto c : chosen) s.insert(c);
        bases.push_back(std::move(s));
      }
      if (static_cast<int>(chosen.size()) == bound) return;
      for (PointIndex i = from; i < n; ++i) {
        chosen.push_back(i);
        rec(i + 1, meets || fresh.contains(i));
        chosen.pop_back();
      }
    };
    rec(0, false);
    std::stable_sort(bases.begin(), bases.end(), SizeThenLex{});
    for (const auto& s : bases) {
      if (!oracle_->strong(s)) continue;
      queue_.push_back(Block{m.names(s), catalog_.classes_of(m, s), 0});
    }
  }

  BuildOptions opt_;
  ExtensionCatalog catalog_;
  ExtensionChain chain_;
  std::deque<Block> queue_;
  std::unique_ptr<StrongnessOracle> oracle_;
  std::size_t counter_ = 0;
};

}  // namespace

ExtensionChain build_generic(const BuildOptions& options) {
  if (options.steps < 0) throw PreconditionViolated("steps must be non-negative");
  if (options.ext_bound < 1) throw PreconditionViolated("extension bound must be at least 1");
  if (options.base_bound < 0) throw PreconditionViolated("base bound must be non-negative");
  return Builder(options).run();
}

std::string format_chain_log(const ExtensionChain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    out += "step " + std::to_string(i + 1) + " base {" + join_ids(s.base) + "} template " + s.template_name + " new {";
    bool first = true;
    for (const auto& [from, to] : s.renaming) {
      if (std::find(s.base.begin(), s.base.end(), to) != s.base.end()) continue;
      out += (first ? "" : " ") + to;
      first = false;
    }
    out += "} identified";
    if (s.identified_lines.empty()) out += " none";
    for (const auto& [la, lb] : s.identified_lines) out += " {" + join_ids(la) + "}~{" + join_ids(lb) + "}";
    out += "\n";
  }
  return out;
}

void write_chain(const ExtensionChain& chain, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "stage_%03zu", i);
    io::write_plane_file((std::filesystem::path(dir) / (std::string(name) + ".plane")).string(), chain.stages[i], name);
  }
  std::ofstream log(std::filesystem::path(dir) / "chain.log");
  log << format_chain_log(chain);
  if (!log) throw Error("cannot write chain.log in " + dir);
}

}  // namespace planeforge
