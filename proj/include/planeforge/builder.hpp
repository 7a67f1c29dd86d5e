#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "planeforge/enumerate.hpp"
#include "planeforge/plane.hpp"

namespace planeforge {

/// Strong-extension classes of small bases, cached per isomorphism type.
/// Templates name the base points "b0", "b1", ... in canonical order and the
/// new points "x1", "x2", ...
class ExtensionCatalog {
 public:
  explicit ExtensionCatalog(int ext_bound);

  struct Lookup {
    const std::vector<StrongExtension>* classes = nullptr;
    std::map<std::string, std::string> base_map;  // template base id -> ambient id
  };

  /// Classes of restrict(m, a) with at most ext_bound new points.
  Lookup classes_of(const Plane& m, const PointSet& a);
  int ext_bound() const { return ext_bound_; }

 private:
  int ext_bound_;
  std::map<std::string, std::vector<StrongExtension>> cache_;
};

struct ChainStep {
  IdSet base;                  // A, strong in the previous stage
  std::string template_name;   // extension class of A being realized
  std::map<std::string, std::string> renaming;  // template id -> stage id
  std::vector<std::pair<IdSet, IdSet>> identified_lines;
};

/// M0 = ∅ ≤ M1 ≤ ... with one canonical amalgam per step.
struct ExtensionChain {
  std::vector<Plane> stages;
  std::vector<ChainStep> steps;
  const Plane& last() const { return stages.back(); }
};

struct BuildOptions {
  int steps = 0;
  int ext_bound = 1;
  int base_bound = 2;          // largest base A put on the queue
  bool seed_fixtures = false;  // realize the 10-point non-Desarguesian plane over ∅ first
  std::size_t realize_probe_limit = 4096;  // embeddings tried before declaring a class unrealized
};

/// Fair FIFO construction: pairs (strong base A, extension class of A) are
/// queued in discovery order; each step realizes the next pair that the
/// current stage does not already realize.
ExtensionChain build_generic(const BuildOptions& options);

/// Writes stage_000.plane, stage_001.plane, ... and chain.log into `dir`.
void write_chain(const ExtensionChain& chain, const std::string& dir);
std::string format_chain_log(const ExtensionChain& chain);

struct GenericityGap {
  IdSet base;
  std::string template_name;
  Plane extension;  // template plane, base ids b0, b1, ...
};

struct GenericityReport {
  int radius = 0;
  std::size_t subsets_examined = 0;
  std::size_t strong_bases = 0;
  std::size_t classes_checked = 0;
  std::size_t classes_realized = 0;
  std::vector<GenericityGap> gaps;
  std::size_t max_icl_size = 0;
  IdSet max_icl_base;
  bool pass() const { return classes_realized == classes_checked; }
  double realization_rate() const {
    return classes_checked == 0 ? 1.0 : static_cast<double>(classes_realized) / static_cast<double>(classes_checked);
  }
};

struct AuditOptions {
  int radius = 1;
  std::size_t max_subsets = 2'000'000;  // BudgetExceeded beyond this many bases
  std::size_t max_gaps_listed = 50;
};

/// Checks item (1) of genericity up to the radius: every strong A with
/// |A| ≤ r and every class B of A with |B - A| ≤ r has a strong copy over A.
/// Also reports the largest intrinsic closure of a set of size ≤ r.
GenericityReport check_genericity(const Plane& m, const AuditOptions& options);
std::string format_genericity(const GenericityReport& r);

/// True iff some embedding of `ext` into `m` extends `base_map` and has an
/// image strong in `m`. `probe_limit` caps the embeddings tried (0 = no cap);
/// hitting the cap counts as not realized.
class StrongnessOracle;
bool realizes(const Plane& m, StrongnessOracle& oracle, const Plane& ext, const std::map<std::string, std::string>& base_map,
              std::size_t probe_limit = 0);

/// Reusable strongness test X ≤ M for one ambient plane.
class StrongnessOracle {
 public:
  explicit StrongnessOracle(const Plane& m);
  ~StrongnessOracle();
  bool strong(const PointSet& x);
  /// icl(x) and d(x) in one pass.
  std::pair<PointSet, int> closure(const PointSet& x);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace planeforge
