#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planeforge/plane.hpp"

namespace planeforge {

struct WitnessBundle {
  std::string name;
  Plane plane;
  std::vector<std::pair<std::string, bool>> assertions;
  bool all_passed() const;
};

/// Plane text followed by `# PASS: ...` / `# FAIL: ...` lines.
std::string format_witness(const WitnessBundle& w);

/// Desargues configuration with the axis line removed: O, A1..A3, B1..B3,
/// C12, C13, C23 and nine 3-point lines.
Plane non_desarguesian_plane();
/// Six points a..f with lines adf, cde, bef.
Plane figure2();
/// Triangle p1 p2 p3 with q0..qk added one at a time on the line p1 p2.
Plane morley_plane(int k);

WitnessBundle witness_non_desarguesian();
WitnessBundle witness_not_one_based();
WitnessBundle witness_weak_ei();
/// Throws BudgetExceeded for k > 8.
WitnessBundle witness_morley_chain(int k);
WitnessBundle witness_figure2();

/// k-fold canonical amalgam of copies of B' over A' (ids of A' inside B').
/// Copy i renames each new point x to "x.i"; k = 1 returns B' itself.
/// Throws NotStrong unless A' ≤ B'.
Plane iterated_amalgam(const Plane& a_prime, const Plane& b_prime, int k);
/// Bundle around iterated_amalgam: δ formula, copies strong, and exactly k
/// strong copies of B' over A' in the result.
WitnessBundle witness_iterated_amalgam(const Plane& a_prime, const Plane& b_prime, int k);

/// Bundle by CLI name: non-desarguesian, not-one-based, weak-ei,
/// morley-chain:<k>, figure2, iterated-amalgam:<k>. Throws PreconditionViolated
/// on unknown names.
WitnessBundle witness_by_name(const std::string& name);

}  // namespace planeforge
