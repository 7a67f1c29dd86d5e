#include <doctest.h>

#include "planeforge/minimize.hpp"
#include "planeforge/predimension.hpp"
#include "planeforge/witnesses.hpp"
#include "support.hpp"

using namespace planeforge;

TEST_CASE("the three minimizers agree with the oracle") {
  std::mt19937 rng(3);
  for (int round = 0; round < 300; ++round) {
    Plane p = testing_support::random_plane(rng, 3 + round % 9, 10);
    oracle::Table t(testing_support::to_naive(p));
    PointSet forced = testing_support::random_subset(rng, p, 0.3);
    auto mf = t.mask(testing_support::to_ids(p, forced));

    auto ex = minimize_delta_exhaustive(p, forced, p.all());
    auto mc = minimize_delta_mincut(p, forced, p.all());
    IncrementalCut inc(p);
    auto ic = inc.minimize(forced);

    const int want = t.d_value(mf);
    CHECK(ex.value == want);
    CHECK(mc.value == want);
    CHECK(ic.value == want);
    CHECK(ex.minimizer == mc.minimizer);
    CHECK(ex.minimizer == ic.minimizer);
    CHECK(t.delta(t.mask(testing_support::to_ids(p, ex.minimizer))) == want);
    CHECK(inc.is_strong(forced) == t.is_strong(mf, t.full()));
    CHECK(inc.delta_of(forced) == t.delta(mf));
    CHECK(ex.method == SearchMethod::exhaustive);
    CHECK(mc.method == SearchMethod::mincut);
  }
}

TEST_CASE("minimizers on a restricted universe") {
  std::mt19937 rng(4);
  for (int round = 0; round < 100; ++round) {
    Plane p = testing_support::random_plane(rng, 9, 10);
    PointSet forced = testing_support::random_subset(rng, p, 0.2);
    PointSet universe = forced | testing_support::random_subset(rng, p, 0.6);
    auto ex = minimize_delta_exhaustive(p, forced, universe);
    auto mc = minimize_delta_mincut(p, forced, universe);
    CutMinimizer cm(p, universe);
    auto reused = cm.minimize(forced);
    CHECK(ex.value == mc.value);
    CHECK(ex.minimizer == mc.minimizer);
    CHECK(reused.minimizer == ex.minimizer);
  }
}

TEST_CASE("incremental queries do not leak state") {
  Plane nd = non_desarguesian_plane();
  IncrementalCut inc(nd);
  std::mt19937 rng(8);
  for (int round = 0; round < 200; ++round) {
    PointSet forced = testing_support::random_subset(rng, nd, 0.25);
    auto fresh = IncrementalCut(nd).minimize(forced);
    auto reused = inc.minimize(forced);
    CHECK(fresh.value == reused.value);
    CHECK(fresh.minimizer == reused.minimizer);
  }
}

TEST_CASE("subset table and superset minima") {
  Plane f = figure2();
  PointSet forced = f.subset({"a"});
  SubsetTable table(f, forced, f.all());
  CHECK(table.free_count() == 5);
  auto up = table.superset_minima();
  for (std::uint32_t m = 0; m < 32; ++m) {
    CHECK(table.value(m) == delta(f, table.to_set(m)));
    int best = table.value(m);
    for (std::uint32_t s = 0; s < 32; ++s)
      if ((s & m) == m) best = std::min(best, table.value(s));
    CHECK(up[m] == best);
  }
}

TEST_CASE("budget guard") {
  CHECK(subset_budget() >= 1);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < subset_budget() + 1; ++i) ids.push_back("x" + std::to_string(i));
  Plane big = Plane::validate(ids, {});
  CHECK_THROWS_AS(SubsetTable(big, big.none(), big.all()), BudgetExceeded);
  CHECK(minimize_delta(big, big.none(), big.all()).method == SearchMethod::mincut);
}
