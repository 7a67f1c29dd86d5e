#include <doctest.h>

#include "planeforge/predimension.hpp"
#include "planeforge/witnesses.hpp"
#include "support.hpp"

using namespace planeforge;
using testing_support::fano;

namespace {

Plane line_of(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));
  return Plane::validate(ids, {ids});
}

// Complete quadrilateral: four lines in general position and their six meets.
Plane quadrilateral() {
  return Plane::validate({"12", "13", "14", "23", "24", "34"},
                         {{"12", "13", "14"}, {"12", "23", "24"}, {"13", "23", "34"}, {"14", "24", "34"}});
}

}  // namespace

TEST_CASE("nullity") {
  Plane l = line_of(3);
  CHECK(nullity(l, l.all()) == 1);
  CHECK(nullity(l, l.subset({"a"})) == 0);
  Plane nd = non_desarguesian_plane();
  CHECK(nullity(nd, nd.all()) == 7);
  CHECK_THROWS_AS(nullity(l, l.subset({"a", "b"})), NotAFlat);
}

TEST_CASE("alpha") {
  Plane nd = non_desarguesian_plane();
  CHECK(alpha(nd, nd.all()) == -2);
  Plane tri = Plane::validate({"x", "y", "z"}, {});
  CHECK(alpha(tri, tri.all()) == 0);
  CHECK(alpha(tri, tri.none()) == 0);
}

TEST_CASE("delta") {
  Plane nd = non_desarguesian_plane();
  CHECK(delta(nd, nd.all()) == 1);
  Plane l4 = line_of(4);
  CHECK(delta(l4, l4.all()) == 2);
  CHECK(delta(l4, l4.none()) == 0);
}

TEST_CASE("delta_rel") {
  Plane l4 = line_of(4);
  CHECK(delta_rel(l4, l4.subset({"d"}), l4.subset({"a", "b", "c"})) == 0);
  Plane f = figure2();
  CHECK(delta_rel(f, f.subset({"b"}), f.subset({"a", "d"})) == 1);
  CHECK(delta_rel(f, f.none(), f.subset({"a", "d"})) == 0);
  CHECK_THROWS_AS(delta_rel(f, f.subset({"a"}), f.subset({"a", "d"})), OverlappingSets);
}

TEST_CASE("delta_rel expanded form matches the difference on random planes") {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    Plane p = testing_support::random_plane(rng, 8, 8);
    PointSet a = testing_support::random_subset(rng, p, 0.3);
    PointSet b = testing_support::random_subset(rng, p, 0.5) - a;
    CHECK(delta_rel_expanded(p, a, b) == delta(p, a | b) - delta(p, b));
  }
}

TEST_CASE("in_k0 examples") {
  auto nd = in_k0(non_desarguesian_plane());
  CHECK(nd.in_k0);
  CHECK(nd.delta == 1);
  CHECK(in_k0(Plane::validate({}, {})).in_k0);

  Plane ag = testing_support::affine_plane_order3();
  auto r = in_k0(ag);
  CHECK_FALSE(r.in_k0);
  REQUIRE(r.violating_subset);
  CHECK(delta(ag, *r.violating_subset) < 0);
  oracle::Table t(testing_support::to_naive(ag));
  CHECK(testing_support::to_ids(ag, *r.violating_subset) == *t.first_violator());
}

TEST_CASE("is_strong examples") {
  Plane l3 = line_of(3);
  CHECK(is_strong(l3, l3.subset({"a", "b"}), l3.all()));
  Plane f = figure2();
  CHECK(is_strong(f, f.subset({"a", "c"}), f.subset({"a", "c"})));
  Plane fa = fano();
  CHECK_FALSE(is_strong(fa, fa.subset({"1", "2"}), fa.all()));
  CHECK_THROWS_AS(is_strong(f, f.subset({"a", "b"}), f.subset({"a"})), NotASubset);
}

TEST_CASE("is_k_strong examples") {
  Plane f = figure2();
  CHECK(is_k_strong(f, f.subset({"a"}), f.all(), 0));
  Plane l4 = line_of(4);
  CHECK(is_k_strong(l4, l4.subset({"a", "b"}), l4.all(), 1));

  // three meets of the quadrilateral, no two on a common line through the third
  Plane q = quadrilateral();
  PointSet a = q.subset({"12", "13", "24"});
  CHECK(is_k_strong(q, a, q.all(), 1));
  CHECK(is_k_strong(q, a, q.all(), 2));
  CHECK_FALSE(is_k_strong(q, a, q.all(), 3));
  CHECK_FALSE(is_strong(q, a, q.all()));
}

TEST_CASE("d_value and icl examples") {
  Plane nd = non_desarguesian_plane();
  CHECK(d_value(nd, nd.all()) == 1);
  CHECK(d_value(nd, nd.none()) == 0);
  Plane fa = fano();
  CHECK(d_value(fa, fa.subset({"1", "2"})) == 0);
  CHECK(icl(fa, fa.subset({"1", "2"})) == fa.all());
  Plane f = figure2();
  CHECK(icl(f, f.subset({"a", "d"})) == f.subset({"a", "d"}));
  CHECK(icl(f, f.subset({"a", "b", "c"})) == f.subset({"a", "b", "c"}));
  CHECK_THROWS_AS(icl(testing_support::affine_plane_order3(), PointSet(9)), NotInK0);
  auto r = icl_report(fa, fa.subset({"1", "2"}));
  CHECK(r.is_ambient);
  CHECK(r.d == 0);
}

TEST_CASE("delta equals alpha plus three on rank-3 random planes") {
  std::mt19937 rng(5);
  int checked = 0;
  for (int round = 0; round < 150; ++round) {
    Plane p = testing_support::random_plane(rng, 3 + round % 6, 6);
    if (rank(p, p.all()) != 3) continue;
    ++checked;
    CHECK(delta(p, p.all()) == alpha(p, p.all()) + 3);
  }
  CHECK(checked > 100);
}

TEST_CASE("strong subsets are wedge subgeometries") {
  std::mt19937 rng(9);
  for (int round = 0; round < 100; ++round) {
    Plane p = testing_support::random_plane(rng, 7, 6);
    if (!in_k0(p).in_k0) continue;
    PointSet a = testing_support::random_subset(rng, p, 0.5);
    if (!is_strong(p, a, p.all())) continue;
    CHECK(is_wedge_subgeometry(restrict(p, a), p));
  }
}

TEST_CASE("predimension queries agree with the oracle on random planes") {
  std::mt19937 rng(21);
  for (int round = 0; round < 120; ++round) {
    Plane p = testing_support::random_plane(rng, 2 + round % 8, 7);
    oracle::Table t(testing_support::to_naive(p));
    CHECK(in_k0(p).in_k0 == t.in_k0());
    PointSet a = testing_support::random_subset(rng, p, 0.35);
    PointSet b = a | testing_support::random_subset(rng, p, 0.5);
    auto ma = t.mask(testing_support::to_ids(p, a));
    auto mb = t.mask(testing_support::to_ids(p, b));
    CHECK(is_strong(p, a, b) == t.is_strong(ma, mb));
    CHECK(d_value(p, a) == t.d_value(ma));
    if (t.in_k0()) {
      PointSet c = icl(p, a);
      CHECK(t.mask(testing_support::to_ids(p, c)) == t.icl(ma));
      CHECK(is_strong(p, c, p.all()));
      CHECK(icl(p, c) == c);
    }
  }
}

TEST_CASE("report text") {
  Plane nd = non_desarguesian_plane();
  auto text = format_report(nd, in_k0(nd));
  CHECK(text.find("delta: 1") != std::string::npos);
  CHECK(text.find("alpha: -2") != std::string::npos);
  CHECK(text.find("in_K0: true") != std::string::npos);
}
