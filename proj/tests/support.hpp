#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle/naive_oracle.hpp"
#include "planeforge/plane.hpp"

namespace testing_support {

inline oracle::NaivePlane to_naive(const planeforge::Plane& p) {
  oracle::NaivePlane out;
  out.points = p.ids();
  for (const auto& l : p.line_ids()) out.lines.emplace_back(l.begin(), l.end());
  return out;
}

inline oracle::Ids to_ids(const planeforge::Plane& p, const planeforge::PointSet& s) {
  auto names = p.names(s);
  return {names.begin(), names.end()};
}

/// Random plane on n points named "p0", "p1", ...: lines of 3 to max_line
/// points are drawn greedily and kept when they meet every earlier line in at
/// most one point.
inline planeforge::Plane random_plane(std::mt19937& rng, int n, int attempts, int max_line = 5) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::vector<std::vector<int>> lines;
  std::uniform_int_distribution<int> size(3, std::max(3, std::min(n, max_line)));
  for (int t = 0; t < attempts && n >= 3; ++t) {
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(size(rng));
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (const auto& l : lines) {
      int shared = 0;
      for (int x : pts) shared += static_cast<int>(std::count(l.begin(), l.end(), x));
      ok = ok && shared <= 1;
    }
    if (ok) lines.push_back(pts);
  }
  std::vector<std::vector<std::string>> named;
  for (const auto& l : lines) {
    named.emplace_back();
    for (int x : l) named.back().push_back(ids[x]);
  }
  return planeforge::Plane::validate(ids, named);
}

inline planeforge::PointSet random_subset(std::mt19937& rng, const planeforge::Plane& p, double density) {
  std::bernoulli_distribution coin(density);
  planeforge::PointSet s(p.size());
  for (planeforge::PointIndex i = 0; i < p.size(); ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

/// Every subset of the plane's points.
inline std::vector<planeforge::PointSet> all_subsets(const planeforge::Plane& p) {
  std::vector<planeforge::PointSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
    planeforge::PointSet s(p.size());
    for (planeforge::PointIndex i = 0; i < p.size(); ++i)
      if (m >> i & 1) s.insert(i);
    out.push_back(std::move(s));
  }
  return out;
}

/// Affine plane of order 3: 9 points, 12 lines of 3, δ = -3.
inline planeforge::Plane affine_plane_order3() {
  auto id = [](int x, int y) { return std::string(1, static_cast<char>('a' + 3 * x + y)); };
  std::vector<std::string> ids;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) ids.push_back(id(x, y));
  std::vector<std::vector<std::string>> lines;
  for (int c = 0; c < 3; ++c) {
    lines.push_back({id(c, 0), id(c, 1), id(c, 2)});
    for (int m = 0; m < 3; ++m) lines.push_back({id(0, c), id(1, (c + m) % 3), id(2, (c + 2 * m) % 3)});
  }
  return planeforge::Plane::validate(ids, lines);
}

/// The affine plane of order 3 with `drop` random lines removed and its
/// points listed in random order.
inline planeforge::Plane thinned_affine_plane(std::mt19937& rng, int drop) {
  planeforge::Plane ag = affine_plane_order3();
  std::vector<std::vector<std::string>> lines;
  for (const auto& l : ag.line_ids()) lines.emplace_back(l.begin(), l.end());
  std::shuffle(lines.begin(), lines.end(), rng);
  lines.resize(lines.size() - std::min<std::size_t>(lines.size(), static_cast<std::size_t>(drop)));
  auto ids = ag.ids();
  std::shuffle(ids.begin(), ids.end(), rng);
  return planeforge::Plane::validate(ids, lines);
}

inline planeforge::Plane fano() {
  return planeforge::Plane::validate({"1", "2", "3", "4", "5", "6", "7"},
                                     {{"1", "2", "3"}, {"1", "4", "5"}, {"1", "6", "7"}, {"2", "4", "6"},
                                      {"2", "5", "7"}, {"3", "4", "7"}, {"3", "5", "6"}});
}

}  // namespace testing_support
