#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>
#include <deque>

#include "planeforge/minimize.hpp"

namespace planeforge {

// Cut model (a node on the source side means "chosen"):
//   point p:  p -> t, capacity 1          (pays |X|)
//   line l:   s -> l, capacity k_l - 2    (a chosen line earns k_l - 2 ...)
//             l -> p, capacity 1          (... minus one per member left out)
//   forced p: s -> p, capacity "infinite"
// With k_l = |l ∩ universe| ≥ 3, min δ = maxflow - Σ (k_l - 2), and the
// source side of the residual graph is the inclusion-smallest minimizer.
struct CutMinimizer::Impl {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS,
      boost::property<boost::vertex_index_t, long,
                      boost::property<boost::vertex_color_t, boost::default_color_type,
                                      boost::property<boost::vertex_distance_t, long,
                                                      boost::property<boost::vertex_predecessor_t,
                                                                      Traits::edge_descriptor>>>>,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  using Edge = Traits::edge_descriptor;

  const Plane* plane;
  PointSet universe;
  Graph g;
  std::vector<PointIndex> points;            // local index -> plane index
  std::vector<long> local_of;                // plane index -> local index or -1
  std::vector<Edge> forced_edge;             // per local point
  long line_total = 0;
  long infinity = 0;

  static constexpr long kSource = 0;
  static constexpr long kSink = 1;

  Edge add(long from, long to, long cap) {
    auto cap_map = boost::get(boost::edge_capacity, g);
    auto rev_map = boost::get(boost::edge_reverse, g);
    Edge e = boost::add_edge(from, to, g).first;
    Edge r = boost::add_edge(to, from, g).first;
    cap_map[e] = cap;
    cap_map[r] = 0;
    rev_map[e] = r;
    rev_map[r] = e;
    return e;
  }

  Impl(const Plane& p, const PointSet& u) : plane(&p), universe(u), local_of(p.size(), -1) {
    points = u.indices();
    for (std::size_t k = 0; k < points.size(); ++k) local_of[points[k]] = static_cast<long>(k);
    std::vector<std::size_t> lines;
    for (std::size_t l = 0; l < p.lines().size(); ++l)
      if (p.lines()[l].intersection_count(u) >= 3) lines.push_back(l);
    g = Graph(2 + points.size() + lines.size());
    infinity = static_cast<long>(points.size()) + 1;
    for (std::size_t k = 0; k < points.size(); ++k) {
      add(2 + static_cast<long>(k), kSink, 1);
      forced_edge.push_back(add(kSource, 2 + static_cast<long>(k), 0));
    }
    for (std::size_t j = 0; j < lines.size(); ++j) {
      long node = 2 + static_cast<long>(points.size() + j);
      long members = 0;
      for (auto q : p.line_members(lines[j]))
        if (local_of[q] >= 0) {
          add(node, 2 + local_of[q], 1);
          ++members;
        }
      add(kSource, node, members - 2);
      line_total += members - 2;
    }
  }

  Minimum minimize(const PointSet& forced) {
    plane->require_own(forced);
    if (!forced.is_subset_of(universe)) throw NotASubset("forced set is not inside the universe");
    auto cap_map = boost::get(boost::edge_capacity, g);
    for (std::size_t k = 0; k < points.size(); ++k) cap_map[forced_edge[k]] = forced.contains(points[k]) ? infinity : 0;
    long flow = boost::boykov_kolmogorov_max_flow(g, kSource, kSink);

    auto res = boost::get(boost::edge_residual_capacity, g);
    std::vector<bool> seen(boost::num_vertices(g), false);
    std::deque<long> todo{kSource};
    seen[kSource] = true;
    while (!todo.empty()) {
      long v = todo.front();
      todo.pop_front();
      for (auto [it, end] = boost::out_edges(v, g); it != end; ++it) {
        long w = static_cast<long>(boost::target(*it, g));
        if (!seen[w] && res[*it] > 0) {
          seen[w] = true;
          todo.push_back(w);
        }
      }
    }
    PointSet x(plane->size());
    for (std::size_t k = 0; k < points.size(); ++k)
      if (seen[2 + k]) x.insert(points[k]);
    return {static_cast<int>(flow - line_total), std::move(x), SearchMethod::mincut};
  }
};

CutMinimizer::CutMinimizer(const Plane& plane, const PointSet& universe)
    : impl_(std::make_unique<Impl>(plane, universe)) {
  plane.require_own(universe);
}
CutMinimizer::~CutMinimizer() = default;
CutMinimizer::CutMinimizer(CutMinimizer&&) noexcept = default;
CutMinimizer& CutMinimizer::operator=(CutMinimizer&&) noexcept = default;

Minimum CutMinimizer::minimize(const PointSet& forced) { return impl_->minimize(forced); }

}  // namespace planeforge
