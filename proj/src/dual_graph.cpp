#include "lozenge/dual_graph.hpp"

#include <algorithm>

namespace lozenge {

DualGraph dual_graph(const Region& r) {
  DualGraph g;
  for (const auto& c : r.cells()) (c.up() ? g.up_vertices : g.down_vertices).push_back(c);
  auto down_index = [&](const TriCell& d) {
    return static_cast<std::size_t>(std::lower_bound(g.down_vertices.begin(), g.down_vertices.end(), d) - g.down_vertices.begin());
  };
  for (std::size_t u = 0; u < g.up_vertices.size(); ++u) {
    std::vector<DualGraph::Edge> local;
    for (const auto& d : neighbors(g.up_vertices[u]))
      if (r.contains(d)) local.push_back({u, down_index(d), r.weight(Lozenge{g.up_vertices[u], d})});
    std::sort(local.begin(), local.end(), [](const auto& x, const auto& y) { return x.down < y.down; });
    g.edges.insert(g.edges.end(), local.begin(), local.end());
  }
  return g;
}

Region to_region(const DualGraph& g) {
  std::vector<TriCell> cells(g.up_vertices);
  cells.insert(cells.end(), g.down_vertices.begin(), g.down_vertices.end());
  WeightMap w;
  for (const auto& e : g.edges)
    if (e.weight != Rational(1)) w.emplace(Lozenge{g.up_vertices[e.up], g.down_vertices[e.down]}, e.weight);
  return Region(std::move(cells), std::move(w));
}

}  // namespace lozenge
