#pragma once

#include <cstddef>
#include <vector>

#include "lozenge/region.hpp"

namespace lozenge {

/// Weighted bipartite dual graph: one vertex per cell, one edge per pair of
/// edge-adjacent cells. Vertex lists are in row-major order; edges are sorted
/// by (up, down) index.
struct DualGraph {
  struct Edge {
    std::size_t up;
    std::size_t down;
    Rational weight;
  };

  std::vector<TriCell> up_vertices;
  std::vector<TriCell> down_vertices;
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return up_vertices.size() + down_vertices.size(); }
};

DualGraph dual_graph(const Region& r);

/// The region whose dual graph is g (cells and non-unit weights).
Region to_region(const DualGraph& g);

}  // namespace lozenge
