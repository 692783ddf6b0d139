#include "lozenge/region.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "lozenge/errors.hpp"

namespace lozenge {

Region::Region(std::vector<TriCell> cells, WeightMap weights)
    : cells_(std::move(cells)), weights_(std::move(weights)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  up_count_ = static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](const TriCell& c) { return c.up(); }));
  for (const auto& [loz, w] : weights_) {
    if (!contains(loz.up) || !contains(loz.down))
      throw DomainError("weight on lozenge " + to_string(loz.up) + "-" + to_string(loz.down) + " outside the region");
    if (w.sign() <= 0) throw DomainError("lozenge weights must be strictly positive, got " + w.to_string());
  }
}

bool Region::contains(const TriCell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

Rational Region::weight(const Lozenge& l) const {
  auto it = weights_.find(l);
  return it == weights_.end() ? Rational(1) : it->second;
}

bool is_balanced(const Region& r) { return r.up_count() == r.down_count(); }

Region remove_cells(const Region& r, std::span<const TriCell> cells) {
  std::set<TriCell> drop;
  for (const auto& c : cells) {
    if (!r.contains(c)) throw DomainError("cannot remove " + to_string(c) + ": not in region");
    drop.insert(c);
  }
  std::vector<TriCell> kept;
  kept.reserve(r.size());
  for (const auto& c : r.cells())
    if (!drop.count(c)) kept.push_back(c);
  WeightMap w;
  for (const auto& [loz, val] : r.weights())
    if (!drop.count(loz.up) && !drop.count(loz.down)) w.emplace(loz, val);
  return Region(std::move(kept), std::move(w));
}

Region transform(const Region& r, const LatticeSymmetry& s) {
  std::vector<TriCell> cells;
  cells.reserve(r.size());
  for (const auto& c : r.cells()) cells.push_back(s.apply(c));
  WeightMap w;
  for (const auto& [loz, val] : r.weights()) w.emplace(Lozenge::of(s.apply(loz.up), s.apply(loz.down)), val);
  return Region(std::move(cells), std::move(w));
}

TriCell mirror(const TriCell& c, int axis_x2) { return cell_at(c.row, 2 * axis_x2 - centroid_x2(c), c.orient); }

namespace {

struct DirectedEdge {
  LatticePoint from;
  LatticePoint to;
  TriCell cell;  // the region cell on the right of the edge
};

// Direction of a unit lattice step as a multiple of 60 degrees
// counterclockwise from east.
int direction(const LatticePoint& from, const LatticePoint& to) {
  int di = to.i - from.i, dr = to.r - from.r;
  if (di == 1 && dr == 0) return 0;
  if (di == 0 && dr == -1) return 1;
  if (di == -1 && dr == -1) return 2;
  if (di == -1 && dr == 0) return 3;
  if (di == 0 && dr == 1) return 4;
  return 5;  // (1, 1)
}

}  // namespace

std::vector<TriCell> outer_boundary_cycle(const Region& r) {
  if (r.empty()) return {};
  // Clockwise corner order puts the cell on the right of each edge; edge k
  // runs corner k -> corner k+1 and is shared with neighbour nb[k].
  std::multimap<LatticePoint, DirectedEdge> outgoing;
  std::vector<DirectedEdge> all;
  for (const auto& c : r.cells()) {
    auto pts = corners(c);
    std::array<TriCell, 3> across = c.up()
        ? std::array<TriCell, 3>{down_cell(c.row, c.col), down_cell(c.row + 1, c.col), down_cell(c.row, c.col - 1)}
        : std::array<TriCell, 3>{up_cell(c.row - 1, c.col), up_cell(c.row, c.col + 1), up_cell(c.row, c.col)};
    for (int k = 0; k < 3; ++k) {
      if (r.contains(across[k])) continue;
      DirectedEdge e{pts[k], pts[(k + 1) % 3], c};
      outgoing.emplace(e.from, e);
      all.push_back(e);
    }
  }
  // The first cell in row-major order has nothing north or west of it, so
  // its first boundary edge lies on the outer face.
  const TriCell& first = r.cells().front();
  const DirectedEdge* start = nullptr;
  for (const auto& e : all)
    if (e.cell == first) { start = &e; break; }

  std::vector<TriCell> seq;
  DirectedEdge cur = *start;
  std::size_t guard = 0;
  do {
    if (seq.empty() || !(seq.back() == cur.cell)) seq.push_back(cur.cell);
    int din = direction(cur.from, cur.to);
    // Exterior is on the left: take the sharpest left turn available.
    const DirectedEdge* best = nullptr;
    int best_rank = 99;
    auto [lo, hi] = outgoing.equal_range(cur.to);
    for (auto it = lo; it != hi; ++it) {
      int rel = (direction(it->second.from, it->second.to) - din + 6) % 6;
      static constexpr int rank[6] = {2, 1, 0, 5, 4, 3};
      if (rank[rel] < best_rank) { best_rank = rank[rel]; best = &it->second; }
    }
    cur = *best;
  } while (!(cur.from == start->from && cur.to == start->to) && ++guard <= all.size());
  while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
  return seq;
}

}  // namespace lozenge
