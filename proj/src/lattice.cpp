#include "lozenge/lattice.hpp"

#include <algorithm>

#include "lozenge/errors.hpp"

namespace lozenge {

std::string to_string(const TriCell& c) {
  return std::string(c.up() ? "U" : "D") + "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

TriCell cell_at(int row, int x2, Orientation orient) {
  int twice = x2 + row - (orient == Orientation::Up ? 0 : 1);
  if (twice % 2 != 0) throw DomainError("no cell with that centroid in strip " + std::to_string(row));
  return {row, twice / 2, orient};
}

std::array<TriCell, 3> neighbors(const TriCell& c) {
  if (c.up()) return {down_cell(c.row, c.col), down_cell(c.row, c.col - 1), down_cell(c.row + 1, c.col)};
  return {up_cell(c.row, c.col), up_cell(c.row, c.col + 1), up_cell(c.row - 1, c.col)};
}

bool adjacent(const TriCell& a, const TriCell& b) {
  auto n = neighbors(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

Lozenge Lozenge::of(const TriCell& a, const TriCell& b) {
  if (!adjacent(a, b)) throw DomainError(to_string(a) + " and " + to_string(b) + " are not adjacent");
  return a.up() ? Lozenge{a, b} : Lozenge{b, a};
}

std::array<LatticePoint, 3> corners(const TriCell& c) {
  if (c.up()) return {LatticePoint{c.col, c.row}, LatticePoint{c.col + 1, c.row + 1}, LatticePoint{c.col, c.row + 1}};
  return {LatticePoint{c.col, c.row}, LatticePoint{c.col + 1, c.row}, LatticePoint{c.col + 1, c.row + 1}};
}

TriCell cell_from_corners(std::array<LatticePoint, 3> pts) {
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.r != b.r ? a.r < b.r : a.i < b.i;
  });
  const auto& [p, q, s] = pts;
  // Up: one point on line r, two on line r+1.
  if (p.r + 1 == q.r && q.r == s.r && q.i == p.i && s.i == p.i + 1) return up_cell(p.r, p.i);
  // Down: two points on line r, one on line r+1.
  if (p.r == q.r && s.r == p.r + 1 && q.i == p.i + 1 && s.i == p.i + 1) return down_cell(p.r, p.i);
  throw DomainError("points are not the corners of a unit triangle");
}

LatticePoint LatticeSymmetry::apply(LatticePoint p) const {
  // x = i - r/2 with r counted southward; mirror x -> -x is (i, r) -> (r - i, r).
  if (reflect) p = {p.r - p.i, p.r};
  int k = ((rotations % 6) + 6) % 6;
  for (int t = 0; t < k; ++t) p = {p.r, p.r - p.i};  // 60 degrees counterclockwise
  return p;
}

TriCell LatticeSymmetry::apply(const TriCell& c) const {
  auto pts = corners(c);
  for (auto& p : pts) p = apply(p);
  return cell_from_corners(pts);
}

}  // namespace lozenge
