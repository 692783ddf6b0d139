#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

// Triangular lattice with horizontal lines. Line r is the r-th horizontal
// lattice line counted southward; lattice point (i, r) sits at
// x = i - r/2. Strip r lies between lines r and r+1.
//
//   Up(r, i):   apex (i, r), base (i, r+1)-(i+1, r+1)
//   Down(r, i): top (i, r)-(i+1, r), bottom vertex (i+1, r+1)
//
// Within a strip the cells read Up(r,i), Down(r,i), Up(r,i+1), ... from
// west to east, so (row, col, Up-before-Down) is row-major order.
namespace lozenge {

enum class Orientation : std::uint8_t { Up = 0, Down = 1 };

inline Orientation opposite(Orientation o) {
  return o == Orientation::Up ? Orientation::Down : Orientation::Up;
}

struct TriCell {
  int row = 0;
  int col = 0;
  Orientation orient = Orientation::Up;

  bool up() const { return orient == Orientation::Up; }
  friend auto operator<=>(const TriCell&, const TriCell&) = default;
};

inline TriCell up_cell(int row, int col) { return {row, col, Orientation::Up}; }
inline TriCell down_cell(int row, int col) { return {row, col, Orientation::Down}; }

std::string to_string(const TriCell& c);

/// Twice the x-coordinate of the cell's centroid. Cells with equal value in
/// consecutive strips stack into a vertical lozenge.
inline int centroid_x2(const TriCell& c) { return 2 * c.col - c.row + (c.up() ? 0 : 1); }

/// Inverse of centroid_x2 for a given strip and orientation.
TriCell cell_at(int row, int x2, Orientation orient);

/// The three edge-adjacent cells (all of opposite orientation).
/// Up: east Down, west Down, Down below. Down: west Up, east Up, Up above.
std::array<TriCell, 3> neighbors(const TriCell& c);

bool adjacent(const TriCell& a, const TriCell& b);

/// Unordered pair of adjacent cells, stored Up first.
struct Lozenge {
  TriCell up;
  TriCell down;

  /// Throws DomainError unless a and b are adjacent.
  static Lozenge of(const TriCell& a, const TriCell& b);

  bool vertical() const { return down.row == up.row + 1; }
  /// The member that comes first in row-major order.
  const TriCell& first() const { return up < down ? up : down; }
  const TriCell& second() const { return up < down ? down : up; }

  friend bool operator==(const Lozenge&, const Lozenge&) = default;
  /// Ordered by (first, second) in row-major order.
  friend std::strong_ordering operator<=>(const Lozenge& a, const Lozenge& b) {
    if (auto c = a.first() <=> b.first(); c != 0) return c;
    return a.second() <=> b.second();
  }
};

struct LatticePoint {
  int i = 0;
  int r = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Corners in clockwise order (north up): Up = apex, base-east, base-west;
/// Down = top-west, top-east, bottom.
std::array<LatticePoint, 3> corners(const TriCell& c);

/// Recovers a cell from its three corners (any order). Throws DomainError if
/// the points are not the corners of a unit triangle.
TriCell cell_from_corners(std::array<LatticePoint, 3> pts);

/// One of the 12 lattice isometries fixing the origin: k rotations by 60
/// degrees counterclockwise, preceded by a reflection in the vertical axis
/// when `reflect` is set.
struct LatticeSymmetry {
  int rotations = 0;
  bool reflect = false;

  LatticePoint apply(LatticePoint p) const;
  TriCell apply(const TriCell& c) const;
};

}  // namespace lozenge
