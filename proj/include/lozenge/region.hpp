#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "lozenge/lattice.hpp"
#include "lozenge/rational.hpp"

namespace lozenge {

using WeightMap = std::map<Lozenge, Rational>;

/// A finite set of unit triangles together with weights on lozenge
/// positions. Absent weight entries mean weight 1. Immutable once built.
class Region {
 public:
  Region() = default;

  /// Duplicated cells are merged. Throws DomainError if a weight refers to a
  /// cell outside the region or is not strictly positive.
  explicit Region(std::vector<TriCell> cells, WeightMap weights = {});

  /// Cells in row-major order.
  const std::vector<TriCell>& cells() const { return cells_; }
  const WeightMap& weights() const { return weights_; }

  bool contains(const TriCell& c) const;
  Rational weight(const Lozenge& l) const;

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  std::size_t up_count() const { return up_count_; }
  std::size_t down_count() const { return cells_.size() - up_count_; }

  /// Same cells, replaced weights.
  Region with_weights(WeightMap weights) const { return Region(cells_, std::move(weights)); }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<TriCell> cells_;
  WeightMap weights_;
  std::size_t up_count_ = 0;
};

bool is_balanced(const Region& r);

/// Removes `cells` (all of which must be present) and drops weight entries
/// that lose an endpoint. Throws DomainError naming the first absent cell.
Region remove_cells(const Region& r, std::span<const TriCell> cells);

/// Image of the region (cells and weights) under a lattice isometry.
Region transform(const Region& r, const LatticeSymmetry& s);

/// Mirror image in the vertical line x2 = axis_x2 (doubled x-coordinate).
TriCell mirror(const TriCell& c, int axis_x2);

/// Cells met while walking the outer boundary clockwise, starting at the
/// first cell in row-major order. Consecutive repeats are collapsed; a cell
/// touching the boundary along several separate stretches appears several
/// times. Empty for the empty region.
std::vector<TriCell> outer_boundary_cycle(const Region& r);

}  // namespace lozenge
