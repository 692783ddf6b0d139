#pragma once

#include <cstddef>
#include <vector>

#include "lozenge/region.hpp"

namespace lozenge {

struct EngineLimits {
  /// count_bruteforce refuses regions with more cells than this.
  std::size_t brute_cells = 64;
  /// count_dp refuses regions wider than this (see sweep_width).
  int dp_width = 24;
};

/// Defaults, overridden by TILINGS_BRUTE_LIMIT and TILINGS_DP_WIDTH when set.
EngineLimits limits_from_env();

/// Widest horizontal extent of any strip of the region, in lattice units.
int sweep_width(const Region& r);

/// Matching generating function by exhaustive search: always branch on the
/// first uncovered cell in row-major order. 0 for unbalanced or untileable
/// regions, 1 for the empty region. Throws LimitExceeded above
/// limits.brute_cells cells.
Rational count_bruteforce(const Region& r, const EngineLimits& limits = limits_from_env());

/// Same value as count_bruteforce, by a row-major sweep whose state is the
/// set of frontier cells already covered by a lozenge reaching forward.
/// Throws LimitExceeded when sweep_width exceeds limits.dp_width or the
/// frontier does not fit a 64-bit profile.
Rational count_dp(const Region& r, const EngineLimits& limits = limits_from_env());

struct Tiling {
  /// Sorted by Lozenge ordering.
  std::vector<Lozenge> lozenges;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

Rational tiling_weight(const Region& r, const Tiling& t);

/// Every tiling exactly once, in lexicographic order of the lozenge lists.
/// Throws LimitExceeded as soon as more than `limit` tilings exist.
std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit);

}  // namespace lozenge
