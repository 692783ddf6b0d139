#pragma once

#include <optional>
#include <string>

#include "lozenge/engines.hpp"

namespace lozenge {

/// Side length of a unit triangle in SVG user units.
inline constexpr double kSvgUnit = 20.0;

/// Deterministic SVG drawing with north at the top: the unit-triangle grid,
/// the tiling (if given), an oval on every lozenge position of weight 1/2,
/// and the region outline on top.
std::string render_svg(const Region& r, const std::optional<Tiling>& tiling = std::nullopt);

}  // namespace lozenge
