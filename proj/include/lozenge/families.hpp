#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lozenge/region.hpp"

namespace lozenge {

enum class Family { Hexagon, P, PPrime, S, SPrime, STDH, Custom };

std::string family_name(Family f);
/// Accepts the names printed by family_name, case-insensitively.
std::optional<Family> parse_family(std::string_view name);

struct RegionSpec {
  Family family = Family::Hexagon;
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

/// Throws DomainError if the parameters are outside the family's range:
/// negative values anywhere; a > b+1 for P, P', S, S'; a > b or b = 0 for
/// STDH. Custom specs have no parameters to check.
void validate(const RegionSpec& spec);

/// Side lengths of a lattice hexagon, listed clockwise from the north-east
/// side. Zero lengths are allowed.
struct HexagonSides {
  int ne = 0, se = 0, s = 0, sw = 0, nw = 0, n = 0;
};

/// The lattice hexagon with the given sides, its north side on line 0 and its
/// north-west corner at lattice point (0, 0). Throws DomainError if the sides
/// do not close up.
Region build_lattice_hexagon(const HexagonSides& sides);

/// Hexagon with sides a,b,c,a,b,c clockwise from the north-east side.
/// Contains 2(ab+bc+ca) cells.
Region build_hexagon(int a, int b, int c);

/// Proctor's region: build_hexagon(a,b,c) with the maximal staircase removed
/// from its west corner, i.e. every cell lying strictly west of the vertical
/// line through the bottom-left corner. 0 <= a <= b+1.
Region build_P(int a, int b, int c);

/// build_P with weight 1/2 on each vertical lozenge straddling the staircase
/// line (a positions when a <= b).
Region build_P_prime(int a, int b, int c);

/// Hexagon with sides a+2, b, c+1, a+1, b+1, c (clockwise from north-east),
/// minus the maximal staircase, minus the Up triangle second from the bottom
/// on the north-east side. 0 <= a <= b+1.
Region build_S(int a, int b, int c);

/// build_S with weight 1/2 on every vertical lozenge straddling the staircase
/// line (a+1 positions when a <= b).
Region build_S_prime(int a, int b, int c);

/// Symmetric triply-dented hexagon: build_S(a,b,c) with its dent filled,
/// reflected across the staircase line, and the two north-east/north-west
/// dents removed. The north side carries a centred dent of side b-a.
/// Requires 0 <= a <= b and b >= 1.
Region build_STDH(int a, int b, int c);

/// build_S(a,b,c) without the north-east dent: the unbalanced host graph for
/// Kuo condensation (one more Up than Down cell).
Region build_kuo_host(int a, int b, int c);

/// Doubled x-coordinate of the staircase line for P/S-type regions and of the
/// symmetry axis for STDH.
int staircase_x2(const RegionSpec& spec);

/// The Up triangle removed from the north-east side of S_{a,b,c}.
TriCell s_dent(int a, int b, int c);

/// Dispatches on spec.family. Custom specs throw DomainError.
Region build(const RegionSpec& spec);

}  // namespace lozenge
