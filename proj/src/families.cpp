#include "lozenge/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

constexpr std::array<std::pair<Family, const char*>, 7> kNames{{
    {Family::Hexagon, "hexagon"},
    {Family::P, "P"},
    {Family::PPrime, "Pprime"},
    {Family::S, "S"},
    {Family::SPrime, "Sprime"},
    {Family::STDH, "STDH"},
    {Family::Custom, "custom"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

std::string params(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require_staircase_range(const char* name, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError(std::string(name) + params(a, b, c) + ": parameters must be non-negative");
  if (a > b + 1) throw DomainError(std::string(name) + params(a, b, c) + ": requires a <= b+1");
}

Region without_west_of(const Region& r, int cut_x2) {
  std::vector<TriCell> kept;
  for (const auto& c : r.cells())
    if (centroid_x2(c) >= cut_x2) kept.push_back(c);
  return Region(std::move(kept));
}

// Weight 1/2 on every vertical lozenge whose two cells are bisected by the
// line x2 = cut_x2.
Region halve_staircase_lozenges(const Region& r, int cut_x2) {
  WeightMap w;
  for (const auto& c : r.cells()) {
    if (!c.up() || centroid_x2(c) != cut_x2) continue;
    TriCell below = down_cell(c.row + 1, c.col);
    if (r.contains(below)) w.emplace(Lozenge{c, below}, Rational(BigInt(1), BigInt(2)));
  }
  return r.with_weights(std::move(w));
}

HexagonSides s_hexagon(int a, int b, int c) { return {a + 2, b, c + 1, a + 1, b + 1, c}; }

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string key = lower(name);
  for (const auto& [fam, n] : kNames)
    if (lower(n) == key) return fam;
  if (key == "p'" || key == "p_prime") return Family::PPrime;
  if (key == "s'" || key == "s_prime") return Family::SPrime;
  return std::nullopt;
}

void validate(const RegionSpec& spec) {
  const auto name = family_name(spec.family);
  switch (spec.family) {
    case Family::Custom:
      return;
    case Family::Hexagon:
      if (spec.a < 0 || spec.b < 0 || spec.c < 0) throw DomainError("hexagon: side lengths must be non-negative");
      return;
    case Family::STDH:
      if (spec.a < 0 || spec.b < 0 || spec.c < 0) throw DomainError("STDH: parameters must be non-negative");
      if (spec.b < 1 || spec.a > spec.b)
        throw DomainError("STDH" + params(spec.a, spec.b, spec.c) + ": requires 0 <= a <= b and b >= 1");
      return;
    default:
      require_staircase_range(name.c_str(), spec.a, spec.b, spec.c);
  }
}

Region build_lattice_hexagon(const HexagonSides& s) {
  if (s.ne < 0 || s.se < 0 || s.s < 0 || s.sw < 0 || s.nw < 0 || s.n < 0)
    throw DomainError("hexagon sides must be non-negative");
  if (s.ne + s.se != s.nw + s.sw || 2 * s.s != 2 * s.n + s.ne - s.se + s.nw - s.sw)
    throw DomainError("hexagon sides do not close up");
  const int height = s.ne + s.se;
  // Doubled x of the west and east boundary on line r.
  auto west = [&](int r) { return r <= s.nw ? -r : -s.nw + (r - s.nw); };
  auto east = [&](int r) { return r <= s.ne ? 2 * s.n + r : 2 * s.n + s.ne - (r - s.ne); };
  std::vector<TriCell> cells;
  for (int r = 0; r < height; ++r) {
    const int lt = west(r), rt = east(r), lb = west(r + 1), rb = east(r + 1);
    for (int x = std::min(lt, lb) - 2; x <= std::max(rt, rb) + 2; ++x) {
      if (((x + r) % 2 + 2) % 2 != 0) continue;
      const int col = (x + r) / 2;
      if (x >= lt && x <= rt && x - 1 >= lb && x + 1 <= rb) cells.push_back(up_cell(r, col));
      if (x >= lt && x + 2 <= rt && x + 1 >= lb && x + 1 <= rb) cells.push_back(down_cell(r, col));
    }
  }
  return Region(std::move(cells));
}

Region build_hexagon(int a, int b, int c) {
  validate({Family::Hexagon, a, b, c});
  return build_lattice_hexagon({a, b, c, a, b, c});
}

Region build_P(int a, int b, int c) {
  validate({Family::P, a, b, c});
  return without_west_of(build_hexagon(a, b, c), a - b);
}

Region build_P_prime(int a, int b, int c) {
  validate({Family::PPrime, a, b, c});
  return halve_staircase_lozenges(build_P(a, b, c), a - b);
}

TriCell s_dent(int a, int /*b*/, int c) { return up_cell(a, a + c); }

Region build_kuo_host(int a, int b, int c) {
  require_staircase_range("Kuo host", a, b, c);
  return without_west_of(build_lattice_hexagon(s_hexagon(a, b, c)), a - b);
}

Region build_S(int a, int b, int c) {
  validate({Family::S, a, b, c});
  const TriCell dent = s_dent(a, b, c);
  return remove_cells(build_kuo_host(a, b, c), std::span<const TriCell>(&dent, 1));
}

Region build_S_prime(int a, int b, int c) {
  validate({Family::SPrime, a, b, c});
  return halve_staircase_lozenges(build_S(a, b, c), a - b);
}

Region build_STDH(int a, int b, int c) {
  validate({Family::STDH, a, b, c});
  const int axis = a - b;
  const Region half = build_kuo_host(a, b, c);
  std::vector<TriCell> cells = half.cells();
  for (const auto& cell : half.cells()) cells.push_back(mirror(cell, axis));
  const TriCell dent = s_dent(a, b, c);
  const std::array<TriCell, 2> dents{dent, mirror(dent, axis)};
  return remove_cells(Region(std::move(cells)), dents);
}

int staircase_x2(const RegionSpec& spec) {
  if (spec.family == Family::Hexagon || spec.family == Family::Custom)
    throw DomainError(family_name(spec.family) + " has no staircase");
  return spec.a - spec.b;
}

Region build(const RegionSpec& spec) {
  switch (spec.family) {
    case Family::Hexagon: return build_hexagon(spec.a, spec.b, spec.c);
    case Family::P: return build_P(spec.a, spec.b, spec.c);
    case Family::PPrime: return build_P_prime(spec.a, spec.b, spec.c);
    case Family::S: return build_S(spec.a, spec.b, spec.c);
    case Family::SPrime: return build_S_prime(spec.a, spec.b, spec.c);
    case Family::STDH: return build_STDH(spec.a, spec.b, spec.c);
    case Family::Custom: break;
  }
  throw DomainError("custom regions are loaded from a file, not built from parameters");
}

}  // namespace lozenge
