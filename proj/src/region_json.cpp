#include "lozenge/region_json.hpp"

#include <fstream>
#include <sstream>

#include "lozenge/errors.hpp"

namespace lozenge {

using nlohmann::json;

namespace {

json cell_triple(const TriCell& c) { return json::array({c.row, c.col, c.up()}); }

TriCell cell_from_triple(const json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer() || !j[1].is_number_integer() || !j[2].is_boolean())
    throw FormatError("lozenge endpoint must be [row, col, up]");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<bool>() ? Orientation::Up : Orientation::Down};
}

}  // namespace

json region_to_json(const Region& r) {
  json cells = json::array();
  for (const auto& c : r.cells()) cells.push_back({{"row", c.row}, {"col", c.col}, {"up", c.up()}});
  json weights = json::array();
  for (const auto& [loz, w] : r.weights())
    weights.push_back({{"a", cell_triple(loz.up)}, {"b", cell_triple(loz.down)}, {"w", w.to_string()}});
  return {{"cells", cells}, {"weights", weights}};
}

Region region_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw FormatError("region JSON needs a \"cells\" array");
  std::vector<TriCell> cells;
  for (const auto& c : j["cells"]) {
    if (!c.is_object() || !c.contains("row") || !c.contains("col") || !c.contains("up") ||
        !c["row"].is_number_integer() || !c["col"].is_number_integer() || !c["up"].is_boolean())
      throw FormatError("cell entries need integer row/col and boolean up");
    cells.push_back({c["row"].get<int>(), c["col"].get<int>(), c["up"].get<bool>() ? Orientation::Up : Orientation::Down});
  }
  WeightMap weights;
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw FormatError("\"weights\" must be an array");
    for (const auto& w : j["weights"]) {
      if (!w.is_object() || !w.contains("a") || !w.contains("b") || !w.contains("w") || !w["w"].is_string())
        throw FormatError("weight entries need a, b and a string w");
      Lozenge loz;
      try {
        loz = Lozenge::of(cell_from_triple(w["a"]), cell_from_triple(w["b"]));
      } catch (const DomainError& e) {
        throw FormatError(e.what());
      }
      if (!weights.emplace(loz, Rational::parse(w["w"].get<std::string>())).second)
        throw FormatError("duplicate weight entry for " + to_string(loz.up) + "-" + to_string(loz.down));
    }
  }
  try {
    return Region(std::move(cells), std::move(weights));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

std::string dump_region(const Region& r) { return region_to_json(r).dump(); }

Region parse_region(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return region_from_json(j);
}

Region load_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open region file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_region(ss.str());
}

void save_region_file(const Region& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write region file " + path);
  out << region_to_json(r).dump(2) << "\n";
}

}  // namespace lozenge
