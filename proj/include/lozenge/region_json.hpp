#pragma once

#include <json.hpp>
#include <string>

#include "lozenge/region.hpp"

namespace lozenge {

// {"cells":[{"row":r,"col":k,"up":true},...],
//  "weights":[{"a":[r,k,true],"b":[r,k,false],"w":"1/2"},...]}
// Weights are exact rational strings; cells and weights are written in
// row-major / lozenge order so equal regions serialise identically.
nlohmann::json region_to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

std::string dump_region(const Region& r);
Region parse_region(const std::string& text);

Region load_region_file(const std::string& path);
void save_region_file(const Region& r, const std::string& path);

}  // namespace lozenge
