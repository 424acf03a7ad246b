#pragma once

// JSON documents exchanged by the command-line tool:
//   region   {"cells": [[x, y], ...]}
//   tiling   {"dominoes": [[[x1, y1], [x2, y2]], ...]}
//   height   {"base": [x, y], "values": [[x, y, h], ...]}
//   cycles   {"cycles": [{"cells": [[x, y], ...], "orientation": 1 | -1}, ...]}
//   voxels   {"voxels": [[x, y, z], ...]}
//   diameter {"diameter": v, "method": "...", "realizers": [tiling, tiling]}
// All lists are written in sorted (canonical) order.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "domino/cycles.hpp"
#include "domino/diameter.hpp"
#include "domino/filling.hpp"
#include "domino/height.hpp"
#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino::io {

using nlohmann::json;

json to_json(const Region& r);
json to_json(const Tiling& t);
json to_json(const HeightFunction& h);
json to_json(const CycleCollection& cc);
json to_json(const std::vector<Voxel>& voxels);
json to_json(const std::vector<FlipMove>& path);
json to_json(const DiameterReport& report);

/// Integer JSON value when it fits in 64 bits, decimal string otherwise.
json to_json(const BigInt& v);

// Parsers throw ParseError on malformed documents.
Region region_from_json(const json& j);
Tiling tiling_from_json(const json& j);
HeightFunction height_from_json(const json& j);

/// Throws IoError when the file cannot be read and ParseError when it is not JSON.
json read_json_file(const std::filesystem::path& path);
/// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace domino::io
