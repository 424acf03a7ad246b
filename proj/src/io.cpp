#include "domino/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "domino/errors.hpp"

namespace domino::io {

namespace {

json pair_of(int x, int y) { return json::array({x, y}); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

Cell cell_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a cell must be an [x, y] pair");
  return {as_int(j[0], "cell x"), as_int(j[1], "cell y")};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Region& r) {
  json cells = json::array();
  for (const Cell& c : r.cells()) cells.push_back(pair_of(c.x, c.y));
  return {{"cells", std::move(cells)}};
}

json to_json(const Tiling& t) {
  json dominoes = json::array();
  for (const Domino& d : t.dominoes()) {
    dominoes.push_back(json::array({pair_of(d.a.x, d.a.y), pair_of(d.b.x, d.b.y)}));
  }
  return {{"dominoes", std::move(dominoes)}};
}

json to_json(const HeightFunction& h) {
  json values = json::array();
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    values.push_back(json::array({h.vertices[i].x, h.vertices[i].y, h.values[i]}));
  }
  return {{"base", pair_of(h.base.x, h.base.y)}, {"values", std::move(values)}};
}

json to_json(const CycleCollection& cc) {
  json cycles = json::array();
  for (const OrientedCycle& c : cc.cycles) {
    json cells = json::array();
    for (const Cell& cell : c.cells) cells.push_back(pair_of(cell.x, cell.y));
    cycles.push_back({{"cells", std::move(cells)}, {"orientation", c.orientation}});
  }
  return {{"cycles", std::move(cycles)}};
}

json to_json(const std::vector<Voxel>& voxels) {
  json out = json::array();
  for (const Voxel& v : voxels) out.push_back(json::array({v.x, v.y, v.z}));
  return {{"voxels", std::move(out)}};
}

json to_json(const std::vector<FlipMove>& path) {
  json flips = json::array();
  for (const FlipMove& f : path) flips.push_back(pair_of(f.anchor.x, f.anchor.y));
  return {{"flips", std::move(flips)}};
}

json to_json(const DiameterReport& report) {
  json j = {{"diameter", report.value}, {"method", std::string(to_string(report.method))}};
  if (report.realizers) {
    j["realizers"] = json::array({to_json(report.realizers->first), to_json(report.realizers->second)});
  }
  return j;
}

json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

Region region_from_json(const json& j) {
  const json& cells = field(j, "cells");
  if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const json& c : cells) out.push_back(cell_from(c));
  if (out.empty()) throw ParseError("region has no cells");
  return Region(std::move(out));
}

Tiling tiling_from_json(const json& j) {
  const json& dominoes = field(j, "dominoes");
  if (!dominoes.is_array()) throw ParseError("\"dominoes\" must be an array");
  std::vector<Domino> out;
  out.reserve(dominoes.size());
  for (const json& d : dominoes) {
    if (!d.is_array() || d.size() != 2) throw ParseError("a domino must be a pair of cells");
    try {
      out.push_back(make_domino(cell_from(d[0]), cell_from(d[1])));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return Tiling(std::move(out));
}

HeightFunction height_from_json(const json& j) {
  HeightFunction h;
  const Cell base = cell_from(field(j, "base"));
  h.base = {base.x, base.y};
  const json& values = field(j, "values");
  if (!values.is_array()) throw ParseError("\"values\" must be an array");
  std::vector<std::pair<Vertex, int>> entries;
  for (const json& v : values) {
    if (!v.is_array() || v.size() != 3) throw ParseError("a height entry must be [x, y, h]");
    entries.push_back({{as_int(v[0], "vertex x"), as_int(v[1], "vertex y")}, as_int(v[2], "height")});
  }
  std::sort(entries.begin(), entries.end());
  for (const auto& [vertex, value] : entries) {
    h.vertices.push_back(vertex);
    h.values.push_back(value);
  }
  return h;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace domino::io
