#pragma once

#include <string>

#include "domino/io.hpp"
#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(DOMINO_FIXTURES) + "/" + name; }

inline domino::Tiling tiling(const std::string& name) {
  return domino::io::tiling_from_json(domino::io::read_json_file(path(name)));
}

inline domino::Region region(const std::string& name) {
  return domino::io::region_from_json(domino::io::read_json_file(path(name)));
}

}  // namespace fixture
