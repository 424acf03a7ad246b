#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "domino/cycles.hpp"
#include "domino/filling.hpp"
#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino {

enum class RenderMode { Tiling, Cycles, Filling };

/// Throws ParseError for anything but "tiling", "cycles" or "filling".
RenderMode parse_render_mode(std::string_view text);

struct RenderOptions {
  RenderMode mode = RenderMode::Tiling;
  double cell_size = 32.0;  // pixels per grid unit, must be positive
};

/// Domino outlines over the cell grid.
std::string render_tiling_svg(const Region& r, const Tiling& t, double cell_size);

/// Closed polylines through cell centres, one arrowhead per segment.
/// Counter-clockwise cycles are drawn red, clockwise ones blue.
std::string render_cycles_svg(const Region& r, const CycleCollection& cc, double cell_size);

/// Isometric unit cubes: raised stacks above the floor, sunken ones below it.
std::string render_filling_svg(const Region& r, const FillingShape& f, double cell_size);

/// Dispatches on options.mode. Cycles and filling need `t2`; throws
/// InvalidArgument when it is missing or the cell size is not positive.
std::string render_svg(const Region& r, const Tiling& t1, const std::optional<Tiling>& t2,
                       const RenderOptions& options);

}  // namespace domino
