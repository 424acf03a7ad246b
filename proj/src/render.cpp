#include "domino/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "domino/errors.hpp"

namespace domino {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

struct Polygon {
  std::string cls;
  std::vector<Point> pts;
  std::string style;  // extra attributes, already formatted
};

void put_number(std::ostream& out, double v) {
  if (std::abs(v) < 0.005) v = 0.0;
  out << std::fixed << std::setprecision(2) << v;
}

/// Collects polygons in screen units and writes them with a fitted viewBox.
class Canvas {
 public:
  void add(Polygon p) { shapes_.push_back(std::move(p)); }

  std::string str() const {
    double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
    bool first = true;
    for (const Polygon& p : shapes_) {
      for (const Point& q : p.pts) {
        if (first) {
          lo_x = hi_x = q.x;
          lo_y = hi_y = q.y;
          first = false;
        }
        lo_x = std::min(lo_x, q.x);
        lo_y = std::min(lo_y, q.y);
        hi_x = std::max(hi_x, q.x);
        hi_y = std::max(hi_y, q.y);
      }
    }
    constexpr double kPad = 8.0;
    const double w = hi_x - lo_x + 2 * kPad;
    const double h = hi_y - lo_y + 2 * kPad;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    put_number(out, w);
    out << "\" height=\"";
    put_number(out, h);
    out << "\" viewBox=\"0 0 ";
    put_number(out, w);
    out << ' ';
    put_number(out, h);
    out << "\">\n";
    for (const Polygon& p : shapes_) {
      out << "  <polygon class=\"" << p.cls << "\" points=\"";
      for (std::size_t i = 0; i < p.pts.size(); ++i) {
        if (i) out << ' ';
        put_number(out, p.pts[i].x - lo_x + kPad);
        out << ',';
        put_number(out, p.pts[i].y - lo_y + kPad);
      }
      out << "\" " << p.style << "/>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  std::vector<Polygon> shapes_;
};

void check_cell_size(double cell_size) {
  if (!(cell_size > 0) || !std::isfinite(cell_size)) {
    throw InvalidArgument("cell size must be a positive number");
  }
}

// Grid coordinates to screen coordinates, y pointing up on the page.
Point grid(double x, double y, double cs) { return {x * cs, -y * cs}; }

Polygon box(double x0, double y0, double x1, double y1, double cs, std::string cls, std::string style) {
  return {std::move(cls), {grid(x0, y0, cs), grid(x1, y0, cs), grid(x1, y1, cs), grid(x0, y1, cs)},
          std::move(style)};
}

void add_cells(Canvas& canvas, const Region& r, double cs) {
  for (const Cell& c : r.cells()) {
    const bool black = color_of(c) == Color::Black;
    canvas.add(box(c.x, c.y, c.x + 1, c.y + 1, cs, "cell",
                   black ? "fill=\"#d9d9d9\" stroke=\"#bbbbbb\" stroke-width=\"1\""
                         : "fill=\"#f7f7f7\" stroke=\"#bbbbbb\" stroke-width=\"1\""));
  }
}

}  // namespace

RenderMode parse_render_mode(std::string_view text) {
  if (text == "tiling") return RenderMode::Tiling;
  if (text == "cycles") return RenderMode::Cycles;
  if (text == "filling") return RenderMode::Filling;
  throw ParseError("unknown render mode \"" + std::string(text) + "\"");
}

std::string render_tiling_svg(const Region& r, const Tiling& t, double cell_size) {
  check_cell_size(cell_size);
  Canvas canvas;
  add_cells(canvas, r, cell_size);
  const double inset = 0.08;
  for (const Domino& d : t.dominoes()) {
    const double x0 = std::min(d.a.x, d.b.x) + inset;
    const double y0 = std::min(d.a.y, d.b.y) + inset;
    const double x1 = std::max(d.a.x, d.b.x) + 1 - inset;
    const double y1 = std::max(d.a.y, d.b.y) + 1 - inset;
    canvas.add(box(x0, y0, x1, y1, cell_size, "domino",
                   "fill=\"none\" stroke=\"#202020\" stroke-width=\"2\""));
  }
  return canvas.str();
}

std::string render_cycles_svg(const Region& r, const CycleCollection& cc, double cell_size) {
  check_cell_size(cell_size);
  Canvas canvas;
  add_cells(canvas, r, cell_size);
  const double cs = cell_size;
  for (const OrientedCycle& cyc : cc.cycles) {
    const std::string colour = cyc.orientation > 0 ? "#c0392b" : "#2e6fba";
    Polygon loop{"cycle", {}, "fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"2\" data-orientation=\"" +
                                  std::to_string(cyc.orientation) + "\""};
    for (const Cell& c : cyc.cells) loop.pts.push_back(grid(c.x + 0.5, c.y + 0.5, cs));
    canvas.add(loop);

    // One arrowhead at the midpoint of every segment, pointing along the traversal.
    const std::size_t k = cyc.cells.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Point p = loop.pts[i];
      const Point q = loop.pts[(i + 1) % k];
      const double dx = q.x - p.x, dy = q.y - p.y;
      const double len = std::hypot(dx, dy);
      if (len == 0) continue;
      const double ux = dx / len, uy = dy / len;
      const double s = 0.18 * cs;
      const Point tip{(p.x + q.x) / 2 + ux * s / 2, (p.y + q.y) / 2 + uy * s / 2};
      const Point back{tip.x - ux * s, tip.y - uy * s};
      canvas.add({"arrow",
                  {tip, {back.x - uy * s / 2, back.y + ux * s / 2}, {back.x + uy * s / 2, back.y - ux * s / 2}},
                  "fill=\"" + colour + "\""});
    }
  }
  return canvas.str();
}

std::string render_filling_svg(const Region& r, const FillingShape& f, double cell_size) {
  check_cell_size(cell_size);
  const double cs = cell_size;
  const double c30 = std::sqrt(3.0) / 2.0;
  // Isometric view: +x runs right-down, +y runs left-down, +z runs up.
  auto iso = [&](double x, double y, double z) { return Point{(x - y) * c30 * cs, ((x + y) * 0.5 - z) * cs}; };

  Canvas canvas;
  for (const Cell& c : r.cells()) {
    canvas.add({"floor",
                {iso(c.x, c.y, 0), iso(c.x + 1, c.y, 0), iso(c.x + 1, c.y + 1, 0), iso(c.x, c.y + 1, 0)},
                "fill=\"#eeeeee\" stroke=\"#c8c8c8\" stroke-width=\"1\""});
  }

  std::vector<Voxel> voxels = export_voxels(f);
  std::stable_sort(voxels.begin(), voxels.end(), [](const Voxel& a, const Voxel& b) {
    if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
    if (a.z != b.z) return a.z < b.z;
    return a.x < b.x;
  });
  for (const Voxel& v : voxels) {
    // A cube centred on its lattice vertex.
    const double x0 = v.x - 0.5, x1 = v.x + 0.5, y0 = v.y - 0.5, y1 = v.y + 0.5;
    const double z0 = v.z, z1 = v.z + 1.0;
    const bool raised = v.z >= 0;
    const std::string stroke = "stroke=\"#303030\" stroke-width=\"1\" stroke-linejoin=\"round\"";
    const std::string top = raised ? "#f4b6a6" : "#b7cfee";
    const std::string left = raised ? "#d9735c" : "#6f98cf";
    const std::string right = raised ? "#b9523d" : "#4b76b0";
    const std::string cls = raised ? "cube cube-raised" : "cube cube-sunken";
    canvas.add({cls + " top", {iso(x0, y0, z1), iso(x1, y0, z1), iso(x1, y1, z1), iso(x0, y1, z1)},
                "fill=\"" + top + "\" " + stroke});
    canvas.add({cls + " face-y", {iso(x0, y1, z0), iso(x1, y1, z0), iso(x1, y1, z1), iso(x0, y1, z1)},
                "fill=\"" + left + "\" " + stroke});
    canvas.add({cls + " face-x", {iso(x1, y0, z0), iso(x1, y1, z0), iso(x1, y1, z1), iso(x1, y0, z1)},
                "fill=\"" + right + "\" " + stroke});
  }
  return canvas.str();
}

std::string render_svg(const Region& r, const Tiling& t1, const std::optional<Tiling>& t2,
                       const RenderOptions& options) {
  check_cell_size(options.cell_size);
  if (options.mode == RenderMode::Tiling) return render_tiling_svg(r, t1, options.cell_size);
  if (!t2) throw InvalidArgument("cycles and filling renders need a second tiling");
  if (options.mode == RenderMode::Cycles) {
    return render_cycles_svg(r, cycle_collection(r, t1, *t2), options.cell_size);
  }
  return render_filling_svg(r, filling_shape(r, t1, *t2), options.cell_size);
}

}  // namespace domino
