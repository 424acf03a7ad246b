#include <doctest.h>

#include <string>

#include "domino/errors.hpp"
#include "domino/render.hpp"
#include "support.hpp"

using namespace domino;

namespace {

std::size_t occurrences(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

bool looks_like_svg(const std::string& s) {
  return s.rfind("<?xml", 0) == 0 && s.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos &&
         s.size() > 7 && s.substr(s.size() - 7) == "</svg>\n" &&
         occurrences(s, "<polygon") == occurrences(s, "/>");
}

}  // namespace

TEST_CASE("tiling render") {
  const Region r = make_rectangle(2, 2);
  const std::string svg = render_tiling_svg(r, fixture::tiling("rect2x2_vertical.json"), 20);
  CHECK(looks_like_svg(svg));
  CHECK(occurrences(svg, "class=\"domino\"") == 2);
  CHECK(occurrences(svg, "class=\"cell\"") == 4);
}

TEST_CASE("cycles render") {
  const Region r = make_rectangle(2, 2);
  RenderOptions o;
  o.mode = RenderMode::Cycles;
  const std::string svg =
      render_svg(r, fixture::tiling("rect2x2_vertical.json"), fixture::tiling("rect2x2_horizontal.json"), o);
  CHECK(looks_like_svg(svg));
  CHECK(occurrences(svg, "class=\"cycle\"") == 1);
  CHECK(occurrences(svg, "class=\"arrow\"") == 4);
  CHECK(occurrences(svg, "data-orientation=\"-1\"") == 1);
  // Four corners in the loop.
  const auto at = svg.find("class=\"cycle\" points=\"");
  const auto end = svg.find('"', at + 22);
  CHECK(occurrences(svg.substr(at + 22, end - at - 22), ",") == 4);
}

TEST_CASE("filling render") {
  const Region r = make_rectangle(7, 4);
  RenderOptions o;
  o.mode = RenderMode::Filling;
  o.cell_size = 24;
  const Tiling a = fixture::tiling("rect7x4_pair_a.json");
  const Tiling b = fixture::tiling("rect7x4_pair_b.json");
  const std::string svg = render_svg(r, a, b, o);
  CHECK(looks_like_svg(svg));
  CHECK(occurrences(svg, "cube-raised top\"") == 16);
  CHECK(occurrences(svg, "cube-sunken") == 0);
  CHECK(occurrences(svg, "class=\"floor\"") == 28);
  // Swapped order digs the same cubes below the floor.
  CHECK(occurrences(render_svg(r, b, a, o), "cube-sunken top\"") == 16);
}

TEST_CASE("output is deterministic") {
  const Region r = make_rectangle(7, 4);
  const Tiling a = fixture::tiling("rect7x4_pair_a.json");
  const Tiling b = fixture::tiling("rect7x4_pair_b.json");
  for (RenderMode m : {RenderMode::Tiling, RenderMode::Cycles, RenderMode::Filling}) {
    const RenderOptions o{m, 17.5};
    CHECK(render_svg(r, a, b, o) == render_svg(r, a, b, o));
  }
}

TEST_CASE("render argument checks") {
  const Region r = make_rectangle(2, 2);
  const Tiling t = fixture::tiling("rect2x2_vertical.json");
  CHECK_THROWS_AS(render_tiling_svg(r, t, 0), InvalidArgument);
  CHECK_THROWS_AS(render_tiling_svg(r, t, -3), InvalidArgument);
  CHECK_THROWS_AS(render_svg(r, t, std::nullopt, RenderOptions{RenderMode::Cycles, 10}), InvalidArgument);
  CHECK(parse_render_mode("filling") == RenderMode::Filling);
  CHECK_THROWS_AS(parse_render_mode("cubes"), ParseError);
}
