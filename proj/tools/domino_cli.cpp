// domino: flip distances, diameters and pictures for domino tilings.
//
// Exit codes: 0 ok, 1 methods disagree or other failure, 2 untileable,
// 3 bad input (shape, JSON, tiling), 4 resource limit, 5 file I/O.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domino/cycles.hpp"
#include "domino/diameter.hpp"
#include "domino/errors.hpp"
#include "domino/filling.hpp"
#include "domino/flipgraph.hpp"
#include "domino/height.hpp"
#include "domino/io.hpp"
#include "domino/render.hpp"
#include "domino/shape_spec.hpp"

using namespace domino;
using io::json;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kUntileable = 2, kBadInput = 3, kLimit = 4, kIo = 5 };

struct Options {
  bool json = false;
  std::string shape;
  std::string t1, t2;
  std::string method;
  std::string out, out_min, out_max, emit_path;
  std::string mode = "tiling";
  std::string format = "dot";
  double cell_size = 32.0;
  std::size_t budget = kDefaultNodeBudget;
  bool closed_form = false;
};

/// Prints either the plain text answer or the JSON envelope.
void answer(const Options& o, const char* command, const std::string& text, const json& result) {
  if (o.json) {
    std::cout << json{{"command", command}, {"result", result}}.dump() << '\n';
  } else {
    std::cout << text;
  }
}

Tiling load_tiling(const Region& r, const std::string& path, const char* flag) {
  if (path.empty()) throw ParseError(std::string(flag) + " is required");
  Tiling t = io::tiling_from_json(io::read_json_file(path));
  if (!is_valid_tiling(r, t)) throw ParseError(path + " is not a tiling of the shape");
  return t;
}

struct ShapeInput {
  ShapeSpec spec;
  Region region;
};

ShapeInput load_shape(const Options& o) {
  ShapeSpec spec = parse_shape_spec(o.shape);
  Region r = make_region(spec);
  return {std::move(spec), std::move(r)};
}

int cmd_count(const Options& o) {
  const ShapeInput s = load_shape(o);
  const BigInt count = count_tilings(s.region);
  json result = {{"count", io::to_json(count)}};
  std::string text = count.str() + "\n";
  int code = kOk;

  if (o.closed_form) {
    std::optional<BigInt> closed;
    if (s.spec.kind == ShapeKind::Rectangle || s.spec.kind == ShapeKind::Square) {
      closed = count_rectangle_closed_form(s.spec.m, s.spec.n);
    } else if (s.spec.kind == ShapeKind::Aztec) {
      closed = count_aztec_closed_form(s.spec.m);
    } else {
      std::cerr << "warning: no closed form for this shape\n";
    }
    if (closed) {
      result["closed_form"] = io::to_json(*closed);
      text += closed->str() + "\n";
      if (*closed != count) {
        std::cerr << "error: closed form " << *closed << " differs from count " << count << '\n';
        code = kFailure;
      }
    }
  }
  if (count == 0) {
    std::cerr << "warning: shape has no domino tiling\n";
    code = kUntileable;
  }
  answer(o, "count", text, result);
  return code;
}

int cmd_distance(const Options& o) {
  const ShapeInput s = load_shape(o);
  const Tiling t1 = load_tiling(s.region, o.t1, "--t1");
  const Tiling t2 = load_tiling(s.region, o.t2, "--t2");
  const std::string method = o.method.empty() ? "height" : o.method;

  std::vector<std::pair<std::string, long long>> values;
  const bool all = method == "all";
  bool unreachable = false;
  if (all || method == "bfs") {
    const auto d = flip_distance_search(s.region, t1, t2, o.budget);
    if (d) {
      values.emplace_back("bfs", static_cast<long long>(*d));
    } else {
      unreachable = true;
    }
  }
  if (!unreachable) {
    if (all || method == "height") values.emplace_back("height", distance_height(s.region, t1, t2));
    if (all || method == "cycles") values.emplace_back("cycles", distance_cycles(s.region, t1, t2));
    if (all) values.emplace_back("filling", volumes(filling_shape(s.region, t1, t2)).distance());
  }
  if (values.empty() && !unreachable) throw ParseError("unknown distance method \"" + method + "\"");

  if (unreachable) {
    std::cerr << "warning: the tilings lie in different flip-graph components\n";
    answer(o, "distance", "unreachable\n", {{"distance", nullptr}, {"method", "bfs"}});
    return kFailure;
  }

  if (!o.emit_path.empty()) {
    io::write_text_file(o.emit_path, io::to_json(geodesic(s.region, t1, t2)).dump() + "\n");
  }

  int code = kOk;
  for (const auto& [name, v] : values) {
    if (v != values.front().second) {
      std::cerr << "error: " << name << " gives " << v << " but " << values.front().first << " gives "
                << values.front().second << '\n';
      code = kFailure;
    }
  }
  if (!all) {
    answer(o, "distance", std::to_string(values.front().second) + "\n",
           {{"distance", values.front().second}, {"method", method}});
    return code;
  }
  std::string text;
  json result = json::object();
  for (const auto& [name, v] : values) {
    text += name + " " + std::to_string(v) + "\n";
    result[name] = v;
  }
  result["agree"] = code == kOk;
  answer(o, "distance", text, result);
  return code;
}

std::optional<long long> closed_diameter(const ShapeInput& s) {
  switch (s.spec.kind) {
    case ShapeKind::Square:
      return diameter_square_closed(s.spec.m);
    case ShapeKind::Rectangle: {
      const int a = std::max(s.spec.m, s.spec.n), b = std::min(s.spec.m, s.spec.n);
      if ((static_cast<long long>(a) * b) % 2 != 0) throw Untileable("rectangle with odd area has no tiling");
      return diameter_rectangle_closed(a, b);
    }
    case ShapeKind::Aztec:
      return diameter_aztec_closed(s.spec.m);
    default:
      return std::nullopt;
  }
}

int cmd_diameter(const Options& o) {
  const ShapeInput s = load_shape(o);
  const std::string method = o.method.empty() ? "bfs" : o.method;
  const bool all = method == "all";
  if (!all && method != "bfs" && method != "levels" && method != "closed") {
    throw ParseError("unknown diameter method \"" + method + "\"");
  }
  if (!find_tiling(s.region)) throw Untileable("shape has no domino tiling");

  std::vector<DiameterReport> reports;
  if (all || method == "bfs") reports.push_back(diameter_bfs(s.region, o.budget));
  bool levels_exact = true;
  if (all || method == "levels") {
    reports.push_back({diameter_levels(s.region), DiameterMethod::Levels, std::nullopt});
    try {
      levels_exact = is_saturnian(s.region);
    } catch (const ResourceLimit&) {
      levels_exact = false;
    }
    if (!levels_exact) std::cerr << "note: shape is not known to be Saturnian; levels is an upper bound\n";
  }
  if (all || method == "closed") {
    if (const auto c = closed_diameter(s)) {
      reports.push_back({*c, DiameterMethod::ClosedForm, std::nullopt});
    } else if (!all) {
      throw InvalidArgument("no closed form for this shape");
    } else {
      std::cerr << "note: no closed form for this shape\n";
    }
  }

  int code = kOk;
  for (const DiameterReport& rep : reports) {
    const DiameterReport& ref = reports.front();
    if (rep.value == ref.value) continue;
    const bool bound_only = !levels_exact && rep.method == DiameterMethod::Levels && rep.value > ref.value;
    std::cerr << (bound_only ? "note: " : "error: ") << to_string(rep.method) << " gives " << rep.value
              << " but " << to_string(ref.method) << " gives " << ref.value << '\n';
    if (!bound_only) code = kFailure;
  }

  if (!all) {
    answer(o, "diameter", std::to_string(reports.front().value) + "\n", io::to_json(reports.front()));
    return code;
  }
  std::string text;
  json result = json::array();
  for (const DiameterReport& rep : reports) {
    text += std::string(to_string(rep.method)) + " " + std::to_string(rep.value) + "\n";
    result.push_back(io::to_json(rep));
  }
  answer(o, "diameter", text, {{"reports", result}, {"agree", code == kOk}});
  return code;
}

int cmd_components(const Options& o) {
  const ShapeInput s = load_shape(o);
  const FlipGraph g = build_flip_graph(s.region, o.budget);
  const auto comps = connected_components(g);
  std::string text = std::to_string(comps.size()) + "\n";
  json sizes = json::array();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    text += (i ? " " : "") + std::to_string(comps[i].size());
    sizes.push_back(comps[i].size());
  }
  if (!comps.empty()) text += "\n";
  answer(o, "components", text, {{"components", comps.size()}, {"sizes", sizes}});
  if (g.size() == 0) {
    std::cerr << "warning: shape has no domino tiling\n";
    return kUntileable;
  }
  return kOk;
}

int cmd_render(const Options& o) {
  const ShapeInput s = load_shape(o);
  RenderOptions ro;
  ro.mode = parse_render_mode(o.mode);
  ro.cell_size = o.cell_size;
  const Tiling t1 = load_tiling(s.region, o.t1, "--t1");
  std::optional<Tiling> t2;
  if (ro.mode != RenderMode::Tiling) t2 = load_tiling(s.region, o.t2, "--t2");
  const std::string svg = render_svg(s.region, t1, t2, ro);
  if (o.out.empty()) {
    std::cout << svg;
  } else {
    io::write_text_file(o.out, svg);
    if (o.json) answer(o, "render", "", {{"out", o.out}, {"bytes", svg.size()}});
  }
  return kOk;
}

int cmd_extremes(const Options& o) {
  const ShapeInput s = load_shape(o);
  const auto [lo, hi] = extremal_tilings(s.region);
  if (!o.out_min.empty()) io::write_text_file(o.out_min, io::to_json(lo).dump() + "\n");
  if (!o.out_max.empty()) io::write_text_file(o.out_max, io::to_json(hi).dump() + "\n");
  const long long d = distance_height(s.region, lo, hi);
  answer(o, "extremes", std::to_string(d) + "\n",
         {{"distance", d}, {"min", io::to_json(lo)}, {"max", io::to_json(hi)}});
  return kOk;
}

int cmd_graph(const Options& o) {
  const ShapeInput s = load_shape(o);
  GraphFormat format;
  if (o.format == "dot") {
    format = GraphFormat::Dot;
  } else if (o.format == "json") {
    format = GraphFormat::Json;
  } else {
    throw ParseError("unknown graph format \"" + o.format + "\"");
  }
  const FlipGraph g = build_flip_graph(s.region, o.budget);
  const std::string text = export_graph(g, format);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(o.out, text);
    if (o.json) answer(o, "graph", "", {{"out", o.out}, {"nodes", g.size()}, {"edges", g.edge_count()}});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip distances and diameters of domino tilings"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Wrap the answer in a JSON envelope");

  auto shape_opt = [&](CLI::App* sub) {
    sub->add_option("--shape", o.shape, "rect:MxN, square:N, aztec:N, holed-square:K or file:PATH")->required();
  };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Maximum number of tilings to enumerate")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Number of domino tilings");
  shape_opt(count);
  count->add_flag("--closed-form", o.closed_form, "Also evaluate the rectangle or Aztec product formula");

  auto* distance = app.add_subcommand("distance", "Flip distance between two tilings");
  shape_opt(distance);
  distance->add_option("--t1", o.t1, "First tiling (JSON)")->required();
  distance->add_option("--t2", o.t2, "Second tiling (JSON)")->required();
  distance->add_option("--method", o.method, "bfs, height, cycles or all")
      ->check(CLI::IsMember({"bfs", "height", "cycles", "all"}));
  distance->add_option("--emit-path", o.emit_path, "Write a shortest flip sequence (JSON)");
  budget_opt(distance);

  auto* diameter = app.add_subcommand("diameter", "Diameter of the flip graph");
  shape_opt(diameter);
  diameter->add_option("--method", o.method, "bfs, levels, closed or all")
      ->check(CLI::IsMember({"bfs", "levels", "closed", "all"}));
  budget_opt(diameter);

  auto* components = app.add_subcommand("components", "Connected components of the flip graph");
  shape_opt(components);
  budget_opt(components);

  auto* render = app.add_subcommand("render", "SVG picture of a tiling, cycle collection or filling shape");
  shape_opt(render);
  render->add_option("--mode", o.mode, "tiling, cycles or filling")
      ->check(CLI::IsMember({"tiling", "cycles", "filling"}));
  render->add_option("--t1", o.t1, "Tiling (JSON)")->required();
  render->add_option("--t2", o.t2, "Second tiling for cycles and filling");
  render->add_option("--cell-size", o.cell_size, "Pixels per grid unit")->check(CLI::PositiveNumber);
  render->add_option("--out", o.out, "Output file (stdout when omitted)");

  auto* extremes = app.add_subcommand("extremes", "Minimal and maximal tilings");
  shape_opt(extremes);
  extremes->add_option("--out-min", o.out_min, "Write the minimal tiling here");
  extremes->add_option("--out-max", o.out_max, "Write the maximal tiling here");

  auto* graph = app.add_subcommand("graph", "Export the flip graph");
  shape_opt(graph);
  graph->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", o.out, "Output file (stdout when omitted)");
  budget_opt(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*count) return cmd_count(o);
    if (*distance) return cmd_distance(o);
    if (*diameter) return cmd_diameter(o);
    if (*components) return cmd_components(o);
    if (*render) return cmd_render(o);
    if (*extremes) return cmd_extremes(o);
    if (*graph) return cmd_graph(o);
  } catch (const Untileable& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (*count || *components) std::cout << "0\n";
    return kUntileable;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
