#include "heatpoly/polygon_io.hpp"

#include <fstream>
#include <sstream>

namespace heatpoly::io {

namespace {

std::string at(std::size_t loop) { return "loop " + std::to_string(loop); }
std::string at(std::size_t loop, std::size_t index) {
  return at(loop) + ", index " + std::to_string(index);
}

}  // namespace

RawPolygon parse_polygon(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("loops") || !doc["loops"].is_array())
    throw GeometryError("polygon document must be an object with a \"loops\" array");
  RawPolygon raw;
  const auto& loops = doc["loops"];
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto& jl = loops[l];
    if (!jl.is_object() || !jl.contains("vertices") || !jl.contains("edges") ||
        !jl["vertices"].is_array() || !jl["edges"].is_array())
      throw GeometryError(at(l) + ": expected \"vertices\" and \"edges\" arrays");
    Loop loop;
    const auto& vs = jl["vertices"];
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& v = vs[i];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw GeometryError(at(l, i) + ": vertex must be [x, y]");
      loop.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    const auto& es = jl["edges"];
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      if (e == "D") {
        loop.edge_bc.push_back(BoundaryCondition::Dirichlet);
      } else if (e == "N") {
        loop.edge_bc.push_back(BoundaryCondition::Open);
      } else {
        throw GeometryError(at(l, i) + ": edge mark must be \"D\" or \"N\"");
      }
    }
    if (loop.edge_bc.size() != loop.vertices.size())
      throw GeometryError(at(l) + ": " + std::to_string(loop.vertices.size()) +
                          " vertices but " + std::to_string(loop.edge_bc.size()) +
                          " edge marks");
    raw.loops.push_back(std::move(loop));
  }
  return raw;
}

RawPolygon parse_polygon(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GeometryError(std::string("polygon JSON parse error: ") + e.what());
  }
  return parse_polygon(doc);
}

Polygon load_polygon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open polygon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate(parse_polygon(buf.str()));
}

nlohmann::json to_json(const Polygon& polygon) {
  nlohmann::json loops = nlohmann::json::array();
  for (const auto& loop : polygon.loops()) {
    nlohmann::json vs = nlohmann::json::array();
    nlohmann::json es = nlohmann::json::array();
    for (const auto& p : loop.vertices) vs.push_back({p.x, p.y});
    for (auto bc : loop.edge_bc) es.push_back(bc == BoundaryCondition::Dirichlet ? "D" : "N");
    loops.push_back({{"vertices", vs}, {"edges", es}});
  }
  return {{"loops", loops}};
}

}  // namespace heatpoly::io
