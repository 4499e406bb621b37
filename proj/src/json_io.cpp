// json_io.cpp -- diagram JSON codec.
#include "bvtk/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace bvtk {

using nlohmann::json;

Diagram diagram_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("diagram JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("depth") || !j.contains("levels"))
    throw std::invalid_argument("diagram JSON must carry \"depth\" and \"levels\"");
  int depth = j.at("depth").get<int>();
  const json& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != depth)
    throw std::invalid_argument("\"levels\" must list exactly depth entries (level 0 is implicit)");

  Diagram d;
  d.levels.resize(depth + 1);
  d.levels[0] = {Vertex{"root", {}}};
  for (int n = 1; n <= depth; ++n) {
    const json& lv = levels.at(n - 1);
    if (!lv.is_object() || !lv.contains("vertices"))
      throw std::invalid_argument("level " + std::to_string(n) + " lacks \"vertices\"");
    std::unordered_map<std::string, int> prev;
    for (int i = 0; i < d.width(n - 1); ++i) prev[d.at(n - 1, i).name] = i;
    for (const json& vj : lv.at("vertices")) {
      Vertex v;
      v.name = vj.at("name").get<std::string>();
      for (const json& src : vj.at("in")) {
        auto it = prev.find(src.get<std::string>());
        if (it == prev.end())
          throw std::invalid_argument("in-edge of " + v.name + " references " +
                                      src.get<std::string>() + ", absent from level " +
                                      std::to_string(n - 1));
        v.in_edges.push_back(it->second);
      }
      d.levels[n].push_back(std::move(v));
    }
  }
  check_structure(d);
  return d;
}

std::string diagram_to_json(const Diagram& d, int indent) {
  json levels = json::array();
  for (int n = 1; n <= d.depth(); ++n) {
    json vertices = json::array();
    for (const Vertex& v : d.levels[n]) {
      json in = json::array();
      for (int s : v.in_edges) in.push_back(d.at(n - 1, s).name);
      vertices.push_back({{"name", v.name}, {"in", in}});
    }
    levels.push_back({{"vertices", vertices}});
  }
  json j{{"depth", d.depth()}, {"levels", levels}};
  return j.dump(indent);
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return diagram_from_json(buf.str());
}

void save_diagram_file(const Diagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << diagram_to_json(d) << "\n";
}

}  // namespace bvtk
