#include "polycut/polyhedron_io.h"

#include "polycut/errors.h"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace polycut {

using nlohmann::ordered_json;

Polyhedron read_polyhedron_json(std::istream& in) {
  ordered_json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("faces"))
    throw GeometryError(ErrorKind::InvalidInput, "JSON polyhedron needs \"vertices\" and \"faces\"");
  try {
    std::vector<Vec3> vertices;
    for (const auto& v : doc.at("vertices")) {
      if (v.size() != 3) throw GeometryError(ErrorKind::InvalidInput, "vertex must have 3 coordinates");
      vertices.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    std::vector<std::vector<int>> faces;
    for (const auto& f : doc.at("faces")) faces.push_back(f.get<std::vector<int>>());
    BuildOptions opt;
    if (doc.contains("first_edge_angles")) opt.firstEdgeAngle = doc.at("first_edge_angles").get<std::vector<double>>();
    return Polyhedron::build(std::move(vertices), std::move(faces), opt);
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(ErrorKind::InvalidInput, std::string("bad JSON polyhedron: ") + e.what());
  }
}

std::string write_polyhedron_json(const Polyhedron& poly) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const Vec3& v : poly.vertices()) doc["vertices"].push_back({v.x, v.y, v.z});
  doc["faces"] = poly.faces();
  const auto& angles = poly.first_edge_angles();
  if (std::any_of(angles.begin(), angles.end(), [](double a) { return a != 0.; }))
    doc["first_edge_angles"] = angles;
  return doc.dump(2) + "\n";
}

Polyhedron read_polyhedron_off(std::istream& in) {
  // Strip comments, then tokenize.
  std::stringstream clean;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    clean << line << '\n';
  }
  std::string header;
  clean >> header;
  if (header != "OFF") throw GeometryError(ErrorKind::InvalidInput, "missing OFF header");
  long nv = -1, nf = -1, ne = -1;
  if (!(clean >> nv >> nf >> ne) || nv < 0 || nf < 0)
    throw GeometryError(ErrorKind::InvalidInput, "bad OFF counts line");
  std::vector<Vec3> vertices(static_cast<size_t>(nv));
  for (auto& v : vertices) {
    if (!(clean >> v.x >> v.y >> v.z)) throw GeometryError(ErrorKind::InvalidInput, "truncated OFF vertex list");
  }
  std::vector<std::vector<int>> faces(static_cast<size_t>(nf));
  for (auto& f : faces) {
    int count = 0;
    if (!(clean >> count) || count < 0) throw GeometryError(ErrorKind::InvalidInput, "truncated OFF face list");
    f.resize(static_cast<size_t>(count));
    for (int& idx : f) {
      if (!(clean >> idx)) throw GeometryError(ErrorKind::InvalidInput, "truncated OFF face list");
    }
    // Trailing per-face color values are ignored.
    std::string rest;
    std::getline(clean, rest);
  }
  return Polyhedron::build(std::move(vertices), std::move(faces));
}

Polyhedron load_polyhedron(const std::string& solidOrPath) {
  auto names = builtin_solid_names();
  if (std::find(names.begin(), names.end(), solidOrPath) != names.end()) return builtin_solid(solidOrPath);

  auto endsWith = [&](const std::string& suffix) {
    return solidOrPath.size() >= suffix.size() &&
           std::equal(suffix.rbegin(), suffix.rend(), solidOrPath.rbegin(),
                      [](char a, char b) { return std::tolower(a) == std::tolower(b); });
  };
  if (!endsWith(".json") && !endsWith(".off")) throw GeometryError(ErrorKind::UnknownSolid, solidOrPath);
  std::ifstream in(solidOrPath);
  if (!in) throw GeometryError(ErrorKind::InvalidInput, "cannot open " + solidOrPath);
  return endsWith(".json") ? read_polyhedron_json(in) : read_polyhedron_off(in);
}

} // namespace polycut
