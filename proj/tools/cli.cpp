#include "cli.h"

#include "polycut/errors.h"
#include "polycut/polyhedron_io.h"
#include "polycut/tolerance.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace polycut::cli {

using json = nlohmann::ordered_json;

namespace {

double parse_number(const std::string& s) {
  size_t used = 0;
  double v = 0.;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& body) {
  std::vector<double> xs;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    xs.push_back(parse_number(item));
  }
  return xs;
}

json vec(Vec2 v) { return json::array({v.x, v.y}); }

json path_json(const FacePath& p) { return json(p.faces); }

} // namespace

SurfacePoint parse_point_spec(const Polyhedron& poly, const std::string& spec) {
  static const std::regex grammar(R"(^\s*(-?\d+)\s*:\s*(bary)?\s*\(([^)]*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, grammar)) throw UsageError("bad point spec '" + spec + "'; expected FACE:(x,y) or FACE:bary(...)");
  long face = std::stol(m[1].str());
  if (face < 0 || static_cast<size_t>(face) >= poly.num_faces())
    throw UsageError("face id " + m[1].str() + " out of range [0, " + std::to_string(poly.num_faces()) + ")");
  auto values = parse_list(m[3].str());
  FaceId f = static_cast<FaceId>(face);
  if (m[2].matched) {
    if (values.size() != poly.faces()[f].size())
      throw UsageError("barycentric spec needs one weight per face vertex");
    return from_barycentric(poly, f, values);
  }
  if (values.size() != 2) throw UsageError("point spec needs two coordinates");
  SurfacePoint p{f, {values[0], values[1]}};
  if (!polygon_contains(poly.polygon(f), p.coords, eps()))
    throw GeometryError(ErrorKind::PointNotOnSurface, "point " + spec + " is outside its face");
  return p;
}

std::vector<Vec2> parse_region(const std::string& spec) {
  static const std::regex point(R"(\(([^)]*)\))");
  std::vector<Vec2> pts;
  for (auto it = std::sregex_iterator(spec.begin(), spec.end(), point); it != std::sregex_iterator(); ++it) {
    auto xs = parse_list((*it)[1].str());
    if (xs.size() != 2) throw UsageError("region points need two coordinates");
    pts.push_back({xs[0], xs[1]});
  }
  if (pts.empty()) throw UsageError("empty region spec");
  return pts;
}

std::vector<Vec2> region_samples(const std::vector<Vec2>& region, int n) {
  if (n < 1) throw UsageError("grid size must be positive");
  std::vector<Vec2> out;
  if (region.size() == 1) return {region[0]};
  if (region.size() == 2) {
    for (int k = 0; k < n; ++k) out.push_back(lerp(region[0], region[1], (k + 1.) / (n + 1.)));
    return out;
  }
  if (region.size() == 3) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = (i + 0.5) / n, t = (j + 0.5) / n;
        Vec2 far = lerp(region[1], region[2], t);
        out.push_back(lerp(region[0], far, s));
      }
    }
    return out;
  }
  std::vector<Vec2> ccw = region;
  if (ConvexRegion{ccw}.area() < 0.) std::reverse(ccw.begin(), ccw.end());
  Vec2 lo = ccw[0], hi = ccw[0];
  for (Vec2 v : ccw) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec2 p{lo.x + (i + 0.5) / n * (hi.x - lo.x), lo.y + (j + 0.5) / n * (hi.y - lo.y)};
      if (polygon_contains(ccw, p, -eps())) out.push_back(p);
    }
  }
  return out;
}

json face_report(const CutLocusOnFace& face) {
  json r;
  r["face"] = face.sink;
  json survivors = json::array();
  std::vector<json> pathOf;
  for (const auto& s : face.survivors) {
    survivors.push_back({{"path", path_json(s.key())}, {"provenance", json::array()}, {"image", vec(s.image)}});
    for (const auto& p : s.provenance) survivors.back()["provenance"].push_back(path_json(p));
    pathOf.push_back(path_json(s.key()));
  }
  r["survivors"] = survivors;
  json edges = json::array();
  for (const auto& e : face.diagram.edges) {
    edges.push_back({{"label", {e.label.first, e.label.second}},
                     {"paths", {pathOf[e.label.first], pathOf[e.label.second]}},
                     {"segment", {vec(e.a), vec(e.b)}}});
  }
  r["edges"] = edges;
  json vertices = json::array();
  for (const auto& v : face.diagram.vertices) {
    json paths = json::array();
    for (int i : v.label) paths.push_back(pathOf[i]);
    vertices.push_back({{"label", json(std::vector<int>(v.label.begin(), v.label.end()))},
                        {"paths", paths},
                        {"point", vec(v.point)},
                        {"degree", v.degree},
                        {"on_boundary", v.onBoundary}});
  }
  r["vertices"] = vertices;
  json boundary = json::array();
  for (const auto& b : face.diagram.boundaryPoints)
    boundary.push_back({{"label", json(std::vector<int>(b.label.begin(), b.label.end()))}, {"point", vec(b.point)}});
  r["boundary_points"] = boundary;
  r["stats"] = {{"paths", face.pathsEnumerated}, {"candidates", face.initialCandidates}, {"removed", face.removals}};
  return r;
}

json geodesic_report(const std::vector<Geodesic>& gs) {
  json arr = json::array();
  for (const auto& g : gs) {
    json pieces = json::array();
    for (const auto& s : g.pieces) pieces.push_back({{"face", s.face}, {"start", vec(s.start)}, {"end", vec(s.end)}});
    arr.push_back({{"path", path_json(g.path)}, {"length", g.length}, {"pieces", pieces}});
  }
  return arr;
}

Scene face_scene(const CutLocusOnFace& face, const Polyhedron& poly) {
  (void)poly;
  Scene sc;
  Style outline{"black", "none", 1.5};
  sc.polygon("face", face.face.vertices, outline);
  for (size_t i = 0; i < face.diagram.cells.size(); ++i) {
    Style fill{"none", palette_color(i), 0., 0.25};
    const auto& cell = face.diagram.cells[i];
    if (cell.vertices.size() >= 3) sc.polygon("cells", cell.vertices, fill);
  }
  for (const auto& e : face.diagram.edges) sc.segment("cut-locus", e.a, e.b, {"#d62728", "none", 2.});
  for (const auto& v : face.diagram.vertices) sc.point("vertices", v.point, {"black", "black", 1., 1., 3.});
  for (size_t i = 0; i < face.survivors.size(); ++i) {
    const auto& cell = face.diagram.cells[i];
    if (cell.vertices.empty()) continue;
    Vec2 c{};
    for (Vec2 v : cell.vertices) c += v;
    c = c / static_cast<double>(cell.vertices.size());
    sc.label("labels", c, path_string(face.survivors[i].key()), {palette_color(i)});
  }
  return sc;
}

Scene star_scene(const StarUnfolding& star, const Polyhedron& poly) {
  Scene sc;
  for (size_t i = 0; i < star.pieces.size(); ++i) {
    const auto& piece = star.pieces[i];
    const auto& u = piece.unfolding;
    sc.polygon("faces", u.placed(u.size() - 1), {"#999999", "none", 0.75});
    if (piece.cell.vertices.size() >= 3) sc.polygon("cells", piece.cell.vertices, {"none", palette_color(i), 0., 0.2});
  }
  sc.polygon("source-face", poly.polygon(star.source.face), {"black", "none", 1.5});
  for (const auto& e : star.edges) sc.segment("cut-locus", e.a, e.b, {"#d62728", "none", 1.5});
  sc.point("source", star.source.coords, {"black", "black", 1., 1., 3.5});
  return sc;
}

namespace {

struct Common {
  std::string solid;
  std::optional<double> epsilon;
  int oracleN = 64;
  unsigned threads = 0;
  bool noPrefilter = false;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

int exit_for(ErrorKind k) {
  switch (k) {
  case ErrorKind::NumericDegeneracy: return Degenerate;
  case ErrorKind::UnknownSolid: return Usage;
  default: return Validation;
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ScopedEpsilon restore(eps());
  CLI::App app{"Cut loci and geodesics on convex polyhedra", "polycut"};
  app.require_subcommand(1);
  Common c;
  std::string pSpec, qSpec, jsonOut, svgOut, region;
  std::optional<int> sinkFace;
  int grid = 15;
  bool withOracle = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("solid", c.solid, "builtin solid name or .json/.off file")->required();
    sub->add_option("--epsilon", c.epsilon, "geometric tolerance (default 1e-9 or $POLYCUT_EPSILON)");
    sub->add_option("--threads", c.threads, "worker threads for per-face work (0 = auto)");
    sub->add_flag("--no-prefilter", c.noPrefilter, "disable the corridor pre-filter on face paths");
  };
  auto* cut = app.add_subcommand("cutlocus", "cut locus of a point, per face");
  common(cut);
  cut->add_option("--p", pSpec, "source point FACE:(x,y) or FACE:bary(...)")->required();
  cut->add_option("--face", sinkFace, "only this face");
  cut->add_option("--json", jsonOut, "write the report here instead of stdout");
  cut->add_option("--svg", svgOut, "SVG path prefix; writes PREFIX_face<k>.svg");

  auto* geo = app.add_subcommand("geodesic", "shortest paths between two points");
  common(geo);
  geo->add_option("--p", pSpec, "source point")->required();
  geo->add_option("--q", qSpec, "target point")->required();
  geo->add_flag("--oracle", withOracle, "also report the mesh-Dijkstra distance");
  geo->add_option("--oracle-n", c.oracleN, "oracle subdivision")->check(CLI::PositiveNumber);

  auto* star = app.add_subcommand("star", "Voronoi star unfolding as SVG");
  common(star);
  star->add_option("--p", pSpec, "source point")->required();
  star->add_option("--svg", svgOut, "write the SVG here instead of stdout");
  star->add_option("--json", jsonOut, "also write a JSON summary");

  auto* scan = app.add_subcommand("scan", "structure signatures over a sampled region of one face");
  common(scan);
  scan->add_option("--face", sinkFace, "face holding the region")->required();
  scan->add_option("--region", region, "\"(x,y),(x,y),...\" segment or polygon")->required();
  scan->add_option("--grid", grid, "samples per axis (segment: sample count)")->check(CLI::PositiveNumber);
  scan->add_option("--json", jsonOut, "write the report here instead of stdout");

  auto* validate = app.add_subcommand("validate", "check a polyhedron");
  common(validate);

  auto* dump = app.add_subcommand("dump-solid", "print a polyhedron as JSON");
  common(dump);
  dump->add_option("--out", jsonOut, "write here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    load_eps_from_env();
    if (c.epsilon) set_eps(*c.epsilon);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }

  CutLocusOptions opts;
  opts.starPrefilter = !c.noPrefilter;
  auto emit = [&](const std::string& text, const std::string& path) {
    if (path.empty()) out << text;
    else write_text(path, text);
  };

  try {
    Polyhedron poly = load_polyhedron(c.solid);

    if (*validate) {
      json r{{"valid", true},
             {"vertices", poly.num_vertices()},
             {"edges", poly.num_edges()},
             {"faces", poly.num_faces()},
             {"euler_characteristic",
              static_cast<long>(poly.num_vertices()) - static_cast<long>(poly.num_edges()) + static_cast<long>(poly.num_faces())}};
      out << r.dump(2) << "\n";
      return Ok;
    }
    if (*dump) {
      emit(write_polyhedron_json(poly) + "\n", jsonOut);
      return Ok;
    }

    if (*cut) {
      SurfacePoint p = parse_point_spec(poly, pSpec);
      if (sinkFace && !poly.valid_face(*sinkFace)) throw UsageError("face id out of range");
      FullCutLocus faces;
      if (sinkFace) faces.push_back(cut_locus_on_face(poly, p, *sinkFace, {}, opts));
      else faces = full_cut_locus(poly, p, opts, c.threads);
      json r;
      r["solid"] = c.solid;
      r["epsilon"] = eps();
      r["source"] = {{"face", p.face}, {"coords", vec(p.coords)}};
      r["faces"] = json::array();
      for (const auto& f : faces) r["faces"].push_back(face_report(f));
      emit(r.dump(2) + "\n", jsonOut);
      if (!svgOut.empty()) {
        for (const auto& f : faces) write_text(svgOut + "_face" + std::to_string(f.sink) + ".svg", face_scene(f, poly).to_svg());
      }
      return Ok;
    }

    if (*geo) {
      SurfacePoint p = parse_point_spec(poly, pSpec);
      SurfacePoint q = parse_point_spec(poly, qSpec);
      QueryOptions qo;
      qo.cutLocus = opts;
      auto gs = geodesics(poly, p, q, qo);
      if (gs.empty()) throw GeometryError(ErrorKind::NumericDegeneracy, "no geodesic found");
      json r;
      r["distance"] = gs.front().length;
      r["multiplicity"] = gs.size();
      r["geodesics"] = geodesic_report(gs);
      if (withOracle) r["oracle_distance"] = mesh_dijkstra_distance(poly, p, q, c.oracleN);
      out << r.dump(2) << "\n";
      return Ok;
    }

    if (*star) {
      SurfacePoint p = parse_point_spec(poly, pSpec);
      auto t0 = std::chrono::steady_clock::now();
      FullCutLocus cl = full_cut_locus(poly, p, opts, c.threads);
      StarUnfolding su = star_unfolding(poly, p, cl);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      emit(star_scene(su, poly).to_svg(), svgOut);
      if (!jsonOut.empty()) {
        json r{{"pieces", su.pieces.size()}, {"edges", su.edges.size()}};
        write_text(jsonOut, r.dump(2) + "\n");
      }
      err << "star unfolding: " << su.pieces.size() << " pieces, " << su.edges.size() << " edges, " << secs << " s\n";
      return Ok;
    }

    if (*scan) {
      if (!poly.valid_face(*sinkFace)) throw UsageError("face id out of range");
      auto pts = region_samples(parse_region(region), grid);
      json samples = json::array();
      std::map<std::string, std::pair<size_t, size_t>> counts; // encoded -> (clean, flagged)
      std::vector<std::string> order;
      for (Vec2 x : pts) {
        SurfacePoint p{*sinkFace, x};
        if (!polygon_contains(poly.polygon(p.face), x, eps()))
          throw GeometryError(ErrorKind::PointNotOnSurface, "region leaves the face");
        StructureSignature sig = structure_signature(full_cut_locus(poly, p, opts, c.threads));
        bool flagged = sig.near_degenerate();
        auto [it, fresh] = counts.emplace(sig.encoded, std::make_pair(size_t{0}, size_t{0}));
        if (fresh) order.push_back(sig.encoded);
        (flagged ? it->second.second : it->second.first)++;
        size_t index = static_cast<size_t>(std::find(order.begin(), order.end(), sig.encoded) - order.begin());
        samples.push_back({{"point", vec(x)},
                           {"signature", index},
                           {"margin", std::isfinite(sig.degeneracyMargin) ? json(sig.degeneracyMargin) : json(nullptr)},
                           {"flagged", flagged}});
      }
      json sigs = json::array();
      size_t distinctClean = 0;
      for (const auto& s : order) {
        auto [clean, flagged] = counts[s];
        if (clean > 0) ++distinctClean;
        sigs.push_back({{"encoded", s}, {"samples", clean + flagged}, {"flagged", flagged}});
      }
      json r;
      r["solid"] = c.solid;
      r["face"] = *sinkFace;
      r["epsilon"] = eps();
      r["distinct_signatures"] = distinctClean;
      r["signatures"] = sigs;
      r["samples"] = samples;
      emit(r.dump(2) + "\n", jsonOut);
      return Ok;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const GeometryError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Validation;
  }
  return Usage;
}

} // namespace polycut::cli
