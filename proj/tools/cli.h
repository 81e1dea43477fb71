#pragma once

#include "polycut/cutlocus.h"
#include "polycut/polyhedron.h"
#include "polycut/query.h"
#include "polycut/svg.h"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace polycut::cli {

enum ExitCode { Ok = 0, Usage = 2, Validation = 3, Degenerate = 4 };

// Raised for malformed arguments (bad point spec, face id out of range, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "FACE:(x,y)" in canonical face coordinates or "FACE:bary(w0,w1,...)".
SurfacePoint parse_point_spec(const Polyhedron& poly, const std::string& spec);

// "(x,y),(x,y),..." polygon (or segment) in face coordinates.
std::vector<Vec2> parse_region(const std::string& spec);

// Sample points of a region: a segment gets n interior points, a triangle an n-by-n grid of cell
// centers mapped onto it, any other polygon the interior points of an n-by-n box grid.
std::vector<Vec2> region_samples(const std::vector<Vec2>& region, int n);

nlohmann::ordered_json face_report(const CutLocusOnFace& face);
nlohmann::ordered_json geodesic_report(const std::vector<Geodesic>& gs);
Scene face_scene(const CutLocusOnFace& face, const Polyhedron& poly);
Scene star_scene(const StarUnfolding& star, const Polyhedron& poly);

// Runs one invocation; args exclude the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polycut::cli
