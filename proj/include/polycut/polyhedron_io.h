#pragma once

#include "polycut/polyhedron.h"

#include <istream>
#include <string>

namespace polycut {

// {"vertices": [[x,y,z],...], "faces": [[i,j,k,...],...]}, optionally "first_edge_angles": [...]
Polyhedron read_polyhedron_json(std::istream& in);
std::string write_polyhedron_json(const Polyhedron& poly);

// OFF: header "OFF", "V F E" counts, vertex lines, then "n i0 i1 ..." face lines. '#' starts a comment.
Polyhedron read_polyhedron_off(std::istream& in);

// Builtin solid name, or a path ending in .json / .off.
Polyhedron load_polyhedron(const std::string& solidOrPath);

} // namespace polycut
