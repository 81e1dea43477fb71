#pragma once

#include "polycut/planar.h"
#include "polycut/polyhedron.h"
#include "polycut/unfold.h"

#include <limits>
#include <string>
#include <vector>

namespace polycut {

// One copy of the source point: the image of p under the unfolding of a face path ending at the
// sink. Distinct paths whose images coincide are merged; `provenance` lists all of them.
struct SourceCandidate {
  FacePath path;       // path of `unfolding`
  Unfolding unfolding; // unfolding w.r.t. the sink embedding
  Vec2 image;
  std::vector<FacePath> provenance; // sorted; provenance.front() is the ordering key
  std::vector<Unfolding> alternates; // unfoldings of the other provenance paths

  const FacePath& key() const { return provenance.front(); }
};

struct CutLocusOptions {
  // Skip paths whose straight-line corridor (the cone from the source image through every shared
  // edge) is empty; such copies can never satisfy the per-point test anywhere in the sink face.
  bool starPrefilter = true;
  size_t maxPathFaces = std::numeric_limits<size_t>::max();
};

struct CutLocusOnFace {
  FaceId sink = -1;
  Motion2 sinkMotion;      // placement of the sink face; identity = canonical embedding
  ConvexRegion face;       // placed sink polygon
  VoronoiDiagram diagram;  // generators = survivor images, clipped to `face`
  std::vector<SourceCandidate> survivors;
  size_t pathsEnumerated = 0;
  size_t initialCandidates = 0;
  size_t removals = 0;

  bool has_cut_locus() const { return !diagram.edges.empty(); }
};

// Record of the refinement loop, for inspection and property tests.
struct CutLocusTrace {
  struct Step {
    std::vector<FacePath> keys;       // candidate keys at this step
    std::vector<ConvexRegion> cells;  // their cells, clipped to the sink face
    FacePath removed;                 // key of the candidate removed after this step
  };
  std::vector<Step> steps;
};

// Per-point test: the segment from the source image to q crosses the path's faces in order,
// entering and leaving each through its shared edges, and stays inside the unfolding.
bool has_star_property(const Unfolding& u, Vec2 sourceImage, Vec2 q);

// True iff every point of cell ∩ (placed last face) has the property (checked on the vertices of
// that convex polygon). An empty intersection passes.
bool filter(const Unfolding& u, Vec2 sourceImage, const ConvexRegion& cell);

// Whether some point of the last face can have the property at all.
bool star_region_nonempty(const Unfolding& u, Vec2 sourceImage);

// All (deduplicated) copies of p for the sink face, sorted by key.
std::vector<SourceCandidate> source_candidates(const Polyhedron& poly, const SurfacePoint& p, FaceId sink,
                                               const Motion2& sinkMotion = {}, const CutLocusOptions& options = {},
                                               size_t* pathsEnumerated = nullptr);

CutLocusOnFace cut_locus_on_face(const Polyhedron& poly, const SurfacePoint& p, FaceId sink,
                                 const Motion2& sinkMotion = {}, const CutLocusOptions& options = {},
                                 CutLocusTrace* trace = nullptr);

// Indexed by face id.
using FullCutLocus = std::vector<CutLocusOnFace>;

FullCutLocus full_cut_locus(const Polyhedron& poly, const SurfacePoint& p, const CutLocusOptions& options = {},
                            unsigned threads = 0);

std::string path_string(const FacePath& path); // "3-1-0"

// Canonical combinatorial encoding of a cut locus. Generators are identified by their face paths,
// which are stable while p moves inside a region of constant structure.
struct StructureSignature {
  struct Face {
    FaceId face = -1;
    std::vector<std::string> cells;
    std::vector<std::string> edges;
    std::vector<std::string> vertices;
    std::vector<std::string> boundary;
  };
  std::vector<Face> faces;
  std::string encoded;
  // Smallest separation between distinct features that were not merged; values within a few
  // tolerances of zero mean the sample sits next to a structural transition.
  double degeneracyMargin = std::numeric_limits<double>::infinity();

  bool near_degenerate(double factor = 10.) const;
  friend bool operator==(const StructureSignature& a, const StructureSignature& b) { return a.encoded == b.encoded; }
};

StructureSignature structure_signature(const FullCutLocus& cl);

} // namespace polycut
