#pragma once

#include "polycut/cutlocus.h"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace polycut {

// A shortest path from p to q, as straight pieces in face coordinates.
struct Geodesic {
  std::vector<SurfaceSegment> pieces;
  double length = 0.;
  FacePath path;                    // generating face path
  std::vector<FacePath> provenance; // all paths merged into the generating copy
  Vec2 sourceImage;                 // in the frame of the face the geodesic ends in
};

// Memoizes cut_locus_on_face per (p, sink face). Safe to share between threads.
class CutLocusCache {
public:
  explicit CutLocusCache(CutLocusOptions options = {}) : options_(options) {}

  std::shared_ptr<const CutLocusOnFace> get(const Polyhedron& poly, const SurfacePoint& p, FaceId sink);
  size_t size() const;
  void clear();

private:
  using Key = std::tuple<const Polyhedron*, FaceId, double, double, FaceId, double>;
  CutLocusOptions options_;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const CutLocusOnFace>> entries_;
};

struct QueryOptions {
  // Closed-cell slack (length units); q counts toward every copy within min distance + tolerance.
  // Negative: open cells, so points on the cut locus get no geodesic.
  std::optional<double> tolerance; // default eps()
  CutLocusCache* cache = nullptr;
  CutLocusOptions cutLocus;
};

// All shortest paths, sorted by provenance.
std::vector<Geodesic> geodesics(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q,
                                const QueryOptions& options = {});

// Number of shortest paths; p == q gives 1.
int multiplicity(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q,
                 const QueryOptions& options = {});

double distance(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q,
                const QueryOptions& options = {});

// Shortest path length in a graph on a uniform barycentric lattice of every (fan-triangulated)
// face. Every graph edge is a straight segment inside one face, so the result never undercuts the
// true distance.
class MeshOracle {
public:
  explicit MeshOracle(const Polyhedron& poly, int n = 64, int reach = 4);

  double distance(const SurfacePoint& p, const SurfacePoint& q) const;
  size_t num_nodes() const { return nodes_.size(); }
  size_t num_edges() const { return adjacency_.size() / 2; }

private:
  const Polyhedron* poly_;
  std::vector<Vec3> nodes_;
  std::vector<size_t> offsets_; // CSR
  std::vector<std::pair<size_t, double>> adjacency_;
  std::vector<std::vector<size_t>> faceNodes_;
};

double mesh_dijkstra_distance(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q, int n = 64);

// Surviving unfoldings laid out around the source face (which sits at its canonical embedding),
// with each face's cut locus carried along.
struct StarUnfolding {
  struct Piece {
    FaceId sink = -1;
    FacePath path;
    Unfolding unfolding;   // anchored at the source face
    ConvexRegion cell;     // survivor's cell in the sink face, in source-face coordinates
    Vec2 sourceImage;      // where this piece places p; equals the source coordinates
  };
  struct Edge {
    FaceId sink = -1;
    FacePath path; // piece whose frame this copy of the edge lives in
    Vec2 a;
    Vec2 b;
  };
  SurfacePoint source;
  std::vector<Piece> pieces;
  std::vector<Edge> edges;
};

StarUnfolding star_unfolding(const Polyhedron& poly, const SurfacePoint& p, const CutLocusOptions& options = {});
StarUnfolding star_unfolding(const Polyhedron& poly, const SurfacePoint& p, const FullCutLocus& cl);

} // namespace polycut
