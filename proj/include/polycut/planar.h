#pragma once

#include "polycut/geometry.h"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace polycut {

// {x : normal . x <= offset}
struct HalfPlane {
  Vec2 normal;
  double offset = 0.;

  double signed_distance(Vec2 p) const { return dot(normal, p) - offset; }
};

// Half-plane of points at least as close to p as to q. Throws CoincidentPoints.
HalfPlane bisector(Vec2 p, Vec2 q);

// Bounded convex polygon, counter-clockwise. May be degenerate after clipping: empty, a single
// point, or a segment (two vertices).
struct ConvexRegion {
  std::vector<Vec2> vertices;

  bool empty() const { return vertices.empty(); }
  double area() const;
  double diameter() const;
  bool contains(Vec2 p, double tol) const;
};

ConvexRegion make_box(Vec2 lo, Vec2 hi);

// Boundary edges carry a label: >= 0 for the generator whose bisector produced it, < 0 for the
// clip polygon edge (-1 - index).
struct LabeledRegion {
  std::vector<Vec2> vertices;
  std::vector<int> edgeLabels; // edge i runs vertices[i] -> vertices[i+1]

  static LabeledRegion from_clip(const ConvexRegion& clip);
  ConvexRegion region() const { return {vertices}; }
};

// Sutherland-Hodgman step; vertices within tol of the boundary line count as on it, and edges
// lying on the line take `label`.
LabeledRegion clip_halfplane(const LabeledRegion& r, const HalfPlane& h, int label, double tol);

ConvexRegion clip_to_polygon(const ConvexRegion& r, const ConvexRegion& poly);

// Parameter interval [t0, t1] of a + t (b - a), t in [0, 1], inside a convex polygon.
std::optional<std::pair<double, double>> clip_segment(Vec2 a, Vec2 b, const std::vector<Vec2>& polygon, double tol);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

struct SegmentCover {
  bool covered = false;
  std::vector<Vec2> splits; // interior crossing points with polygon boundaries, ordered from a to b
};

// Whether every piece of a-b (split at polygon boundary crossings) lies in some polygon.
SegmentCover segment_in_polygons(Vec2 a, Vec2 b, const std::vector<std::vector<Vec2>>& polygons);

LabeledRegion voronoi_cell_labeled(size_t i, const std::vector<Vec2>& gens, const ConvexRegion& clip);
ConvexRegion voronoi_cell(size_t i, const std::vector<Vec2>& gens, const ConvexRegion& clip);

struct VoronoiEdge {
  std::pair<int, int> label; // generator indices, first < second
  Vec2 a;
  Vec2 b;
};

struct VoronoiVertex {
  std::set<int> label; // generators equidistant from the point, |label| >= 3
  Vec2 point;
  int degree = 0;          // incident diagram edges
  bool onBoundary = false; // lies on the clip boundary
};

// Where a diagram edge meets the clip boundary.
struct BoundaryPoint {
  std::set<int> label;
  Vec2 point;
};

struct VoronoiDiagram {
  std::vector<Vec2> generators;
  ConvexRegion clip;
  std::vector<LabeledRegion> cells;
  std::vector<VoronoiEdge> edges;
  std::vector<VoronoiVertex> vertices;
  std::vector<BoundaryPoint> boundaryPoints;
};

// Generators must be pairwise distinct (callers dedup).
VoronoiDiagram voronoi_diagram(const std::vector<Vec2>& gens, const ConvexRegion& clip);

// Axis-aligned box around all the given points, inflated 3x about its center.
ConvexRegion bounding_clip(const std::vector<Vec2>& points);

} // namespace polycut
