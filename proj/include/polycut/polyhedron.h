#pragma once

#include "polycut/geometry.h"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycut {

using FaceId = int;

// An edge of the surface. `left` traverses v0 -> v1, `right` traverses v1 -> v0.
struct Edge {
  int v0 = -1;
  int v1 = -1;
  FaceId left = -1;
  FaceId right = -1;
};

// Canonical isometric embedding of one face into the plane.
struct FaceEmbedding {
  FaceId face = -1;
  std::vector<Vec2> vertices; // counter-clockwise, aligned with the face's vertex cycle

  // 3D frame: point(x, y) = origin + x * xAxis + y * yAxis
  Vec3 origin;
  Vec3 xAxis;
  Vec3 yAxis;
  Vec3 normal; // outward

  Vec3 lift(Vec2 p) const { return origin + p.x * xAxis + p.y * yAxis; }
  Vec2 project(Vec3 p) const { return {dot(p - origin, xAxis), dot(p - origin, yAxis)}; }
  double height(Vec3 p) const { return dot(p - origin, normal); }
};

struct SurfacePoint {
  FaceId face = -1;
  Vec2 coords;
};

struct BuildOptions {
  // Per-face angle (radians) of the first listed edge's direction in the canonical embedding.
  // Missing entries default to 0, i.e. the first edge points along +x.
  std::vector<double> firstEdgeAngle;
};

class Polyhedron {
public:
  // Validates and builds. Throws GeometryError on any violated invariant.
  static Polyhedron build(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces,
                          const BuildOptions& options = {});

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_faces() const { return faces_.size(); }
  size_t num_edges() const { return edges_.size(); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<FaceId>>& face_graph() const { return faceGraph_; }
  const std::vector<double>& first_edge_angles() const { return firstEdgeAngle_; }

  const FaceEmbedding& embedding(FaceId f) const { return embeddings_.at(f); }
  const std::vector<Vec2>& polygon(FaceId f) const { return embeddings_.at(f).vertices; }

  bool valid_face(FaceId f) const { return f >= 0 && static_cast<size_t>(f) < faces_.size(); }
  bool adjacent(FaceId a, FaceId b) const;

  // Index k of the edge (faces[f][k], faces[f][k+1]) of face f that is shared with g, if any.
  std::optional<int> shared_edge_slot(FaceId f, FaceId g) const;

  Vec3 to_space(const SurfacePoint& p) const { return embedding(p.face).lift(p.coords); }
  // Same surface point expressed in another face's coordinates (no containment check).
  Vec2 to_face(const SurfacePoint& p, FaceId f) const { return embedding(f).project(to_space(p)); }

  // Length scale used for relative checks: the largest vertex distance from the centroid.
  double radius() const { return radius_; }

private:
  std::vector<Vec3> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<Edge> edges_;
  std::vector<std::vector<FaceId>> faceGraph_;
  std::vector<std::vector<FaceId>> neighborAcross_; // neighborAcross_[f][k]: face across slot k
  std::vector<FaceEmbedding> embeddings_;
  std::vector<double> firstEdgeAngle_;
  double radius_ = 0.;
};

inline Polyhedron build_polyhedron(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces,
                                   const BuildOptions& options = {}) {
  return Polyhedron::build(std::move(vertices), std::move(faces), options);
}

inline const double kDefaultEdgeLength = 2. * std::sqrt(3.);

// Platonic solids scaled so that every edge has length `edgeLength`.
// "tetrahedron" and "octahedron" use the face labels and face frames of the classical
// cut-locus figures (face 0 pointing up, centered at the origin).
Polyhedron builtin_solid(std::string_view name, double edgeLength = kDefaultEdgeLength);
std::vector<std::string> builtin_solid_names();

// All faces whose closed polygon contains the point within tolerance.
std::vector<FaceId> faces_containing(const Polyhedron& poly, const SurfacePoint& p);
std::vector<FaceId> faces_containing(const Polyhedron& poly, Vec3 p);

// Containment test for a convex counter-clockwise polygon, with tolerance `tol` (length units).
bool polygon_contains(const std::vector<Vec2>& polygon, Vec2 p, double tol);

// Distance from p to the polygon boundary.
double distance_to_boundary(const std::vector<Vec2>& polygon, Vec2 p);

// Point from barycentric weights over the face's vertices (weights are normalized).
SurfacePoint from_barycentric(const Polyhedron& poly, FaceId f, const std::vector<double>& weights);

} // namespace polycut
