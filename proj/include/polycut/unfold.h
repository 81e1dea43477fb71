#pragma once

#include "polycut/geometry.h"
#include "polycut/polyhedron.h"

#include <limits>
#include <optional>
#include <vector>

namespace polycut {

// A simple path in the face graph: consecutive faces share an edge, no face repeats.
struct FacePath {
  std::vector<FaceId> faces;

  FaceId front() const { return faces.front(); }
  FaceId back() const { return faces.back(); }
  size_t size() const { return faces.size(); }
  auto operator<=>(const FacePath&) const = default;
};

bool is_face_path(const Polyhedron& poly, const FacePath& path);

// All simple paths source -> sink, in lexicographic order. maxFaces bounds the path length.
std::vector<FacePath> enumerate_face_paths(const Polyhedron& poly, FaceId source, FaceId sink,
                                           size_t maxFaces = std::numeric_limits<size_t>::max());

// Planar layout of a face path: motions[i] maps canonical coordinates of path.faces[i] to the plane.
class Unfolding {
public:
  Unfolding() = default;
  Unfolding(FacePath path, std::vector<Motion2> motions, const Polyhedron& poly);

  const FacePath& path() const { return path_; }
  const std::vector<Motion2>& motions() const { return motions_; }
  const Motion2& motion(size_t i) const { return motions_[i]; }
  const std::vector<Vec2>& placed(size_t i) const { return placed_[i]; }
  const std::vector<std::vector<Vec2>>& placed_polygons() const { return placed_; }
  size_t size() const { return path_.size(); }

  std::optional<size_t> index_of(FaceId f) const;

  // Placed shared edge between path faces i and i+1, as traversed by face i.
  std::pair<Vec2, Vec2> portal(size_t i) const { return portals_[i]; }

  // The same layout composed with a rigid motion of the plane.
  Unfolding moved(const Motion2& m) const;

private:
  FacePath path_;
  std::vector<Motion2> motions_;
  std::vector<std::vector<Vec2>> placed_;
  std::vector<std::pair<Vec2, Vec2>> portals_;
};

// Rigid motion taking the canonical embedding of base.face onto `base`. Throws BaseNotIsometric.
Motion2 motion_from_embedding(const Polyhedron& poly, const FaceEmbedding& base);

// The unique unfolding whose restriction to the path's last face is `sinkMotion` (applied to the
// canonical embedding). Built from the sink backwards.
Unfolding unfold_path(const Polyhedron& poly, const FacePath& path, const Motion2& sinkMotion = {});
Unfolding unfold_path(const Polyhedron& poly, const FacePath& path, const FaceEmbedding& base);

// Same unfolding, built from the first face forwards with the first face at `sourceMotion`.
Unfolding unfold_path_forward(const Polyhedron& poly, const FacePath& path, const Motion2& sourceMotion = {});

// Re-anchors so that face `anchorIndex` of the path sits at its canonical embedding.
Unfolding reanchor(const Unfolding& u, size_t anchorIndex);

Vec2 image_of_point(const Unfolding& u, const SurfacePoint& p);

// One straight piece of a surface path, in the coordinates of `face`.
struct SurfaceSegment {
  FaceId face = -1;
  Vec2 start;
  Vec2 end;
  double length() const { return norm(end - start); }
};

// Splits the planar segment a-b at placed face boundaries and maps every piece back to its face.
// Throws SegmentEscapesUnfolding if part of the segment is outside all placed faces.
std::vector<SurfaceSegment> pullback_segment(const Unfolding& u, Vec2 a, Vec2 b);

} // namespace polycut
