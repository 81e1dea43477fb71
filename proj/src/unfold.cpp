#include "polycut/unfold.h"

#include "polycut/errors.h"
#include "polycut/planar.h"
#include "polycut/tolerance.h"

#include <algorithm>

namespace polycut {

bool is_face_path(const Polyhedron& poly, const FacePath& path) {
  if (path.faces.empty()) return false;
  std::vector<bool> seen(poly.num_faces(), false);
  for (size_t i = 0; i < path.size(); ++i) {
    FaceId f = path.faces[i];
    if (!poly.valid_face(f) || seen[f]) return false;
    seen[f] = true;
    if (i > 0 && !poly.adjacent(path.faces[i - 1], f)) return false;
  }
  return true;
}

std::vector<FacePath> enumerate_face_paths(const Polyhedron& poly, FaceId source, FaceId sink, size_t maxFaces) {
  if (!poly.valid_face(source) || !poly.valid_face(sink))
    throw GeometryError(ErrorKind::InvalidInput, "invalid face id");
  std::vector<FacePath> out;
  std::vector<FaceId> stack{source};
  std::vector<bool> onPath(poly.num_faces(), false);
  onPath[source] = true;

  // Iterative DFS over (face, next-neighbor cursor); neighbors are sorted, so output is lexicographic.
  std::vector<size_t> cursor{0};
  if (source == sink) {
    out.push_back({stack});
    return out;
  }
  while (!stack.empty()) {
    FaceId f = stack.back();
    size_t& c = cursor.back();
    const auto& nb = poly.face_graph()[f];
    if (c >= nb.size() || stack.size() >= maxFaces) {
      onPath[f] = false;
      stack.pop_back();
      cursor.pop_back();
      continue;
    }
    FaceId g = nb[c++];
    if (onPath[g]) continue;
    if (g == sink) {
      FacePath p{stack};
      p.faces.push_back(g);
      out.push_back(std::move(p));
      continue;
    }
    onPath[g] = true;
    stack.push_back(g);
    cursor.push_back(0);
  }
  return out;
}

namespace {

// Canonical positions (in faces f and g) of the endpoints of their shared edge, ordered as
// face f traverses it.
struct SharedEdge {
  Vec2 aInF, bInF, aInG, bInG;
};

SharedEdge shared_edge(const Polyhedron& poly, FaceId f, FaceId g) {
  auto slot = poly.shared_edge_slot(f, g);
  if (!slot) throw GeometryError(ErrorKind::InvalidInput, "faces are not adjacent");
  const auto& cycleF = poly.faces()[f];
  const auto& cycleG = poly.faces()[g];
  const size_t k = static_cast<size_t>(*slot);
  int a = cycleF[k], b = cycleF[(k + 1) % cycleF.size()];
  auto posInG = [&](int v) {
    auto it = std::find(cycleG.begin(), cycleG.end(), v);
    return poly.polygon(g)[static_cast<size_t>(it - cycleG.begin())];
  };
  return {poly.polygon(f)[k], poly.polygon(f)[(k + 1) % cycleF.size()], posInG(a), posInG(b)};
}

} // namespace

Unfolding::Unfolding(FacePath path, std::vector<Motion2> motions, const Polyhedron& poly)
    : path_(std::move(path)), motions_(std::move(motions)) {
  for (size_t i = 0; i < path_.size(); ++i) {
    std::vector<Vec2> placed;
    for (Vec2 v : poly.polygon(path_.faces[i])) placed.push_back(motions_[i](v));
    placed_.push_back(std::move(placed));
  }
  for (size_t i = 0; i + 1 < path_.size(); ++i) {
    SharedEdge e = shared_edge(poly, path_.faces[i], path_.faces[i + 1]);
    portals_.push_back({motions_[i](e.aInF), motions_[i](e.bInF)});
  }
}

std::optional<size_t> Unfolding::index_of(FaceId f) const {
  auto it = std::find(path_.faces.begin(), path_.faces.end(), f);
  if (it == path_.faces.end()) return std::nullopt;
  return static_cast<size_t>(it - path_.faces.begin());
}

Unfolding Unfolding::moved(const Motion2& m) const {
  Unfolding u = *this;
  for (auto& mo : u.motions_) mo = m.compose(mo);
  for (auto& poly : u.placed_)
    for (Vec2& v : poly) v = m(v);
  for (auto& [a, b] : u.portals_) {
    a = m(a);
    b = m(b);
  }
  return u;
}

Motion2 motion_from_embedding(const Polyhedron& poly, const FaceEmbedding& base) {
  if (!poly.valid_face(base.face)) throw GeometryError(ErrorKind::BaseNotIsometric, "invalid face id");
  const auto& canon = poly.polygon(base.face);
  if (base.vertices.size() != canon.size())
    throw GeometryError(ErrorKind::BaseNotIsometric, "vertex count does not match the face");
  if (norm(base.vertices[1] - base.vertices[0]) <= eps())
    throw GeometryError(ErrorKind::BaseNotIsometric, "degenerate base embedding");
  Motion2 m = Motion2::align(canon[0], canon[1], base.vertices[0], base.vertices[1]);
  for (size_t k = 0; k < canon.size(); ++k) {
    if (norm(m(canon[k]) - base.vertices[k]) > eps())
      throw GeometryError(ErrorKind::BaseNotIsometric, "base is not an orientation-preserving isometric copy of the face");
  }
  return m;
}

Unfolding unfold_path(const Polyhedron& poly, const FacePath& path, const Motion2& sinkMotion) {
  if (!is_face_path(poly, path)) throw GeometryError(ErrorKind::InvalidInput, "not a face path");
  const size_t n = path.size();
  std::vector<Motion2> motions(n);
  motions[n - 1] = sinkMotion;
  for (size_t i = n - 1; i-- > 0;) {
    SharedEdge e = shared_edge(poly, path.faces[i], path.faces[i + 1]);
    const Motion2& next = motions[i + 1];
    motions[i] = Motion2::align(e.aInF, e.bInF, next(e.aInG), next(e.bInG));
  }
  return Unfolding(path, std::move(motions), poly);
}

Unfolding unfold_path(const Polyhedron& poly, const FacePath& path, const FaceEmbedding& base) {
  if (path.faces.empty() || base.face != path.back())
    throw GeometryError(ErrorKind::BaseNotIsometric, "base embedding is not of the path's last face");
  return unfold_path(poly, path, motion_from_embedding(poly, base));
}

Unfolding unfold_path_forward(const Polyhedron& poly, const FacePath& path, const Motion2& sourceMotion) {
  if (!is_face_path(poly, path)) throw GeometryError(ErrorKind::InvalidInput, "not a face path");
  const size_t n = path.size();
  std::vector<Motion2> motions(n);
  motions[0] = sourceMotion;
  for (size_t i = 1; i < n; ++i) {
    SharedEdge e = shared_edge(poly, path.faces[i - 1], path.faces[i]);
    const Motion2& prev = motions[i - 1];
    motions[i] = Motion2::align(e.aInG, e.bInG, prev(e.aInF), prev(e.bInF));
  }
  return Unfolding(path, std::move(motions), poly);
}

Unfolding reanchor(const Unfolding& u, size_t anchorIndex) { return u.moved(u.motion(anchorIndex).inverse()); }

Vec2 image_of_point(const Unfolding& u, const SurfacePoint& p) {
  auto idx = u.index_of(p.face);
  if (!idx) throw GeometryError(ErrorKind::FaceNotOnPath, "face " + std::to_string(p.face) + " is not on the path");
  return u.motion(*idx)(p.coords);
}

std::vector<SurfaceSegment> pullback_segment(const Unfolding& u, Vec2 a, Vec2 b) {
  const double tol = eps();
  const Vec2 d = b - a;
  const double len = norm(d);
  std::vector<std::optional<std::pair<double, double>>> spans;
  for (size_t i = 0; i < u.size(); ++i) spans.push_back(clip_segment(a, b, u.placed(i), tol));

  auto piece = [&](size_t i, double t0, double t1) {
    Motion2 inv = u.motion(i).inverse();
    return SurfaceSegment{u.path().faces[i], inv(a + t0 * d), inv(a + t1 * d)};
  };

  std::vector<SurfaceSegment> out;
  if (len <= tol) {
    for (size_t i = 0; i < u.size(); ++i) {
      if (spans[i]) return {piece(i, 0., 0.)};
    }
    throw GeometryError(ErrorKind::SegmentEscapesUnfolding, "point is outside the unfolding");
  }

  // Greedy interval cover; ties go to the earliest face along the path.
  const double slack = tol / len;
  double t = 0.;
  while (t < 1. - slack) {
    std::optional<size_t> best;
    for (size_t i = 0; i < spans.size(); ++i) {
      if (!spans[i]) continue;
      auto [s0, s1] = *spans[i];
      if (s0 > t + slack || s1 <= t + slack) continue;
      if (!best || s1 > spans[*best]->second + slack) best = i;
    }
    if (!best) throw GeometryError(ErrorKind::SegmentEscapesUnfolding, "segment leaves the unfolding");
    double t1 = spans[*best]->second;
    out.push_back(piece(*best, t, t1));
    t = t1;
  }
  if (!out.empty()) {
    // Snap the final endpoint exactly onto b's preimage.
    size_t last = *u.index_of(out.back().face);
    out.back().end = u.motion(last).inverse()(b);
  }
  return out;
}

} // namespace polycut
