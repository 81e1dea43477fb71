#include "polycut/polyhedron.h"

#include "polycut/errors.h"
#include "polycut/tolerance.h"

#include <algorithm>
#include <array>
#include <map>
#include <numbers>
#include <sstream>

namespace polycut {

namespace {

std::string face_msg(size_t f, const std::string& what) {
  std::ostringstream os;
  os << "face " << f << " " << what;
  return os.str();
}

// Newell normal; its length is twice the polygon area.
Vec3 newell_normal(const std::vector<Vec3>& pts) {
  Vec3 n;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec3& a = pts[i];
    const Vec3& b = pts[(i + 1) % pts.size()];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return n;
}

Vec3 area_centroid(const std::vector<Vec3>& pts, Vec3 normal) {
  Vec3 anchor = pts[0];
  Vec3 acc;
  double total = 0.;
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    double w = dot(cross(pts[i] - anchor, pts[i + 1] - anchor), normal);
    acc += w * ((anchor + pts[i] + pts[i + 1]) / 3.);
    total += w;
  }
  return acc / total;
}

} // namespace

Polyhedron Polyhedron::build(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces,
                             const BuildOptions& options) {
  const double tol = eps();
  if (vertices.size() < 4) throw GeometryError(ErrorKind::InvalidInput, "need at least 4 vertices");
  if (faces.size() < 4) throw GeometryError(ErrorKind::InvalidInput, "need at least 4 faces");
  for (const Vec3& v : vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
      throw GeometryError(ErrorKind::InvalidInput, "non-finite vertex coordinate");
  }
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() < 3) throw GeometryError(ErrorKind::InvalidInput, face_msg(f, "has fewer than 3 vertices"));
    for (int v : face) {
      if (v < 0 || static_cast<size_t>(v) >= vertices.size())
        throw GeometryError(ErrorKind::InvalidInput, face_msg(f, "references a missing vertex"));
    }
    std::vector<int> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GeometryError(ErrorKind::InvalidInput, face_msg(f, "repeats a vertex"));
  }

  Polyhedron poly;
  poly.vertices_ = std::move(vertices);
  poly.faces_ = std::move(faces);
  const size_t nF = poly.faces_.size();
  poly.firstEdgeAngle_.assign(nF, 0.);
  for (size_t f = 0; f < nF && f < options.firstEdgeAngle.size(); ++f) poly.firstEdgeAngle_[f] = options.firstEdgeAngle[f];

  // Planarity and canonical embeddings.
  poly.embeddings_.resize(nF);
  for (size_t f = 0; f < nF; ++f) {
    std::vector<Vec3> pts;
    for (int v : poly.faces_[f]) pts.push_back(poly.vertices_[v]);
    Vec3 n = newell_normal(pts);
    if (norm(n) <= tol) throw GeometryError(ErrorKind::NonPlanarFace, face_msg(f, "has zero area"));
    n = normalize(n);
    Vec3 c = area_centroid(pts, n);
    for (const Vec3& p : pts) {
      if (std::abs(dot(p - c, n)) > tol) throw GeometryError(ErrorKind::NonPlanarFace, face_msg(f, "is not planar"));
    }
    Vec3 x = pts[1] - pts[0];
    x = normalize(x - dot(x, n) * n);
    Vec3 y = cross(n, x);
    double th = poly.firstEdgeAngle_[f];
    double ct = std::cos(th), st = std::sin(th);

    FaceEmbedding& emb = poly.embeddings_[f];
    emb.face = static_cast<FaceId>(f);
    emb.origin = c;
    emb.normal = n;
    emb.xAxis = ct * x - st * y;
    emb.yAxis = st * x + ct * y;
    for (const Vec3& p : pts) emb.vertices.push_back(emb.project(p));

    // Strict convexity in the face's own frame (the frame is counter-clockwise by construction).
    const auto& poly2 = emb.vertices;
    const size_t k = poly2.size();
    for (size_t i = 0; i < k; ++i) {
      Vec2 a = poly2[i], b = poly2[(i + 1) % k], d = poly2[(i + 2) % k];
      double turn = cross(normalize(b - a), d - b);
      if (turn <= tol) throw GeometryError(ErrorKind::NonConvexFace, face_msg(f, "is not strictly convex"));
    }
  }

  // Edges: each undirected edge must be used exactly twice, in opposite directions.
  std::map<std::pair<int, int>, std::vector<std::pair<FaceId, int>>> uses; // -> (face, slot)
  for (size_t f = 0; f < nF; ++f) {
    const auto& face = poly.faces_[f];
    for (size_t k = 0; k < face.size(); ++k) {
      int a = face[k], b = face[(k + 1) % face.size()];
      uses[{std::min(a, b), std::max(a, b)}].push_back({static_cast<FaceId>(f), static_cast<int>(k)});
    }
  }
  poly.neighborAcross_.assign(nF, {});
  for (size_t f = 0; f < nF; ++f) poly.neighborAcross_[f].assign(poly.faces_[f].size(), -1);
  for (const auto& [key, list] : uses) {
    if (list.size() != 2) {
      std::ostringstream os;
      os << "edge (" << key.first << ", " << key.second << ") is shared by " << list.size() << " faces";
      throw GeometryError(ErrorKind::NonManifoldEdge, os.str());
    }
    auto [f0, k0] = list[0];
    auto [f1, k1] = list[1];
    int a0 = poly.faces_[f0][k0];
    int a1 = poly.faces_[f1][k1];
    if (a0 == a1) {
      std::ostringstream os;
      os << "faces " << f0 << " and " << f1 << " traverse their shared edge in the same direction";
      throw GeometryError(ErrorKind::InconsistentOrientation, os.str());
    }
    Edge e;
    e.v0 = a0;
    e.v1 = poly.faces_[f0][(k0 + 1) % poly.faces_[f0].size()];
    e.left = f0;
    e.right = f1;
    poly.edges_.push_back(e);
    poly.neighborAcross_[f0][k0] = f1;
    poly.neighborAcross_[f1][k1] = f0;
  }

  long euler = static_cast<long>(poly.vertices_.size()) - static_cast<long>(poly.edges_.size()) + static_cast<long>(nF);
  if (euler != 2) {
    throw GeometryError(ErrorKind::BadEulerCharacteristic, "V - E + F = " + std::to_string(euler));
  }

  Vec3 center;
  for (const Vec3& v : poly.vertices_) center += v;
  center = center / static_cast<double>(poly.vertices_.size());

  // Signed volume tells whether the (consistent) orientation faces outward.
  double volume = 0.;
  for (size_t f = 0; f < nF; ++f) {
    const auto& face = poly.faces_[f];
    for (size_t k = 1; k + 1 < face.size(); ++k) {
      volume += dot(poly.vertices_[face[0]] - center,
                    cross(poly.vertices_[face[k]] - center, poly.vertices_[face[k + 1]] - center));
    }
  }
  if (volume <= 0.)
    throw GeometryError(ErrorKind::InconsistentOrientation, "faces are not counter-clockwise seen from outside");

  for (size_t f = 0; f < nF; ++f) {
    const FaceEmbedding& emb = poly.embeddings_[f];
    for (size_t v = 0; v < poly.vertices_.size(); ++v) {
      if (emb.height(poly.vertices_[v]) > tol) {
        std::ostringstream os;
        os << "vertex " << v << " lies outside the plane of face " << f;
        throw GeometryError(ErrorKind::NotConvex, os.str());
      }
    }
  }

  poly.faceGraph_.assign(nF, {});
  for (size_t f = 0; f < nF; ++f) {
    auto nb = poly.neighborAcross_[f];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    poly.faceGraph_[f] = nb;
  }

  for (const Vec3& v : poly.vertices_) poly.radius_ = std::max(poly.radius_, norm(v - center));
  return poly;
}

bool Polyhedron::adjacent(FaceId a, FaceId b) const {
  const auto& nb = faceGraph_.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> Polyhedron::shared_edge_slot(FaceId f, FaceId g) const {
  const auto& across = neighborAcross_.at(f);
  for (size_t k = 0; k < across.size(); ++k) {
    if (across[k] == g) return static_cast<int>(k);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Builtin solids

namespace {

// Faces of the convex hull of a small point set in general convex position; each face is a
// maximal coplanar vertex set ordered counter-clockwise seen from outside.
std::vector<std::vector<int>> hull_faces(const std::vector<Vec3>& pts) {
  const size_t n = pts.size();
  const double tol = 1e-9;
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> seen;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (norm(nrm) < tol) continue;
        nrm = normalize(nrm);
        bool pos = false, neg = false;
        std::vector<int> on;
        for (size_t m = 0; m < n; ++m) {
          double h = dot(pts[m] - pts[i], nrm);
          if (h > tol) pos = true;
          else if (h < -tol) neg = true;
          else on.push_back(static_cast<int>(m));
        }
        if (pos && neg) continue;
        if (pos) nrm = -1. * nrm;
        if (std::find(seen.begin(), seen.end(), on) != seen.end()) continue;
        seen.push_back(on);

        Vec3 c;
        for (int m : on) c += pts[m];
        c = c / static_cast<double>(on.size());
        Vec3 ax = normalize(pts[on[0]] - c);
        Vec3 ay = cross(nrm, ax);
        std::vector<int> ordered = on;
        std::sort(ordered.begin(), ordered.end(), [&](int a, int b) {
          return std::atan2(dot(pts[a] - c, ay), dot(pts[a] - c, ax)) <
                 std::atan2(dot(pts[b] - c, ay), dot(pts[b] - c, ax));
        });
        auto low = std::min_element(ordered.begin(), ordered.end());
        std::rotate(ordered.begin(), low, ordered.end());
        faces.push_back(ordered);
      }
  // Deterministic face order: top to bottom, then by azimuth.
  auto key = [&](const std::vector<int>& f) {
    Vec3 c;
    for (int m : f) c += pts[m];
    c = c / static_cast<double>(f.size());
    return std::make_pair(-std::round(c.z * 1e6), std::atan2(c.y, c.x));
  };
  std::sort(faces.begin(), faces.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return faces;
}

Polyhedron scaled_hull(std::vector<Vec3> pts, double currentEdge, double edgeLength) {
  for (Vec3& p : pts) p = (edgeLength / currentEdge) * p;
  auto faces = hull_faces(pts);
  return Polyhedron::build(std::move(pts), std::move(faces));
}

} // namespace

std::vector<std::string> builtin_solid_names() {
  return {"tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron"};
}

Polyhedron builtin_solid(std::string_view name, double edgeLength) {
  if (!(edgeLength > 0.) || !std::isfinite(edgeLength))
    throw GeometryError(ErrorKind::InvalidInput, "scale must be positive");
  const double s3 = std::sqrt(3.);
  const double scale = edgeLength / (2. * s3);
  const double pi = std::numbers::pi;

  if (name == "tetrahedron") {
    // Face 0 is the upward triangle of the classical net; faces 1, 2, 3 sit across its right,
    // left and bottom edges and are framed as downward triangles (first edge pointing along -x).
    std::vector<Vec3> v = {{-s3, -1., 0.}, {s3, -1., 0.}, {0., 2., 0.}, {0., 0., -2. * std::sqrt(2.)}};
    for (Vec3& p : v) p = scale * p;
    std::vector<std::vector<int>> f = {{0, 1, 2}, {3, 2, 1}, {2, 3, 0}, {1, 0, 3}};
    BuildOptions opt;
    opt.firstEdgeAngle = {0., pi, pi, pi};
    return Polyhedron::build(std::move(v), std::move(f), opt);
  }
  if (name == "octahedron") {
    // Faces 0-3 surround the north pole (upward triangles, pole on top), faces 4-7 mirror them
    // across the equator (downward triangles, south pole at the bottom). Face 6 is antipodal to 0.
    const double r = std::sqrt(6.) * scale;
    std::vector<Vec3> v = {{r, 0., 0.}, {0., r, 0.}, {-r, 0., 0.}, {0., -r, 0.}, {0., 0., r}, {0., 0., -r}};
    const int Ea = 0, Eb = 1, Ec = 2, Ed = 3, N = 4, S = 5;
    std::vector<std::vector<int>> f = {{Ea, Eb, N}, {Eb, Ec, N}, {Ec, Ed, N}, {Ed, Ea, N},
                                       {Eb, Ea, S}, {Ec, Eb, S}, {Ed, Ec, S}, {Ea, Ed, S}};
    BuildOptions opt;
    opt.firstEdgeAngle = {0., 0., 0., 0., pi, pi, pi, pi};
    return Polyhedron::build(std::move(v), std::move(f), opt);
  }
  if (name == "cube") {
    std::vector<Vec3> v;
    for (int i = 0; i < 8; ++i) v.push_back({(i & 1) ? 1. : -1., (i & 2) ? 1. : -1., (i & 4) ? 1. : -1.});
    return scaled_hull(std::move(v), 2., edgeLength);
  }
  if (name == "icosahedron") {
    const double phi = std::numbers::phi;
    std::vector<Vec3> v;
    for (double a : {-1., 1.})
      for (double b : {-phi, phi}) {
        v.push_back({0., a, b});
        v.push_back({a, b, 0.});
        v.push_back({b, 0., a});
      }
    return scaled_hull(std::move(v), 2., edgeLength);
  }
  if (name == "dodecahedron") {
    const double phi = std::numbers::phi;
    std::vector<Vec3> v;
    for (int i = 0; i < 8; ++i) v.push_back({(i & 1) ? 1. : -1., (i & 2) ? 1. : -1., (i & 4) ? 1. : -1.});
    for (double a : {-1. / phi, 1. / phi})
      for (double b : {-phi, phi}) {
        v.push_back({0., a, b});
        v.push_back({a, b, 0.});
        v.push_back({b, 0., a});
      }
    return scaled_hull(std::move(v), 2. / phi, edgeLength);
  }
  throw GeometryError(ErrorKind::UnknownSolid, std::string(name));
}

// ---------------------------------------------------------------------------

bool polygon_contains(const std::vector<Vec2>& polygon, Vec2 p, double tol) {
  const size_t k = polygon.size();
  for (size_t i = 0; i < k; ++i) {
    Vec2 a = polygon[i], b = polygon[(i + 1) % k];
    if (cross(normalize(b - a), p - a) < -tol) return false;
  }
  return true;
}

double distance_to_boundary(const std::vector<Vec2>& polygon, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  const size_t k = polygon.size();
  for (size_t i = 0; i < k; ++i) {
    Vec2 a = polygon[i], b = polygon[(i + 1) % k];
    Vec2 ab = b - a;
    double t = std::clamp(dot(p - a, ab) / norm2(ab), 0., 1.);
    best = std::min(best, norm(p - (a + t * ab)));
  }
  return best;
}

std::vector<FaceId> faces_containing(const Polyhedron& poly, Vec3 p) {
  const double tol = eps();
  std::vector<FaceId> out;
  for (size_t f = 0; f < poly.num_faces(); ++f) {
    const FaceEmbedding& emb = poly.embedding(static_cast<FaceId>(f));
    if (std::abs(emb.height(p)) > tol) continue;
    if (polygon_contains(emb.vertices, emb.project(p), tol)) out.push_back(static_cast<FaceId>(f));
  }
  if (out.empty()) throw GeometryError(ErrorKind::PointNotOnSurface, "point is not on the surface");
  return out;
}

std::vector<FaceId> faces_containing(const Polyhedron& poly, const SurfacePoint& p) {
  if (!poly.valid_face(p.face)) throw GeometryError(ErrorKind::PointNotOnSurface, "invalid face id");
  if (!std::isfinite(p.coords.x) || !std::isfinite(p.coords.y) ||
      !polygon_contains(poly.polygon(p.face), p.coords, eps()))
    throw GeometryError(ErrorKind::PointNotOnSurface, "point lies outside face " + std::to_string(p.face));
  return faces_containing(poly, poly.to_space(p));
}

SurfacePoint from_barycentric(const Polyhedron& poly, FaceId f, const std::vector<double>& weights) {
  if (!poly.valid_face(f)) throw GeometryError(ErrorKind::InvalidInput, "invalid face id");
  const auto& polygon = poly.polygon(f);
  if (weights.size() != polygon.size())
    throw GeometryError(ErrorKind::InvalidInput, "barycentric weight count does not match face vertex count");
  double total = 0.;
  Vec2 acc;
  for (size_t i = 0; i < weights.size(); ++i) {
    total += weights[i];
    acc += weights[i] * polygon[i];
  }
  if (std::abs(total) < eps()) throw GeometryError(ErrorKind::InvalidInput, "barycentric weights sum to zero");
  return {f, acc / total};
}

} // namespace polycut
