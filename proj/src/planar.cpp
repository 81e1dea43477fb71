#include "polycut/planar.h"

#include "polycut/errors.h"
#include "polycut/tolerance.h"

#include <algorithm>
#include <limits>
#include <map>

namespace polycut {

HalfPlane bisector(Vec2 p, Vec2 q) {
  Vec2 d = q - p;
  double len = norm(d);
  if (len <= eps()) throw GeometryError(ErrorKind::CoincidentPoints, "bisector of coincident points");
  HalfPlane h;
  h.normal = d / len;
  h.offset = dot(h.normal, 0.5 * (p + q));
  return h;
}

double ConvexRegion::area() const {
  double a = 0.;
  for (size_t i = 0; i < vertices.size(); ++i) a += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  return 0.5 * a;
}

double ConvexRegion::diameter() const {
  double d = 0.;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j) d = std::max(d, norm(vertices[i] - vertices[j]));
  return d;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.) return norm(p - a);
  double t = std::clamp(dot(p - a, ab) / len2, 0., 1.);
  return norm(p - (a + t * ab));
}

bool ConvexRegion::contains(Vec2 p, double tol) const {
  switch (vertices.size()) {
  case 0: return false;
  case 1: return norm(p - vertices[0]) <= tol;
  case 2: return point_segment_distance(p, vertices[0], vertices[1]) <= tol;
  default: break;
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    Vec2 a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    if (cross(normalize(b - a), p - a) < -tol) return false;
  }
  return true;
}

ConvexRegion make_box(Vec2 lo, Vec2 hi) { return {{lo, {hi.x, lo.y}, hi, {lo.x, hi.y}}}; }

LabeledRegion LabeledRegion::from_clip(const ConvexRegion& clip) {
  LabeledRegion r;
  r.vertices = clip.vertices;
  for (size_t i = 0; i < clip.vertices.size(); ++i) r.edgeLabels.push_back(-1 - static_cast<int>(i));
  return r;
}

namespace {

enum class Side { In, On, Out };

// Drops consecutive vertices closer than tol; the surviving vertex takes the outgoing label of
// the dropped one (the edge between them had zero length).
void dedupe(LabeledRegion& r, double tol) {
  bool changed = true;
  while (changed && r.vertices.size() > 1) {
    changed = false;
    const size_t n = r.vertices.size();
    for (size_t k = 0; k < n; ++k) {
      size_t next = (k + 1) % n;
      if (norm(r.vertices[k] - r.vertices[next]) <= tol) {
        r.edgeLabels[k] = r.edgeLabels[next];
        r.vertices.erase(r.vertices.begin() + static_cast<long>(next));
        r.edgeLabels.erase(r.edgeLabels.begin() + static_cast<long>(next));
        changed = true;
        break;
      }
    }
  }
}

} // namespace

LabeledRegion clip_halfplane(const LabeledRegion& r, const HalfPlane& h, int label, double tol) {
  const size_t n = r.vertices.size();
  if (n == 0) return r;
  std::vector<double> s(n);
  std::vector<Side> side(n);
  bool anyOut = false, anyKept = false;
  for (size_t k = 0; k < n; ++k) {
    s[k] = h.signed_distance(r.vertices[k]);
    side[k] = s[k] < -tol ? Side::In : (s[k] > tol ? Side::Out : Side::On);
    anyOut |= side[k] == Side::Out;
    anyKept |= side[k] != Side::Out;
  }
  if (!anyKept) return {};
  if (!anyOut) {
    LabeledRegion out = r;
    if (n >= 2) {
      for (size_t k = 0; k < n; ++k) {
        if (side[k] == Side::On && side[(k + 1) % n] == Side::On) out.edgeLabels[k] = label;
      }
    }
    return out;
  }

  LabeledRegion out;
  auto emit = [&](Vec2 p, int l) {
    out.vertices.push_back(p);
    out.edgeLabels.push_back(l);
  };
  for (size_t k = 0; k < n; ++k) {
    size_t j = (k + 1) % n;
    Side a = side[k], b = side[j];
    int ek = r.edgeLabels[k];
    if (a == Side::In) {
      emit(r.vertices[k], ek);
      if (b == Side::Out) emit(lerp(r.vertices[k], r.vertices[j], s[k] / (s[k] - s[j])), label);
    } else if (a == Side::On) {
      emit(r.vertices[k], b == Side::In ? ek : label);
    } else if (b == Side::In) {
      emit(lerp(r.vertices[k], r.vertices[j], s[k] / (s[k] - s[j])), ek);
    }
  }
  dedupe(out, tol);
  return out;
}

ConvexRegion clip_to_polygon(const ConvexRegion& r, const ConvexRegion& poly) {
  LabeledRegion cur = LabeledRegion::from_clip(r);
  const double tol = eps();
  const size_t n = poly.vertices.size();
  for (size_t k = 0; k < n && !cur.vertices.empty(); ++k) {
    Vec2 a = poly.vertices[k], b = poly.vertices[(k + 1) % n];
    if (norm(b - a) <= tol) continue;
    Vec2 e = normalize(b - a);
    HalfPlane h{{e.y, -e.x}, dot(Vec2{e.y, -e.x}, a)};
    cur = clip_halfplane(cur, h, -1 - static_cast<int>(k), tol);
  }
  return cur.region();
}

std::optional<std::pair<double, double>> clip_segment(Vec2 a, Vec2 b, const std::vector<Vec2>& polygon, double tol) {
  Vec2 d = b - a;
  double len = norm(d);
  double t0 = 0., t1 = 1.;
  const size_t n = polygon.size();
  for (size_t k = 0; k < n; ++k) {
    Vec2 p = polygon[k], q = polygon[(k + 1) % n];
    Vec2 e = normalize(q - p);
    Vec2 outward{e.y, -e.x};
    double num = dot(outward, a - p);
    double den = dot(outward, d);
    if (std::abs(den) <= 1e-14 * std::max(len, 1.)) {
      if (num > tol) return std::nullopt;
      continue;
    }
    double t = -num / den;
    if (den > 0.) t1 = std::min(t1, t);
    else t0 = std::max(t0, t);
  }
  if (t0 > t1) {
    if (len == 0. || (t0 - t1) * len > tol) return std::nullopt;
    double mid = 0.5 * (t0 + t1);
    t0 = t1 = mid;
  }
  return std::make_pair(t0, t1);
}

SegmentCover segment_in_polygons(Vec2 a, Vec2 b, const std::vector<std::vector<Vec2>>& polygons) {
  const double tol = eps();
  Vec2 d = b - a;
  double len = norm(d);
  SegmentCover result;
  auto insideSome = [&](Vec2 p) {
    for (const auto& poly : polygons) {
      if (ConvexRegion{poly}.contains(p, tol)) return true;
    }
    return false;
  };
  if (len <= tol) {
    result.covered = insideSome(a);
    return result;
  }

  std::vector<double> ts;
  for (const auto& poly : polygons) {
    for (size_t k = 0; k < poly.size(); ++k) {
      Vec2 p = poly[k], e = poly[(k + 1) % poly.size()] - p;
      double denom = cross(d, e);
      if (std::abs(denom) <= 1e-14 * len * norm(e)) continue;
      double t = cross(p - a, e) / denom;
      double u = cross(p - a, d) / denom;
      if (t * len > tol && (1. - t) * len > tol && u >= -tol / norm(e) && u <= 1. + tol / norm(e)) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  std::vector<double> uniq;
  for (double t : ts) {
    if (uniq.empty() || (t - uniq.back()) * len > tol) uniq.push_back(t);
  }
  std::vector<double> cuts = {0.};
  cuts.insert(cuts.end(), uniq.begin(), uniq.end());
  cuts.push_back(1.);
  result.covered = true;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!insideSome(a + (0.5 * (cuts[i] + cuts[i + 1])) * d)) {
      result.covered = false;
      break;
    }
  }
  for (double t : uniq) result.splits.push_back(a + t * d);
  return result;
}

LabeledRegion voronoi_cell_labeled(size_t i, const std::vector<Vec2>& gens, const ConvexRegion& clip) {
  const double tol = eps();
  LabeledRegion cell = LabeledRegion::from_clip(clip);
  for (size_t j = 0; j < gens.size() && !cell.vertices.empty(); ++j) {
    if (j == i) continue;
    cell = clip_halfplane(cell, bisector(gens[i], gens[j]), static_cast<int>(j), tol);
  }
  return cell;
}

ConvexRegion voronoi_cell(size_t i, const std::vector<Vec2>& gens, const ConvexRegion& clip) {
  return voronoi_cell_labeled(i, gens, clip).region();
}

namespace {

bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

} // namespace

VoronoiDiagram voronoi_diagram(const std::vector<Vec2>& gens, const ConvexRegion& clip) {
  const double tol = eps();
  VoronoiDiagram vd;
  vd.generators = gens;
  vd.clip = clip;
  for (size_t i = 0; i < gens.size(); ++i) vd.cells.push_back(voronoi_cell_labeled(i, gens, clip));

  // Edges, taken from the lower-indexed side of each pair when available.
  std::map<std::pair<int, int>, std::vector<VoronoiEdge>> bySide[2];
  for (size_t i = 0; i < vd.cells.size(); ++i) {
    const auto& c = vd.cells[i];
    const size_t n = c.vertices.size();
    if (n < 2) continue;
    for (size_t k = 0; k < n; ++k) {
      int j = c.edgeLabels[k];
      if (j < 0) continue;
      Vec2 a = c.vertices[k], b = c.vertices[(k + 1) % n];
      if (norm(a - b) <= tol) continue;
      if (lex_less(b, a)) std::swap(a, b);
      int ii = static_cast<int>(i);
      std::pair<int, int> key{std::min(ii, j), std::max(ii, j)};
      auto& bucket = bySide[ii < j ? 0 : 1][key];
      bool dup = std::any_of(bucket.begin(), bucket.end(), [&](const VoronoiEdge& e) {
        return norm(e.a - a) <= tol && norm(e.b - b) <= tol;
      });
      if (!dup) bucket.push_back({key, a, b});
    }
  }
  for (const auto& [key, list] : bySide[0]) vd.edges.insert(vd.edges.end(), list.begin(), list.end());
  for (const auto& [key, list] : bySide[1]) {
    if (!bySide[0].count(key)) vd.edges.insert(vd.edges.end(), list.begin(), list.end());
  }
  std::sort(vd.edges.begin(), vd.edges.end(), [](const VoronoiEdge& x, const VoronoiEdge& y) {
    if (x.label != y.label) return x.label < y.label;
    return lex_less(x.a, y.a);
  });

  // Corners of cells, clustered within tolerance.
  struct Cluster {
    Vec2 point;
    std::set<int> label;
    bool touchesClip = false;
  };
  std::vector<Cluster> clusters;
  for (size_t i = 0; i < vd.cells.size(); ++i) {
    const auto& c = vd.cells[i];
    const size_t n = c.vertices.size();
    for (size_t k = 0; k < n; ++k) {
      int in = c.edgeLabels[(k + n - 1) % n];
      int out = c.edgeLabels[k];
      std::set<int> label{static_cast<int>(i)};
      if (in >= 0) label.insert(in);
      if (out >= 0) label.insert(out);
      bool touchesClip = in < 0 || out < 0;
      if (label.size() < 2) continue;
      Vec2 p = c.vertices[k];
      auto it = std::find_if(clusters.begin(), clusters.end(),
                             [&](const Cluster& cl) { return norm(cl.point - p) <= tol; });
      if (it == clusters.end()) {
        clusters.push_back({p, label, touchesClip});
      } else {
        it->label.insert(label.begin(), label.end());
        it->touchesClip |= touchesClip;
      }
    }
  }
  auto onClipBoundary = [&](Vec2 p) {
    const auto& cv = clip.vertices;
    for (size_t k = 0; k < cv.size(); ++k) {
      if (point_segment_distance(p, cv[k], cv[(k + 1) % cv.size()]) <= tol) return true;
    }
    return false;
  };
  for (const Cluster& cl : clusters) {
    bool boundary = cl.touchesClip || onClipBoundary(cl.point);
    if (cl.label.size() >= 3) {
      VoronoiVertex v;
      v.label = cl.label;
      v.point = cl.point;
      v.onBoundary = boundary;
      for (const VoronoiEdge& e : vd.edges) {
        if (norm(e.a - cl.point) <= tol || norm(e.b - cl.point) <= tol) ++v.degree;
      }
      vd.vertices.push_back(v);
    }
    if (boundary) vd.boundaryPoints.push_back({cl.label, cl.point});
  }
  auto byLabel = [](const auto& x, const auto& y) {
    if (x.label != y.label) return x.label < y.label;
    return lex_less(x.point, y.point);
  };
  std::sort(vd.vertices.begin(), vd.vertices.end(), byLabel);
  std::sort(vd.boundaryPoints.begin(), vd.boundaryPoints.end(), byLabel);
  return vd;
}

ConvexRegion bounding_clip(const std::vector<Vec2>& points) {
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi = -lo;
  for (Vec2 p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  if (points.empty()) lo = hi = {};
  Vec2 c = 0.5 * (lo + hi);
  Vec2 half = 0.5 * (hi - lo);
  double pad = std::max({half.x, half.y, 1.});
  half = {std::max(half.x, pad * 1e-3), std::max(half.y, pad * 1e-3)};
  return make_box(c - 3. * half, c + 3. * half);
}

} // namespace polycut
