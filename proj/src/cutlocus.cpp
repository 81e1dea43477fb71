#include "polycut/cutlocus.h"

#include "polycut/errors.h"
#include "polycut/tolerance.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace polycut {

bool has_star_property(const Unfolding& u, Vec2 x, Vec2 q) {
  const double tol = eps();
  const size_t n = u.size();
  if (!segment_in_polygons(x, q, u.placed_polygons()).covered) return false;
  const Vec2 d = q - x;
  Vec2 s = x;
  for (size_t i = 0; i < n; ++i) {
    auto span = clip_segment(x, q, u.placed(i), tol);
    if (!span) return false;
    Vec2 start = x + span->first * d;
    Vec2 end = x + span->second * d;
    if (norm(start - s) > tol) return false;
    if (i + 1 < n) {
      auto [a, b] = u.portal(i);
      if (point_segment_distance(end, a, b) > tol) return false;
    } else if (norm(end - q) > tol) {
      return false;
    }
    s = end;
  }
  return true;
}

bool filter(const Unfolding& u, Vec2 x, const ConvexRegion& cell) {
  ConvexRegion part = clip_to_polygon(cell, ConvexRegion{u.placed(u.size() - 1)});
  for (Vec2 q : part.vertices) {
    if (!has_star_property(u, x, q)) return false;
  }
  return true;
}

bool star_region_nonempty(const Unfolding& u, Vec2 x) {
  const double tol = eps();
  constexpr double angular = 1e-9;
  // Directions d with cross(r, d) >= 0 and cross(d, l) >= 0; every portal subtends less than pi.
  bool bounded = false;
  Vec2 r, l;
  auto inside = [&](Vec2 d, Vec2 lo, Vec2 hi) {
    return cross(lo, d) >= -angular * norm(lo) * norm(d) && cross(d, hi) >= -angular * norm(d) * norm(hi);
  };
  for (size_t i = 0; i + 1 < u.size(); ++i) {
    auto [pa, pb] = u.portal(i);
    Vec2 a = pa - x, b = pb - x;
    double c = cross(a, b);
    if (std::abs(c) <= tol * std::max(norm(a), norm(b)) + tol * tol) continue;
    if (c < 0.) std::swap(a, b);
    if (!bounded) {
      r = a;
      l = b;
      bounded = true;
      continue;
    }
    Vec2 nr, nl;
    if (inside(a, r, l)) nr = a;
    else if (inside(r, a, b)) nr = r;
    else return false;
    if (inside(b, r, l)) nl = b;
    else if (inside(l, a, b)) nl = l;
    else return false;
    if (cross(nr, nl) < -angular * norm(nr) * norm(nl)) return false;
    r = nr;
    l = nl;
  }
  return true;
}

std::vector<SourceCandidate> source_candidates(const Polyhedron& poly, const SurfacePoint& p, FaceId sink,
                                               const Motion2& sinkMotion, const CutLocusOptions& options,
                                               size_t* pathsEnumerated) {
  if (!poly.valid_face(sink)) throw GeometryError(ErrorKind::InvalidInput, "invalid sink face");
  const double tol = eps();
  std::vector<SourceCandidate> out;
  size_t count = 0;
  for (FaceId f0 : faces_containing(poly, p)) {
    Vec2 coords = f0 == p.face ? p.coords : poly.to_face(p, f0);
    for (FacePath& path : enumerate_face_paths(poly, f0, sink, options.maxPathFaces)) {
      ++count;
      Unfolding u = unfold_path(poly, path, sinkMotion);
      Vec2 x = u.motion(0)(coords);
      if (options.starPrefilter && !star_region_nonempty(u, x)) continue;
      auto same = std::find_if(out.begin(), out.end(), [&](const SourceCandidate& c) { return norm(c.image - x) <= tol; });
      if (same == out.end()) {
        out.push_back({path, std::move(u), x, {path}, {}});
      } else {
        same->provenance.push_back(path);
        same->alternates.push_back(std::move(u));
      }
    }
  }
  for (auto& c : out) std::sort(c.provenance.begin(), c.provenance.end());
  std::sort(out.begin(), out.end(), [](const SourceCandidate& a, const SourceCandidate& b) { return a.key() < b.key(); });
  if (pathsEnumerated) *pathsEnumerated = count;
  return out;
}

namespace {

// A merged candidate stays if any of its unfoldings passes; the passing one becomes primary.
bool passes(SourceCandidate& c, const ConvexRegion& cell) {
  if (filter(c.unfolding, c.image, cell)) return true;
  for (auto& alt : c.alternates) {
    if (filter(alt, c.image, cell)) {
      std::swap(alt, c.unfolding);
      c.path = c.unfolding.path();
      return true;
    }
  }
  return false;
}

std::vector<Vec2> images(const std::vector<SourceCandidate>& cs) {
  std::vector<Vec2> g;
  for (const auto& c : cs) g.push_back(c.image);
  return g;
}

} // namespace

CutLocusOnFace cut_locus_on_face(const Polyhedron& poly, const SurfacePoint& p, FaceId sink, const Motion2& sinkMotion,
                                 const CutLocusOptions& options, CutLocusTrace* trace) {
  const double tol = eps();
  CutLocusOnFace result;
  result.sink = sink;
  result.sinkMotion = sinkMotion;
  std::vector<SourceCandidate> cands = source_candidates(poly, p, sink, sinkMotion, options, &result.pathsEnumerated);
  result.initialCandidates = cands.size();
  for (Vec2 v : poly.polygon(sink)) result.face.vertices.push_back(sinkMotion(v));

  std::vector<ConvexRegion> cells;
  for (;;) {
    std::vector<Vec2> gens = images(cands);
    cells.clear();
    for (size_t i = 0; i < gens.size(); ++i) cells.push_back(voronoi_cell(i, gens, result.face));
    std::optional<size_t> drop;
    for (size_t i = 0; i < cands.size() && !drop; ++i) {
      if (!passes(cands[i], cells[i])) drop = i;
    }
    if (trace) {
      CutLocusTrace::Step step;
      for (const auto& c : cands) step.keys.push_back(c.key());
      step.cells = cells;
      if (drop) step.removed = cands[*drop].key();
      trace->steps.push_back(std::move(step));
    }
    if (!drop) break;
    cands.erase(cands.begin() + static_cast<long>(*drop));
    ++result.removals;
  }

  // Cells that are empty or a single point carry no part of the diagram.
  for (size_t i = 0; i < cands.size(); ++i) {
    if (!cells[i].empty() && cells[i].diameter() > tol) result.survivors.push_back(std::move(cands[i]));
  }
  result.diagram = voronoi_diagram(images(result.survivors), result.face);
  return result;
}

FullCutLocus full_cut_locus(const Polyhedron& poly, const SurfacePoint& p, const CutLocusOptions& options,
                            unsigned threads) {
  const size_t n = poly.num_faces();
  FullCutLocus out(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, n));
  if (threads <= 1) {
    for (size_t f = 0; f < n; ++f) out[f] = cut_locus_on_face(poly, p, static_cast<FaceId>(f), {}, options);
    return out;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex m;
  const double tol = eps();
  auto work = [&] {
    ScopedEpsilon scope(tol);
    for (size_t f; (f = next++) < n;) {
      try {
        out[f] = cut_locus_on_face(poly, p, static_cast<FaceId>(f), {}, options);
      } catch (...) {
        std::lock_guard lock(m);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string path_string(const FacePath& path) {
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(path.faces[i]);
  }
  return s;
}

bool StructureSignature::near_degenerate(double factor) const { return degeneracyMargin <= factor * eps(); }

namespace {

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

} // namespace

StructureSignature structure_signature(const FullCutLocus& cl) {
  const double tol = eps();
  StructureSignature sig;
  auto note = [&](double d) {
    if (d > tol) sig.degeneracyMargin = std::min(sig.degeneracyMargin, d);
  };
  std::ostringstream enc;
  for (const CutLocusOnFace& f : cl) {
    StructureSignature::Face sf;
    sf.face = f.sink;
    std::vector<std::string> names;
    for (const auto& s : f.survivors) names.push_back(path_string(s.key()));
    auto labelOf = [&](const std::set<int>& ids) {
      std::vector<std::string> xs;
      for (int i : ids) xs.push_back(names[static_cast<size_t>(i)]);
      std::sort(xs.begin(), xs.end());
      return join(xs, '|');
    };
    const auto& fv = f.face.vertices;
    auto where = [&](Vec2 p) -> std::string {
      for (size_t k = 0; k < fv.size(); ++k) {
        double d = norm(p - fv[k]);
        if (d <= tol) return "v" + std::to_string(k);
      }
      for (size_t k = 0; k < fv.size(); ++k) {
        if (point_segment_distance(p, fv[k], fv[(k + 1) % fv.size()]) <= tol) return "e" + std::to_string(k);
      }
      return "i";
    };

    sf.cells = names;
    std::sort(sf.cells.begin(), sf.cells.end());
    for (const auto& e : f.diagram.edges) {
      sf.edges.push_back(labelOf({e.label.first, e.label.second}));
      note(norm(e.b - e.a));
    }
    std::vector<Vec2> features;
    for (const auto& v : f.diagram.vertices) {
      sf.vertices.push_back(labelOf(v.label) + ":" + std::to_string(v.degree) + (v.onBoundary ? "b" : ""));
      features.push_back(v.point);
      if (!v.onBoundary) {
        for (size_t k = 0; k < fv.size(); ++k) note(point_segment_distance(v.point, fv[k], fv[(k + 1) % fv.size()]));
      }
    }
    for (const auto& b : f.diagram.boundaryPoints) {
      sf.boundary.push_back(labelOf(b.label) + "@" + where(b.point));
      features.push_back(b.point);
      for (Vec2 c : fv) note(norm(b.point - c));
    }
    for (size_t i = 0; i < features.size(); ++i)
      for (size_t j = i + 1; j < features.size(); ++j) note(norm(features[i] - features[j]));
    std::sort(sf.edges.begin(), sf.edges.end());
    std::sort(sf.vertices.begin(), sf.vertices.end());
    std::sort(sf.boundary.begin(), sf.boundary.end());
    enc << "F" << sf.face << "[c=" << join(sf.cells, ',') << ";e=" << join(sf.edges, ',') << ";v="
        << join(sf.vertices, ',') << ";b=" << join(sf.boundary, ',') << "]";
    sig.faces.push_back(std::move(sf));
  }
  sig.encoded = enc.str();
  return sig;
}

} // namespace polycut
