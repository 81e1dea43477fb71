#include "polycut/query.h"

#include "polycut/errors.h"
#include "polycut/tolerance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_map>

namespace polycut {

std::shared_ptr<const CutLocusOnFace> CutLocusCache::get(const Polyhedron& poly, const SurfacePoint& p, FaceId sink) {
  Key key{&poly, p.face, p.coords.x, p.coords.y, sink, eps()};
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate just loses the race.
  auto value = std::make_shared<const CutLocusOnFace>(cut_locus_on_face(poly, p, sink, {}, options_));
  std::lock_guard lock(mutex_);
  return entries_.emplace(key, std::move(value)).first->second;
}

size_t CutLocusCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void CutLocusCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

namespace {

void require_on_surface(const Polyhedron& poly, const SurfacePoint& p) {
  if (!poly.valid_face(p.face)) throw GeometryError(ErrorKind::PointNotOnSurface, "invalid face id");
  if (!polygon_contains(poly.polygon(p.face), p.coords, eps()))
    throw GeometryError(ErrorKind::PointNotOnSurface, "point is outside its face");
}

} // namespace

std::vector<Geodesic> geodesics(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q,
                                const QueryOptions& options) {
  require_on_surface(poly, p);
  require_on_surface(poly, q);
  const double tol = options.tolerance.value_or(eps());

  if (norm(poly.to_space(p) - poly.to_space(q)) <= eps()) {
    Vec2 at = poly.to_face(p, q.face);
    Geodesic g;
    g.pieces.push_back({q.face, at, at});
    g.path = FacePath{{q.face}};
    g.provenance = {g.path};
    g.sourceImage = at;
    return {g};
  }

  // q on an edge or vertex is seen from every face holding it; the same geodesic then shows up
  // once per face and is merged by its direction of departure from p.
  struct Option {
    std::shared_ptr<const CutLocusOnFace> cl;
    size_t index;
    Vec2 target;
    double d;
  };
  std::vector<Option> found;
  for (FaceId f : faces_containing(poly, q)) {
    std::shared_ptr<const CutLocusOnFace> cl;
    if (options.cache) cl = options.cache->get(poly, p, f);
    else cl = std::make_shared<const CutLocusOnFace>(cut_locus_on_face(poly, p, f, {}, options.cutLocus));
    Vec2 target = f == q.face ? q.coords : poly.to_face(q, f);
    for (size_t i = 0; i < cl->survivors.size(); ++i)
      found.push_back({cl, i, target, norm(cl->survivors[i].image - target)});
  }
  std::vector<const Option*> chosen;
  if (!found.empty()) {
    auto nearest = std::min_element(found.begin(), found.end(), [](const Option& a, const Option& b) { return a.d < b.d; });
    double best = nearest->d;
    if (tol >= 0.) {
      for (const Option& o : found)
        if (o.d <= best + tol) chosen.push_back(&o);
    } else {
      bool unique = true;
      for (const Option& o : found)
        if (&o != &*nearest && o.d <= best - tol) unique = false;
      if (unique) chosen.push_back(&*nearest);
    }
  }

  std::vector<Geodesic> out;
  std::vector<Vec3> departures;
  for (const Option* o : chosen) {
    const SourceCandidate& s = o->cl->survivors[o->index];
    Geodesic g;
    for (auto& piece : pullback_segment(s.unfolding, s.image, o->target)) {
      if (piece.length() > eps() || g.pieces.empty()) g.pieces.push_back(piece);
    }
    // A leading zero-length piece only survives if the whole path is a point.
    if (g.pieces.size() > 1 && g.pieces.front().length() <= eps()) g.pieces.erase(g.pieces.begin());
    const SurfaceSegment& first = g.pieces.front();
    Vec3 dir = poly.to_space({first.face, first.end}) - poly.to_space({first.face, first.start});
    dir = norm(dir) > 0. ? normalize(dir) : dir;
    bool seen = std::any_of(departures.begin(), departures.end(), [&](Vec3 d) { return norm(d - dir) <= 1e-7; });
    if (seen) continue;
    departures.push_back(dir);
    g.length = o->d;
    g.path = s.path;
    g.provenance = s.provenance;
    g.sourceImage = s.image;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const Geodesic& a, const Geodesic& b) { return a.provenance < b.provenance; });
  return out;
}

int multiplicity(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q, const QueryOptions& options) {
  return static_cast<int>(geodesics(poly, p, q, options).size());
}

double distance(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q, const QueryOptions& options) {
  QueryOptions closed = options;
  closed.tolerance = std::max(0., options.tolerance.value_or(eps()));
  auto gs = geodesics(poly, p, q, closed);
  if (gs.empty()) throw GeometryError(ErrorKind::NumericDegeneracy, "no geodesic found");
  return gs.front().length;
}

MeshOracle::MeshOracle(const Polyhedron& poly, int n, int reach) : poly_(&poly) {
  if (n < 1) throw GeometryError(ErrorKind::InvalidInput, "subdivision must be at least 1");
  const double quantum = poly.radius() * 1e-9;
  auto keyOf = [&](Vec3 v) {
    auto r = [&](double c) { return static_cast<long long>(std::llround(c / quantum)); };
    return std::make_tuple(r(v.x), r(v.y), r(v.z));
  };
  struct KeyHash {
    size_t operator()(const std::tuple<long long, long long, long long>& k) const {
      auto [a, b, c] = k;
      return std::hash<long long>()(a) ^ (std::hash<long long>()(b) * 31) ^ (std::hash<long long>()(c) * 1000003);
    }
  };
  std::unordered_map<std::tuple<long long, long long, long long>, size_t, KeyHash> index;
  auto nodeOf = [&](Vec3 v) {
    auto [it, fresh] = index.emplace(keyOf(v), nodes_.size());
    if (fresh) nodes_.push_back(v);
    return it->second;
  };

  std::vector<std::vector<std::pair<size_t, double>>> adj;
  faceNodes_.resize(poly.num_faces());
  for (FaceId f = 0; f < static_cast<FaceId>(poly.num_faces()); ++f) {
    const auto& cyc = poly.faces()[static_cast<size_t>(f)];
    std::vector<size_t>& mine = faceNodes_[static_cast<size_t>(f)];
    for (size_t t = 1; t + 1 < cyc.size(); ++t) {
      Vec3 a = poly.vertices()[static_cast<size_t>(cyc[0])];
      Vec3 b = poly.vertices()[static_cast<size_t>(cyc[t])];
      Vec3 c = poly.vertices()[static_cast<size_t>(cyc[t + 1])];
      // lattice node (i, j), i + j <= n
      std::vector<std::vector<size_t>> id(static_cast<size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
          Vec3 v = a + (static_cast<double>(i) / n) * (b - a) + (static_cast<double>(j) / n) * (c - a);
          id[static_cast<size_t>(i)].push_back(nodeOf(v));
        }
      }
      adj.resize(nodes_.size());
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
          size_t u = id[static_cast<size_t>(i)][static_cast<size_t>(j)];
          mine.push_back(u);
          for (int di = -reach; di <= reach; ++di) {
            for (int dj = -reach; dj <= reach; ++dj) {
              int i2 = i + di, j2 = j + dj;
              if (i2 < 0 || j2 < 0 || i2 + j2 > n) continue;
              size_t v = id[static_cast<size_t>(i2)][static_cast<size_t>(j2)];
              if (v <= u) continue;
              double w = norm(nodes_[v] - nodes_[u]);
              adj[u].push_back({v, w});
              adj[v].push_back({u, w});
            }
          }
        }
      }
    }
    std::sort(mine.begin(), mine.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
  }
  offsets_.assign(nodes_.size() + 1, 0);
  for (size_t u = 0; u < adj.size(); ++u) offsets_[u + 1] = offsets_[u] + adj[u].size();
  adjacency_.reserve(offsets_.back());
  for (auto& list : adj) adjacency_.insert(adjacency_.end(), list.begin(), list.end());
}

double MeshOracle::distance(const SurfacePoint& p, const SurfacePoint& q) const {
  const Polyhedron& poly = *poly_;
  require_on_surface(poly, p);
  require_on_surface(poly, q);
  Vec3 P = poly.to_space(p), Q = poly.to_space(q);
  auto pf = faces_containing(poly, p);
  auto qf = faces_containing(poly, q);

  double best = std::numeric_limits<double>::infinity();
  for (FaceId f : pf) {
    if (std::find(qf.begin(), qf.end(), f) != qf.end()) best = std::min(best, norm(P - Q));
  }

  // Node targets: distance from the node to q within any of q's faces.
  std::vector<double> toQ(nodes_.size(), std::numeric_limits<double>::infinity());
  for (FaceId f : qf)
    for (size_t v : faceNodes_[static_cast<size_t>(f)]) toQ[v] = norm(nodes_[v] - Q);

  std::vector<double> dist(nodes_.size(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (FaceId f : pf) {
    for (size_t v : faceNodes_[static_cast<size_t>(f)]) {
      double d = norm(nodes_[v] - P);
      if (d < dist[v]) {
        dist[v] = d;
        heap.push({d, v});
      }
    }
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    if (d >= best) break;
    best = std::min(best, d + toQ[u]);
    for (size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
      auto [v, w] = adjacency_[k];
      if (d + w < dist[v]) {
        dist[v] = d + w;
        heap.push({dist[v], v});
      }
    }
  }
  return best;
}

double mesh_dijkstra_distance(const Polyhedron& poly, const SurfacePoint& p, const SurfacePoint& q, int n) {
  return MeshOracle(poly, n).distance(p, q);
}

StarUnfolding star_unfolding(const Polyhedron& poly, const SurfacePoint& p, const CutLocusOptions& options) {
  return star_unfolding(poly, p, full_cut_locus(poly, p, options));
}

StarUnfolding star_unfolding(const Polyhedron& poly, const SurfacePoint& p, const FullCutLocus& cl) {
  require_on_surface(poly, p);
  StarUnfolding star;
  star.source = p;
  for (const CutLocusOnFace& face : cl) {
    for (size_t i = 0; i < face.survivors.size(); ++i) {
      const SourceCandidate& s = face.survivors[i];
      // Bring the path's first face to its canonical spot, then (for a source on an edge shared
      // with p's face) fold it over into p's face frame.
      Motion2 toSource = s.unfolding.motion(0).inverse();
      FaceId first = s.path.front();
      if (first != p.face && poly.adjacent(first, p.face)) {
        Unfolding pair = unfold_path(poly, FacePath{{first, p.face}});
        toSource = pair.motion(0).compose(toSource);
      }
      StarUnfolding::Piece piece;
      piece.sink = face.sink;
      piece.path = s.path;
      piece.unfolding = s.unfolding.moved(toSource);
      for (Vec2 v : face.diagram.cells[i].vertices) piece.cell.vertices.push_back(toSource(v));
      piece.sourceImage = toSource(s.image);
      star.pieces.push_back(std::move(piece));

      const LabeledRegion& cell = face.diagram.cells[i];
      for (size_t k = 0; k < cell.vertices.size() && cell.vertices.size() >= 2; ++k) {
        if (cell.edgeLabels[k] < 0) continue;
        Vec2 a = cell.vertices[k], b = cell.vertices[(k + 1) % cell.vertices.size()];
        if (norm(a - b) <= eps()) continue;
        star.edges.push_back({face.sink, s.path, toSource(a), toSource(b)});
      }
    }
  }
  return star;
}

} // namespace polycut
