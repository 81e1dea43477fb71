// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.
// Usage: acceptance [criterion numbers...]

#include "closed_forms.h"
#include "cli.h"
#include "polycut/cutlocus.h"
#include "polycut/planar.h"
#include "polycut/query.h"
#include "polycut/tolerance.h"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace polycut;
using closed::s3;

namespace {

constexpr double kFormulaTol = 1e-6;  // closed-form agreement
constexpr double kCornerTol = 1e-9;   // fixed corners
constexpr double kIncidenceTol = 1e-6;
constexpr double kOracleRatio = 1.02;
constexpr double kOracleSlack = 1e-9;
constexpr double kPropertyTol = 1e-9;
constexpr double kCopyMatchTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Failure {
  std::ostringstream msg;
  bool any = false;
  template <class T> Failure& operator<<(const T& x) {
    if (!any) any = true;
    msg << x;
    return *this;
  }
};

using Rng = std::mt19937_64;

double uniform(Rng& g, double a = 0., double b = 1.) { return std::uniform_real_distribution<double>(a, b)(g); }

// Uniform point in the interior of a triangle, kept a little away from its sides.
Vec2 interior_point(Rng& g, Vec2 a, Vec2 b, Vec2 c, double margin = 1e-3) {
  for (;;) {
    double u = uniform(g), v = uniform(g);
    if (u + v > 1.) {
      u = 1. - u;
      v = 1. - v;
    }
    double w = 1. - u - v;
    if (u < margin || v < margin || w < margin) continue;
    return u * a + v * b + w * c;
  }
}

SurfacePoint random_surface_point(const Polyhedron& poly, Rng& g) {
  // Area-weighted face choice; uniform inside the face via fan triangles.
  std::vector<double> areas;
  for (FaceId f = 0; f < static_cast<FaceId>(poly.num_faces()); ++f) areas.push_back(std::abs(ConvexRegion{poly.polygon(f)}.area()));
  FaceId f = static_cast<FaceId>(std::discrete_distribution<int>(areas.begin(), areas.end())(g));
  const auto& poly2 = poly.polygon(f);
  std::vector<double> tri;
  for (size_t k = 1; k + 1 < poly2.size(); ++k) tri.push_back(std::abs(cross(poly2[k] - poly2[0], poly2[k + 1] - poly2[0])));
  size_t k = 1 + static_cast<size_t>(std::discrete_distribution<int>(tri.begin(), tri.end())(g));
  return {f, interior_point(g, poly2[0], poly2[k], poly2[k + 1], 0.)};
}

// Maps survivor indices to reference copy indices; fails if any survivor has no match.
template <size_t N>
std::optional<std::vector<int>> reference_labels(const CutLocusOnFace& cl, const std::array<Vec2, N>& copies) {
  std::vector<int> out;
  for (const auto& s : cl.survivors) {
    auto m = closed::match_copy(copies, s.image, kCopyMatchTol);
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  return out;
}

std::set<int> relabel(const std::set<int>& ids, const std::vector<int>& map) {
  std::set<int> out;
  for (int i : ids) out.insert(map[static_cast<size_t>(i)]);
  return out;
}

bool has_edge(const CutLocusOnFace& cl, const std::vector<int>& map, int i, int j) {
  for (const auto& e : cl.diagram.edges) {
    std::set<int> l = relabel({e.label.first, e.label.second}, map);
    if (l == std::set<int>{i, j}) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  auto tetra = builtin_solid("tetrahedron");
  Vec2 p{-0.5, -s3 / 2};
  auto t0 = std::chrono::steady_clock::now();
  CutLocusOnFace cl = cut_locus_on_face(tetra, {3, p}, 0);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto copies = closed::tetra_copies(p);
  std::set<int> matched;
  Failure f;
  if (cl.survivors.size() != 4) f << "survivors=" << cl.survivors.size() << " ";
  for (const auto& s : cl.survivors) {
    auto m = closed::match_copy(copies, s.image, kFormulaTol);
    if (!m) f << "unmatched image " << s.image << " ";
    else matched.insert(*m);
  }
  if (matched.size() != 4) f << "matched " << matched.size() << " of 4 copies ";
  if (secs >= 1.) f << "runtime " << secs << " s ";
  std::ostringstream d;
  d << "4 copies within " << kFormulaTol << ", runtime " << secs << " s";
  o.pass = !f.any;
  o.detail = f.any ? f.msg.str() : d.str();
  return o;
}

Outcome criterion2() {
  auto tetra = builtin_solid("tetrahedron");
  Rng g(2);
  Failure f;
  double worstVertex = 0., worstCorner = 0.;
  const int samples = 50;
  for (int n = 0; n < samples; ++n) {
    Vec2 p = interior_point(g, closed::tetraC, closed::tetraM, closed::tetraA);
    CutLocusOnFace cl = cut_locus_on_face(tetra, {3, p}, 0);
    auto map = reference_labels(cl, closed::tetra_copies(p));
    if (!map) {
      f << "p=" << p << ": survivor without reference copy; ";
      continue;
    }
    std::map<std::set<int>, Vec2> verts;
    for (const auto& v : cl.diagram.vertices) verts[relabel(v.label, *map)] = v.point;
    for (auto [label, expect] : {std::pair{std::set<int>{0, 1, 2}, closed::tetra_x012(p)},
                                 std::pair{std::set<int>{0, 2, 3}, closed::tetra_x023(p)}}) {
      auto it = verts.find(label);
      if (it == verts.end()) {
        f << "p=" << p << ": missing vertex; ";
        continue;
      }
      double d = norm(it->second - expect);
      worstVertex = std::max(worstVertex, d);
      if (d > kFormulaTol) f << "p=" << p << ": vertex off by " << d << "; ";
    }
    for (auto [pair, corner] : {std::pair{std::set<int>{1, 2}, Vec2{0, 2}}, std::pair{std::set<int>{2, 3}, Vec2{-s3, -1}},
                                std::pair{std::set<int>{0, 3}, Vec2{s3, -1}}}) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& e : cl.diagram.edges) {
        if (relabel({e.label.first, e.label.second}, *map) != pair) continue;
        best = std::min({best, norm(e.a - corner), norm(e.b - corner)});
      }
      worstCorner = std::max(worstCorner, best);
      if (best > kCornerTol) f << "p=" << p << ": corner off by " << best << "; ";
    }
  }
  std::ostringstream d;
  d << samples << " samples, worst vertex error " << worstVertex << ", worst corner error " << worstCorner;
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome criterion3() {
  auto octa = builtin_solid("octahedron");
  Rng g(3);
  Failure f;
  double worstLine = 0., worstVertex = 0.;
  size_t edges = 0, vertices = 0;
  for (int n = 0; n < 50; ++n) {
    Vec2 p = interior_point(g, closed::octaO, closed::octaE, closed::octaV);
    CutLocusOnFace cl = cut_locus_on_face(octa, {6, p}, 0);
    auto map = reference_labels(cl, closed::octa_copies(p));
    if (!map) {
      f << "p=" << p << ": survivor without reference copy; ";
      continue;
    }
    for (const auto& e : cl.diagram.edges) {
      int i = (*map)[static_cast<size_t>(e.label.first)], j = (*map)[static_cast<size_t>(e.label.second)];
      auto line = closed::octa_line(i, j, p);
      if (!line) {
        f << "no reference line for {" << i << "," << j << "}; ";
        continue;
      }
      double d = std::max(closed::line_distance(*line, e.a), closed::line_distance(*line, e.b));
      worstLine = std::max(worstLine, d);
      ++edges;
      if (d > kFormulaTol) f << "p=" << p << ": edge {" << i << "," << j << "} off line by " << d << "; ";
    }
    for (const auto& v : cl.diagram.vertices) {
      std::set<int> label = relabel(v.label, *map);
      auto expect = closed::octa_vertex(label, p);
      if (!expect) {
        f << "p=" << p << ": unexpected vertex of " << label.size() << " copies; ";
        continue;
      }
      double d = norm(v.point - *expect);
      worstVertex = std::max(worstVertex, d);
      ++vertices;
      if (d > kFormulaTol) f << "p=" << p << ": vertex off by " << d << "; ";
    }
  }
  std::ostringstream d;
  d << "50 samples, " << edges << " edges (worst line distance " << worstLine << "), " << vertices
    << " vertices (worst error " << worstVertex << ")";
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome criterion4() {
  auto octa = builtin_solid("octahedron");
  Failure f;
  auto lift = [&](FaceId face, Vec2 x) { return octa.to_space({face, x}); };
  auto nearest_vertex = [&](Vec3 x) {
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (size_t v = 0; v < octa.num_vertices(); ++v) {
      double d = norm(octa.vertices()[v] - x);
      if (d < best) {
        best = d;
        arg = static_cast<int>(v);
      }
    }
    return std::pair{arg, best};
  };

  // Face center: six lines meeting at the antipodal center, one ending at each polyhedron vertex.
  {
    FullCutLocus cl = full_cut_locus(octa, {6, {0, 0}});
    const auto& face0 = cl[0];
    if (face0.diagram.edges.size() != 6) f << "face 0 has " << face0.diagram.edges.size() << " edges; ";
    std::vector<Vec3> rims; // far endpoints on face 0
    for (const auto& e : face0.diagram.edges) {
      double da = norm(e.a), db = norm(e.b);
      if (std::min(da, db) > kIncidenceTol) f << "edge not through the center; ";
      rims.push_back(lift(0, da < db ? e.b : e.a));
    }
    bool star6 = std::any_of(face0.diagram.vertices.begin(), face0.diagram.vertices.end(),
                             [](const VoronoiVertex& v) { return v.degree == 6 && norm(v.point) <= kIncidenceTol; });
    if (!star6) f << "no degree-6 vertex at the center; ";
    std::set<int> reached;
    for (Vec3 r : rims) {
      auto [v, d] = nearest_vertex(r);
      if (d <= kIncidenceTol) reached.insert(v);
    }
    for (size_t face = 1; face < cl.size(); ++face) {
      for (const auto& e : cl[face].diagram.edges) {
        Vec3 a = lift(static_cast<FaceId>(face), e.a), b = lift(static_cast<FaceId>(face), e.b);
        auto [va, da] = nearest_vertex(a);
        auto [vb, db] = nearest_vertex(b);
        Vec3 other = da <= db ? b : a;
        int v = da <= db ? va : vb;
        if (std::min(da, db) > kIncidenceTol) f << "edge on face " << face << " ends at no vertex; ";
        bool joins = std::any_of(rims.begin(), rims.end(), [&](Vec3 r) { return norm(r - other) <= kIncidenceTol; });
        if (!joins) f << "edge on face " << face << " does not continue a center line; ";
        // collinear continuation: direction from the center line's start
        reached.insert(v);
      }
    }
    if (reached.size() != 6) f << "lines reach " << reached.size() << " of 6 vertices; ";
  }

  // Vertex source: the four polyhedron edges at the antipodal vertex.
  {
    SurfacePoint v1{6, {s3, 1}};
    Vec3 src = octa.to_space(v1);
    int anti = 0;
    for (size_t v = 0; v < octa.num_vertices(); ++v)
      if (norm(octa.vertices()[v] - src) > norm(octa.vertices()[static_cast<size_t>(anti)] - src)) anti = static_cast<int>(v);
    std::vector<std::pair<Vec3, Vec3>> incident;
    for (const auto& e : octa.edges())
      if (e.v0 == anti || e.v1 == anti) incident.push_back({octa.vertices()[e.v0], octa.vertices()[e.v1]});
    std::vector<bool> covered(incident.size(), false);
    FullCutLocus cl = full_cut_locus(octa, v1);
    size_t count = 0;
    for (const auto& face : cl) {
      for (const auto& e : face.diagram.edges) {
        ++count;
        Vec3 a = lift(face.sink, e.a), b = lift(face.sink, e.b);
        bool onSome = false;
        for (size_t k = 0; k < incident.size(); ++k) {
          auto [p0, p1] = incident[k];
          auto dist = [&](Vec3 x) {
            Vec3 d = p1 - p0;
            double t = std::clamp(dot(x - p0, d) / dot(d, d), 0., 1.);
            return norm(x - (p0 + t * d));
          };
          if (dist(a) <= kIncidenceTol && dist(b) <= kIncidenceTol) {
            onSome = true;
            bool full = (norm(a - p0) <= kIncidenceTol && norm(b - p1) <= kIncidenceTol) ||
                        (norm(a - p1) <= kIncidenceTol && norm(b - p0) <= kIncidenceTol);
            if (full) covered[k] = true;
          }
        }
        if (!onSome) f << "vertex-source edge on face " << face.sink << " is off the antipodal edges; ";
      }
    }
    if (count == 0) f << "vertex source has no cut locus; ";
    if (std::count(covered.begin(), covered.end(), true) != 4) f << "antipodal edges covered: "
                                                                 << std::count(covered.begin(), covered.end(), true) << " of 4; ";
  }
  return {!f.any, f.any ? f.msg.str() : "6-line star at the antipodal center; 4 antipodal edges for the vertex source"};
}

Outcome criterion5() {
  auto octa = builtin_solid("octahedron");
  Rng g(5);
  CutLocusCache cache;
  QueryOptions qo;
  qo.cache = &cache;
  std::map<int, size_t> uniformHist, featureHist;
  const int sources = 1000, targetsPerSource = 100;
  auto t0 = std::chrono::steady_clock::now();

  auto probe_features = [&](const SurfacePoint& p) {
    // Points on the cut locus itself: diagram vertices and edge midpoints on every face.
    for (FaceId face = 0; face < static_cast<FaceId>(octa.num_faces()); ++face) {
      auto cl = cache.get(octa, p, face);
      for (const auto& v : cl->diagram.vertices) featureHist[multiplicity(octa, p, {face, v.point}, qo)]++;
      for (const auto& e : cl->diagram.edges) featureHist[multiplicity(octa, p, {face, 0.5 * (e.a + e.b)}, qo)]++;
    }
  };

  for (int s = 0; s < sources; ++s) {
    SurfacePoint p = random_surface_point(octa, g);
    for (int t = 0; t < targetsPerSource; ++t) uniformHist[multiplicity(octa, p, random_surface_point(octa, g), qo)]++;
    if (s % 10 == 0) probe_features(p);
    cache.clear();
  }
  for (Vec2 special : {closed::octaO, closed::octaE, closed::octaV, Vec2{0, 0.5}, Vec2{s3 / 2, 0.5}, Vec2{0.3, 0.7}}) {
    probe_features({6, special});
    cache.clear();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::set<int> allowed{1, 2, 3, 4, 6};
  Failure f;
  std::ostringstream d;
  d << sources * targetsPerSource << " uniform pairs {";
  for (auto [m, c] : uniformHist) {
    d << m << ":" << c << " ";
    if (!allowed.count(m)) f << "uniform pair with multiplicity " << m << "; ";
  }
  d << "}, cut-locus probes {";
  for (auto [m, c] : featureHist) {
    d << m << ":" << c << " ";
    if (!allowed.count(m)) f << "probe with multiplicity " << m << "; ";
  }
  d << "}, " << secs << " s";
  if (secs >= 600.) f << "runtime " << secs << " s; ";
  return {!f.any, f.any ? f.msg.str() + d.str() : d.str()};
}

Outcome criterion6() {
  Rng g(6);
  Failure f;
  std::ostringstream d;
  for (const char* name : {"tetrahedron", "cube", "octahedron"}) {
    auto poly = builtin_solid(name);
    MeshOracle oracle(poly, 64);
    double worst = 0.;
    for (int n = 0; n < 200; ++n) {
      SurfacePoint p = random_surface_point(poly, g), q = random_surface_point(poly, g);
      double dist = distance(poly, p, q), o = oracle.distance(p, q);
      worst = std::max(worst, o / dist);
      if (dist > o + kOracleSlack) f << name << ": distance " << dist << " exceeds oracle " << o << "; ";
      if (o > kOracleRatio * dist + kOracleSlack) f << name << ": oracle " << o << " vs distance " << dist << "; ";
    }
    d << name << " worst ratio " << worst << "; ";
  }
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome criterion7() {
  Failure f;
  std::ostringstream d;
  // Octahedron: scan tau_1 through the command-line entry point.
  {
    std::ostringstream out, err;
    char region[160];
    std::snprintf(region, sizeof region, "(0,0),(0,1),(%.17g,1)", s3);
    int code = cli::run({"scan", "octahedron", "--face", "6", "--region", region, "--grid", "15"}, out, err);
    if (code != 0) f << "scan exit " << code << ": " << err.str();
    else {
      auto r = nlohmann::json::parse(out.str());
      size_t flagged = 0;
      for (const auto& s : r["samples"]) flagged += s["flagged"].get<bool>();
      size_t distinct = r["distinct_signatures"].get<size_t>();
      d << "tau_1: " << r["samples"].size() << " samples, " << distinct << " signature(s), " << flagged << " flagged; ";
      if (distinct != 1) f << "tau_1 scan has " << distinct << " signatures; ";
    }
  }
  // Tetrahedron: interior of tau vs the segment aM (on the edge shared with face 2) vs tau'.
  auto tetra = builtin_solid("tetrahedron");
  Rng g(7);
  std::set<std::string> interiorSigs, edgeSigs;
  for (int n = 0; n < 20; ++n) {
    Vec2 p = interior_point(g, closed::tetraC, closed::tetraM, closed::tetraA, 0.02);
    interiorSigs.insert(structure_signature(full_cut_locus(tetra, {3, p})).encoded);
    CutLocusOnFace cl = cut_locus_on_face(tetra, {3, p}, 0);
    auto map = reference_labels(cl, closed::tetra_copies(p));
    if (!map || !has_edge(cl, *map, 0, 2) || has_edge(cl, *map, 1, 3)) f << "tau interior p=" << p << " lacks {0,2} or has {1,3}; ";
  }
  for (int n = 1; n <= 20; ++n) {
    Vec2 p = lerp(closed::tetraA, closed::tetraM, n / 21.);
    edgeSigs.insert(structure_signature(full_cut_locus(tetra, {3, p})).encoded);
    CutLocusOnFace cl = cut_locus_on_face(tetra, {3, p}, 0);
    auto map = reference_labels(cl, closed::tetra_copies(p));
    if (!map || has_edge(cl, *map, 0, 2) || has_edge(cl, *map, 1, 3)) f << "aM p=" << p << " still has {0,2} or {1,3}; ";
    bool four = std::any_of(cl.diagram.vertices.begin(), cl.diagram.vertices.end(),
                            [](const VoronoiVertex& v) { return v.label.size() == 4 && v.degree == 4; });
    if (!four) f << "aM p=" << p << " has no 4-fold vertex; ";

    // Just across aM, inside tau' on face 2: copies follow continuously from p.
    Vec2 onTwo = tetra.to_face({3, p}, 2);
    Vec2 inward = onTwo + 0.02 * normalize(Vec2{0, 0} - onTwo);
    CutLocusOnFace across = cut_locus_on_face(tetra, {2, inward}, 0);
    std::vector<int> nearMap;
    auto copies = closed::tetra_copies(p);
    for (const auto& s : across.survivors) {
      int best = 0;
      for (int k = 1; k < 4; ++k)
        if (norm(copies[k] - s.image) < norm(copies[best] - s.image)) best = k;
      nearMap.push_back(best);
    }
    if (has_edge(across, nearMap, 0, 2) || !has_edge(across, nearMap, 1, 3)) f << "tau' near p=" << p << " lacks {1,3}; ";
  }
  d << "tetrahedron: " << interiorSigs.size() << " interior signature(s), " << edgeSigs.size() << " aM signature(s)";
  if (interiorSigs.size() != 1) f << "tau interior has " << interiorSigs.size() << " signatures; ";
  if (edgeSigs.size() != 1) f << "aM has " << edgeSigs.size() << " signatures; ";
  if (!interiorSigs.empty() && !edgeSigs.empty() && *interiorSigs.begin() == *edgeSigs.begin()) f << "tau and aM agree; ";
  d << "; {0,2} present in tau, absent on aM (4-fold vertex), {1,3} present in tau'";
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome criterion8() {
  Failure f;
  std::ostringstream d;
  for (const char* name : {"icosahedron", "dodecahedron"}) {
    auto poly = builtin_solid(name);
    SurfacePoint center = from_barycentric(poly, 0, std::vector<double>(poly.faces()[0].size(), 1.));
    auto t0 = std::chrono::steady_clock::now();
    FullCutLocus cl = full_cut_locus(poly, center, {}, 1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    size_t edges = 0;
    for (const auto& face : cl) edges += face.diagram.edges.size();
    d << name << " " << secs << " s (" << edges << " edges, single thread); ";
    if (secs >= 60.) f << name << " took " << secs << " s; ";
    if (edges == 0) f << name << " produced no cut locus; ";
  }
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome criterion9() {
  ScopedEpsilon scope(1e-9);
  Rng g(9);
  Failure f;
  std::ostringstream d;
  const int instances = 1000;

  // Subcell inclusion: adding generators only shrinks a cell.
  {
    int done = 0, violations = 0;
    ConvexRegion clip = make_box({-6, -6}, {6, 6});
    while (done < instances) {
      std::vector<Vec2> gens;
      int n = 2 + static_cast<int>(uniform(g) * 8);
      for (int i = 0; i < n; ++i) gens.push_back({uniform(g, -5, 5), uniform(g, -5, 5)});
      std::vector<Vec2> more = gens;
      int extra = 1 + static_cast<int>(uniform(g) * 5);
      for (int i = 0; i < extra; ++i) more.push_back({uniform(g, -5, 5), uniform(g, -5, 5)});
      ConvexRegion small = voronoi_cell(0, more, clip);
      if (small.vertices.size() < 3) continue;
      ConvexRegion big = voronoi_cell(0, gens, clip);
      for (int k = 0; k < 20; ++k) {
        Vec2 q{};
        double total = 0.;
        for (Vec2 v : small.vertices) {
          double w = uniform(g);
          q += w * v;
          total += w;
        }
        q = q / total;
        if (!big.contains(q, kPropertyTol)) ++violations;
      }
      ++done;
    }
    d << "subcell inclusion " << done << " instances, " << violations << " violations; ";
    if (violations) f << violations << " subcell violations; ";
  }

  // Convexity of the set of points with the per-point property, by midpoints.
  {
    std::vector<Polyhedron> solids;
    for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron"}) solids.push_back(builtin_solid(name));
    int done = 0, violations = 0, attempts = 0;
    while (done < instances && attempts < 200000) {
      ++attempts;
      const Polyhedron& poly = solids[static_cast<size_t>(uniform(g) * solids.size())];
      SurfacePoint p = random_surface_point(poly, g);
      FaceId sink = static_cast<FaceId>(uniform(g) * poly.num_faces());
      auto paths = enumerate_face_paths(poly, p.face, sink, 6);
      const FacePath& path = paths[static_cast<size_t>(uniform(g) * paths.size())];
      Unfolding u = unfold_path(poly, path);
      Vec2 x = u.motion(0)(p.coords);
      const auto& face = poly.polygon(sink);
      std::vector<Vec2> good;
      for (int k = 0; k < 40 && good.size() < 2; ++k) {
        Vec2 q = interior_point(g, face[0], face[1], face[2], 0.);
        if (has_star_property(u, x, q)) good.push_back(q);
      }
      if (good.size() < 2) continue;
      if (!has_star_property(u, x, 0.5 * (good[0] + good[1]))) ++violations;
      ++done;
    }
    d << "midpoint convexity " << done << " instances, " << violations << " violations; ";
    if (done < instances) f << "only " << done << " convexity instances; ";
    if (violations) f << violations << " convexity violations; ";
  }

  // Geodesics: no face revisited, straight in their own unfolding.
  {
    std::vector<Polyhedron> solids;
    for (const char* name : {"tetrahedron", "cube", "octahedron"}) solids.push_back(builtin_solid(name));
    int pairs = 0, revisits = 0, bends = 0;
    size_t geodesicCount = 0;
    double worstBend = 0.;
    while (pairs < instances) {
      const Polyhedron& poly = solids[static_cast<size_t>(pairs % 3)];
      SurfacePoint p = random_surface_point(poly, g), q = random_surface_point(poly, g);
      if (pairs % 2) {
        // Odd pairs end on the cut locus, where several geodesics meet.
        FaceId sink = static_cast<FaceId>(uniform(g) * poly.num_faces());
        CutLocusOnFace cl = cut_locus_on_face(poly, p, sink);
        if (!cl.diagram.edges.empty()) {
          const auto& e = cl.diagram.edges[static_cast<size_t>(uniform(g) * cl.diagram.edges.size())];
          q = {sink, lerp(e.a, e.b, uniform(g, 0.1, 0.9))};
        }
      }
      for (const Geodesic& geo : geodesics(poly, p, q)) {
        ++geodesicCount;
        std::set<FaceId> faces;
        for (const auto& s : geo.pieces) faces.insert(s.face);
        if (faces.size() != geo.pieces.size()) ++revisits;
        Unfolding u = unfold_path(poly, geo.path);
        Vec2 a = geo.sourceImage;
        Vec2 b = u.motion(u.size() - 1)(geo.pieces.back().end);
        for (const auto& s : geo.pieces) {
          auto idx = u.index_of(s.face);
          if (!idx) {
            ++bends;
            continue;
          }
          for (Vec2 x : {s.start, s.end}) {
            double dist = point_segment_distance(u.motion(*idx)(x), a, b);
            worstBend = std::max(worstBend, dist);
            if (dist > kPropertyTol) ++bends;
          }
        }
      }
      ++pairs;
    }
    d << "no-revisit and straight development: " << pairs << " pairs, " << geodesicCount << " geodesics, " << revisits
      << " revisits, " << bends << " bends (worst " << worstBend << ")";
    if (revisits) f << revisits << " face revisits; ";
    if (bends) f << bends << " bent developments; ";
  }
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tetrahedron copies", criterion1},     {"tetrahedron vertex formulas", criterion2},
      {"octahedron bisector lines", criterion3}, {"star structures", criterion4},
      {"multiplicity law", criterion5},       {"distance oracle agreement", criterion6},
      {"region isomorphism", criterion7},     {"performance", criterion8},
      {"property suites", criterion9},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
