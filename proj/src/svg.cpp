#include "polycut/svg.h"

#include "polycut/errors.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace polycut {

Layer& Scene::layer(const std::string& name) {
  for (Layer& l : layers)
    if (l.name == name) return l;
  layers.push_back({name, {}});
  return layers.back();
}

void Scene::polygon(const std::string& l, std::vector<Vec2> pts, Style s) {
  layer(l).items.push_back({Primitive::Kind::Polygon, std::move(pts), {}, std::move(s)});
}

void Scene::segment(const std::string& l, Vec2 a, Vec2 b, Style s) {
  layer(l).items.push_back({Primitive::Kind::Segment, {a, b}, {}, std::move(s)});
}

void Scene::point(const std::string& l, Vec2 p, Style s) {
  layer(l).items.push_back({Primitive::Kind::Point, {p}, {}, std::move(s)});
}

void Scene::label(const std::string& l, Vec2 p, std::string text, Style s) {
  layer(l).items.push_back({Primitive::Kind::Label, {p}, std::move(text), std::move(s)});
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& t) {
  std::string out;
  for (char c : t) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

} // namespace

std::string Scene::to_svg(double widthPx, double marginPx) const {
  double inf = std::numeric_limits<double>::infinity();
  Vec2 lo{inf, inf}, hi{-inf, -inf};
  for (const Layer& l : layers) {
    for (const Primitive& p : l.items) {
      for (Vec2 v : p.points) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
          throw GeometryError(ErrorKind::InvalidInput, "non-finite coordinate in scene");
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
      }
    }
  }
  if (lo.x > hi.x) lo = hi = {};
  double w = std::max(hi.x - lo.x, 1e-9), h = std::max(hi.y - lo.y, 1e-9);
  double scale = (widthPx - 2. * marginPx) / std::max(w, h);
  double width = w * scale + 2. * marginPx, height = h * scale + 2. * marginPx;
  auto X = [&](Vec2 v) { return num((v.x - lo.x) * scale + marginPx); };
  auto Y = [&](Vec2 v) { return num((hi.y - v.y) * scale + marginPx); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  for (const Layer& l : layers) {
    os << "  <g id=\"" << escape(l.name) << "\">\n";
    for (const Primitive& p : l.items) {
      const Style& s = p.style;
      std::string common = "stroke=\"" + escape(s.stroke) + "\" fill=\"" + escape(s.fill) + "\" stroke-width=\"" +
                           num(s.strokeWidth) + "\"" + (s.opacity < 1. ? " opacity=\"" + num(s.opacity) + "\"" : "");
      switch (p.kind) {
      case Primitive::Kind::Polygon:
        os << "    <polygon points=\"";
        for (size_t i = 0; i < p.points.size(); ++i) os << (i ? " " : "") << X(p.points[i]) << "," << Y(p.points[i]);
        os << "\" " << common << "/>\n";
        break;
      case Primitive::Kind::Segment:
        os << "    <line x1=\"" << X(p.points[0]) << "\" y1=\"" << Y(p.points[0]) << "\" x2=\"" << X(p.points[1])
           << "\" y2=\"" << Y(p.points[1]) << "\" " << common << "/>\n";
        break;
      case Primitive::Kind::Point:
        os << "    <circle cx=\"" << X(p.points[0]) << "\" cy=\"" << Y(p.points[0]) << "\" r=\"" << num(s.radius)
           << "\" " << common << "/>\n";
        break;
      case Primitive::Kind::Label:
        os << "    <text x=\"" << X(p.points[0]) << "\" y=\"" << Y(p.points[0]) << "\" font-size=\"" << num(s.fontSize)
           << "\" font-family=\"sans-serif\" fill=\"" << escape(s.stroke) << "\">" << escape(p.text) << "</text>\n";
        break;
      }
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string palette_color(size_t index) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                 "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[index % (sizeof colors / sizeof *colors)];
}

} // namespace polycut
