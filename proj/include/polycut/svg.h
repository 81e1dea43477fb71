#pragma once

#include "polycut/geometry.h"

#include <string>
#include <vector>

namespace polycut {

struct Style {
  std::string stroke = "black";
  std::string fill = "none";
  double strokeWidth = 1.; // in pixels
  double opacity = 1.;
  double radius = 3.;      // points, in pixels
  double fontSize = 11.;   // labels, in pixels
};

struct Primitive {
  enum class Kind { Polygon, Segment, Point, Label };
  Kind kind = Kind::Polygon;
  std::vector<Vec2> points; // Polygon: vertices; Segment: 2; Point/Label: 1
  std::string text;
  Style style;
};

struct Layer {
  std::string name;
  std::vector<Primitive> items;
};

// Logical coordinates, y up. Rendered with a fixed viewBox around the content.
struct Scene {
  std::vector<Layer> layers;

  Layer& layer(const std::string& name);
  void polygon(const std::string& layer, std::vector<Vec2> pts, Style s = {});
  void segment(const std::string& layer, Vec2 a, Vec2 b, Style s = {});
  void point(const std::string& layer, Vec2 p, Style s = {});
  void label(const std::string& layer, Vec2 p, std::string text, Style s = {});

  // Throws InvalidInput on any non-finite coordinate.
  std::string to_svg(double widthPx = 640., double marginPx = 24.) const;
};

// Deterministic color for a generator index.
std::string palette_color(size_t index);

} // namespace polycut
