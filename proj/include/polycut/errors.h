#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycut {

enum class ErrorKind {
  InvalidInput,
  NonPlanarFace,
  NonConvexFace,
  NonManifoldEdge,
  NotConvex,
  BadEulerCharacteristic,
  InconsistentOrientation,
  UnknownSolid,
  PointNotOnSurface,
  BaseNotIsometric,
  FaceNotOnPath,
  SegmentEscapesUnfolding,
  CoincidentPoints,
  NumericDegeneracy,
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
public:
  GeometryError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace polycut
