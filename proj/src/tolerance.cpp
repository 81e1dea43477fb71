#include "polycut/tolerance.h"
#include "polycut/errors.h"

#include <atomic>
#include <cstdlib>
#include <string>

namespace polycut {

namespace {
std::atomic<double> gEpsilon{kDefaultEpsilon};
}

double eps() { return gEpsilon.load(std::memory_order_relaxed); }

void set_eps(double value) {
  if (!(value > 0.)) throw GeometryError(ErrorKind::InvalidInput, "tolerance must be positive");
  gEpsilon.store(value, std::memory_order_relaxed);
}

bool load_eps_from_env() {
  const char* raw = std::getenv("POLYCUT_EPSILON");
  if (raw == nullptr) return false;
  try {
    size_t used = 0;
    double value = std::stod(raw, &used);
    if (used == 0 || !(value > 0.)) return false;
    set_eps(value);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

ScopedEpsilon::ScopedEpsilon(double value) : saved_(eps()) { set_eps(value); }
ScopedEpsilon::~ScopedEpsilon() { gEpsilon.store(saved_); }

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::NonPlanarFace: return "NonPlanarFace";
  case ErrorKind::NonConvexFace: return "NonConvexFace";
  case ErrorKind::NonManifoldEdge: return "NonManifoldEdge";
  case ErrorKind::NotConvex: return "NotConvex";
  case ErrorKind::BadEulerCharacteristic: return "BadEulerCharacteristic";
  case ErrorKind::InconsistentOrientation: return "InconsistentOrientation";
  case ErrorKind::UnknownSolid: return "UnknownSolid";
  case ErrorKind::PointNotOnSurface: return "PointNotOnSurface";
  case ErrorKind::BaseNotIsometric: return "BaseNotIsometric";
  case ErrorKind::FaceNotOnPath: return "FaceNotOnPath";
  case ErrorKind::SegmentEscapesUnfolding: return "SegmentEscapesUnfolding";
  case ErrorKind::CoincidentPoints: return "CoincidentPoints";
  case ErrorKind::NumericDegeneracy: return "NumericDegeneracy";
  }
  return "Unknown";
}

} // namespace polycut
