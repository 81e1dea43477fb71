#pragma once

#include <cmath>
#include <ostream>

namespace polycut {

struct Vec2 {
  double x = 0.;
  double y = 0.;

  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline Vec2 normalize(Vec2 a) { return a / norm(a); }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; } // counter-clockwise quarter turn
inline Vec2 lerp(Vec2 a, Vec2 b, double t) { return a + t * (b - a); }

inline std::ostream& operator<<(std::ostream& os, Vec2 v) { return os << "(" << v.x << ", " << v.y << ")"; }

struct Vec3 {
  double x = 0.;
  double y = 0.;
  double z = 0.;

  Vec3& operator+=(Vec3 o) { x += o.x; y += o.y; z += o.z; return *this; }
  friend bool operator==(Vec3, Vec3) = default;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalize(Vec3 a) { return a / norm(a); }

inline std::ostream& operator<<(std::ostream& os, Vec3 v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

// Orientation-preserving rigid motion of the plane: x -> R x + t with R a rotation.
struct Motion2 {
  double cos = 1.;
  double sin = 0.;
  Vec2 translation;

  static Motion2 rotation(double angle, Vec2 t = {}) { return {std::cos(angle), std::sin(angle), t}; }
  static Motion2 translate(Vec2 t) { return {1., 0., t}; }

  // The unique motion sending a0 -> b0 with direction (a1 - a0) turned onto (b1 - b0).
  // Assumes |a1 - a0| == |b1 - b0|.
  static Motion2 align(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    Vec2 u = normalize(a1 - a0);
    Vec2 v = normalize(b1 - b0);
    Motion2 m{dot(u, v), cross(u, v), {}};
    m.translation = b0 - m.rotate(a0);
    return m;
  }

  Vec2 rotate(Vec2 p) const { return {cos * p.x - sin * p.y, sin * p.x + cos * p.y}; }
  Vec2 operator()(Vec2 p) const { return rotate(p) + translation; }

  // (*this) after `inner`
  Motion2 compose(const Motion2& inner) const {
    Motion2 m{cos * inner.cos - sin * inner.sin, sin * inner.cos + cos * inner.sin, {}};
    m.translation = rotate(inner.translation) + translation;
    return m;
  }

  Motion2 inverse() const {
    Motion2 m{cos, -sin, {}};
    m.translation = -m.rotate(translation);
    return m;
  }

  double determinant() const { return cos * cos + sin * sin; }
};

} // namespace polycut
