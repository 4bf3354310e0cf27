#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace lcr {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

  double norm() const { return std::hypot(x, y); }
};

// How travel distances are evaluated. Euc2dRounded is the TSPLIB nint
// convention: nearest integer, .5 ties rounded up.
enum class DistanceRule { Exact, Euc2dRounded };

inline double euc2d_distance(Vec2 a, Vec2 b, DistanceRule rule) {
  const double d = std::hypot(a.x - b.x, a.y - b.y);
  if (rule == DistanceRule::Euc2dRounded) {
    return std::floor(d + 0.5);
  }
  return d;
}

// Signed angle between (a - ref) and (b - ref), mapped to [-1, 1].
// Zero when either vector degenerates.
inline double signed_angle_ratio(Vec2 ref, Vec2 a, Vec2 b) {
  const Vec2 u = a - ref;
  const Vec2 v = b - ref;
  if ((u.x == 0.0 && u.y == 0.0) || (v.x == 0.0 && v.y == 0.0)) {
    return 0.0;
  }
  const double cross = u.x * v.y - u.y * v.x;
  const double dot = u.x * v.x + u.y * v.y;
  constexpr double kPi = 3.14159265358979323846;
  return std::atan2(cross, dot) / kPi;
}

// Smallest axis-aligned square containing all points, used both for
// feature normalization and for dihedral instance augmentation.
struct SquareBox {
  Vec2 origin;
  double side = 1.0;

  Vec2 to_unit(Vec2 p) const { return {(p.x - origin.x) / side, (p.y - origin.y) / side}; }
  Vec2 from_unit(Vec2 u) const { return {origin.x + u.x * side, origin.y + u.y * side}; }
};

SquareBox bounding_square(std::span<const Vec2> points);

}  // namespace lcr
