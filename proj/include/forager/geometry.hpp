#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace forager {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }

/// Wraps an angle to [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

/// Wraps an angle to (-pi, pi].
inline double wrap_signed(double a) {
  a = std::fmod(a, kTwoPi);
  if (a > kPi) a -= kTwoPi;
  if (a <= -kPi) a += kTwoPi;
  return a;
}

inline Vec2 heading_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Distance along unit direction `dir` from `origin` to the boundary of the
// rectangle [0,w] x [0,h]. The origin must lie inside or on the rectangle.
inline double ray_rect_exit(const Vec2& origin, const Vec2& dir, double w, double h) {
  double t = std::numeric_limits<double>::infinity();
  if (dir.x() > 0.0) {
    t = std::min(t, (w - origin.x()) / dir.x());
  } else if (dir.x() < 0.0) {
    t = std::min(t, -origin.x() / dir.x());
  }
  if (dir.y() > 0.0) {
    t = std::min(t, (h - origin.y()) / dir.y());
  } else if (dir.y() < 0.0) {
    t = std::min(t, -origin.y() / dir.y());
  }
  return std::max(t, 0.0);
}

// Smallest non-negative ray parameter at which the circle is hit, if any.
// An origin inside or on the circle reports a hit at distance zero.
inline std::optional<double> ray_circle_hit(const Vec2& origin, const Vec2& dir,
                                            const Vec2& center, double radius) {
  const Vec2 oc = center - origin;
  const double c = oc.squaredNorm() - radius * radius;
  if (c <= 0.0) return 0.0;
  const double b = oc.dot(dir);
  if (b <= 0.0) return std::nullopt;
  const double disc = b * b - c;
  if (disc < 0.0) return std::nullopt;
  return std::max(b - std::sqrt(disc), 0.0);
}

}  // namespace forager
