#pragma once

#include "forager/geometry.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace forager {

/// The four floor regions, ordered along the arena's long axis.
enum class AreaKind { Nest = 0, Cache = 1, Slope = 2, Source = 3 };

inline constexpr std::array<AreaKind, 4> kAreaOrder = {AreaKind::Nest, AreaKind::Cache,
                                                       AreaKind::Slope, AreaKind::Source};

/// Ground encoding reported by the floor sensors for each area.
constexpr double area_encoding(AreaKind a) {
  switch (a) {
    case AreaKind::Nest: return 0.2;
    case AreaKind::Cache: return 0.4;
    case AreaKind::Slope: return 0.6;
    case AreaKind::Source: return 0.8;
  }
  return 0.0;
}

/// Position of the area along the long axis, 1 (nest) through 4 (source).
constexpr int area_rank(AreaKind a) { return static_cast<int>(a) + 1; }

constexpr const char* area_name(AreaKind a) {
  switch (a) {
    case AreaKind::Nest: return "nest";
    case AreaKind::Cache: return "cache";
    case AreaKind::Slope: return "slope";
    case AreaKind::Source: return "source";
  }
  return "?";
}

// Rectangular arena with the nest at y=0 and the source at y=length, so
// "downhill" on the slope always means decreasing y. Walls are the four
// boundary lines of [0,width] x [0,length].
struct ArenaSpec {
  double width = 4.0;
  double length = 7.5;
  double nest_end = 1.5;   // nest spans [0, nest_end)
  double cache_end = 2.5;  // cache spans [nest_end, cache_end)
  double slope_end = 6.5;  // slope spans [cache_end, slope_end), source above
  double slide_speed = 0.5;  // m/s of free objects on the slope
  std::array<Vec2, 3> lights = {Vec2(1.0, 0.05), Vec2(2.0, 0.05), Vec2(3.0, 0.05)};
};

inline bool arena_contains(const ArenaSpec& arena, const Vec2& p) {
  return p.x() >= 0.0 && p.x() <= arena.width && p.y() >= 0.0 && p.y() <= arena.length;
}

// Area intervals are half-open in y with a boundary point belonging to the
// higher-y area, so membership (and hence fitness counting) is unambiguous.
inline AreaKind area_at(const ArenaSpec& arena, const Vec2& p) {
  if (!arena_contains(arena, p)) throw std::out_of_range("area_at: point outside arena");
  if (p.y() < arena.nest_end) return AreaKind::Nest;
  if (p.y() < arena.cache_end) return AreaKind::Cache;
  if (p.y() < arena.slope_end) return AreaKind::Slope;
  return AreaKind::Source;
}

/// y-extent [lo, hi) of an area; the source additionally includes y == length.
inline std::pair<double, double> area_span(const ArenaSpec& arena, AreaKind a) {
  switch (a) {
    case AreaKind::Nest: return {0.0, arena.nest_end};
    case AreaKind::Cache: return {arena.nest_end, arena.cache_end};
    case AreaKind::Slope: return {arena.cache_end, arena.slope_end};
    case AreaKind::Source: return {arena.slope_end, arena.length};
  }
  throw std::logic_error("area_span: bad area");
}

}  // namespace forager
