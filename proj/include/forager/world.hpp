#pragma once

#include "forager/arena.hpp"
#include "forager/rng.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace forager {

enum class Role { Generalist, Dropper, Collector };

/// Area in which a robot of this role auto-attaches free objects.
constexpr AreaKind pickup_area(Role r) {
  return r == Role::Collector ? AreaKind::Cache : AreaKind::Source;
}

/// Area in which a carried object detaches.
constexpr AreaKind release_area(Role r) {
  return r == Role::Dropper ? AreaKind::Slope : AreaKind::Nest;
}

const char* role_name(Role);
std::optional<Role> parse_role(std::string_view name);

inline constexpr double kObjectRadius = 0.1;

// Platform constants default to the TurtleBot 4 footprint and drive limits.
struct RobotSpec {
  double radius = 0.17;
  double max_linear_speed = 0.31;   // m/s
  double max_angular_speed = 1.9;   // rad/s
  double grasp_radius = 0.3;        // around the front point
  double ir_range = 0.2;
  double lidar_range = 1.0;
  // Front-facing IR array, left to right.
  std::array<double, 7> ir_angles = {deg_to_rad(-60.0), deg_to_rad(-40.0), deg_to_rad(-20.0),
                                     deg_to_rad(0.0),   deg_to_rad(20.0),  deg_to_rad(40.0),
                                     deg_to_rad(60.0)};
  // Ground sensors on the rim: front, right, back, left.
  std::array<double, 4> ground_sensor_angles = {0.0, -kPi / 2.0, kPi, kPi / 2.0};
};

/// Robot-frame position of ground sensor mount i.
inline Vec2 ground_mount_offset(const RobotSpec& spec, int i) {
  return spec.radius * heading_vector(spec.ground_sensor_angles[static_cast<std::size_t>(i)]);
}

struct ObjectState {
  int id = 0;
  Vec2 position = Vec2::Zero();
  double radius = kObjectRadius;
  std::optional<int> carried_by;
  bool sliding = false;
};

struct RobotState {
  Vec2 position = Vec2::Zero();
  double heading = 0.0;  // [0, 2*pi)
  Role role = Role::Generalist;
  std::optional<int> carrying;
};

struct WorldState {
  double time = 0.0;
  std::vector<RobotState> robots;
  std::vector<ObjectState> objects;  // object ids equal vector indices
};

/// Exact (bitwise) state comparison, used by determinism checks.
bool identical(const WorldState& a, const WorldState& b);

struct NoiseSpec {
  double ir_sigma = 0.05;
  double lidar_sigma = 0.02;      // meters, applied before the range cap
  double ground_correct_prob = 0.85;

  static constexpr NoiseSpec noiseless() { return NoiseSpec{0.0, 0.0, 1.0}; }
};

struct StepConfig {
  double dt = 0.1;  // seconds per control step
  int max_collision_iterations = 8;
};

struct SimParams {
  ArenaSpec arena;
  RobotSpec robot;
  NoiseSpec noise;
  StepConfig step;
};

/// The five episode setups: three single-robot training configurations and
/// the two-robot pairings used for post-evaluation.
enum class ScenarioKind { GeneralistTrain, DropperTrain, CollectorTrain, PostEvalGG, PostEvalDC };

const char* scenario_kind_name(ScenarioKind kind);
double default_horizon(ScenarioKind kind);  // seconds

struct Scenario {
  ScenarioKind kind = ScenarioKind::GeneralistTrain;
  std::uint64_t seed = 0;
  double horizon = 240.0;
  int object_count = 7;
};

// Builds the randomized initial world for a scenario: objects first, then
// robots, all rejection-sampled to respect wall margins and pairwise
// separation. Deterministic in (scenario, params).
WorldState spawn_world(const Scenario& scenario, const SimParams& params);

/// Scenario with the standard horizon and object count for `kind`, plus its
/// spawned world.
std::pair<WorldState, Scenario> spawn_scenario(ScenarioKind kind, std::uint64_t seed,
                                               const SimParams& params);

/// Number of objects whose center lies in `area`; carried objects count at
/// their current position.
int objects_in_area(const WorldState& world, const ArenaSpec& arena, AreaKind area);

/// Per-area object counts indexed by kAreaOrder.
std::array<int, 4> area_counts(const WorldState& world, const ArenaSpec& arena);

}  // namespace forager
