#pragma once

#include "forager/sensors.hpp"

#include <functional>
#include <span>
#include <vector>

namespace forager {

struct ControlCommand {
  double linear = 0.0;   // m/s
  double angular = 0.0;  // rad/s
};

/// Command with both components clamped to the actuator limits.
inline ControlCommand clamp_command(const ControlCommand& cmd, const RobotSpec& spec) {
  return {std::clamp(cmd.linear, -spec.max_linear_speed, spec.max_linear_speed),
          std::clamp(cmd.angular, -spec.max_angular_speed, spec.max_angular_speed)};
}

struct GraspEvent {
  long step = 0;
  int robot_id = 0;
  int object_id = 0;
  bool attached = false;  // false = released
  Vec2 robot_position = Vec2::Zero();
  Vec2 object_position = Vec2::Zero();
};

// Grasp/release pass, applied once per step after motion resolution, robots in
// id order. Release: a carried object whose center entered the role's release
// area detaches (and starts sliding if on the slope). Attach: a robot without
// cargo whose center is in its pickup area grabs the nearest free object
// within grasp_radius of its front point, ties to the lower object id.
void apply_grasp_release(WorldState& world, const SimParams& params, long step = 0,
                         std::vector<GraspEvent>* events = nullptr);

// Advances the world by one control step, in fixed order: integrate unicycle
// kinematics, resolve overlaps (robot-wall, robot-robot, robot-object,
// object-wall; bounded iterations, residual overlap carries over), slide free
// slope objects toward the cache, apply grasp/release, reposition carried
// objects at the carrier front, advance time.
void step_world(WorldState& world, std::span<const ControlCommand> commands,
                const SimParams& params, long step = 0,
                std::vector<GraspEvent>* events = nullptr);

// Controllers see the sensor frame plus the world and their id; evolved
// policies only read the frame, scripted test policies may read the world.
using RobotController =
    std::function<ControlCommand(const WorldState& world, int robot_id, const SensorFrame& frame)>;

struct StepRecord {
  double time = 0.0;
  std::vector<RobotState> robots;
  std::vector<ObjectState> objects;
  std::array<int, 4> counts{};
  std::vector<SensorFrame> frames;  // only if requested
};

struct EpisodeOptions {
  bool record_trace = false;
  bool record_frames = false;
};

struct EpisodeResult {
  WorldState world;
  long steps = 0;
  std::array<int, 4> counts{};  // final per-area object counts
  std::vector<GraspEvent> grasp_events;
  std::vector<StepRecord> trace;
};

long episode_step_count(double horizon, double dt);

// Runs one full episode: spawn the scenario world, then loop sense ->
// control -> step. Pure function of (scenario, controllers, params, rng).
EpisodeResult run_episode(const Scenario& scenario, std::span<const RobotController> controllers,
                          const SimParams& params, Rng rng, const EpisodeOptions& options = {});

}  // namespace forager
