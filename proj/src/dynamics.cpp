#include "forager/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace forager {

namespace {

// Clamps a center into the rectangle shrunk by `margin`; true if it moved.
bool clamp_to_walls(Vec2& p, double margin, const ArenaSpec& arena) {
  const double x = std::clamp(p.x(), margin, arena.width - margin);
  const double y = std::clamp(p.y(), margin, arena.length - margin);
  const bool moved = x != p.x() || y != p.y();
  p.x() = x;
  p.y() = y;
  return moved;
}

Vec2 contact_normal(const Vec2& from, const Vec2& to, double dist) {
  if (dist < 1e-12) return Vec2(1.0, 0.0);  // coincident centers: fixed fallback
  return (to - from) / dist;
}

void resolve_overlaps(WorldState& world, const SimParams& params) {
  const ArenaSpec& arena = params.arena;
  const double rr = params.robot.radius;
  const int nr = static_cast<int>(world.robots.size());

  for (int iter = 0; iter < params.step.max_collision_iterations; ++iter) {
    bool any = false;

    for (RobotState& robot : world.robots) {
      any |= clamp_to_walls(robot.position, rr, arena);
    }

    // Robot-robot: each moves half the overlap apart.
    for (int i = 0; i < nr; ++i) {
      for (int j = i + 1; j < nr; ++j) {
        RobotState& a = world.robots[static_cast<std::size_t>(i)];
        RobotState& b = world.robots[static_cast<std::size_t>(j)];
        const Vec2 d = b.position - a.position;
        const double dist2 = d.squaredNorm();
        if (dist2 >= 4.0 * rr * rr) continue;
        const double dist = std::sqrt(dist2);
        const Vec2 n = contact_normal(a.position, b.position, dist);
        const double overlap = 2.0 * rr - dist;
        a.position -= 0.5 * overlap * n;
        b.position += 0.5 * overlap * n;
        any = true;
      }
    }

    // Robot-object: the free object is pushed fully out of the robot circle.
    for (int i = 0; i < nr; ++i) {
      RobotState& robot = world.robots[static_cast<std::size_t>(i)];
      for (ObjectState& obj : world.objects) {
        if (obj.carried_by) continue;
        const double min_dist = rr + obj.radius;
        const Vec2 d = obj.position - robot.position;
        const double dist2 = d.squaredNorm();
        if (dist2 >= min_dist * min_dist) continue;
        const double dist = std::sqrt(dist2);
        const Vec2 n = contact_normal(robot.position, obj.position, dist);
        obj.position = robot.position + min_dist * n;
        any = true;
      }
    }

    for (ObjectState& obj : world.objects) {
      if (obj.carried_by) continue;
      any |= clamp_to_walls(obj.position, obj.radius, arena);
    }

    if (!any) break;
  }
}

void advance_sliding(WorldState& world, const SimParams& params) {
  const ArenaSpec& arena = params.arena;
  for (ObjectState& obj : world.objects) {
    if (obj.carried_by) continue;
    if (area_at(arena, obj.position) == AreaKind::Slope) {
      obj.position.y() -= arena.slide_speed * params.step.dt;
    }
    obj.sliding = area_at(arena, obj.position) == AreaKind::Slope;
  }
}

void reposition_carried(WorldState& world, const SimParams& params) {
  for (const RobotState& robot : world.robots) {
    if (!robot.carrying) continue;
    ObjectState& obj = world.objects[static_cast<std::size_t>(*robot.carrying)];
    obj.position =
        robot.position + (params.robot.radius + obj.radius) * heading_vector(robot.heading);
    clamp_to_walls(obj.position, obj.radius, params.arena);
  }
}

}  // namespace

void apply_grasp_release(WorldState& world, const SimParams& params, long step,
                         std::vector<GraspEvent>* events) {
  const ArenaSpec& arena = params.arena;
  for (int i = 0; i < static_cast<int>(world.robots.size()); ++i) {
    RobotState& robot = world.robots[static_cast<std::size_t>(i)];

    if (robot.carrying) {
      ObjectState& obj = world.objects[static_cast<std::size_t>(*robot.carrying)];
      if (area_at(arena, obj.position) == release_area(robot.role)) {
        obj.carried_by.reset();
        obj.sliding = area_at(arena, obj.position) == AreaKind::Slope;
        robot.carrying.reset();
        if (events) events->push_back({step, i, obj.id, false, robot.position, obj.position});
      }
    }

    if (!robot.carrying && area_at(arena, robot.position) == pickup_area(robot.role)) {
      const Vec2 front = robot.position + params.robot.radius * heading_vector(robot.heading);
      const double reach2 = params.robot.grasp_radius * params.robot.grasp_radius;
      int best = -1;
      double best_dist2 = 0.0;
      for (const ObjectState& obj : world.objects) {
        if (obj.carried_by) continue;
        const double d2 = (obj.position - front).squaredNorm();
        if (d2 > reach2) continue;
        if (best < 0 || d2 < best_dist2) {
          best = obj.id;
          best_dist2 = d2;
        }
      }
      if (best >= 0) {
        ObjectState& obj = world.objects[static_cast<std::size_t>(best)];
        obj.carried_by = i;
        obj.sliding = false;
        robot.carrying = best;
        if (events) events->push_back({step, i, best, true, robot.position, obj.position});
      }
    }
  }
}

void step_world(WorldState& world, std::span<const ControlCommand> commands,
                const SimParams& params, long step, std::vector<GraspEvent>* events) {
  if (commands.size() != world.robots.size()) {
    throw std::invalid_argument("step_world: one command per robot required");
  }
  const double dt = params.step.dt;

  for (std::size_t i = 0; i < world.robots.size(); ++i) {
    RobotState& robot = world.robots[i];
    const ControlCommand cmd = clamp_command(commands[i], params.robot);
    robot.position += cmd.linear * dt * heading_vector(robot.heading);
    robot.heading = wrap_angle(robot.heading + cmd.angular * dt);
  }

  resolve_overlaps(world, params);
  advance_sliding(world, params);
  apply_grasp_release(world, params, step, events);
  reposition_carried(world, params);
  world.time += dt;
}

long episode_step_count(double horizon, double dt) {
  return static_cast<long>(std::ceil(horizon / dt - 1e-9));
}

EpisodeResult run_episode(const Scenario& scenario, std::span<const RobotController> controllers,
                          const SimParams& params, Rng rng, const EpisodeOptions& options) {
  EpisodeResult result;
  result.world = spawn_world(scenario, params);
  if (controllers.size() != result.world.robots.size()) {
    throw std::invalid_argument("run_episode: one controller per robot required");
  }
  const long steps = episode_step_count(scenario.horizon, params.step.dt);
  const std::size_t nr = result.world.robots.size();
  std::vector<SensorFrame> frames(nr);
  std::vector<ControlCommand> commands(nr);
  if (options.record_trace) result.trace.reserve(static_cast<std::size_t>(steps));

  for (long step = 0; step < steps; ++step) {
    for (std::size_t i = 0; i < nr; ++i) {
      frames[i] = sense_frame(result.world, static_cast<int>(i), params, rng);
    }
    for (std::size_t i = 0; i < nr; ++i) {
      commands[i] = controllers[i](result.world, static_cast<int>(i), frames[i]);
    }
    step_world(result.world, commands, params, step, &result.grasp_events);

    if (options.record_trace) {
      StepRecord record;
      record.time = result.world.time;
      record.robots = result.world.robots;
      record.objects = result.world.objects;
      record.counts = area_counts(result.world, params.arena);
      if (options.record_frames) record.frames = frames;
      result.trace.push_back(std::move(record));
    }
  }

  result.steps = steps;
  result.counts = area_counts(result.world, params.arena);
  return result;
}

}  // namespace forager
