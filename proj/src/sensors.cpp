#include "forager/sensors.hpp"

#include <algorithm>
#include <vector>

namespace forager {

namespace {

struct Circle {
  Vec2 center;
  double radius;
};

// Obstacles visible to robot_id: every object except the one it carries, plus
// all other robot bodies.
void gather_circles(const WorldState& world, int robot_id, const SimParams& params,
                    std::vector<Circle>& out) {
  out.clear();
  const RobotState& self = world.robots[static_cast<std::size_t>(robot_id)];
  for (const ObjectState& obj : world.objects) {
    if (self.carrying && *self.carrying == obj.id) continue;
    out.push_back({obj.position, obj.radius});
  }
  for (int i = 0; i < static_cast<int>(world.robots.size()); ++i) {
    if (i == robot_id) continue;
    out.push_back({world.robots[static_cast<std::size_t>(i)].position, params.robot.radius});
  }
}

std::vector<Circle>& scratch_circles() {
  thread_local std::vector<Circle> scratch;
  return scratch;
}

double cast_ray(const Vec2& origin, const Vec2& dir, const std::vector<Circle>& circles,
                const ArenaSpec& arena) {
  double t = ray_rect_exit(origin, dir, arena.width, arena.length);
  for (const Circle& c : circles) {
    if (auto hit = ray_circle_hit(origin, dir, c.center, c.radius); hit && *hit < t) t = *hit;
  }
  return t;
}

// Unit direction for each whole-degree lidar ray in the robot frame.
const std::array<Vec2, 360>& lidar_ray_table() {
  static const std::array<Vec2, 360> table = [] {
    std::array<Vec2, 360> t;
    for (int i = 0; i < 360; ++i) t[static_cast<std::size_t>(i)] = heading_vector(deg_to_rad(i));
    return t;
  }();
  return table;
}

// Sector k covers [45k - 22.5, 45k + 22.5) degrees; integer-degree rays split
// 45 per sector.
int lidar_sector_of(int deg) { return ((2 * deg + 45) / 90) % kLidarSectorCount; }

Eigen::Matrix<double, kIrCount, 1> ir_impl(const WorldState& world, int robot_id,
                                           const std::vector<Circle>& circles,
                                           const SimParams& params, Rng& rng) {
  const RobotState& robot = world.robots[static_cast<std::size_t>(robot_id)];
  const RobotSpec& spec = params.robot;
  Eigen::Matrix<double, kIrCount, 1> out;
  for (int i = 0; i < kIrCount; ++i) {
    const Vec2 dir = heading_vector(robot.heading + spec.ir_angles[static_cast<std::size_t>(i)]);
    const Vec2 origin = robot.position + spec.radius * dir;
    const double d = cast_ray(origin, dir, circles, params.arena);
    double reading = 1.0 - std::min(d, spec.ir_range) / spec.ir_range;
    if (params.noise.ir_sigma > 0.0) reading += rng.gaussian(params.noise.ir_sigma);
    out[i] = std::clamp(reading, 0.0, 1.0);
  }
  return out;
}

Eigen::Matrix<double, kLidarSectorCount, 1> lidar_impl(const WorldState& world, int robot_id,
                                                       const std::vector<Circle>& circles,
                                                       const SimParams& params, Rng& rng) {
  const RobotState& robot = world.robots[static_cast<std::size_t>(robot_id)];
  const double cap = params.robot.lidar_range;
  const double sigma = params.noise.lidar_sigma;
  const Vec2 h = heading_vector(robot.heading);

  std::array<double, kLidarSectorCount> sector_min;
  sector_min.fill(cap);
  const auto& table = lidar_ray_table();
  for (int deg = 0; deg < 360; ++deg) {
    const Vec2& base = table[static_cast<std::size_t>(deg)];
    const Vec2 dir(base.x() * h.x() - base.y() * h.y(), base.x() * h.y() + base.y() * h.x());
    double d = cast_ray(robot.position, dir, circles, params.arena);
    if (sigma > 0.0) d += rng.gaussian(sigma);
    d = std::clamp(d, 0.0, cap);
    double& m = sector_min[static_cast<std::size_t>(lidar_sector_of(deg))];
    if (d < m) m = d;
  }

  Eigen::Matrix<double, kLidarSectorCount, 1> out;
  for (int s = 0; s < kLidarSectorCount; ++s) out[s] = sector_min[static_cast<std::size_t>(s)] / cap;
  return out;
}

Eigen::Matrix<double, kGroundSensorCount, 1> ground_impl(const WorldState& world, int robot_id,
                                                         const SimParams& params, Rng& rng) {
  const RobotState& robot = world.robots[static_cast<std::size_t>(robot_id)];
  const RobotSpec& spec = params.robot;
  const double p = params.noise.ground_correct_prob;
  Eigen::Matrix<double, kGroundSensorCount, 1> out;
  for (int m = 0; m < kGroundSensorCount; ++m) {
    const Vec2 mount =
        robot.position +
        spec.radius * heading_vector(robot.heading + spec.ground_sensor_angles[static_cast<std::size_t>(m)]);
    const AreaKind true_area = area_at(params.arena, mount);
    if (p >= 1.0) {
      out[m] = area_encoding(true_area);
      continue;
    }
    const double u = rng.uniform();
    if (u < p) {
      out[m] = area_encoding(true_area);
      continue;
    }
    // Misread: pick one of the other three areas with weight 1/|rank delta|.
    std::array<AreaKind, 3> others;
    std::array<double, 3> weight;
    double total = 0.0;
    int n = 0;
    for (AreaKind a : kAreaOrder) {
      if (a == true_area) continue;
      others[static_cast<std::size_t>(n)] = a;
      weight[static_cast<std::size_t>(n)] =
          1.0 / std::abs(area_rank(a) - area_rank(true_area));
      total += weight[static_cast<std::size_t>(n)];
      ++n;
    }
    const double pick = (u - p) / (1.0 - p) * total;
    double acc = 0.0;
    AreaKind chosen = others[2];
    for (int k = 0; k < 3; ++k) {
      acc += weight[static_cast<std::size_t>(k)];
      if (pick < acc) {
        chosen = others[static_cast<std::size_t>(k)];
        break;
      }
    }
    out[m] = area_encoding(chosen);
  }
  return out;
}

}  // namespace

Eigen::Matrix<double, kIrCount, 1> sense_ir(const WorldState& world, int robot_id,
                                            const SimParams& params, Rng& rng) {
  auto& circles = scratch_circles();
  gather_circles(world, robot_id, params, circles);
  return ir_impl(world, robot_id, circles, params, rng);
}

Eigen::Matrix<double, kLidarSectorCount, 1> sense_lidar(const WorldState& world, int robot_id,
                                                        const SimParams& params, Rng& rng) {
  auto& circles = scratch_circles();
  gather_circles(world, robot_id, params, circles);
  return lidar_impl(world, robot_id, circles, params, rng);
}

Eigen::Matrix<double, kGroundSensorCount, 1> sense_ground(const WorldState& world, int robot_id,
                                                          const SimParams& params, Rng& rng) {
  return ground_impl(world, robot_id, params, rng);
}

double sense_light(const WorldState& world, int robot_id, const SimParams& params) {
  const RobotState& robot = world.robots[static_cast<std::size_t>(robot_id)];
  const auto& lights = params.arena.lights;
  std::size_t nearest = 0;
  double best = (lights[0] - robot.position).squaredNorm();
  for (std::size_t i = 1; i < lights.size(); ++i) {
    const double d = (lights[i] - robot.position).squaredNorm();
    if (d < best) {
      best = d;
      nearest = i;
    }
  }
  const Vec2 to_light = lights[nearest] - robot.position;
  const double bearing = wrap_signed(std::atan2(to_light.y(), to_light.x()) - robot.heading);
  const double q = kPi / 4.0;
  if (std::abs(bearing) <= q) return 0.2;            // front
  if (bearing > q && bearing <= 3.0 * q) return 0.6; // left
  if (bearing < -q && bearing >= -3.0 * q) return 0.4; // right
  return 0.8;                                        // back
}

SensorFrame sense_frame(const WorldState& world, int robot_id, const SimParams& params, Rng& rng) {
  auto& circles = scratch_circles();
  gather_circles(world, robot_id, params, circles);
  SensorFrame frame;
  frame.segment<kIrCount>(kIrOffset) = ir_impl(world, robot_id, circles, params, rng);
  frame.segment<kLidarSectorCount>(kLidarOffset) = lidar_impl(world, robot_id, circles, params, rng);
  frame.segment<kGroundSensorCount>(kGroundOffset) = ground_impl(world, robot_id, params, rng);
  frame[kLightIndex] = sense_light(world, robot_id, params);
  frame[kGraspIndex] = world.robots[static_cast<std::size_t>(robot_id)].carrying ? 1.0 : 0.0;
  return frame;
}

}  // namespace forager
