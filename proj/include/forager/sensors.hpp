#pragma once

#include "forager/world.hpp"

#include <Eigen/Core>

namespace forager {

// Controller input vector. Layout: [0..6] IR proximity, [7..14] lidar sector
// minima, [15..18] ground encodings, [19] light quadrant, [20] grasp flag.
using SensorFrame = Eigen::Matrix<double, 21, 1>;

inline constexpr int kIrCount = 7;
inline constexpr int kLidarSectorCount = 8;
inline constexpr int kGroundSensorCount = 4;
inline constexpr int kIrOffset = 0;
inline constexpr int kLidarOffset = kIrCount;
inline constexpr int kGroundOffset = kIrOffset + kIrCount + kLidarSectorCount;
inline constexpr int kLightIndex = kGroundOffset + kGroundSensorCount;
inline constexpr int kGraspIndex = kLightIndex + 1;
inline constexpr int kSensorCount = kGraspIndex + 1;

// IR proximity readings in [0,1], 1 meaning contact. Rays start on the rim
// and are cast against walls, objects (minus the robot's own carried object),
// and other robot bodies.
Eigen::Matrix<double, kIrCount, 1> sense_ir(const WorldState& world, int robot_id,
                                            const SimParams& params, Rng& rng);

// Lidar sector minima normalized by the range cap. 360 one-degree rays from
// the robot center; per-ray noise is added before capping, then each 45-degree
// sector (sector 0 centered on the heading, counterclockwise) keeps its
// minimum.
Eigen::Matrix<double, kLidarSectorCount, 1> sense_lidar(const WorldState& world, int robot_id,
                                                        const SimParams& params, Rng& rng);

// Ground encodings under the four rim mounts. Each mount reads the true area
// with probability ground_correct_prob; otherwise one of the other encodings,
// weighted by the inverse rank distance to the true area.
Eigen::Matrix<double, kGroundSensorCount, 1> sense_ground(const WorldState& world, int robot_id,
                                                          const SimParams& params, Rng& rng);

// Quadrant of the bearing to the nearest light, encoded front 0.2, right 0.4,
// left 0.6, back 0.8.
double sense_light(const WorldState& world, int robot_id, const SimParams& params);

// Full 21-value frame. Sub-senses consume the rng in fixed order (IR, lidar,
// ground), so the frame is a pure function of (world, robot_id, rng state).
SensorFrame sense_frame(const WorldState& world, int robot_id, const SimParams& params, Rng& rng);

}  // namespace forager
