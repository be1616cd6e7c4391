#pragma once

#include "forager/dynamics.hpp"

#include <Eigen/Dense>

namespace forager {

inline constexpr int kInputCount = kSensorCount;  // 21
inline constexpr int kHiddenCount = 8;
inline constexpr int kOutputCount = 2;

// Flat weight vector: per hidden neuron 21 weights then its bias, followed by
// per output neuron 8 weights then its bias.
inline constexpr int kGenomeLength =
    (kInputCount + 1) * kHiddenCount + (kHiddenCount + 1) * kOutputCount;  // 194

using Genome = Eigen::VectorXd;

/// Throws std::invalid_argument unless the genome has length 194 and all
/// entries finite.
void validate_genome(const Genome& genome);

// Decoded fixed-topology feedforward net, tanh on both layers.
struct Network {
  Eigen::Matrix<double, kHiddenCount, kInputCount> hidden_weights;
  Eigen::Matrix<double, kHiddenCount, 1> hidden_bias;
  Eigen::Matrix<double, kOutputCount, kHiddenCount> output_weights;
  Eigen::Matrix<double, kOutputCount, 1> output_bias;

  static Network from_genome(const Genome& genome);

  /// Raw activations in [-1, 1]^2: (linear, angular) before actuator scaling.
  Eigen::Vector2d activate(const SensorFrame& frame) const;
};

/// Single forward pass: decode, activate, scale to the actuator limits.
ControlCommand forward(const Genome& genome, const SensorFrame& frame, const RobotSpec& spec);

/// 194 independent draws from U[-0.5, 0.5].
Genome random_genome(Rng& rng);

/// Controller closure around a genome decoded once.
RobotController make_ann_controller(const Genome& genome, const RobotSpec& spec);

}  // namespace forager
