#include "forager/controller.hpp"

#include <stdexcept>
#include <string>

namespace forager {

void validate_genome(const Genome& genome) {
  if (genome.size() != kGenomeLength) {
    throw std::invalid_argument("genome length " + std::to_string(genome.size()) + ", expected " +
                                std::to_string(kGenomeLength));
  }
  if (!genome.allFinite()) throw std::invalid_argument("genome contains non-finite weights");
}

Network Network::from_genome(const Genome& genome) {
  validate_genome(genome);
  Network net;
  int k = 0;
  for (int h = 0; h < kHiddenCount; ++h) {
    for (int i = 0; i < kInputCount; ++i) net.hidden_weights(h, i) = genome[k++];
    net.hidden_bias[h] = genome[k++];
  }
  for (int o = 0; o < kOutputCount; ++o) {
    for (int h = 0; h < kHiddenCount; ++h) net.output_weights(o, h) = genome[k++];
    net.output_bias[o] = genome[k++];
  }
  return net;
}

Eigen::Vector2d Network::activate(const SensorFrame& frame) const {
  const Eigen::Matrix<double, kHiddenCount, 1> hidden =
      (hidden_weights * frame + hidden_bias).array().tanh();
  return (output_weights * hidden + output_bias).array().tanh();
}

ControlCommand forward(const Genome& genome, const SensorFrame& frame, const RobotSpec& spec) {
  const Eigen::Vector2d a = Network::from_genome(genome).activate(frame);
  return {a.x() * spec.max_linear_speed, a.y() * spec.max_angular_speed};
}

Genome random_genome(Rng& rng) {
  Genome genome(kGenomeLength);
  for (int i = 0; i < kGenomeLength; ++i) genome[i] = rng.uniform(-0.5, 0.5);
  return genome;
}

RobotController make_ann_controller(const Genome& genome, const RobotSpec& spec) {
  const Network net = Network::from_genome(genome);
  const double v_max = spec.max_linear_speed;
  const double w_max = spec.max_angular_speed;
  return [net, v_max, w_max](const WorldState&, int, const SensorFrame& frame) {
    const Eigen::Vector2d a = net.activate(frame);
    return ControlCommand{a.x() * v_max, a.y() * w_max};
  };
}

}  // namespace forager
