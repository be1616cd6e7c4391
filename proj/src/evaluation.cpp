#include "forager/evaluation.hpp"

#include "forager/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace forager {

FitnessValue nest_count_fitness(const WorldState& world, const ArenaSpec& arena) {
  return objects_in_area(world, arena, AreaKind::Nest);
}

FitnessValue cache_count_fitness(const WorldState& world, const ArenaSpec& arena) {
  return objects_in_area(world, arena, AreaKind::Cache);
}

FitnessValue role_fitness(Role role, const WorldState& world, const ArenaSpec& arena) {
  return role == Role::Dropper ? cache_count_fitness(world, arena)
                               : nest_count_fitness(world, arena);
}

ScenarioKind training_kind(Role role) {
  switch (role) {
    case Role::Generalist: return ScenarioKind::GeneralistTrain;
    case Role::Dropper: return ScenarioKind::DropperTrain;
    case Role::Collector: return ScenarioKind::CollectorTrain;
  }
  throw std::logic_error("training_kind: bad role");
}

Scenario training_scenario(Role role, std::uint64_t scenario_seed) {
  const ScenarioKind kind = training_kind(role);
  return Scenario{kind, scenario_seed, default_horizon(kind), 7};
}

FitnessValue evaluate_individual(const Genome& genome, Role role, std::uint64_t scenario_seed,
                                 std::uint64_t noise_seed, const SimParams& params) {
  const Scenario scenario = training_scenario(role, scenario_seed);
  const std::array<RobotController, 1> controllers = {make_ann_controller(genome, params.robot)};
  const EpisodeResult result = run_episode(scenario, controllers, params, Rng(noise_seed));
  return role_fitness(role, result.world, params.arena);
}

FitnessValue evaluate_individual(const Genome& genome, Role role, std::uint64_t seed,
                                 const SimParams& params) {
  return evaluate_individual(genome, role, seed, derive_seed(seed, seed_tag::kEpisodeNoise),
                             params);
}

const char* pairing_name(Pairing pairing) { return pairing == Pairing::GG ? "gg" : "dc"; }

std::optional<Pairing> parse_pairing(std::string_view name) {
  if (name == "gg") return Pairing::GG;
  if (name == "dc") return Pairing::DC;
  return std::nullopt;
}

PostEvalResult post_evaluate(const PostEvalConfig& config, std::span<const Genome> genomes,
                             std::uint64_t master_seed, const SimParams& params, int workers) {
  if (config.trials < 1) throw std::invalid_argument("post_evaluate: trials must be >= 1");

  // Robot 0 is the nest-side robot, robot 1 the source-side robot.
  std::array<RobotController, 2> controllers;
  ScenarioKind kind;
  if (config.pairing == Pairing::GG) {
    if (genomes.size() != 1) {
      throw std::invalid_argument("post_evaluate: gg pairing takes exactly one genome");
    }
    controllers[0] = make_ann_controller(genomes[0], params.robot);
    controllers[1] = make_ann_controller(genomes[0], params.robot);
    kind = ScenarioKind::PostEvalGG;
  } else {
    if (genomes.size() != 2) {
      throw std::invalid_argument("post_evaluate: dc pairing takes (dropper, collector) genomes");
    }
    controllers[0] = make_ann_controller(genomes[1], params.robot);  // collector, nest side
    controllers[1] = make_ann_controller(genomes[0], params.robot);  // dropper, source side
    kind = ScenarioKind::PostEvalDC;
  }

  PostEvalResult result;
  result.trials.resize(static_cast<std::size_t>(config.trials));
  parallel_for_index(config.trials, workers, [&](int t) {
    const std::uint64_t scenario_seed =
        derive_seed(master_seed, seed_tag::kTrial, static_cast<std::uint64_t>(t));
    const Scenario scenario{kind, scenario_seed, config.horizon, config.objects};
    const EpisodeResult episode =
        run_episode(scenario, controllers, params,
                    Rng(derive_seed(master_seed, seed_tag::kTrialNoise,
                                    static_cast<std::uint64_t>(t))));
    result.trials[static_cast<std::size_t>(t)] = {
        t, scenario_seed, nest_count_fitness(episode.world, params.arena)};
  });

  double total = 0.0;
  for (const TrialScore& trial : result.trials) total += trial.score;
  result.mean = total / config.trials;
  if (config.trials > 1) {
    double ss = 0.0;
    for (const TrialScore& trial : result.trials) {
      const double d = trial.score - result.mean;
      ss += d * d;
    }
    result.stddev = std::sqrt(ss / (config.trials - 1));
  }
  return result;
}

}  // namespace forager
