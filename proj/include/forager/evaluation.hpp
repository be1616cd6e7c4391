#pragma once

#include "forager/controller.hpp"

#include <span>

namespace forager {

using FitnessValue = int;  // final object count in the scoring area, 0..7

/// Objects in the nest at episode end; scores generalists and collectors.
FitnessValue nest_count_fitness(const WorldState& world, const ArenaSpec& arena);

/// Objects in the cache at episode end; scores droppers.
FitnessValue cache_count_fitness(const WorldState& world, const ArenaSpec& arena);

FitnessValue role_fitness(Role role, const WorldState& world, const ArenaSpec& arena);

ScenarioKind training_kind(Role role);

/// Role's training scenario: generalists start in the nest or cache with
/// objects in the source for 240 s; droppers start in the source for 60 s;
/// collectors start in the nest or cache with objects in the cache for 60 s.
Scenario training_scenario(Role role, std::uint64_t scenario_seed);

// One training episode for one genome. The scenario seed fixes the initial
// placement, the noise seed fixes the sensor noise stream; a generation
// shares the former while each individual gets its own latter.
FitnessValue evaluate_individual(const Genome& genome, Role role, std::uint64_t scenario_seed,
                                 std::uint64_t noise_seed, const SimParams& params);

/// Convenience overload deriving the noise stream from the scenario seed.
FitnessValue evaluate_individual(const Genome& genome, Role role, std::uint64_t seed,
                                 const SimParams& params);

enum class Pairing { GG, DC };

const char* pairing_name(Pairing pairing);
std::optional<Pairing> parse_pairing(std::string_view name);

struct PostEvalConfig {
  Pairing pairing = Pairing::GG;
  int trials = 10;
  double horizon = 300.0;  // seconds
  int objects = 7;
};

struct TrialScore {
  int trial = 0;
  std::uint64_t seed = 0;
  int score = 0;
};

struct PostEvalResult {
  std::vector<TrialScore> trials;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

// Two-robot deployment test. GG takes one generalist genome driving both
// robots; DC takes (dropper, collector). Robot 0 starts in the nest
// (generalist or collector), robot 1 in the source (generalist or dropper);
// each trial's seed depends only on its index. Scores count nest objects at
// the horizon.
PostEvalResult post_evaluate(const PostEvalConfig& config, std::span<const Genome> genomes,
                             std::uint64_t master_seed, const SimParams& params, int workers = 1);

}  // namespace forager
