#pragma once

#include "forager/evaluation.hpp"

#include <span>

namespace forager {

struct EvoConfig {
  int population_size = 100;
  int generations = 100;
  int tournament_size = 2;
  int elitism_count = 1;
  int repetitions = 1;  // episodes per individual per generation, fitness averaged
  double mutation_prob = 0.02;  // per gene
  double mutation_sigma = 0.2;
  std::uint64_t master_seed = 1;
  Role role = Role::Generalist;
};

struct GenerationLog {
  int generation = 0;  // zero-based
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  Genome best_genome;
  std::uint64_t scenario_seed = 0;
};

struct EvolutionResult {
  std::vector<Genome> population;  // bred from the last evaluated generation
  std::vector<GenerationLog> logs;
  std::uint64_t evaluations = 0;  // total episodes run
};

/// Copy of `genome` where each gene independently received Gaussian(0, sigma)
/// noise with probability `prob`.
Genome mutate(const Genome& genome, double prob, double sigma, Rng& rng);

/// Index of the winner of a k-way tournament: k uniform draws with
/// replacement, highest fitness wins, ties broken by coin flip.
std::size_t tournament_select_index(std::span<const double> fitness, int tournament_size,
                                    Rng& rng);

const Genome& tournament_select(std::span<const Genome> population,
                                std::span<const double> fitness, int tournament_size, Rng& rng);

/// Called after each generation is evaluated, before breeding.
using GenerationObserver = std::function<void(
    const GenerationLog& log, const std::vector<Genome>& population,
    const std::vector<double>& fitness)>;

// Generational loop: random initial population; per generation one shared
// scenario seed derived from (master_seed, generation), one evaluation per
// individual per repetition with a per-individual noise stream derived from
// (master_seed, generation, index), then elites plus tournament-selected
// mutated offspring. Results are identical for any worker count.
EvolutionResult evolve(const EvoConfig& config, const SimParams& params, int workers = 1,
                       const GenerationObserver& observer = {});

}  // namespace forager
