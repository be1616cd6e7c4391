#include "forager/evolution.hpp"

#include "forager/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace forager {

Genome mutate(const Genome& genome, double prob, double sigma, Rng& rng) {
  Genome out = genome;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (rng.uniform() < prob) out[i] += rng.gaussian(sigma);
  }
  return out;
}

std::size_t tournament_select_index(std::span<const double> fitness, int tournament_size,
                                    Rng& rng) {
  if (fitness.empty()) throw std::invalid_argument("tournament_select: empty population");
  std::size_t best = rng.uniform_index(fitness.size());
  for (int k = 1; k < tournament_size; ++k) {
    const std::size_t challenger = rng.uniform_index(fitness.size());
    if (fitness[challenger] > fitness[best]) {
      best = challenger;
    } else if (fitness[challenger] == fitness[best] && rng.uniform() < 0.5) {
      best = challenger;
    }
  }
  return best;
}

const Genome& tournament_select(std::span<const Genome> population,
                                std::span<const double> fitness, int tournament_size, Rng& rng) {
  return population[tournament_select_index(fitness, tournament_size, rng)];
}

namespace {

void validate(const EvoConfig& config) {
  if (config.population_size < 1) throw std::invalid_argument("population_size must be >= 1");
  if (config.generations < 0) throw std::invalid_argument("generations must be >= 0");
  if (config.tournament_size < 1) throw std::invalid_argument("tournament_size must be >= 1");
  if (config.elitism_count < 0 || config.elitism_count >= config.population_size) {
    throw std::invalid_argument("elitism_count must be in [0, population_size)");
  }
  if (config.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (config.mutation_prob < 0.0 || config.mutation_prob > 1.0) {
    throw std::invalid_argument("mutation_prob must be in [0, 1]");
  }
  if (config.mutation_sigma < 0.0) throw std::invalid_argument("mutation_sigma must be >= 0");
}

}  // namespace

EvolutionResult evolve(const EvoConfig& config, const SimParams& params, int workers,
                       const GenerationObserver& observer) {
  validate(config);
  const int n = config.population_size;
  const int reps = config.repetitions;

  Rng init_rng(derive_seed(config.master_seed, seed_tag::kPopulationInit));
  std::vector<Genome> population;
  population.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) population.push_back(random_genome(init_rng));

  EvolutionResult result;
  std::vector<double> fitness(static_cast<std::size_t>(n), 0.0);

  for (int gen = 0; gen < config.generations; ++gen) {
    // All individuals of a generation share the same scenario(s); only the
    // sensor noise stream is per individual.
    std::vector<std::uint64_t> scenario_seeds(static_cast<std::size_t>(reps));
    for (int rep = 0; rep < reps; ++rep) {
      scenario_seeds[static_cast<std::size_t>(rep)] =
          derive_seed(config.master_seed, seed_tag::kScenario, static_cast<std::uint64_t>(gen),
                      static_cast<std::uint64_t>(rep));
    }

    parallel_for_index(n, workers, [&](int i) {
      double total = 0.0;
      for (int rep = 0; rep < reps; ++rep) {
        const std::uint64_t noise_seed =
            derive_seed(config.master_seed, seed_tag::kEpisodeNoise,
                        static_cast<std::uint64_t>(gen), static_cast<std::uint64_t>(i),
                        static_cast<std::uint64_t>(rep));
        total += evaluate_individual(population[static_cast<std::size_t>(i)], config.role,
                                     scenario_seeds[static_cast<std::size_t>(rep)], noise_seed,
                                     params);
      }
      fitness[static_cast<std::size_t>(i)] = total / reps;
    });
    result.evaluations += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(reps);

    std::size_t best = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i) {
      if (fitness[i] > fitness[best]) best = i;  // ties keep the lower index
    }
    const double mean = std::accumulate(fitness.begin(), fitness.end(), 0.0) / n;
    result.logs.push_back({gen, fitness[best], mean, population[best], scenario_seeds[0]});
    assert(result.logs.back().best_fitness >= result.logs.back().mean_fitness);
    if (observer) observer(result.logs.back(), population, fitness);

    // Breed: elites verbatim (fitness order, ties by lower index), the rest
    // tournament-selected and mutated.
    Rng breed_rng(
        derive_seed(config.master_seed, seed_tag::kBreeding, static_cast<std::uint64_t>(gen)));
    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fitness[a] > fitness[b]; });

    std::vector<Genome> next;
    next.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e < config.elitism_count; ++e) {
      next.push_back(population[order[static_cast<std::size_t>(e)]]);
    }
    while (static_cast<int>(next.size()) < n) {
      const Genome& parent =
          tournament_select(population, fitness, config.tournament_size, breed_rng);
      next.push_back(mutate(parent, config.mutation_prob, config.mutation_sigma, breed_rng));
    }
    population = std::move(next);
  }

  assert(result.evaluations == static_cast<std::uint64_t>(config.population_size) *
                                   static_cast<std::uint64_t>(config.generations) *
                                   static_cast<std::uint64_t>(reps));
  result.population = std::move(population);
  return result;
}

}  // namespace forager
