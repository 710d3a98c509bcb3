#include "qevo/aqde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qevo/differential.hpp"
#include "qevo/errors.hpp"

namespace qevo {

BitVector observe_theta(std::span<const double> angles, RandomStream& rng) {
  BitVector bits(angles.size());
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const double s = std::sin(angles[j]);
    bits[j] = rng.uniform() < s * s ? 1 : 0;
  }
  return bits;
}

double sample_f(RandomStream& rng) {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  return u1 * u2 * kMaxMutationScale;
}

double clamp_crossover_rate(double raw) { return std::clamp(raw, 0.0, 1.0); }

double sample_cr(RandomStream& rng) {
  return clamp_crossover_rate(rng.gaussian(kCrossoverMean, kCrossoverStddev));
}

std::vector<double> mutate_theta(std::span<const ThetaIndividual> population,
                                 std::size_t target, double f_value,
                                 RandomStream& rng) {
  const DonorIndices d = pick_donors(population.size(), target, rng);
  return differential_mutant<double>(population[d.base].angles,
                                     population[d.plus].angles,
                                     population[d.minus].angles, f_value);
}

std::vector<double> crossover_theta(std::span<const double> target,
                                    std::span<const double> mutant,
                                    double cr_value, RandomStream& rng) {
  return binomial_crossover<double>(target, mutant, cr_value, rng);
}

ThetaIndividual select(const ThetaIndividual& target,
                       std::vector<double> trial_angles,
                       BinarySolution trial_solution) {
  if (trial_solution.fitness > target.observed.fitness) {
    return ThetaIndividual{std::move(trial_angles), std::move(trial_solution)};
  }
  return target;
}

AqdeState aqde_initialize(const KnapsackInstance& instance,
                          std::size_t population_size, RandomStream& rng) {
  if (population_size < 4) {
    throw ConfigError("AQDE needs a population of at least 4, got " +
                      std::to_string(population_size));
  }
  AqdeState state;
  state.population.reserve(population_size);
  for (std::size_t i = 0; i < population_size; ++i) {
    std::vector<double> angles(instance.item_count());
    for (double& theta : angles) theta = 2.0 * std::numbers::pi * rng.uniform();
    BitVector bits = repair(instance, observe_theta(angles, rng), rng);
    state.population.push_back(
        ThetaIndividual{std::move(angles), evaluate(instance, std::move(bits))});
  }
  return state;
}

void aqde_generation(AqdeState& state, const KnapsackInstance& instance,
                     const AqdeConfig& config, RandomStream& rng) {
  const std::span<const ThetaIndividual> current = state.population;
  AdaptiveParams params;
  params.f_value = sample_f(rng);
  params.cr_value = sample_cr(rng);

  std::vector<ThetaIndividual> next;
  next.reserve(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) {
    const double f = config.f_per_individual ? sample_f(rng) : params.f_value;
    const auto mutant = mutate_theta(current, i, f, rng);
    auto trial = crossover_theta(current[i].angles, mutant, params.cr_value, rng);
    BitVector bits = repair(instance, observe_theta(trial, rng), rng);
    next.push_back(select(current[i], std::move(trial),
                          evaluate(instance, std::move(bits))));
  }
  state.population = std::move(next);
  state.last_params = params;
  ++state.generation;
}

std::int64_t best_fitness(std::span<const ThetaIndividual> population) {
  std::int64_t best = 0;
  for (const auto& individual : population) {
    best = std::max(best, individual.observed.fitness);
  }
  return best;
}

}  // namespace qevo
