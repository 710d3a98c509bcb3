#include "qevo/dbde.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qevo/differential.hpp"
#include "qevo/errors.hpp"

namespace qevo {

std::vector<double> de_mutate(std::span<const DbdeIndividual> population,
                              std::size_t target, double f_value,
                              RandomStream& rng) {
  const DonorIndices d = pick_donors(population.size(), target, rng);
  return differential_mutant<std::uint8_t>(population[d.base].bits,
                                           population[d.plus].bits,
                                           population[d.minus].bits, f_value);
}

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

BitVector sigmoid_discretize(std::span<const double> values,
                             RandomStream& rng) {
  BitVector bits(values.size());
  for (std::size_t d = 0; d < values.size(); ++d) {
    bits[d] = rng.uniform() <= sigmoid(values[d]) ? 1 : 0;
  }
  return bits;
}

BitVector binomial_crossover_bits(std::span<const std::uint8_t> target,
                                  std::span<const std::uint8_t> mutant,
                                  double cr_value, RandomStream& rng) {
  return binomial_crossover<std::uint8_t>(target, mutant, cr_value, rng);
}

DbdeState dbde_initialize(const KnapsackInstance& instance,
                          std::size_t population_size, RandomStream& rng) {
  if (population_size < 4) {
    throw ConfigError("DBDE needs a population of at least 4, got " +
                      std::to_string(population_size));
  }
  DbdeState state;
  state.population.reserve(population_size);
  for (std::size_t i = 0; i < population_size; ++i) {
    BitVector bits(instance.item_count());
    for (auto& bit : bits) bit = rng.uniform() < 0.5 ? 1 : 0;
    bits = repair(instance, std::move(bits), rng);
    state.population.push_back(evaluate(instance, std::move(bits)));
  }
  return state;
}

void dbde_generation(DbdeState& state, const KnapsackInstance& instance,
                     const DbdeParams& params, RandomStream& rng) {
  const std::span<const DbdeIndividual> current = state.population;
  std::vector<DbdeIndividual> next;
  next.reserve(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) {
    const auto mutant = de_mutate(current, i, params.f_value, rng);
    const BitVector mutant_bits = sigmoid_discretize(mutant, rng);
    BitVector trial = binomial_crossover_bits(current[i].bits, mutant_bits,
                                              params.cr_value, rng);
    BinarySolution candidate =
        evaluate(instance, repair(instance, std::move(trial), rng));
    if (candidate.fitness > current[i].fitness) {
      next.push_back(std::move(candidate));
    } else {
      next.push_back(current[i]);
    }
  }
  state.population = std::move(next);
  ++state.generation;
}

std::int64_t best_fitness(std::span<const DbdeIndividual> population) {
  std::int64_t best = 0;
  for (const auto& individual : population) {
    best = std::max(best, individual.fitness);
  }
  return best;
}

}  // namespace qevo
