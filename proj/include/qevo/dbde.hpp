#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qevo/knapsack.hpp"
#include "qevo/random.hpp"

namespace qevo {

// Discrete binary DE: classical mutation on stored bit vectors, sigmoid
// discretization of the real-valued mutant, binomial crossover, repair and
// greedy selection. F and CR stay fixed for the whole run.
struct DbdeParams {
  double f_value = 0.8;
  double cr_value = 0.5;
};

using DbdeIndividual = BinarySolution;

struct DbdeState {
  std::vector<DbdeIndividual> population;
  std::size_t generation = 0;
};

// x_r1 + f * (x_r2 - x_r3) over bits read as reals. Throws ConfigError when
// the population has fewer than 4 members.
std::vector<double> de_mutate(std::span<const DbdeIndividual> population,
                              std::size_t target, double f_value,
                              RandomStream& rng);

double sigmoid(double v);

// Bit d is 1 iff a fresh uniform draw is <= sigmoid(values[d]).
BitVector sigmoid_discretize(std::span<const double> values,
                             RandomStream& rng);

BitVector binomial_crossover_bits(std::span<const std::uint8_t> target,
                                  std::span<const std::uint8_t> mutant,
                                  double cr_value, RandomStream& rng);

// Uniform random bit strings, repaired and evaluated. Throws ConfigError
// when population_size < 4.
DbdeState dbde_initialize(const KnapsackInstance& instance,
                          std::size_t population_size, RandomStream& rng);

// One synchronous generation over a snapshot of the population.
void dbde_generation(DbdeState& state, const KnapsackInstance& instance,
                     const DbdeParams& params, RandomStream& rng);

std::int64_t best_fitness(std::span<const DbdeIndividual> population);

}  // namespace qevo
