#pragma once

// Adaptive quantum-inspired differential evolution.
//
// Each individual is a vector of Q-bit angles theta; a Q-bit observes as 1
// with probability sin^2(theta). Differential mutation and binomial
// crossover act on the angles, the trial angles are observed and repaired
// into a knapsack selection, and greedy selection keeps the fitter of trial
// and target. Mutation scale F and crossover rate CR are redrawn every
// generation.

#include <cstddef>
#include <span>
#include <vector>

#include "qevo/knapsack.hpp"
#include "qevo/random.hpp"

namespace qevo {

struct ThetaIndividual {
  std::vector<double> angles;  // unbounded; only sin^2 is observed
  BinarySolution observed;     // repaired, evaluated observation

  bool operator==(const ThetaIndividual&) const = default;
};

struct AdaptiveParams {
  double f_value = 0.0;   // in [0, 0.1)
  double cr_value = 0.5;  // in [0, 1]
};

inline constexpr double kMaxMutationScale = 0.1;
inline constexpr double kCrossoverMean = 0.5;
inline constexpr double kCrossoverStddev = 0.0375;

struct AqdeConfig {
  // Redraw F for every target instead of once per generation.
  bool f_per_individual = false;
};

struct AqdeState {
  std::vector<ThetaIndividual> population;
  std::size_t generation = 0;
  AdaptiveParams last_params;  // pair drawn for the latest generation
};

// Bit j is 1 iff a fresh uniform draw is < sin^2(angles[j]).
BitVector observe_theta(std::span<const double> angles, RandomStream& rng);

// F = u1 * u2 * 0.1 with two independent uniform draws.
double sample_f(RandomStream& rng);

// Clamps a raw Gaussian crossover-rate draw into [0, 1].
double clamp_crossover_rate(double raw);

// CR ~ N(0.5, 0.0375), clamped into [0, 1]. One Gaussian draw.
double sample_cr(RandomStream& rng);

// theta_r1 + f * (theta_r2 - theta_r3) for three distinct donors other than
// `target`. Throws ConfigError when the population has fewer than 4
// members. The result is not wrapped into [0, 2pi).
std::vector<double> mutate_theta(std::span<const ThetaIndividual> population,
                                 std::size_t target, double f_value,
                                 RandomStream& rng);

std::vector<double> crossover_theta(std::span<const double> target,
                                    std::span<const double> mutant,
                                    double cr_value, RandomStream& rng);

// Greedy replacement: the trial wins only when strictly fitter. Angles and
// solution are replaced together.
ThetaIndividual select(const ThetaIndividual& target,
                       std::vector<double> trial_angles,
                       BinarySolution trial_solution);

// Angles uniform in [0, 2pi), then observe, repair and evaluate. Throws
// ConfigError when population_size < 4.
AqdeState aqde_initialize(const KnapsackInstance& instance,
                          std::size_t population_size, RandomStream& rng);

// One synchronous generation: every mutation reads the population as it
// was at the start of the generation.
void aqde_generation(AqdeState& state, const KnapsackInstance& instance,
                     const AqdeConfig& config, RandomStream& rng);

// Fitness of the best member.
std::int64_t best_fitness(std::span<const ThetaIndividual> population);

}  // namespace qevo
