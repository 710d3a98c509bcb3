#pragma once

// Differential-evolution building blocks shared by the angle-space (AQDE)
// and bit-space (DBDE) optimizers.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qevo/errors.hpp"
#include "qevo/random.hpp"

namespace qevo {

// Indices r1, r2, r3 of a DE donor triple.
struct DonorIndices {
  std::size_t base;
  std::size_t plus;
  std::size_t minus;
};

// Draws three mutually distinct indices in [0, population_size), all
// different from `target`. Throws ConfigError when population_size < 4.
DonorIndices pick_donors(std::size_t population_size, std::size_t target,
                         RandomStream& rng);

// base + scale * (plus - minus), elementwise. Inputs must have equal length.
template <typename T>
std::vector<double> differential_mutant(std::span<const T> base,
                                        std::span<const T> plus,
                                        std::span<const T> minus,
                                        double scale) {
  if (plus.size() != base.size() || minus.size() != base.size()) {
    throw InvalidArgument("donor vectors differ in length");
  }
  std::vector<double> mutant(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    mutant[j] = static_cast<double>(base[j]) +
                scale * (static_cast<double>(plus[j]) -
                         static_cast<double>(minus[j]));
  }
  return mutant;
}

// Binomial crossover with explicit randomness: dimension j comes from the
// mutant iff draws[j] <= rate or j == forced_index.
template <typename T>
std::vector<T> binomial_mix(std::span<const T> target,
                            std::span<const T> mutant, double rate,
                            std::size_t forced_index,
                            std::span<const double> draws) {
  std::vector<T> trial(target.begin(), target.end());
  for (std::size_t j = 0; j < trial.size(); ++j) {
    if (draws[j] <= rate || j == forced_index) trial[j] = mutant[j];
  }
  return trial;
}

// Binomial crossover: draws the forced index, then one uniform per
// dimension. Throws InvalidArgument on empty or mismatched inputs.
template <typename T>
std::vector<T> binomial_crossover(std::span<const T> target,
                                  std::span<const T> mutant, double rate,
                                  RandomStream& rng) {
  if (target.empty() || target.size() != mutant.size()) {
    throw InvalidArgument("crossover needs equal, non-empty vectors");
  }
  const std::size_t forced = rng.uniform_index(target.size());
  std::vector<double> draws(target.size());
  for (double& d : draws) d = rng.uniform();
  return binomial_mix<T>(target, mutant, rate, forced, draws);
}

}  // namespace qevo
