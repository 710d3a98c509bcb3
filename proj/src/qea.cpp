#include "qevo/qea.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qevo/errors.hpp"

namespace qevo {

namespace {

const BinarySolution& fittest(std::span<const BinarySolution> solutions) {
  return *std::max_element(
      solutions.begin(), solutions.end(),
      [](const auto& a, const auto& b) { return a.fitness < b.fitness; });
}

}  // namespace

AmplitudeIndividual uniform_superposition(std::size_t item_count) {
  const double amplitude = 1.0 / std::sqrt(2.0);
  return AmplitudeIndividual{
      std::vector<QBit>(item_count, QBit{amplitude, amplitude})};
}

BitVector observe_amplitudes(const AmplitudeIndividual& individual,
                             RandomStream& rng) {
  BitVector bits(individual.amplitudes.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const double beta = individual.amplitudes[j].beta;
    bits[j] = rng.uniform() < beta * beta ? 1 : 0;
  }
  return bits;
}

double rotation_angle(bool x_bit, bool b_bit, bool x_not_worse) {
  if (x_not_worse || x_bit == b_bit) return 0.0;
  return b_bit ? kRotationStep : -kRotationStep;
}

AmplitudeIndividual apply_rotation(const AmplitudeIndividual& individual,
                                   std::span<const double> angles) {
  if (angles.size() != individual.amplitudes.size()) {
    throw InvalidArgument("expected " +
                          std::to_string(individual.amplitudes.size()) +
                          " rotation angles, got " +
                          std::to_string(angles.size()));
  }
  AmplitudeIndividual rotated = individual;
  for (std::size_t j = 0; j < angles.size(); ++j) {
    if (angles[j] == 0.0) continue;
    const double c = std::cos(angles[j]);
    const double s = std::sin(angles[j]);
    const auto [alpha, beta] = individual.amplitudes[j];
    const double a = alpha * c - beta * s;
    const double b = alpha * s + beta * c;
    const double norm = std::hypot(a, b);
    rotated.amplitudes[j] = QBit{a / norm, b / norm};
  }
  return rotated;
}

QeaState qea_initialize(const KnapsackInstance& instance,
                        std::size_t population_size, RandomStream& rng) {
  if (population_size == 0) throw ConfigError("QEA population is empty");
  QeaState state;
  state.population.assign(population_size,
                          uniform_superposition(instance.item_count()));
  state.pool.reserve(population_size);
  for (const auto& individual : state.population) {
    BitVector bits =
        repair(instance, observe_amplitudes(individual, rng), rng);
    state.pool.push_back(evaluate(instance, std::move(bits)));
  }
  state.global_best = fittest(state.pool);
  return state;
}

void migrate(QeaState& state, MigrationMode mode, std::size_t group_size) {
  if (mode == MigrationMode::kGlobal) {
    std::fill(state.pool.begin(), state.pool.end(), state.global_best);
    return;
  }
  if (group_size == 0) throw ConfigError("migration group size must be >= 1");
  for (std::size_t start = 0; start < state.pool.size(); start += group_size) {
    const std::size_t len = std::min(group_size, state.pool.size() - start);
    std::span<BinarySolution> group(state.pool.data() + start, len);
    const BinarySolution best = fittest(group);
    std::fill(group.begin(), group.end(), best);
  }
}

void qea_generation(QeaState& state, const KnapsackInstance& instance,
                    const MigrationConfig& migration, RandomStream& rng) {
  ++state.generation;
  const BinarySolution& best = state.global_best;
  std::vector<double> angles(instance.item_count());

  std::vector<BinarySolution> observed;
  observed.reserve(state.population.size());
  for (auto& individual : state.population) {
    BitVector bits =
        repair(instance, observe_amplitudes(individual, rng), rng);
    BinarySolution x = evaluate(instance, std::move(bits));

    const bool not_worse = x.fitness >= best.fitness;
    for (std::size_t j = 0; j < angles.size(); ++j) {
      angles[j] = rotation_angle(x.bits[j] != 0, best.bits[j] != 0, not_worse);
    }
    individual = apply_rotation(individual, angles);
    observed.push_back(std::move(x));
  }

  for (std::size_t i = 0; i < state.pool.size(); ++i) {
    if (observed[i].fitness > state.pool[i].fitness) {
      state.pool[i] = std::move(observed[i]);
    }
  }
  const BinarySolution& pool_best = fittest(state.pool);
  if (pool_best.fitness > state.global_best.fitness) {
    state.global_best = pool_best;
  }

  const auto due = [&](std::size_t period) {
    return period != 0 && state.generation % period == 0;
  };
  if (due(migration.global_period)) {
    migrate(state, MigrationMode::kGlobal, migration.local_group);
  } else if (due(migration.local_period)) {
    migrate(state, MigrationMode::kLocal, migration.local_group);
  }
}

}  // namespace qevo
