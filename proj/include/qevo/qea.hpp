#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qevo/knapsack.hpp"
#include "qevo/random.hpp"

namespace qevo {

// Amplitude pair of one Q-bit; beta^2 is the probability of observing 1.
struct QBit {
  double alpha;
  double beta;

  bool operator==(const QBit&) const = default;
};

struct AmplitudeIndividual {
  std::vector<QBit> amplitudes;

  bool operator==(const AmplitudeIndividual&) const = default;
};

// Every Q-bit at alpha = beta = 1/sqrt(2).
AmplitudeIndividual uniform_superposition(std::size_t item_count);

// Bit j is 1 iff a fresh uniform draw is < beta_j^2.
BitVector observe_amplitudes(const AmplitudeIndividual& individual,
                             RandomStream& rng);

// Rotation step of the lookup table: +0.01pi when (x, b) = (0, 1) and the
// observed solution is worse than the best, -0.01pi for (1, 0) and worse,
// 0 otherwise.
inline constexpr double kRotationStep = 0.01 * 3.14159265358979323846;
double rotation_angle(bool x_bit, bool b_bit, bool x_not_worse);

// Rotates each pair by its angle and renormalizes it to unit length.
// Throws InvalidArgument when angles.size() != amplitudes.size().
AmplitudeIndividual apply_rotation(const AmplitudeIndividual& individual,
                                   std::span<const double> angles);

enum class MigrationMode { kGlobal, kLocal };

// Migration schedule. A period of 0 disables that kind of migration. When
// both periods fire on the same generation only global migration runs,
// since it overwrites every slot anyway.
struct MigrationConfig {
  std::size_t global_period = 100;
  std::size_t local_period = 0;
  std::size_t local_group = 5;
};

struct QeaState {
  std::vector<AmplitudeIndividual> population;
  std::vector<BinarySolution> pool;  // slot i: best seen for individual i
  BinarySolution global_best;
  std::size_t generation = 0;
};

// Initial state: uniform superposition, one observed-and-repaired
// generation copied into the pool. Throws ConfigError for an empty
// population.
QeaState qea_initialize(const KnapsackInstance& instance,
                        std::size_t population_size, RandomStream& rng);

// Overwrites pool slots with the global best (kGlobal) or with the fittest
// member of each consecutive group of `group_size` slots (kLocal). The last
// group may be short. Throws ConfigError when group_size == 0.
void migrate(QeaState& state, MigrationMode mode, std::size_t group_size);

// One generation: observe, repair, evaluate, rotate toward the global best,
// update pool and global best, migrate if scheduled.
void qea_generation(QeaState& state, const KnapsackInstance& instance,
                    const MigrationConfig& migration, RandomStream& rng);

}  // namespace qevo
