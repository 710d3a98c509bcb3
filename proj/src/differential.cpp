#include "qevo/differential.hpp"

#include <string>

namespace qevo {

DonorIndices pick_donors(std::size_t population_size, std::size_t target,
                         RandomStream& rng) {
  if (population_size < 4) {
    throw ConfigError("differential mutation needs a population of at least "
                      "4, got " + std::to_string(population_size));
  }
  DonorIndices d{};
  do {
    d.base = rng.uniform_index(population_size);
  } while (d.base == target);
  do {
    d.plus = rng.uniform_index(population_size);
  } while (d.plus == target || d.plus == d.base);
  do {
    d.minus = rng.uniform_index(population_size);
  } while (d.minus == target || d.minus == d.base || d.minus == d.plus);
  return d;
}

}  // namespace qevo
