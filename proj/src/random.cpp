#include "qevo/random.hpp"

#include "qevo/errors.hpp"

namespace qevo {

std::size_t RandomStream::uniform_index(std::size_t n) {
  if (n == 0) throw InvalidArgument("uniform_index over an empty range");
  ++counts_.index;
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

}  // namespace qevo
