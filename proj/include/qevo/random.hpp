#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace qevo {

// SplitMix64 output function. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of the stream owned by run `run_index` of a campaign. Distinct run
// indices under one master seed give distinct, well-separated seeds.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                           std::uint64_t run_index) noexcept {
  return mix64(mix64(master_seed) + 0x9E3779B97F4A7C15ULL * (run_index + 1));
}

// Number of primitive draws taken from a stream, by kind.
struct DrawCounts {
  std::uint64_t uniform = 0;
  std::uint64_t index = 0;
  std::uint64_t gaussian = 0;
};

// The single source of randomness threaded through every stochastic
// operation. Value type: copying a stream forks an identical sequence.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform real in [0, 1) with 53 bits of resolution.
  double uniform() {
    ++counts_.uniform;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Requires n >= 1.
  std::size_t uniform_index(std::size_t n);

  double gaussian(double mean, double stddev) {
    ++counts_.gaussian;
    return mean + stddev * normal_(engine_);
  }

  const DrawCounts& counts() const noexcept { return counts_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  DrawCounts counts_;
};

}  // namespace qevo
