#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qevo/random.hpp"

namespace qevo {

// One entry per item; 1 = selected. Not std::vector<bool>, so spans work.
using BitVector = std::vector<std::uint8_t>;

// A 0-1 knapsack instance with integer weights and profits.
//
// The capacity W is held as the integer 2W. Every capacity this library
// produces or loads is a multiple of 1/2, so feasibility tests compare
// integers (2 * weight <= 2W) and never touch floating point.
class KnapsackInstance {
 public:
  // Throws InvalidArgument when the vectors are empty or of unequal length,
  // when a weight or profit is < 1, or when doubled_capacity < 0.
  KnapsackInstance(std::vector<std::int64_t> weights,
                   std::vector<std::int64_t> profits,
                   std::int64_t doubled_capacity);

  std::size_t item_count() const noexcept { return weights_.size(); }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  std::span<const std::int64_t> profits() const noexcept { return profits_; }

  std::int64_t doubled_capacity() const noexcept { return doubled_capacity_; }
  double capacity() const noexcept {
    return static_cast<double>(doubled_capacity_) / 2.0;
  }

  std::int64_t total_weight() const noexcept { return total_weight_; }

  bool operator==(const KnapsackInstance&) const = default;

 private:
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> profits_;
  std::int64_t doubled_capacity_;
  std::int64_t total_weight_;
};

// A feasible selection together with its profit. Only constructible via
// evaluate(), so `fitness` always matches `bits`.
struct BinarySolution {
  BitVector bits;
  std::int64_t fitness = 0;

  bool operator==(const BinarySolution&) const = default;
};

// Strongly correlated instance: w_i uniform in {1..10}, p_i = w_i + 5,
// W = sum(w) / 2. Throws InvalidArgument when item_count == 0.
KnapsackInstance generate_instance(std::size_t item_count, RandomStream& rng);

// Sum of weights of the selected items. Throws InvalidArgument on length
// mismatch.
std::int64_t selected_weight(const KnapsackInstance& instance,
                             std::span<const std::uint8_t> bits);

bool is_feasible(const KnapsackInstance& instance,
                 std::span<const std::uint8_t> bits);

// Total profit of a feasible selection. Throws ConstraintViolation when the
// selection exceeds the capacity.
std::int64_t fitness(const KnapsackInstance& instance,
                     std::span<const std::uint8_t> bits);

// Pairs `bits` with its fitness. Same errors as fitness().
BinarySolution evaluate(const KnapsackInstance& instance, BitVector bits);

// Randomized repair.
//
// Phase 1 deselects uniformly chosen selected items while the selection is
// infeasible. Phase 2 then adds uniformly chosen unselected items, each at
// most once; the first addition that breaks the capacity is undone and the
// phase ends. Phase 2 runs on feasible inputs too. The result is feasible.
BitVector repair(const KnapsackInstance& instance, BitVector bits,
                 RandomStream& rng);

// Exact optimum by dynamic programming over integer weight. Throws
// UnsupportedInstance when the total weight exceeds kMaxOracleWeight.
inline constexpr std::int64_t kMaxOracleWeight = 10'000'000;
std::int64_t optimal_profit(const KnapsackInstance& instance);

// Text format:
//   line 1:      m W        (integer, decimal)
//   lines 2..:   w_i p_i    (two integers, m lines)
// W must be a multiple of 1/2. Blank trailing lines are ignored.
void save_instance(const KnapsackInstance& instance,
                   const std::filesystem::path& path);
KnapsackInstance load_instance(const std::filesystem::path& path);

}  // namespace qevo
