#include "qevo/knapsack.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "qevo/errors.hpp"

namespace qevo {

namespace {

void check_length(const KnapsackInstance& instance,
                  std::span<const std::uint8_t> bits) {
  if (bits.size() != instance.item_count()) {
    throw InvalidArgument("bit vector has " + std::to_string(bits.size()) +
                          " entries, instance has " +
                          std::to_string(instance.item_count()) + " items");
  }
}

std::optional<std::int64_t> parse_integer(std::string_view token) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Parses a non-negative decimal that is a multiple of 1/2 and returns twice
// its value, exactly.
std::optional<std::int64_t> parse_doubled_capacity(std::string_view token) {
  const auto dot = token.find('.');
  const std::string_view whole = token.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : token.substr(dot + 1);
  if (whole.empty() || whole.front() == '-' || whole.front() == '+') {
    return std::nullopt;
  }
  const auto integral = parse_integer(whole);
  if (!integral || *integral > kMaxOracleWeight * 1000) return std::nullopt;
  if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
  if (!std::all_of(frac.begin(), frac.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  if (frac.empty()) return 2 * *integral;
  if (frac == "5") return 2 * *integral + 1;
  return std::nullopt;
}

std::string format_capacity(std::int64_t doubled) {
  return std::to_string(doubled / 2) + (doubled % 2 == 0 ? ".0" : ".5");
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

KnapsackInstance::KnapsackInstance(std::vector<std::int64_t> weights,
                                   std::vector<std::int64_t> profits,
                                   std::int64_t doubled_capacity)
    : weights_(std::move(weights)),
      profits_(std::move(profits)),
      doubled_capacity_(doubled_capacity),
      total_weight_(0) {
  if (weights_.empty()) throw InvalidArgument("instance has no items");
  if (weights_.size() != profits_.size()) {
    throw InvalidArgument("weights and profits differ in length");
  }
  if (doubled_capacity_ < 0) throw InvalidArgument("negative capacity");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1 || profits_[i] < 1) {
      throw InvalidArgument("item " + std::to_string(i) +
                            " has a non-positive weight or profit");
    }
  }
  total_weight_ = std::accumulate(weights_.begin(), weights_.end(),
                                  std::int64_t{0});
}

KnapsackInstance generate_instance(std::size_t item_count, RandomStream& rng) {
  if (item_count == 0) throw InvalidArgument("item_count must be >= 1");
  std::vector<std::int64_t> weights(item_count);
  std::vector<std::int64_t> profits(item_count);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < item_count; ++i) {
    weights[i] = 1 + static_cast<std::int64_t>(rng.uniform_index(10));
    profits[i] = weights[i] + 5;
    total += weights[i];
  }
  // 2W == sum(w).
  return KnapsackInstance(std::move(weights), std::move(profits), total);
}

std::int64_t selected_weight(const KnapsackInstance& instance,
                             std::span<const std::uint8_t> bits) {
  check_length(instance, bits);
  const auto weights = instance.weights();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) total += weights[i];
  }
  return total;
}

bool is_feasible(const KnapsackInstance& instance,
                 std::span<const std::uint8_t> bits) {
  return 2 * selected_weight(instance, bits) <= instance.doubled_capacity();
}

std::int64_t fitness(const KnapsackInstance& instance,
                     std::span<const std::uint8_t> bits) {
  if (!is_feasible(instance, bits)) {
    throw ConstraintViolation("fitness requested for an infeasible selection");
  }
  const auto profits = instance.profits();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) total += profits[i];
  }
  return total;
}

BinarySolution evaluate(const KnapsackInstance& instance, BitVector bits) {
  const std::int64_t value = fitness(instance, bits);
  return BinarySolution{std::move(bits), value};
}

BitVector repair(const KnapsackInstance& instance, BitVector bits,
                 RandomStream& rng) {
  const auto weights = instance.weights();
  const std::int64_t limit = instance.doubled_capacity();
  std::int64_t doubled_load = 2 * selected_weight(instance, bits);

  std::vector<std::size_t> candidates;
  candidates.reserve(bits.size());

  // Draws one candidate uniformly and removes it from the candidate set.
  auto draw = [&] {
    const std::size_t k = rng.uniform_index(candidates.size());
    const std::size_t item = candidates[k];
    candidates[k] = candidates.back();
    candidates.pop_back();
    return item;
  };

  if (doubled_load > limit) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) candidates.push_back(i);
    }
    while (doubled_load > limit) {
      const std::size_t item = draw();
      bits[item] = 0;
      doubled_load -= 2 * weights[item];
    }
  }

  candidates.clear();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) candidates.push_back(i);
  }
  while (!candidates.empty()) {
    const std::size_t item = draw();
    if (doubled_load + 2 * weights[item] > limit) break;
    bits[item] = 1;
    doubled_load += 2 * weights[item];
  }
  return bits;
}

std::int64_t optimal_profit(const KnapsackInstance& instance) {
  if (instance.total_weight() > kMaxOracleWeight) {
    throw UnsupportedInstance("total weight " +
                              std::to_string(instance.total_weight()) +
                              " exceeds the oracle limit");
  }
  // Integer weights fit in W iff they fit in floor(W).
  const std::int64_t cap =
      std::min(instance.doubled_capacity() / 2, instance.total_weight());
  const auto weights = instance.weights();
  const auto profits = instance.profits();

  std::vector<std::int64_t> best(static_cast<std::size_t>(cap) + 1, 0);
  for (std::size_t i = 0; i < instance.item_count(); ++i) {
    const std::int64_t w = weights[i];
    for (std::int64_t c = cap; c >= w; --c) {
      best[c] = std::max(best[c], best[c - w] + profits[i]);
    }
  }
  return best[cap];
}

void save_instance(const KnapsackInstance& instance,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << instance.item_count() << ' '
      << format_capacity(instance.doubled_capacity()) << '\n';
  const auto weights = instance.weights();
  const auto profits = instance.profits();
  for (std::size_t i = 0; i < instance.item_count(); ++i) {
    out << weights[i] << ' ' << profits[i] << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

KnapsackInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::string source = path.string();

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(source, 1, "empty file");
  ++line_no;
  auto header = split_fields(line);
  if (header.size() != 2) {
    throw ParseError(source, line_no, "expected header 'm W'");
  }
  const auto item_count = parse_integer(header[0]);
  if (!item_count || *item_count < 1) {
    throw ParseError(source, line_no, "item count must be a positive integer");
  }
  const auto doubled_capacity = parse_doubled_capacity(header[1]);
  if (!doubled_capacity) {
    throw ParseError(source, line_no,
                     "capacity must be a non-negative multiple of 0.5");
  }

  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> profits;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (weights.size() == static_cast<std::size_t>(*item_count)) {
      throw ParseError(source, line_no,
                       "more item lines than the header's " +
                           std::to_string(*item_count));
    }
    if (fields.size() != 2) {
      throw ParseError(source, line_no, "expected 'weight profit'");
    }
    const auto weight = parse_integer(fields[0]);
    const auto profit = parse_integer(fields[1]);
    if (!weight || !profit) {
      throw ParseError(source, line_no, "weight and profit must be integers");
    }
    if (*weight < 1 || *profit < 1) {
      throw ParseError(source, line_no, "weight and profit must be >= 1");
    }
    weights.push_back(*weight);
    profits.push_back(*profit);
  }
  if (weights.size() != static_cast<std::size_t>(*item_count)) {
    throw ParseError(source, line_no,
                     "expected " + std::to_string(*item_count) +
                         " item lines, found " +
                         std::to_string(weights.size()));
  }
  return KnapsackInstance(std::move(weights), std::move(profits),
                          *doubled_capacity);
}

}  // namespace qevo
