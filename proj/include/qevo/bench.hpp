#pragma once

// Seeded multi-run campaigns over the three optimizers, with convergence
// traces, summary statistics and file emission.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qevo/aqde.hpp"
#include "qevo/dbde.hpp"
#include "qevo/knapsack.hpp"
#include "qevo/qea.hpp"

namespace qevo {

enum class Algorithm { kAqde, kQea, kDbde };

std::string_view to_string(Algorithm algorithm);
// Accepts "aqde", "qea", "dbde". Throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);

// Instance drawn by generate_instance() from a stream seeded with `seed`.
struct GeneratedInstance {
  std::size_t item_count = 100;
  std::uint64_t seed = 0;
};

using InstanceSource = std::variant<std::filesystem::path, GeneratedInstance>;

struct AlgorithmParams {
  MigrationConfig migration;
  AqdeConfig aqde;
  DbdeParams dbde;
};

struct RunConfig {
  Algorithm algorithm = Algorithm::kAqde;
  InstanceSource instance_source = GeneratedInstance{};
  std::size_t population_size = 30;
  std::size_t max_generations = 1000;
  std::size_t run_count = 30;
  std::uint64_t master_seed = 0;
  AlgorithmParams params;
  // Upper bound on concurrently executing runs; 0 runs them sequentially.
  std::size_t threads = 0;
};

// Applies one `key=value` override. Recognized keys:
//   qea.global_period, qea.local_period, qea.local_group,
//   aqde.f_per_individual, aqde.pop, aqde.gens,
//   dbde.f, dbde.cr, dbde.pop, dbde.gens, qea.pop, qea.gens
// `<algo>.pop` / `<algo>.gens` only take effect when <algo> is the
// configured algorithm. Throws ConfigError for unknown keys or bad values.
void apply_param(RunConfig& config, std::string_view key,
                 std::string_view value);
// Splits "key=value" and forwards to the overload above.
void apply_param(RunConfig& config, std::string_view assignment);

// Throws ConfigError when the configuration cannot run.
void validate(const RunConfig& config);

KnapsackInstance resolve_instance(const RunConfig& config);

// Best-so-far fitness per generation; index 0 is the initialized
// population, so a run of G generations has G + 1 entries.
using ConvergenceTrace = std::vector<std::int64_t>;

struct RunResult {
  std::int64_t best_fitness = 0;
  ConvergenceTrace trace;
};

// One run of the configured algorithm on `instance`, driven by a stream
// seeded with derive_stream_seed(master_seed, run_index).
RunResult run_single(const RunConfig& config, const KnapsackInstance& instance,
                     std::size_t run_index);
RunResult run_single(const RunConfig& config, std::size_t run_index);

struct RunStats {
  double mean_best = 0.0;
  double std_best = 0.0;  // sample deviation; 0 for a single run
  std::vector<std::int64_t> per_run_best;
  std::vector<double> mean_trace;
};

// Aggregates results ordered by run index. Throws InvalidArgument when
// `results` is empty or the traces differ in length.
RunStats summarize(std::span<const RunResult> results);

// run_count runs on one shared instance. Output does not depend on
// config.threads.
RunStats run_campaign(const RunConfig& config, const KnapsackInstance& instance);
RunStats run_campaign(const RunConfig& config);

// JSON document echoing the configuration and the statistics.
void emit_summary(const RunConfig& config, const KnapsackInstance& instance,
                  const RunStats& stats, const std::filesystem::path& path);

// CSV with header `generation,mean_best` and one row per trace entry.
void emit_trace(const RunStats& stats, const std::filesystem::path& path);

}  // namespace qevo
