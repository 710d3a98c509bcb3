#include "qevo/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <thread>
#include <utility>

#include <json.hpp>

#include "qevo/errors.hpp"

namespace qevo {

namespace {

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) {
    throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty() || !std::isfinite(out)) {
    throw ConfigError(std::string(key) + ": expected a real number, got '" +
                      std::string(value) + "'");
  }
  return out;
}

bool parse_flag(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "on") return true;
  if (value == "0" || value == "false" || value == "off") return false;
  throw ConfigError(std::string(key) + ": expected true/false, got '" +
                    std::string(value) + "'");
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

// Records best-so-far after initialization and after every generation.
template <typename State, typename Step, typename Best>
RunResult drive(State state, std::size_t generations, Step step, Best best) {
  RunResult result;
  result.trace.reserve(generations + 1);
  std::int64_t so_far = best(state);
  result.trace.push_back(so_far);
  for (std::size_t g = 0; g < generations; ++g) {
    step(state);
    so_far = std::max(so_far, best(state));
    result.trace.push_back(so_far);
  }
  result.best_fitness = so_far;
  return result;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAqde: return "aqde";
    case Algorithm::kQea: return "qea";
    case Algorithm::kDbde: return "dbde";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "aqde") return Algorithm::kAqde;
  if (name == "qea") return Algorithm::kQea;
  if (name == "dbde") return Algorithm::kDbde;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected aqde, qea or dbde)");
}

void apply_param(RunConfig& config, std::string_view key,
                 std::string_view value) {
  auto& p = config.params;
  if (key == "qea.global_period") {
    p.migration.global_period = parse_count(key, value);
  } else if (key == "qea.local_period") {
    p.migration.local_period = parse_count(key, value);
  } else if (key == "qea.local_group") {
    p.migration.local_group = parse_count(key, value);
  } else if (key == "aqde.f_per_individual") {
    p.aqde.f_per_individual = parse_flag(key, value);
  } else if (key == "dbde.f") {
    p.dbde.f_value = parse_real(key, value);
  } else if (key == "dbde.cr") {
    p.dbde.cr_value = parse_real(key, value);
  } else {
    const auto dot = key.find('.');
    const std::string_view prefix = key.substr(0, dot);
    const std::string_view field =
        dot == std::string_view::npos ? std::string_view{} : key.substr(dot + 1);
    if ((prefix == "aqde" || prefix == "qea" || prefix == "dbde") &&
        (field == "pop" || field == "gens")) {
      const std::size_t n = parse_count(key, value);
      if (parse_algorithm(prefix) != config.algorithm) return;
      (field == "pop" ? config.population_size : config.max_generations) = n;
      return;
    }
    throw ConfigError("unknown parameter '" + std::string(key) + "'");
  }
}

void apply_param(RunConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("parameter '" + std::string(assignment) +
                      "' is not of the form key=value");
  }
  apply_param(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void validate(const RunConfig& config) {
  const std::size_t min_pop = config.algorithm == Algorithm::kQea ? 1 : 4;
  if (config.population_size < min_pop) {
    throw ConfigError(std::string(to_string(config.algorithm)) +
                      " needs a population of at least " +
                      std::to_string(min_pop));
  }
  if (config.max_generations < 1) throw ConfigError("generations must be >= 1");
  if (config.run_count < 1) throw ConfigError("runs must be >= 1");
  if (config.params.migration.local_period != 0 &&
      config.params.migration.local_group == 0) {
    throw ConfigError("qea.local_group must be >= 1");
  }
  const auto& dbde = config.params.dbde;
  if (dbde.cr_value < 0.0 || dbde.cr_value > 1.0) {
    throw ConfigError("dbde.cr must lie in [0, 1]");
  }
  if (dbde.f_value < 0.0) throw ConfigError("dbde.f must be >= 0");
  if (const auto* gen = std::get_if<GeneratedInstance>(&config.instance_source);
      gen != nullptr && gen->item_count == 0) {
    throw ConfigError("generated instance needs at least one item");
  }
}

KnapsackInstance resolve_instance(const RunConfig& config) {
  if (const auto* path = std::get_if<std::filesystem::path>(&config.instance_source)) {
    return load_instance(*path);
  }
  const auto& gen = std::get<GeneratedInstance>(config.instance_source);
  RandomStream rng(gen.seed);
  return generate_instance(gen.item_count, rng);
}

RunResult run_single(const RunConfig& config, const KnapsackInstance& instance,
                     std::size_t run_index) {
  validate(config);
  RandomStream rng(derive_stream_seed(config.master_seed, run_index));
  const std::size_t pop = config.population_size;
  const std::size_t gens = config.max_generations;
  const auto& params = config.params;

  switch (config.algorithm) {
    case Algorithm::kAqde:
      return drive(
          aqde_initialize(instance, pop, rng), gens,
          [&](AqdeState& s) { aqde_generation(s, instance, params.aqde, rng); },
          [](const AqdeState& s) { return best_fitness(s.population); });
    case Algorithm::kQea:
      return drive(
          qea_initialize(instance, pop, rng), gens,
          [&](QeaState& s) { qea_generation(s, instance, params.migration, rng); },
          [](const QeaState& s) { return s.global_best.fitness; });
    case Algorithm::kDbde:
      return drive(
          dbde_initialize(instance, pop, rng), gens,
          [&](DbdeState& s) { dbde_generation(s, instance, params.dbde, rng); },
          [](const DbdeState& s) { return best_fitness(s.population); });
  }
  throw ConfigError("unknown algorithm");
}

RunResult run_single(const RunConfig& config, std::size_t run_index) {
  validate(config);
  return run_single(config, resolve_instance(config), run_index);
}

RunStats summarize(std::span<const RunResult> results) {
  if (results.empty()) throw InvalidArgument("no runs to summarize");
  const std::size_t runs = results.size();
  const std::size_t length = results.front().trace.size();

  RunStats stats;
  stats.per_run_best.reserve(runs);
  stats.mean_trace.assign(length, 0.0);
  for (const auto& r : results) {
    if (r.trace.size() != length) {
      throw InvalidArgument("runs have traces of different lengths");
    }
    stats.per_run_best.push_back(r.best_fitness);
    for (std::size_t g = 0; g < length; ++g) {
      stats.mean_trace[g] += static_cast<double>(r.trace[g]);
    }
  }
  for (double& v : stats.mean_trace) v /= static_cast<double>(runs);

  const double sum = std::accumulate(stats.per_run_best.begin(),
                                     stats.per_run_best.end(), 0.0);
  stats.mean_best = sum / static_cast<double>(runs);
  if (runs > 1) {
    double squares = 0.0;
    for (const auto best : stats.per_run_best) {
      const double d = static_cast<double>(best) - stats.mean_best;
      squares += d * d;
    }
    stats.std_best = std::sqrt(squares / static_cast<double>(runs - 1));
  }
  return stats;
}

RunStats run_campaign(const RunConfig& config, const KnapsackInstance& instance) {
  validate(config);
  std::vector<RunResult> results(config.run_count);
  const std::size_t workers = std::min(config.threads, config.run_count);

  if (workers <= 1) {
    for (std::size_t i = 0; i < config.run_count; ++i) {
      results[i] = run_single(config, instance, i);
    }
    return summarize(results);
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < config.run_count; i = next++) {
            results[i] = run_single(config, instance, i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next = config.run_count;
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return summarize(results);
}

RunStats run_campaign(const RunConfig& config) {
  validate(config);
  return run_campaign(config, resolve_instance(config));
}

void emit_summary(const RunConfig& config, const KnapsackInstance& instance,
                  const RunStats& stats, const std::filesystem::path& path) {
  nlohmann::ordered_json doc;
  doc["algorithm"] = to_string(config.algorithm);

  nlohmann::ordered_json source;
  if (const auto* file = std::get_if<std::filesystem::path>(&config.instance_source)) {
    source["file"] = file->string();
  } else {
    const auto& gen = std::get<GeneratedInstance>(config.instance_source);
    source["generated"] = {{"items", gen.item_count}, {"seed", gen.seed}};
  }
  doc["instance"] = source;
  doc["item_count"] = instance.item_count();
  doc["capacity"] = instance.capacity();
  doc["population"] = config.population_size;
  doc["generations"] = config.max_generations;
  doc["runs"] = config.run_count;
  doc["seed"] = config.master_seed;

  const auto& p = config.params;
  doc["params"] = {
      {"qea.global_period", p.migration.global_period},
      {"qea.local_period", p.migration.local_period},
      {"qea.local_group", p.migration.local_group},
      {"aqde.f_per_individual", p.aqde.f_per_individual},
      {"dbde.f", p.dbde.f_value},
      {"dbde.cr", p.dbde.cr_value},
  };
  doc["mean_best"] = stats.mean_best;
  doc["std_best"] = stats.std_best;
  doc["per_run_best"] = stats.per_run_best;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void emit_trace(const RunStats& stats, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "generation,mean_best\n";
  for (std::size_t g = 0; g < stats.mean_trace.size(); ++g) {
    out << g << ',' << format_real(stats.mean_trace[g]) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qevo
