// qevo: instance generation, exact optimum, single runs and campaigns.
//
// Exit codes: 0 success, 2 configuration or parse error, 1 runtime error.
// QEVO_THREADS caps the number of concurrent runs in `bench` (0 runs them
// sequentially; unset uses the hardware concurrency).

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qevo/bench.hpp"
#include "qevo/errors.hpp"
#include "qevo/knapsack.hpp"

namespace {

constexpr int kRuntimeError = 1;
constexpr int kConfigError = 2;

std::size_t thread_budget() {
  const char* env = std::getenv("QEVO_THREADS");
  if (env == nullptr || *env == '\0') {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  try {
    return static_cast<std::size_t>(std::stoul(env));
  } catch (const std::exception&) {
    throw qevo::ConfigError(std::string("QEVO_THREADS is not a number: ") + env);
  }
}

struct Options {
  std::size_t items = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string instance;
  std::string algo;
  std::size_t pop = 0;
  std::size_t gens = 0;
  std::size_t runs = 0;
  std::string trace;
  std::string summary;
  std::vector<std::string> params;
};

qevo::RunConfig make_config(const Options& o, std::size_t runs) {
  qevo::RunConfig config;
  config.algorithm = qevo::parse_algorithm(o.algo);
  config.instance_source = std::filesystem::path(o.instance);
  config.population_size = o.pop;
  config.max_generations = o.gens;
  config.run_count = runs;
  config.master_seed = o.seed;
  for (const auto& p : o.params) qevo::apply_param(config, p);
  qevo::validate(config);
  return config;
}

int run(int argc, char** argv) {
  CLI::App app{"Quantum-inspired and differential evolution for 0-1 knapsack"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a strongly correlated instance");
  gen->add_option("--items", o.items, "Number of items")->required();
  gen->add_option("--seed", o.seed, "Generator seed")->required();
  gen->add_option("--out", o.out, "Output instance file")->required();

  auto* oracle = app.add_subcommand("oracle", "Print the exact optimum");
  oracle->add_option("--instance", o.instance, "Instance file")->required();

  auto* solve = app.add_subcommand("solve", "Run one optimization");
  solve->add_option("--algo", o.algo, "aqde | qea | dbde")->required();
  solve->add_option("--instance", o.instance, "Instance file")->required();
  solve->add_option("--pop", o.pop, "Population size")->required();
  solve->add_option("--gens", o.gens, "Generations")->required();
  solve->add_option("--seed", o.seed, "Master seed")->required();
  solve->add_option("--trace", o.trace, "Convergence CSV");
  solve->add_option("--param", o.params, "key=value override");

  auto* bench = app.add_subcommand("bench", "Run a multi-run campaign");
  bench->add_option("--algo", o.algo, "aqde | qea | dbde")->required();
  bench->add_option("--instance", o.instance, "Instance file")->required();
  bench->add_option("--pop", o.pop, "Population size")->required();
  bench->add_option("--gens", o.gens, "Generations")->required();
  bench->add_option("--runs", o.runs, "Independent runs")->required();
  bench->add_option("--seed", o.seed, "Master seed")->required();
  bench->add_option("--summary", o.summary, "Summary JSON")->required();
  bench->add_option("--trace", o.trace, "Mean convergence CSV")->required();
  bench->add_option("--param", o.params, "key=value override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  if (*gen) {
    qevo::RandomStream rng(o.seed);
    qevo::save_instance(qevo::generate_instance(o.items, rng), o.out);
  } else if (*oracle) {
    std::cout << qevo::optimal_profit(qevo::load_instance(o.instance)) << '\n';
  } else if (*solve) {
    const auto config = make_config(o, 1);
    const auto instance = qevo::resolve_instance(config);
    const auto result = qevo::run_single(config, instance, 0);
    if (!o.trace.empty()) {
      const std::vector<qevo::RunResult> one{result};
      qevo::emit_trace(qevo::summarize(one), o.trace);
    }
    std::cout << result.best_fitness << '\n';
  } else if (*bench) {
    auto config = make_config(o, o.runs);
    config.threads = thread_budget();
    const auto instance = qevo::resolve_instance(config);
    const auto stats = qevo::run_campaign(config, instance);
    qevo::emit_summary(config, instance, stats, o.summary);
    qevo::emit_trace(stats, o.trace);
    std::cout << stats.mean_best << ' ' << stats.std_best << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qevo::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const qevo::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const qevo::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}
