#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qevo/bench.hpp"
#include "qevo/errors.hpp"
#include "test_support.hpp"

using namespace qevo;

namespace {

RunConfig small_config(Algorithm algo) {
  RunConfig config;
  config.algorithm = algo;
  config.instance_source = GeneratedInstance{40, 5};
  config.population_size = 8;
  config.max_generations = 60;
  config.run_count = 5;
  config.master_seed = 17;
  return config;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("stream seeds differ across runs and masters") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t master = 0; master < 20; ++master) {
    for (std::uint64_t run = 0; run < 50; ++run) {
      seen.insert(derive_stream_seed(master, run));
    }
  }
  CHECK(seen.size() == 1000);
  CHECK(derive_stream_seed(3, 4) == derive_stream_seed(3, 4));
}

TEST_CASE("summary statistics") {
  std::vector<RunResult> results{{1, {0, 1}}, {2, {1, 2}}, {3, {2, 3}}};
  const auto stats = summarize(results);
  CHECK(stats.mean_best == 2.0);
  CHECK(stats.std_best == 1.0);
  CHECK(stats.per_run_best == std::vector<std::int64_t>{1, 2, 3});
  CHECK(stats.mean_trace == std::vector<double>{1.0, 2.0});

  const std::vector<RunResult> one{{7, {7}}};
  CHECK(summarize(one).std_best == 0.0);
  CHECK(summarize(one).mean_best == 7.0);

  CHECK_THROWS_AS(summarize(std::vector<RunResult>{}), InvalidArgument);
  const std::vector<RunResult> ragged{{1, {1}}, {2, {1, 2}}};
  CHECK_THROWS_AS(summarize(ragged), InvalidArgument);
}

TEST_CASE("algorithm names") {
  for (auto a : {Algorithm::kAqde, Algorithm::kQea, Algorithm::kDbde}) {
    CHECK(parse_algorithm(to_string(a)) == a);
  }
  CHECK_THROWS_AS(parse_algorithm("ga"), ConfigError);
}

TEST_CASE("parameter overrides") {
  RunConfig config = small_config(Algorithm::kDbde);
  apply_param(config, "qea.global_period=50");
  apply_param(config, "qea.local_period", "7");
  apply_param(config, "qea.local_group=3");
  apply_param(config, "dbde.f=0.6");
  apply_param(config, "dbde.cr=0.9");
  apply_param(config, "aqde.f_per_individual=true");
  CHECK(config.params.migration.global_period == 50);
  CHECK(config.params.migration.local_period == 7);
  CHECK(config.params.migration.local_group == 3);
  CHECK(config.params.dbde.f_value == 0.6);
  CHECK(config.params.dbde.cr_value == 0.9);
  CHECK(config.params.aqde.f_per_individual);

  apply_param(config, "dbde.pop=12");
  apply_param(config, "dbde.gens=20");
  apply_param(config, "aqde.pop=99");  // other algorithm: ignored
  CHECK(config.population_size == 12);
  CHECK(config.max_generations == 20);

  CHECK_THROWS_AS(apply_param(config, "dbde.mutation=1"), ConfigError);
  CHECK_THROWS_AS(apply_param(config, "dbde.f=abc"), ConfigError);
  CHECK_THROWS_AS(apply_param(config, "qea.local_group=-1"), ConfigError);
  CHECK_THROWS_AS(apply_param(config, "aqde.f_per_individual=maybe"), ConfigError);
  CHECK_THROWS_AS(apply_param(config, "novalue"), ConfigError);
  CHECK_THROWS_AS(apply_param(config, "aqde.pop=x"), ConfigError);
}

TEST_CASE("validation") {
  auto config = small_config(Algorithm::kAqde);
  CHECK_NOTHROW(validate(config));
  config.population_size = 3;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config.algorithm = Algorithm::kQea;
  CHECK_NOTHROW(validate(config));
  config.population_size = 0;
  CHECK_THROWS_AS(validate(config), ConfigError);

  config = small_config(Algorithm::kDbde);
  config.max_generations = 0;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config = small_config(Algorithm::kDbde);
  config.run_count = 0;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config = small_config(Algorithm::kDbde);
  config.params.dbde.cr_value = 1.5;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config = small_config(Algorithm::kQea);
  config.params.migration.local_period = 5;
  config.params.migration.local_group = 0;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config = small_config(Algorithm::kQea);
  config.instance_source = GeneratedInstance{0, 1};
  CHECK_THROWS_AS(run_single(config, 0), ConfigError);
}

TEST_CASE("single runs") {
  for (auto algo : {Algorithm::kAqde, Algorithm::kQea, Algorithm::kDbde}) {
    CAPTURE(to_string(algo));
    auto config = small_config(algo);
    config.instance_source = GeneratedInstance{100, 5};
    const auto a = run_single(config, 0);
    const auto b = run_single(config, 0);
    const auto c = run_single(config, 1);
    CHECK(a.trace == b.trace);
    CHECK(a.trace != c.trace);
    REQUIRE(a.trace.size() == config.max_generations + 1);
    CHECK(std::is_sorted(a.trace.begin(), a.trace.end()));
    CHECK(a.best_fitness == a.trace.back());
  }
}

TEST_CASE("campaigns") {
  for (auto algo : {Algorithm::kAqde, Algorithm::kQea, Algorithm::kDbde}) {
    CAPTURE(to_string(algo));
    auto config = small_config(algo);
    const auto instance = resolve_instance(config);
    const auto optimum = optimal_profit(instance);

    const auto sequential = run_campaign(config, instance);
    config.threads = 4;
    const auto threaded = run_campaign(config, instance);
    CHECK(sequential.per_run_best == threaded.per_run_best);
    CHECK(sequential.mean_trace == threaded.mean_trace);

    REQUIRE(sequential.per_run_best.size() == config.run_count);
    for (auto best : sequential.per_run_best) CHECK(best <= optimum);
    CHECK(std::is_sorted(sequential.mean_trace.begin(), sequential.mean_trace.end()));
    CHECK(sequential.mean_trace.back() <= static_cast<double>(optimum));
    CHECK(sequential.mean_trace.back() == doctest::Approx(sequential.mean_best));
  }
}

TEST_CASE("emitted files") {
  const auto dir = scratch_dir("bench_emit");
  const auto config = small_config(Algorithm::kAqde);
  const auto instance = resolve_instance(config);
  const auto stats = run_campaign(config, instance);

  emit_trace(stats, dir / "trace.csv");
  const auto lines = lines_of(read_text(dir / "trace.csv"));
  REQUIRE(lines.size() == config.max_generations + 2);
  CHECK(lines[0] == "generation,mean_best");
  CHECK(lines[1].rfind("0,", 0) == 0);
  CHECK(std::stod(lines[1].substr(2)) == stats.mean_trace[0]);
  CHECK(lines.back().rfind(std::to_string(config.max_generations) + ",", 0) == 0);

  emit_summary(config, instance, stats, dir / "summary.json");
  const auto doc = nlohmann::json::parse(read_text(dir / "summary.json"));
  CHECK(doc["algorithm"] == "aqde");
  CHECK(doc["runs"] == config.run_count);
  CHECK(doc["population"] == config.population_size);
  CHECK(doc["instance"]["generated"]["items"] == 40);
  const double mean = doc["mean_best"];
  const double sd = doc["std_best"];
  CHECK(mean == doctest::Approx(stats.mean_best).epsilon(1e-6));
  CHECK(sd == doctest::Approx(stats.std_best).epsilon(1e-6));
  CHECK(doc["per_run_best"].get<std::vector<std::int64_t>>() == stats.per_run_best);

  // Same inputs, same bytes.
  emit_summary(config, instance, run_campaign(config, instance), dir / "again.json");
  CHECK(read_text(dir / "summary.json") == read_text(dir / "again.json"));

  CHECK_THROWS(emit_trace(stats, dir / "missing" / "trace.csv"));
}
