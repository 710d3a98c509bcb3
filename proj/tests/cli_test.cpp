#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qevo/knapsack.hpp"
#include "test_support.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome qevo_cli(const std::string& args) {
  const auto dir = scratch_dir("cli");
  const auto capture = dir / "stdout.txt";
  const std::string cmd = std::string(QEVO_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_text(capture)};
}

}  // namespace

TEST_CASE("gen, oracle and solve") {
  const auto dir = scratch_dir("cli");
  const auto inst = (dir / "inst.txt").string();

  REQUIRE(qevo_cli("gen --items 30 --seed 4 --out " + inst).code == 0);
  const auto loaded = qevo::load_instance(inst);
  CHECK(loaded.item_count() == 30);

  const auto oracle = qevo_cli("oracle --instance " + inst);
  REQUIRE(oracle.code == 0);
  const long optimum = std::stol(oracle.out);
  CHECK(optimum == qevo::optimal_profit(loaded));

  const auto trace = (dir / "solve.csv").string();
  for (const char* algo : {"aqde", "qea", "dbde"}) {
    CAPTURE(algo);
    const auto solved =
        qevo_cli(std::string("solve --algo ") + algo + " --instance " + inst +
                 " --pop 6 --gens 20 --seed 1 --trace " + trace);
    REQUIRE(solved.code == 0);
    CHECK(std::stol(solved.out) <= optimum);
    CHECK(read_text(trace).rfind("generation,mean_best\n0,", 0) == 0);
  }
}

TEST_CASE("bench writes summary and trace") {
  const auto dir = scratch_dir("cli");
  const auto inst = (dir / "bench_inst.txt").string();
  REQUIRE(qevo_cli("gen --items 20 --seed 9 --out " + inst).code == 0);
  const auto summary = (dir / "s.json").string();
  const auto trace = (dir / "t.csv").string();
  const auto r = qevo_cli("bench --algo qea --instance " + inst +
                          " --pop 4 --gens 15 --runs 3 --seed 2 --summary " +
                          summary + " --trace " + trace +
                          " --param qea.global_period=5 --param qea.local_period=3");
  CHECK(r.code == 0);
  CHECK(read_text(summary).find("\"qea.global_period\": 5") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto dir = scratch_dir("cli");
  const auto inst = (dir / "codes.txt").string();
  REQUIRE(qevo_cli("gen --items 10 --seed 1 --out " + inst).code == 0);

  CHECK(qevo_cli("").code == 2);
  CHECK(qevo_cli("gen --items 10").code == 2);
  CHECK(qevo_cli("gen --items 0 --seed 1 --out " + inst + ".x").code == 2);
  CHECK(qevo_cli("solve --algo ga --instance " + inst +
                 " --pop 6 --gens 5 --seed 1").code == 2);
  CHECK(qevo_cli("solve --algo aqde --instance " + inst +
                 " --pop 3 --gens 5 --seed 1").code == 2);
  CHECK(qevo_cli("solve --algo aqde --instance " + inst +
                 " --pop 6 --gens 5 --seed 1 --param bogus=1").code == 2);

  write_text(dir / "bad.txt", "2 5.0\n1 6\n");
  CHECK(qevo_cli("oracle --instance " + (dir / "bad.txt").string()).code == 2);
  CHECK(qevo_cli("oracle --instance " + (dir / "absent.txt").string()).code == 1);
  CHECK(qevo_cli("solve --algo qea --instance " + inst +
                 " --pop 4 --gens 5 --seed 1 --trace " +
                 (dir / "no" / "such" / "dir.csv").string()).code == 1);
}
